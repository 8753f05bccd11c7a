#include "lie/reps.hpp"

#include <algorithm>
#include <unordered_map>
#include <unordered_set>
#include <utility>

namespace lie {

namespace {

struct VecHash {
    std::size_t operator()(const std::vector<int>& v) const {
        std::size_t h = 1469598103934665603ull;
        for (int x : v) {
            h ^= static_cast<std::size_t>(static_cast<unsigned>(x));
            h *= 1099511628211ull;
        }
        return h;
    }
};

void require_weight(const RootSystem& rs, const Weight& w, bool dominant) {
    if (w.coords.size() != static_cast<std::size_t>(rs.rank()))
        throw InputError("weight length does not match rank " + std::to_string(rs.rank()));
    if (dominant && !w.dominant())
        throw InputError("weight must be dominant (no negative coordinates)");
}

Weight shifted(const Weight& w, int by) {
    Weight s = w;
    for (int& c : s.coords) c += by;
    return s;
}

}  // namespace

Int weyl_dim(const RootSystem& rs, const Weight& lambda) {
    require_weight(rs, lambda, true);
    Weight lr = shifted(lambda, 1);  // lambda + rho
    Rat prod = 1;
    for (const Root& g : rs.positive_roots) {
        Rat num = rs.pair(lr, g);
        Rat den = rs.pair(rs.rho, g);
        prod *= num / den;
    }
    Int dim = to_integer(prod);
    if (dim <= 0) throw ConsistencyError("Weyl dimension came out non-positive");
    return dim;
}

Rat dynkin_index_rep(const RootSystem& rs, const Weight& lambda) {
    Int dim = weyl_dim(rs, lambda);
    Rat casimir = rs.pair(lambda, shifted(lambda, 2));  // (lambda, lambda + 2 rho)
    Rat ind = Rat(dim) * casimir / rs.dim_g;
    if (!is_integer(ind) || ind < 0)
        throw ConsistencyError("Dynkin index of " + to_string(rs.simple_type) +
                               " rep is not a non-negative integer: " + rat_str(ind));
    return ind;
}

Rat ave_index_rep(const RootSystem& rs, const Weight& lambda) {
    return dynkin_index_rep(rs, lambda) / (2 * rs.h_star);
}

std::vector<Weight> dominant_weights(const RootSystem& rs, const Weight& lambda) {
    require_weight(rs, lambda, true);
    const auto& posw = rs.positive_root_weights();
    std::unordered_set<std::vector<int>, VecHash> seen{lambda.coords};
    std::vector<std::vector<int>> stack{lambda.coords}, found{lambda.coords};
    while (!stack.empty()) {
        std::vector<int> cur = std::move(stack.back());
        stack.pop_back();
        for (const Weight& g : posw) {
            std::vector<int> nu(cur.size());
            bool dom = true;
            for (std::size_t j = 0; j < cur.size(); ++j) {
                nu[j] = cur[j] - g.coords[j];
                if (nu[j] < 0) dom = false;
            }
            // Every dominant mu < lambda is reachable from some dominant
            // weight one positive root above it, so pruning non-dominant
            // intermediates loses nothing.
            if (dom && seen.insert(nu).second) {
                found.push_back(nu);
                stack.push_back(std::move(nu));
            }
        }
    }
    // Order by depth ht(lambda - mu), then lexicographically.
    std::vector<std::pair<long, std::vector<int>>> keyed;
    keyed.reserve(found.size());
    for (auto& mu : found) {
        std::vector<int> diff(mu.size());
        for (std::size_t j = 0; j < mu.size(); ++j) diff[j] = lambda.coords[j] - mu[j];
        std::vector<Rat> rc = rs.root_coords(Weight{diff});
        Rat depth = 0;
        for (const Rat& c : rc) {
            if (!is_integer(c) || c < 0)
                throw ConsistencyError("lambda - mu is not a sum of positive roots");
            depth += c;
        }
        keyed.push_back({to_long(depth), std::move(mu)});
    }
    std::sort(keyed.begin(), keyed.end());
    std::vector<Weight> out;
    out.reserve(keyed.size());
    for (auto& [depth, mu] : keyed) out.push_back(Weight{std::move(mu)});
    return out;
}

std::vector<Weight> weyl_orbit(const RootSystem& rs, const Weight& mu) {
    require_weight(rs, mu, false);
    const int n = rs.rank();
    std::unordered_set<std::vector<int>, VecHash> seen{mu.coords};
    std::vector<std::vector<int>> stack{mu.coords};
    while (!stack.empty()) {
        std::vector<int> cur = std::move(stack.back());
        stack.pop_back();
        for (int i = 0; i < n; ++i) {
            if (cur[i] == 0) continue;  // s_i fixes cur
            std::vector<int> img = cur;
            for (int j = 0; j < n; ++j) img[j] -= cur[i] * rs.cartan(i, j);
            if (seen.insert(img).second) stack.push_back(std::move(img));
        }
    }
    std::vector<Weight> orbit;
    orbit.reserve(seen.size());
    for (const auto& v : seen) orbit.push_back(Weight{v});
    std::sort(orbit.begin(), orbit.end(),
              [](const Weight& a, const Weight& b) { return b.coords < a.coords; });
    return orbit;
}

Weight dominant_representative(const RootSystem& rs, const Weight& mu) {
    require_weight(rs, mu, false);
    const int n = rs.rank();
    std::vector<int> cur = mu.coords;
    for (;;) {
        int i = 0;
        while (i < n && cur[i] >= 0) ++i;
        if (i == n) return Weight{std::move(cur)};
        int ci = cur[i];
        for (int j = 0; j < n; ++j) cur[j] -= ci * rs.cartan(i, j);
    }
}

WeightSystem freudenthal_multiplicities(const RootSystem& rs, const Weight& lambda,
                                        long max_dim) {
    Int dim = weyl_dim(rs, lambda);
    if (dim > max_dim)
        throw InputError("dim V(lambda) = " + dim.get_str() + " exceeds the size limit " +
                         std::to_string(max_dim));

    std::vector<Weight> cands = dominant_weights(rs, lambda);
    // Freudenthal needs (mu + rho, mu + rho) strictly decreasing along the
    // evaluation order: any dominant nu > mu in the root order has a strictly
    // larger shifted norm.
    std::vector<std::pair<Rat, Weight>> order;
    order.reserve(cands.size());
    for (Weight& mu : cands) {
        Weight mr = shifted(mu, 1);
        order.push_back({rs.pair(mr, mr), std::move(mu)});
    }
    std::sort(order.begin(), order.end(), [](const auto& a, const auto& b) {
        if (a.first != b.first) return a.first > b.first;
        return a.second.coords < b.second.coords;
    });

    const Rat norm_top = order.front().first;
    if (order.front().second != lambda)
        throw ConsistencyError("lambda is not first in the Freudenthal order");

    std::unordered_map<std::vector<int>, long, VecHash> mult;
    mult[lambda.coords] = 1;
    const auto& posw = rs.positive_root_weights();
    const int n = rs.rank();

    for (std::size_t idx = 1; idx < order.size(); ++idx) {
        const Weight& mu = order[idx].second;
        Rat denom = norm_top - order[idx].first;
        if (denom <= 0) throw ConsistencyError("Freudenthal denominator not positive");

        // Integer simple-root coordinates of lambda - mu, counted down as we
        // walk up the gamma-string; any negative entry means we left the
        // support of V(lambda) for good.
        std::vector<Rat> rc0 = rs.root_coords(
            Weight{[&] {
                std::vector<int> diff(mu.coords.size());
                for (std::size_t j = 0; j < diff.size(); ++j)
                    diff[j] = lambda.coords[j] - mu.coords[j];
                return diff;
            }()});
        std::vector<long> rem0(n);
        for (int j = 0; j < n; ++j) rem0[j] = to_long(rc0[j]);

        Rat acc = 0;
        for (std::size_t gi = 0; gi < rs.positive_roots.size(); ++gi) {
            const Root& gamma = rs.positive_roots[gi];
            const Weight& gw = posw[gi];
            std::vector<long> rem = rem0;
            std::vector<int> nu = mu.coords;
            for (;;) {
                bool inside = true;
                for (int j = 0; j < n; ++j) {
                    rem[j] -= gamma.coords[j];
                    if (rem[j] < 0) inside = false;
                }
                if (!inside) break;
                for (int j = 0; j < n; ++j) nu[j] += gw.coords[j];
                Weight nuw{nu};
                auto it = mult.find(dominant_representative(rs, nuw).coords);
                if (it != mult.end() && it->second != 0)
                    acc += it->second * rs.pair(nuw, gamma);
            }
        }
        Rat m = 2 * acc / denom;
        if (!is_integer(m) || m <= 0)
            throw ConsistencyError("Freudenthal multiplicity is not a positive integer");
        mult[mu.coords] = to_long(m);
    }

    WeightSystem ws;
    ws.lambda = lambda;
    ws.dim = dim;
    Int mass = 0;
    for (const auto& [norm, mu] : order) {
        WeightEntry e;
        e.multiplicity = mult.at(mu.coords);
        e.orbit_size = static_cast<long>(weyl_orbit(rs, mu).size());
        mass += Int(e.multiplicity) * e.orbit_size;
        ws.entries.emplace(mu.coords, e);
    }
    if (mass != dim)
        throw ConsistencyError("weight multiplicities sum to " + mass.get_str() +
                               ", expected dim = " + dim.get_str());
    return ws;
}

WeightSumPair weight_sum_squares(const RootSystem& rs, const WeightSystem& ws) {
    std::vector<Rat> rho_rc = rs.root_coords(rs.rho);
    Rat s_check = 0, s_rho = 0;
    for (const auto& [coords, entry] : ws.entries) {
        Rat o_check = 0, o_rho = 0;
        for (const Weight& nu : weyl_orbit(rs, Weight{coords})) {
            Rat a = rs.pair_weight_rvec(nu, rs.rho_check);
            o_check += a * a;
            Rat b = rs.pair_weight_rvec(nu, rho_rc);
            o_rho += b * b;
        }
        s_check += entry.multiplicity * o_check;
        s_rho += entry.multiplicity * o_rho;
    }
    Rat scale = Rat(2 * rs.h_star) * (2 * rs.h_star);
    return {s_check, s_rho / scale};
}

Rat weight_sum_squares(const RootSystem& rs, const Weight& lambda, WeightSumMode mode,
                       long max_dim) {
    WeightSystem ws = freudenthal_multiplicities(rs, lambda, max_dim);
    WeightSumPair p = weight_sum_squares(rs, ws);
    return mode == WeightSumMode::RhoCheckNormalized ? p.rho_check_normalized : p.rho_canonical;
}

}  // namespace lie
