#include "lie/principal.hpp"

#include <algorithm>
#include <map>

namespace lie {

Rat principal_h_eigenvalue(const RootSystem& rs, const Weight& mu) {
    Rat ev = 2 * rs.pair_weight_rvec(mu, rs.rho_check);
    if (!is_integer(ev))
        throw ConsistencyError("principal h-eigenvalue is not an integer: " + rat_str(ev));
    return ev;
}

Int sum_height_squares(const RootSystem& rs) {
    Int sum = 0;
    for (const Root& g : rs.positive_roots) {
        long h = g.height();
        sum += Int(h) * h;
    }
    Rat closed = Rat(rs.dim_g) * rs.h_star * rs.h_star_dual * rs.r / 12;
    if (closed != sum)
        throw ConsistencyError("height-square sum disagrees with its closed form for " +
                               to_string(rs.simple_type));
    return sum;
}

Rat index_closed_form(const RootSystem& rs) {
    return Rat(rs.dim_g) * rs.h_star_dual * rs.r / 6;
}

Rat index_via_heights(const RootSystem& rs) {
    Int sum = 0;
    for (const Root& g : rs.positive_roots) {
        long h = g.height();
        sum += Int(h) * h;
    }
    return Rat(2) * sum / rs.h_star;
}

Rat index_via_exponents(const RootSystem& rs) {
    Int sum = 0;
    for (int m : rs.exponents) sum += binomial(2 * static_cast<unsigned long>(m) + 2, 3);
    return Rat(sum) / (2 * rs.h_star);
}

IndexReport principal_index(const RootSystem& rs) {
    IndexReport rep;
    rep.closed_form = index_closed_form(rs);
    rep.via_heights = index_via_heights(rs);
    rep.via_exponents = index_via_exponents(rs);
    rep.agree = rep.closed_form == rep.via_heights && rep.via_heights == rep.via_exponents;
    if (!rep.agree)
        throw ConsistencyError("principal index routes disagree for " +
                               to_string(rs.simple_type) + ": " + rat_str(rep.closed_form) +
                               " / " + rat_str(rep.via_heights) + " / " +
                               rat_str(rep.via_exponents));
    if (!is_integer(rep.closed_form) || rep.closed_form <= 0)
        throw ConsistencyError("principal index is not a positive integer");
    return rep;
}

SL2Decomposition sl2_decompose(const RootSystem& rs, const Weight& lambda, long max_dim) {
    WeightSystem ws = freudenthal_multiplicities(rs, lambda, max_dim);
    // N[k] = total multiplicity of h-eigenvalue k across the weight system.
    std::map<long, Int> count;
    for (const auto& [coords, entry] : ws.entries)
        for (const Weight& nu : weyl_orbit(rs, Weight{coords}))
            count[to_long(principal_h_eigenvalue(rs, nu))] += entry.multiplicity;
    for (const auto& [k, c] : count) {
        auto it = count.find(-k);
        if (it == count.end() || it->second != c)
            throw ConsistencyError("h-eigenvalue distribution is not symmetric");
    }
    auto at = [&](long k) -> Int {
        auto it = count.find(k);
        return it == count.end() ? Int(0) : it->second;
    };
    SL2Decomposition dec;
    dec.dim = ws.dim;
    long dmax = count.rbegin()->first;
    Int total = 0;
    for (long dd = dmax; dd >= 0; --dd) {
        Int nd = at(dd) - at(dd + 2);
        if (nd < 0) throw ConsistencyError("negative sl2 part multiplicity");
        if (nd > 0) {
            if (!nd.fits_slong_p())
                throw ConsistencyError("sl2 part multiplicity out of machine range");
            dec.parts.push_back({static_cast<int>(dd), nd.get_si()});
            total += nd * (dd + 1);
        }
    }
    std::reverse(dec.parts.begin(), dec.parts.end());
    if (total != dec.dim)
        throw ConsistencyError("sl2 parts do not fill the module: " + total.get_str() + " of " +
                               dec.dim.get_str());
    return dec;
}

std::vector<int> exponents_via_adjoint(const RootSystem& rs) {
    SL2Decomposition dec = sl2_decompose(rs, adjoint_weight(rs));
    std::vector<int> exps;
    for (const SL2Part& p : dec.parts) {
        if (p.d % 2 != 0)
            throw ConsistencyError("adjoint restriction has an odd part");
        for (long i = 0; i < p.multiplicity; ++i) exps.push_back(p.d / 2);
    }
    if (exps != rs.exponents)
        throw ConsistencyError("adjoint sl2 parts disagree with the exponents of " +
                               to_string(rs.simple_type));
    return exps;
}

Int principal_index_rep(const RootSystem& rs, const Weight& lambda, long max_dim) {
    Int dim = weyl_dim(rs, lambda);
    Weight l2(lambda);
    for (int& c : l2.coords) c += 2;
    Rat closed = Rat(dim) * rs.h_star_dual * rs.r * rs.pair(lambda, l2) / 6;
    SL2Decomposition dec = sl2_decompose(rs, lambda, max_dim);
    Int by_parts = 0;
    for (const SL2Part& p : dec.parts)
        by_parts += Int(p.multiplicity) * binomial(static_cast<unsigned long>(p.d) + 2, 3);
    if (closed != by_parts)
        throw ConsistencyError("principal index of the rep disagrees between routes: " +
                               rat_str(closed) + " vs " + by_parts.get_str());
    return by_parts;
}

Weight adjoint_weight(const RootSystem& rs) { return rs.to_weight(rs.theta); }

}  // namespace lie
