#include "lie/root_system.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <utility>

namespace lie {

CartanMatrix::CartanMatrix(int n, std::vector<int> entries) : n_(n), a_(std::move(entries)) {
    if (n_ <= 0 || a_.size() != static_cast<std::size_t>(n_) * n_)
        throw InputError("Cartan matrix must be square and non-empty");
    for (int i = 0; i < n_; ++i) {
        if ((*this)(i, i) != 2) throw InputError("Cartan matrix needs 2 on the diagonal");
        for (int j = 0; j < n_; ++j) {
            if (i == j) continue;
            int v = (*this)(i, j);
            if (v > 0) throw InputError("off-diagonal Cartan entries must be <= 0");
            if ((v == 0) != ((*this)(j, i) == 0))
                throw InputError("Cartan zeros must be symmetric");
        }
    }
}

CartanMatrix CartanMatrix::transpose() const {
    std::vector<int> t(a_.size());
    for (int i = 0; i < n_; ++i)
        for (int j = 0; j < n_; ++j) t[static_cast<std::size_t>(j) * n_ + i] = (*this)(i, j);
    return CartanMatrix(n_, std::move(t));
}

BilinearForm::BilinearForm(int n, std::vector<Rat> gram, Normalization norm)
    : n_(n), g_(std::move(gram)), norm_(norm) {
    if (n_ <= 0 || g_.size() != static_cast<std::size_t>(n_) * n_)
        throw InputError("Gram matrix must be square and non-empty");
}

Rat BilinearForm::pairing(const std::vector<Rat>& x, const std::vector<Rat>& y) const {
    if (x.size() != static_cast<std::size_t>(n_) || y.size() != static_cast<std::size_t>(n_))
        throw InputError("vector length does not match form dimension");
    Rat acc = 0;
    for (int i = 0; i < n_; ++i) {
        if (x[i] == 0) continue;
        Rat row = 0;
        for (int j = 0; j < n_; ++j)
            if (y[j] != 0) row += (*this)(i, j) * y[j];
        acc += x[i] * row;
    }
    return acc;
}

Rat BilinearForm::pairing(const Root& x, const Root& y) const {
    if (x.coords.size() != static_cast<std::size_t>(n_) ||
        y.coords.size() != static_cast<std::size_t>(n_))
        throw InputError("root length does not match form dimension");
    Rat acc = 0;
    for (int i = 0; i < n_; ++i) {
        if (x.coords[i] == 0) continue;
        Rat row = 0;
        for (int j = 0; j < n_; ++j)
            if (y.coords[j] != 0) row += (*this)(i, j) * y.coords[j];
        acc += x.coords[i] * row;
    }
    return acc;
}

BilinearForm BilinearForm::scaled(const Rat& factor, Normalization norm) const {
    std::vector<Rat> g = g_;
    for (Rat& v : g) v *= factor;
    return BilinearForm(n_, std::move(g), norm);
}

namespace {

// Bourbaki numbering throughout: chains run 1..n; in B_n the last node is
// short, in C_n long; in D_n node n hangs off node n-2; in E_n the chain is
// 1-3-4-5-...-n with node 2 attached to node 4; in F_4 nodes 3,4 are short;
// in G_2 node 1 is short.
std::vector<int> cartan_entries(Family f, int n) {
    std::vector<int> a(static_cast<std::size_t>(n) * n, 0);
    auto at = [&](int i, int j) -> int& { return a[static_cast<std::size_t>(i) * n + j]; };
    for (int i = 0; i < n; ++i) at(i, i) = 2;
    auto link = [&](int i, int j, int aij, int aji) {
        at(i, j) = aij;
        at(j, i) = aji;
    };
    switch (f) {
        case Family::A:
            for (int i = 0; i + 1 < n; ++i) link(i, i + 1, -1, -1);
            break;
        case Family::B:
            for (int i = 0; i + 2 < n; ++i) link(i, i + 1, -1, -1);
            link(n - 2, n - 1, -2, -1);
            break;
        case Family::C:
            for (int i = 0; i + 2 < n; ++i) link(i, i + 1, -1, -1);
            link(n - 2, n - 1, -1, -2);
            break;
        case Family::D:
            for (int i = 0; i + 2 < n; ++i) link(i, i + 1, -1, -1);
            link(n - 3, n - 1, -1, -1);
            break;
        case Family::E:
            link(0, 2, -1, -1);
            link(1, 3, -1, -1);
            for (int i = 2; i + 1 < n; ++i) link(i, i + 1, -1, -1);
            break;
        case Family::F:
            link(0, 1, -1, -1);
            link(1, 2, -2, -1);
            link(2, 3, -1, -1);
            break;
        case Family::G:
            link(0, 1, -1, -3);
            break;
    }
    return a;
}

// The recipe above also makes sense for a few inadmissible labels (D_3 in
// particular); anything below these bounds has no connected diagram.
bool recipe_defined(SimpleType t) {
    switch (t.family) {
        case Family::A: return t.rank >= 1;
        case Family::B:
        case Family::C: return t.rank >= 2;
        case Family::D: return t.rank >= 3;
        case Family::E: return t.rank >= 6 && t.rank <= 8;
        case Family::F: return t.rank == 4;
        case Family::G: return t.rank == 2;
    }
    return false;
}

std::vector<Rat> invert_transpose(const CartanMatrix& c) {
    // Gauss-Jordan on A^T | I with exact rationals.
    const int n = c.size();
    std::vector<Rat> m(static_cast<std::size_t>(n) * 2 * n, Rat(0));
    auto at = [&](int i, int j) -> Rat& { return m[static_cast<std::size_t>(i) * 2 * n + j]; };
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) at(i, j) = c(j, i);
        at(i, n + i) = 1;
    }
    for (int col = 0; col < n; ++col) {
        int piv = -1;
        for (int i = col; i < n; ++i)
            if (at(i, col) != 0) {
                piv = i;
                break;
            }
        if (piv < 0) throw ConsistencyError("singular Cartan matrix");
        if (piv != col)
            for (int j = 0; j < 2 * n; ++j) std::swap(at(piv, j), at(col, j));
        Rat inv = 1 / at(col, col);
        for (int j = 0; j < 2 * n; ++j) at(col, j) *= inv;
        for (int i = 0; i < n; ++i) {
            if (i == col || at(i, col) == 0) continue;
            Rat f = at(i, col);
            for (int j = 0; j < 2 * n; ++j) at(i, j) -= f * at(col, j);
        }
    }
    std::vector<Rat> out(static_cast<std::size_t>(n) * n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) out[static_cast<std::size_t>(i) * n + j] = at(i, n + j);
    return out;
}

}  // namespace

CartanMatrix cartan_matrix(SimpleType t) {
    if (!admissible(t)) throw InputError("inadmissible type " + to_string(t));
    return CartanMatrix(t.rank, cartan_entries(t.family, t.rank));
}

std::vector<Root> positive_roots(const CartanMatrix& c) {
    const int n = c.size();
    std::set<std::vector<int>> seen;
    std::vector<std::vector<int>> all, frontier;
    for (int i = 0; i < n; ++i) {
        std::vector<int> e(n, 0);
        e[i] = 1;
        seen.insert(e);
        frontier.push_back(std::move(e));
    }
    all = frontier;
    // Heights grow by one per pass; nothing of finite type gets anywhere near
    // this bound (E8 tops out at height 29).
    constexpr int height_cap = 4096;
    for (int h = 1; !frontier.empty(); ++h) {
        if (h > height_cap) throw ConsistencyError("root closure does not terminate");
        std::vector<std::vector<int>> next;
        for (const auto& g : frontier) {
            for (int i = 0; i < n; ++i) {
                // g + alpha_i is a root iff p_i(g) > <g, alpha_i^vee>, where
                // p_i counts how far the alpha_i-string continues below g.
                int p = 0;
                std::vector<int> down = g;
                while (true) {
                    down[i] -= 1;
                    if (down[i] < 0 || !seen.count(down)) break;
                    ++p;
                }
                int pairing = 0;
                for (int j = 0; j < n; ++j) pairing += c(j, i) * g[j];
                if (p - pairing > 0) {
                    std::vector<int> up = g;
                    up[i] += 1;
                    if (seen.insert(up).second) next.push_back(std::move(up));
                }
            }
        }
        all.insert(all.end(), next.begin(), next.end());
        frontier = std::move(next);
    }
    std::vector<Root> roots;
    roots.reserve(all.size());
    for (auto& v : all) roots.push_back(Root{std::move(v)});
    std::sort(roots.begin(), roots.end(), [](const Root& a, const Root& b) {
        int ha = a.height(), hb = b.height();
        if (ha != hb) return ha < hb;
        return a.coords < b.coords;
    });
    return roots;
}

BilinearForm normalized_form(const CartanMatrix& c) {
    const int n = c.size();
    // Solve d_j a_ij = d_i a_ji along the edges of the diagram, then rescale
    // so the largest d is 1; the Gram matrix is g_ij = a_ij d_j.
    std::vector<Rat> d(n, Rat(0));
    d[0] = 1;
    std::vector<int> stack{0};
    while (!stack.empty()) {
        int i = stack.back();
        stack.pop_back();
        for (int j = 0; j < n; ++j) {
            if (j == i || c(i, j) == 0) continue;
            Rat dj = d[i] * c(j, i) / c(i, j);
            if (d[j] == 0) {
                d[j] = dj;
                stack.push_back(j);
            } else if (d[j] != dj) {
                throw ConsistencyError("Cartan matrix is not symmetrizable");
            }
        }
    }
    for (const Rat& v : d)
        if (v <= 0) throw ConsistencyError("Cartan diagram is not connected");
    Rat dmax = d[0];
    for (const Rat& v : d) dmax = std::max(dmax, v);
    std::vector<Rat> gram(static_cast<std::size_t>(n) * n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            gram[static_cast<std::size_t>(i) * n + j] = Rat(c(i, j)) * d[j] / dmax;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (gram[static_cast<std::size_t>(i) * n + j] !=
                gram[static_cast<std::size_t>(j) * n + i])
                throw ConsistencyError("symmetrized Cartan matrix is not symmetric");
    return BilinearForm(n, std::move(gram), Normalization::Normalized);
}

RootSystem RootSystem::assemble(SimpleType label, CartanMatrix cm) {
    RootSystem rs;
    rs.simple_type = label;
    rs.cartan = std::move(cm);
    const int n = rs.cartan.size();
    rs.positive_roots = lie::positive_roots(rs.cartan);
    rs.form = normalized_form(rs.cartan);

    rs.d_.resize(n);
    for (int i = 0; i < n; ++i) rs.d_[i] = rs.form(i, i) / 2;
    rs.inv_cartan_t_ = invert_transpose(rs.cartan);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            Rat acc = 0;
            for (int k = 0; k < n; ++k)
                acc += Rat(rs.cartan(k, i)) * rs.inv_cartan_t_[static_cast<std::size_t>(k) * n + j];
            if (acc != (i == j ? 1 : 0))
                throw ConsistencyError("Cartan inverse check failed");
        }

    rs.posroot_weights_.reserve(rs.positive_roots.size());
    for (const Root& g : rs.positive_roots) rs.posroot_weights_.push_back(rs.to_weight(g));

    // theta and theta_s: the dominant roots, one per length class.
    std::vector<std::pair<Rat, const Root*>> dominant;
    for (std::size_t k = 0; k < rs.positive_roots.size(); ++k)
        if (rs.posroot_weights_[k].dominant())
            dominant.push_back({rs.form.pairing(rs.positive_roots[k], rs.positive_roots[k]),
                                &rs.positive_roots[k]});
    if (dominant.empty()) throw ConsistencyError("no dominant root");
    auto longer = [](const auto& a, const auto& b) { return a.first < b.first; };
    auto lo = std::min_element(dominant.begin(), dominant.end(), longer);
    auto hi = std::max_element(dominant.begin(), dominant.end(), longer);
    rs.theta = *hi->second;
    rs.theta_s = *lo->second;
    Rat ratio = hi->first / lo->first;
    rs.r = static_cast<int>(to_long(ratio));
    if (rs.r < 1 || rs.r > 3) throw ConsistencyError("root length ratio out of range");
    std::size_t expected_dominant = rs.r == 1 ? 1 : 2;
    if (dominant.size() != expected_dominant)
        throw ConsistencyError("unexpected number of dominant roots");
    if (hi->first != 2) throw ConsistencyError("highest root is not normalized to length 2");
    if (rs.theta.height() != rs.positive_roots.back().height() ||
        rs.theta != rs.positive_roots.back())
        throw ConsistencyError("dominant long root is not the unique highest root");

    rs.rho = Weight{std::vector<int>(n, 1)};
    rs.rho_check.assign(n, Rat(0));
    for (const Root& g : rs.positive_roots) {
        Rat len = rs.form.pairing(g, g);
        for (int j = 0; j < n; ++j) rs.rho_check[j] += Rat(g.coords[j]) / len;
    }
    // (rho^vee, gamma) must equal ht(gamma) for every positive root.
    for (const Root& g : rs.positive_roots) {
        std::vector<Rat> gc(g.coords.begin(), g.coords.end());
        if (rs.form.pairing(rs.rho_check, gc) != g.height())
            throw ConsistencyError("rho^vee does not measure heights");
    }

    // Exponents: conjugate partition of the height distribution.
    int hmax = rs.theta.height();
    std::vector<int> histo(hmax + 1, 0);
    for (const Root& g : rs.positive_roots) ++histo[g.height()];
    if (histo[1] != n) throw ConsistencyError("height histogram misses simple roots");
    for (int j = n; j >= 1; --j) {
        int count = 0;
        for (int k = 1; k <= hmax; ++k)
            if (histo[k] >= j) ++count;
        rs.exponents.push_back(count);
    }
    if (static_cast<int>(rs.exponents.size()) != n)
        throw ConsistencyError("wrong number of exponents");
    if (!std::is_sorted(rs.exponents.begin(), rs.exponents.end()))
        throw ConsistencyError("exponents not ascending");

    rs.h = rs.theta.height() + 1;
    rs.dim_g = n + 2 * static_cast<int>(rs.positive_roots.size());

    // h^vee = 1 + (rho, theta^vee); theta is long so theta^vee = theta.
    Rat rho_theta = rs.pair(rs.rho, rs.theta);
    rs.h_star = 1 + static_cast<int>(to_long(2 * rho_theta / hi->first));

    for (int i = 0; i < n; ++i)
        if (rs.exponents[i] + rs.exponents[n - 1 - i] != rs.h)
            throw ConsistencyError("exponents are not symmetric about h/2");
    {
        int sum = 0;
        for (int m : rs.exponents) sum += 2 * m + 1;
        if (sum != rs.dim_g) throw ConsistencyError("exponents do not add up to dim g");
    }
    return rs;
}

RootSystem RootSystem::build(SimpleType t) {
    if (!admissible(t)) throw InputError("inadmissible type " + to_string(t));
    RootSystem rs = assemble(t, cartan_matrix(t));
    RootSystem dual = assemble(dual_type(t), rs.cartan.transpose());
    rs.h_star_dual = dual.h_star;
    return rs;
}

RootSystem RootSystem::build_unvalidated(SimpleType t) {
    if (!recipe_defined(t)) throw InputError("no Cartan matrix recipe for " + to_string(t));
    CartanMatrix cm(t.rank, cartan_entries(t.family, t.rank));
    RootSystem rs = assemble(t, cm);
    RootSystem dual = assemble(dual_type(t), rs.cartan.transpose());
    rs.h_star_dual = dual.h_star;
    return rs;
}

Weight RootSystem::to_weight(const Root& g) const {
    const int n = rank();
    if (g.coords.size() != static_cast<std::size_t>(n))
        throw InputError("root length does not match rank");
    std::vector<int> mu(n, 0);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) mu[i] += cartan(j, i) * g.coords[j];
    return Weight{std::move(mu)};
}

Weight RootSystem::simple_root_weight(int i) const {
    const int n = rank();
    std::vector<int> mu(n);
    for (int j = 0; j < n; ++j) mu[j] = cartan(i, j);
    return Weight{std::move(mu)};
}

std::vector<Rat> RootSystem::root_coords(const Weight& w) const {
    const int n = rank();
    if (w.coords.size() != static_cast<std::size_t>(n))
        throw InputError("weight length does not match rank");
    std::vector<Rat> c(n, Rat(0));
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j)
            if (w.coords[j] != 0) c[i] += inv_cartan_t_[static_cast<std::size_t>(i) * n + j] * w.coords[j];
    }
    return c;
}

Rat RootSystem::pair(const Weight& a, const Weight& b) const {
    return pair_weight_rvec(a, root_coords(b));
}

Rat RootSystem::pair(const Weight& a, const Root& b) const {
    const int n = rank();
    if (a.coords.size() != static_cast<std::size_t>(n) ||
        b.coords.size() != static_cast<std::size_t>(n))
        throw InputError("length does not match rank");
    Rat acc = 0;
    for (int j = 0; j < n; ++j)
        if (a.coords[j] != 0 && b.coords[j] != 0) acc += Rat(a.coords[j]) * b.coords[j] * d_[j];
    return acc;
}

Rat RootSystem::pair_weight_rvec(const Weight& a, const std::vector<Rat>& v) const {
    const int n = rank();
    if (a.coords.size() != static_cast<std::size_t>(n) || v.size() != static_cast<std::size_t>(n))
        throw InputError("length does not match rank");
    Rat acc = 0;
    for (int j = 0; j < n; ++j)
        if (a.coords[j] != 0 && v[j] != 0) acc += a.coords[j] * v[j] * d_[j];
    return acc;
}

BilinearForm RootSystem::canonical_form() const {
    return form.scaled(make_rat(1, 2 * h_star), Normalization::Canonical);
}

RootSystem dual_root_system(const RootSystem& rs) {
    RootSystem dual = RootSystem::assemble(dual_type(rs.simple_type), rs.cartan.transpose());
    dual.h_star_dual = rs.h_star;
    return dual;
}

}  // namespace lie
