#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "lie/reps.hpp"

using namespace lie;

namespace {

RootSystem rs_of(const char* name) { return RootSystem::build(parse_simple_type(name)); }

Weight w(std::vector<int> coords) { return Weight{std::move(coords)}; }

}  // namespace

TEST_CASE("Weyl dimension formula") {
    RootSystem a1 = rs_of("A1");
    for (int d = 0; d <= 10; ++d) CHECK(weyl_dim(a1, w({d})) == d + 1);

    RootSystem a2 = rs_of("A2");
    CHECK(weyl_dim(a2, w({1, 0})) == 3);
    CHECK(weyl_dim(a2, w({0, 1})) == 3);
    CHECK(weyl_dim(a2, w({1, 1})) == 8);
    CHECK(weyl_dim(a2, w({2, 0})) == 6);
    CHECK(weyl_dim(a2, w({2, 2})) == 27);
    CHECK(weyl_dim(a2, w({0, 0})) == 1);

    RootSystem b3 = rs_of("B3");
    CHECK(weyl_dim(b3, w({1, 0, 0})) == 7);
    CHECK(weyl_dim(b3, w({0, 1, 0})) == 21);
    CHECK(weyl_dim(b3, w({0, 0, 1})) == 8);

    RootSystem g2 = rs_of("G2");
    CHECK(weyl_dim(g2, w({1, 0})) == 7);
    CHECK(weyl_dim(g2, w({0, 1})) == 14);

    CHECK(weyl_dim(rs_of("F4"), w({0, 0, 0, 1})) == 26);
    CHECK(weyl_dim(rs_of("E6"), w({1, 0, 0, 0, 0, 0})) == 27);
    CHECK(weyl_dim(rs_of("E7"), w({0, 0, 0, 0, 0, 0, 1})) == 56);
    CHECK(weyl_dim(rs_of("E8"), w({0, 0, 0, 0, 0, 0, 0, 1})) == 248);
    CHECK(weyl_dim(rs_of("E7"), w({0, 0, 0, 1, 0, 0, 0})) == 365750);

    CHECK_THROWS_AS(weyl_dim(a2, w({-1, 0})), InputError);
    CHECK_THROWS_AS(weyl_dim(a2, w({1})), InputError);
}

TEST_CASE("Dynkin index basics") {
    RootSystem a1 = rs_of("A1");
    for (unsigned long d = 1; d <= 20; ++d)
        CHECK(dynkin_index_rep(a1, w({static_cast<int>(d)})) == Rat(binomial(d + 2, 3)));

    // The adjoint rep has index 2 h^vee everywhere.
    for (SimpleType t : all_simple_types(8)) {
        RootSystem rs = RootSystem::build(t);
        Weight ad = rs.to_weight(rs.theta);
        CHECK(dynkin_index_rep(rs, ad) == 2 * rs.h_star);
        CHECK(ave_index_rep(rs, ad) == 1);
    }
}

TEST_CASE("Dynkin index spot values") {
    CHECK(dynkin_index_rep(rs_of("A2"), w({1, 0})) == 1);
    CHECK(dynkin_index_rep(rs_of("C3"), w({1, 0, 0})) == 1);   // sp(6) defining
    CHECK(dynkin_index_rep(rs_of("B3"), w({1, 0, 0})) == 2);   // so(7) vector
    CHECK(dynkin_index_rep(rs_of("B3"), w({0, 0, 1})) == 2);   // so(7) spinor
    CHECK(dynkin_index_rep(rs_of("D4"), w({1, 0, 0, 0})) == 2);  // so(8) vector
    CHECK(dynkin_index_rep(rs_of("D4"), w({0, 0, 0, 1})) == 2);  // so(8) spinor
    CHECK(dynkin_index_rep(rs_of("G2"), w({1, 0})) == 2);      // 7-dim fundamental
    CHECK(dynkin_index_rep(rs_of("B2"), w({0, 1})) == 1);      // so(5) spinor
    CHECK(ave_index_rep(rs_of("A1"), w({1})) == make_rat(1, 4));
    CHECK(ave_index_rep(rs_of("B2"), w({0, 1})) == make_rat(1, 6));
}

TEST_CASE("dominant weights, order and content") {
    RootSystem a2 = rs_of("A2");
    CHECK(dominant_weights(a2, w({1, 1})) == std::vector<Weight>{w({1, 1}), w({0, 0})});
    CHECK(dominant_weights(a2, w({2, 2})) ==
          std::vector<Weight>{w({2, 2}), w({0, 3}), w({3, 0}), w({1, 1}), w({0, 0})});
    CHECK(dominant_weights(a2, w({1, 0})) == std::vector<Weight>{w({1, 0})});

    RootSystem g2 = rs_of("G2");
    CHECK(dominant_weights(g2, w({0, 1})) ==
          std::vector<Weight>{w({0, 1}), w({1, 0}), w({0, 0})});

    RootSystem b3 = rs_of("B3");
    CHECK(dominant_weights(b3, w({1, 0, 0})) ==
          std::vector<Weight>{w({1, 0, 0}), w({0, 0, 0})});
    CHECK(dominant_weights(b3, w({0, 0, 1})) == std::vector<Weight>{w({0, 0, 1})});
}

TEST_CASE("Weyl orbits") {
    RootSystem a2 = rs_of("A2");
    CHECK(weyl_orbit(a2, w({1, 0})) ==
          std::vector<Weight>{w({1, 0}), w({0, -1}), w({-1, 1})});
    CHECK(weyl_orbit(a2, w({1, 1})).size() == 6);
    CHECK(weyl_orbit(a2, w({0, 0})) == std::vector<Weight>{w({0, 0})});

    // Orbit of rho has order |W|.
    CHECK(weyl_orbit(rs_of("B3"), w({1, 1, 1})).size() == 48);
    CHECK(weyl_orbit(rs_of("G2"), w({1, 1})).size() == 12);
    CHECK(weyl_orbit(rs_of("D4"), w({1, 1, 1, 1})).size() == 192);

    CHECK(dominant_representative(a2, w({-1, 1})) == w({1, 0}));
    CHECK(dominant_representative(a2, w({0, -1})) == w({1, 0}));
    CHECK(dominant_representative(rs_of("E6"), w({0, 0, -1, 1, 0, 0})).dominant());
}

TEST_CASE("Freudenthal multiplicities") {
    RootSystem a2 = rs_of("A2");
    WeightSystem ad = freudenthal_multiplicities(a2, w({1, 1}));
    CHECK(ad.dim == 8);
    CHECK(ad.entries.size() == 2);
    CHECK(ad.entries.at({1, 1}).multiplicity == 1);
    CHECK(ad.entries.at({1, 1}).orbit_size == 6);
    CHECK(ad.entries.at({0, 0}).multiplicity == 2);
    CHECK(ad.entries.at({0, 0}).orbit_size == 1);

    WeightSystem w27 = freudenthal_multiplicities(a2, w({2, 2}));
    CHECK(w27.dim == 27);
    CHECK(w27.entries.at({1, 1}).multiplicity == 2);
    CHECK(w27.entries.at({0, 0}).multiplicity == 3);
    CHECK(w27.entries.at({0, 3}).multiplicity == 1);

    RootSystem g2 = rs_of("G2");
    WeightSystem g2ad = freudenthal_multiplicities(g2, w({0, 1}));
    CHECK(g2ad.dim == 14);
    CHECK(g2ad.entries.at({1, 0}).multiplicity == 1);
    CHECK(g2ad.entries.at({0, 0}).multiplicity == 2);

    // Zero-weight multiplicity of the adjoint rep equals the rank.
    for (const char* name : {"A3", "B3", "C3", "D4", "F4", "E6"}) {
        RootSystem rs = rs_of(name);
        WeightSystem ws = freudenthal_multiplicities(rs, rs.to_weight(rs.theta));
        CHECK(ws.entries.at(std::vector<int>(rs.rank(), 0)).multiplicity == rs.rank());
        CHECK(ws.dim == rs.dim_g);
    }

    // so(7) spinor: a single free orbit.
    WeightSystem sp = freudenthal_multiplicities(rs_of("B3"), w({0, 0, 1}));
    CHECK(sp.entries.size() == 1);
    CHECK(sp.entries.at({0, 0, 1}).orbit_size == 8);
}

TEST_CASE("size guard") {
    RootSystem a2 = rs_of("A2");
    CHECK_THROWS_AS(freudenthal_multiplicities(a2, w({1, 1}), 7), InputError);
    CHECK_NOTHROW(freudenthal_multiplicities(a2, w({1, 1}), 8));
    CHECK_THROWS_AS(weight_sum_squares(a2, w({3, 3}), WeightSumMode::RhoCanonical, 10),
                    InputError);
}

TEST_CASE("weight sum squares") {
    RootSystem a1 = rs_of("A1");
    CHECK(weight_sum_squares(a1, w({1}), WeightSumMode::RhoCheckNormalized) == make_rat(1, 2));
    CHECK(weight_sum_squares(a1, w({1}), WeightSumMode::RhoCanonical) == make_rat(1, 32));

    // Closed forms for both sums, exercised on a multiply-laced system.
    RootSystem g2 = rs_of("G2");
    Weight ad = g2.to_weight(g2.theta);
    WeightSystem ws = freudenthal_multiplicities(g2, ad);
    WeightSumPair p = weight_sum_squares(g2, ws);
    CHECK(p.rho_check_normalized == 112);
    Rat cas = g2.pair(ad, w({2, 3}));  // (theta, theta + 2 rho)
    CHECK(cas == 8);
    CHECK(p.rho_canonical == Rat(14) * cas / (2 * g2.h_star) / 24);

    // Simply laced: rho and rho^vee coincide, so the two sums differ exactly
    // by the square of the form rescaling.
    RootSystem d4 = rs_of("D4");
    WeightSystem vec = freudenthal_multiplicities(d4, w({1, 0, 0, 0}));
    WeightSumPair q = weight_sum_squares(d4, vec);
    CHECK(q.rho_check_normalized == q.rho_canonical * (2 * d4.h_star) * (2 * d4.h_star));
}
