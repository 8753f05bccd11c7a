#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "lie/principal.hpp"

using namespace lie;

namespace {

RootSystem rs_of(const char* name) { return RootSystem::build(parse_simple_type(name)); }

Weight w(std::vector<int> coords) { return Weight{std::move(coords)}; }

bool parts_equal(const SL2Decomposition& dec, std::vector<SL2Part> want) {
    if (dec.parts.size() != want.size()) return false;
    for (std::size_t i = 0; i < want.size(); ++i)
        if (dec.parts[i].d != want[i].d || dec.parts[i].multiplicity != want[i].multiplicity)
            return false;
    return true;
}

}  // namespace

TEST_CASE("h-eigenvalues") {
    RootSystem a1 = rs_of("A1");
    CHECK(principal_h_eigenvalue(a1, w({1})) == 1);
    CHECK(principal_h_eigenvalue(a1, w({-3})) == -3);

    // On the highest root the eigenvalue is 2 ht(theta) = 2(h - 1).
    for (const char* name : {"A4", "B3", "C5", "D6", "G2", "F4", "E7"}) {
        RootSystem rs = rs_of(name);
        CHECK(principal_h_eigenvalue(rs, adjoint_weight(rs)) == 2 * (rs.h - 1));
    }
    CHECK(principal_h_eigenvalue(rs_of("G2"), adjoint_weight(rs_of("G2"))) == 10);
}

TEST_CASE("height square sums") {
    CHECK(sum_height_squares(rs_of("A2")) == 6);
    CHECK(sum_height_squares(rs_of("B2")) == 15);
    CHECK(sum_height_squares(rs_of("G2")) == 56);
    CHECK(sum_height_squares(rs_of("E8")) == 18600);
}

TEST_CASE("principal index, three routes") {
    struct Row {
        const char* type;
        long value;
    };
    const Row rows[] = {{"A1", 1},  {"A2", 4},   {"A3", 10},  {"B2", 10},  {"B3", 28},
                        {"C2", 10}, {"C3", 35},  {"D4", 28},  {"D5", 60},  {"G2", 28},
                        {"F4", 156}, {"E6", 156}, {"E7", 399}, {"E8", 1240}};
    for (const Row& row : rows) {
        RootSystem rs = rs_of(row.type);
        IndexReport rep = principal_index(rs);
        CAPTURE(row.type);
        CHECK(rep.agree);
        CHECK(rep.closed_form == row.value);
        CHECK(rep.via_heights == row.value);
        CHECK(rep.via_exponents == row.value);
        CHECK(rep.value() == row.value);
    }
}

TEST_CASE("sl2 decompositions") {
    RootSystem a1 = rs_of("A1");
    CHECK(parts_equal(sl2_decompose(a1, w({2})), {{2, 1}}));
    CHECK(parts_equal(sl2_decompose(a1, w({5})), {{5, 1}}));

    RootSystem a2 = rs_of("A2");
    CHECK(parts_equal(sl2_decompose(a2, w({1, 0})), {{2, 1}}));
    CHECK(parts_equal(sl2_decompose(a2, w({1, 1})), {{2, 1}, {4, 1}}));

    // Adjoint parts realize the exponents: d = 2 m_i.
    CHECK(parts_equal(sl2_decompose(rs_of("G2"), w({0, 1})), {{2, 1}, {10, 1}}));
    CHECK(parts_equal(sl2_decompose(rs_of("D4"), w({0, 1, 0, 0})), {{2, 1}, {6, 2}, {10, 1}}));

    // Spin representations restrict with odd highest eigenvalues or gaps.
    SL2Decomposition b2spin = sl2_decompose(rs_of("B2"), w({0, 1}));
    CHECK(parts_equal(b2spin, {{3, 1}}));
    CHECK(b2spin.dim == 4);
    CHECK(parts_equal(sl2_decompose(rs_of("B3"), w({0, 0, 1})), {{0, 1}, {6, 1}}));

    CHECK_THROWS_AS(sl2_decompose(a2, w({1, 1}), 7), InputError);
}

TEST_CASE("exponents recovered from the adjoint restriction") {
    for (SimpleType t : all_simple_types(8)) {
        RootSystem rs = RootSystem::build(t);
        CAPTURE(to_string(t));
        CHECK(exponents_via_adjoint(rs) == rs.exponents);
    }
}

TEST_CASE("principal index of a representation") {
    CHECK(principal_index_rep(rs_of("A1"), w({2})) == 4);
    CHECK(principal_index_rep(rs_of("A2"), w({1, 1})) == 24);
    CHECK(principal_index_rep(rs_of("G2"), w({0, 1})) == 224);
    CHECK(principal_index_rep(rs_of("B3"), w({0, 0, 1})) == 56);
    CHECK(principal_index_rep(rs_of("B2"), w({0, 1})) == 10);

    // For the adjoint rep both routes reduce to sum C(2 m_i + 2, 3).
    for (const char* name : {"A3", "C3", "D5", "F4", "E6"}) {
        RootSystem rs = rs_of(name);
        Int want = 0;
        for (int m : rs.exponents) want += binomial(2 * m + 2, 3);
        CHECK(principal_index_rep(rs, adjoint_weight(rs)) == want);
    }
}

TEST_CASE("adjoint weights") {
    CHECK(adjoint_weight(rs_of("A2")) == w({1, 1}));
    CHECK(adjoint_weight(rs_of("B2")) == w({0, 2}));
    CHECK(adjoint_weight(rs_of("B3")) == w({0, 1, 0}));
    CHECK(adjoint_weight(rs_of("G2")) == w({0, 1}));
    CHECK(adjoint_weight(rs_of("E8")) == w({0, 0, 0, 0, 0, 0, 0, 1}));
    for (SimpleType t : all_simple_types(8)) {
        RootSystem rs = RootSystem::build(t);
        CHECK(weyl_dim(rs, adjoint_weight(rs)) == rs.dim_g);
    }
}
