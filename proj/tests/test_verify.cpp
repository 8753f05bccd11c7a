#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "lie/verify.hpp"

using namespace lie;

namespace {

SimpleType t_of(const char* name) { return parse_simple_type(name); }

}  // namespace

TEST_CASE("identity names round-trip") {
    std::set<std::string> seen;
    for (IdentityId id : all_identities) {
        std::string name = to_string(id);
        CHECK(parse_identity(name) == id);
        CHECK(seen.insert(name).second);
    }
    CHECK(seen.size() == 14);
    CHECK_THROWS_AS(parse_identity("Nope"), InputError);
    CHECK_THROWS_AS(parse_identity("strangeformula"), InputError);
    CHECK_THROWS_AS(parse_identity(""), InputError);
}

TEST_CASE("single scalar checks") {
    CheckResult r = check(IdentityId::StrangeFormula, t_of("A1"));
    CHECK(r.passed);
    CHECK_FALSE(r.skipped);
    CHECK(r.lhs == make_rat(1, 2));
    CHECK(r.rhs == make_rat(1, 2));

    CheckResult g = check(IdentityId::GeneralHeightSum, t_of("G2"));
    CHECK(g.passed);
    CHECK(g.lhs == 16);

    CheckResult hs = check(IdentityId::HeightSquareSum, t_of("B2"));
    CHECK(hs.passed);
    CHECK(hs.lhs == 15);

    CheckResult mt = check(IdentityId::MainTheoremThreeWay, t_of("E8"));
    CHECK(mt.passed);
    CHECK(mt.lhs == 1240);
    CHECK(mt.rhs == 1240);
    CHECK(mt.note.find("closed=") != std::string::npos);
    CHECK(mt.note.find("heights=") != std::string::npos);
    CHECK(mt.note.find("exponents=") != std::string::npos);
}

TEST_CASE("matrix and counting digests") {
    CheckResult cg = check(IdentityId::CanonicalGram, t_of("F4"));
    CHECK(cg.passed);
    CHECK(cg.lhs == 16);  // all 4x4 entries match
    CHECK(cg.rhs == 16);

    CheckResult nr = check(IdentityId::NormalizedRewrite, t_of("G2"));
    CHECK(nr.passed);
    CHECK(nr.lhs == 4);

    CheckResult ii = check(IdentityId::IndexIntegrality, t_of("E8"));
    CHECK(ii.passed);
    CHECK(ii.lhs == 4);  // only four fundamentals fit under the default dim cap
    CHECK(ii.note.find("over the dim limit") != std::string::npos);

    CheckResult ws = check(IdentityId::WeightSumRhoCheck, t_of("A2"));
    CHECK(ws.passed);
    CHECK(ws.lhs == 3);  // adjoint + two fundamentals
    CHECK(ws.rhs == 3);
}

TEST_CASE("dual Coxeter comparison") {
    CheckResult r = check(IdentityId::DualCoxeterConjecture, t_of("B4"));
    CHECK(r.passed);
    CHECK(r.lhs == 5);
    CHECK(r.rhs == 5);
    CHECK(r.note.find("+1") != std::string::npos);
}

TEST_CASE("unfolding") {
    CHECK(unfolding_partner(t_of("C3")) == t_of("A5"));
    CHECK(unfolding_partner(t_of("B3")) == t_of("D4"));
    CHECK(unfolding_partner(t_of("F4")) == t_of("E6"));
    CHECK(unfolding_partner(t_of("G2")) == t_of("D4"));
    CHECK(unfolding_partner(t_of("B2")) == SimpleType{Family::D, 3});
    CHECK_THROWS_AS(unfolding_partner(t_of("A2")), InputError);

    CHECK_FALSE(identity_applies(IdentityId::Unfolding, t_of("A2")));
    CHECK(identity_applies(IdentityId::Unfolding, t_of("B2")));
    CHECK(identity_applies(IdentityId::StrangeFormula, t_of("A2")));
    CHECK_THROWS_AS(check(IdentityId::Unfolding, t_of("D4")), InputError);

    CheckResult c3 = check(IdentityId::Unfolding, t_of("C3"));
    CHECK(c3.passed);
    CHECK(c3.lhs == 35);
    CHECK(c3.note.find("A5") != std::string::npos);

    // B2 unfolds to D3, which only exists unvalidated.
    CheckResult b2 = check(IdentityId::Unfolding, t_of("B2"));
    CHECK(b2.passed);
    CHECK(b2.lhs == 10);
    CHECK(b2.note.find("D3") != std::string::npos);
}

TEST_CASE("simply-laced height sum skips elsewhere") {
    CheckResult b2 = check(IdentityId::SimplyLacedHeightSum, t_of("B2"));
    CHECK(b2.skipped);
    CHECK(b2.passed);
    CHECK(b2.lhs == 0);
    CHECK(b2.rhs == 0);

    CheckResult a3 = check(IdentityId::SimplyLacedHeightSum, t_of("A3"));
    CHECK_FALSE(a3.skipped);
    CHECK(a3.passed);
    CHECK(a3.lhs == 10);  // sum of heights 1+1+1+2+2+3
}

TEST_CASE("weight-sum checks pinned to one weight") {
    CheckOptions opts;
    opts.lambda = Weight{{0, 1}};
    CheckResult rc = check(IdentityId::WeightSumRhoCheck, t_of("G2"), opts);
    CHECK(rc.passed);
    CHECK(rc.lhs == 112);
    CHECK(rc.note.find("lambda=") != std::string::npos);

    CheckResult fdv = check(IdentityId::WeightSumFdV, t_of("G2"), opts);
    CHECK(fdv.passed);
    CHECK(fdv.lhs == make_rat(7, 12));

    CheckOptions bad_len;
    bad_len.lambda = Weight{{1}};
    CHECK_THROWS_AS(check(IdentityId::WeightSumRhoCheck, t_of("G2"), bad_len), InputError);
    CheckOptions bad_dom;
    bad_dom.lambda = Weight{{-1, 0}};
    CHECK_THROWS_AS(check(IdentityId::WeightSumFdV, t_of("G2"), bad_dom), InputError);
}

TEST_CASE("inadmissible types are rejected") {
    CHECK_THROWS_AS(check(IdentityId::StrangeFormula, SimpleType{Family::D, 3}), InputError);
    CHECK_THROWS_AS(check_all({t_of("A1"), SimpleType{Family::B, 1}}), InputError);
}

TEST_CASE("family polynomials") {
    CHECK(table_index_value(t_of("A5")) == 35);
    CHECK(table_index_value(t_of("A8")) == 120);
    CHECK(table_index_value(t_of("B8")) == 408);
    CHECK(table_index_value(t_of("C3")) == 35);
    CHECK(table_index_value(t_of("C8")) == 680);
    CHECK(table_index_value(t_of("D8")) == 280);
    CHECK(table_index_value(t_of("E6")) == 156);
    CHECK(table_index_value(t_of("E7")) == 399);
    CHECK(table_index_value(t_of("E8")) == 1240);
    CHECK(table_index_value(t_of("F4")) == 156);
    CHECK(table_index_value(t_of("G2")) == 28);
}

TEST_CASE("full sweep over rank <= 8") {
    std::vector<SimpleType> types = all_simple_types(8);
    CHECK(types.size() == 32);
    std::vector<CheckResult> results = check_all(types);

    // 13 identities on every type plus Unfolding on the 16 multiply-laced ones.
    CHECK(results.size() == 432);
    long skipped = 0, failed = 0;
    for (const CheckResult& r : results) {
        if (r.skipped) ++skipped;
        if (!r.passed) ++failed;
    }
    CHECK(skipped == 16);
    CHECK(failed == 0);

    // Identity-major order, types in the order given.
    CHECK(results[0].identity == IdentityId::StrangeFormula);
    CHECK(results[0].simple_type == t_of("A1"));
    for (int i = 0; i < 32; ++i) CHECK(results[i].identity == IdentityId::StrangeFormula);
    CHECK(results[32].identity == IdentityId::CanonicalGram);
}
