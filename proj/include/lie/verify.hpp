#pragma once

#include <array>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "lie/reps.hpp"
#include "lie/root_system.hpp"

namespace lie {

enum class IdentityId {
    StrangeFormula,        // (rho, rho) = (dim g / 12) h^vee
    CanonicalGram,         // <a_i,a_j> = sum over all roots of <a_i,g><a_j,g>
    NormalizedRewrite,     // h^vee (a_i,a_j) = sum over positive roots of (a_i,g)(a_j,g)
    HeightSquareSum,       // sum ht^2 = (dim g / 12) h^vee h^vee_dual r
    MainTheoremThreeWay,   // closed form = height route = exponent route
    TableEntry,            // principal index matches the per-family polynomial
    Unfolding,             // index equals the index of the unfolded partner
    WeightSumRhoCheck,     // sum (mu,rho^vee)^2 = (dim V / 12) h^vee_dual r (l,l+2rho)
    WeightSumFdV,          // sum <mu,rho>^2 = (dim V / 24) <l,l+2rho>
    SimplyLacedHeightSum,  // sum ht = dim g * h / 6 (simply-laced only)
    GeneralHeightSum,      // 2 (rho, rho^vee) = sum ht
    ExponentDecomposition, // adjoint sl2 parts realize the exponents
    IndexIntegrality,      // Dynkin index of every fundamental rep is an integer
    DualCoxeterConjecture, // h^vee of the dual = 1 + ht(theta_s)
};

inline constexpr std::array<IdentityId, 14> all_identities{
    IdentityId::StrangeFormula,       IdentityId::CanonicalGram,
    IdentityId::NormalizedRewrite,    IdentityId::HeightSquareSum,
    IdentityId::MainTheoremThreeWay,  IdentityId::TableEntry,
    IdentityId::Unfolding,            IdentityId::WeightSumRhoCheck,
    IdentityId::WeightSumFdV,         IdentityId::SimplyLacedHeightSum,
    IdentityId::GeneralHeightSum,     IdentityId::ExponentDecomposition,
    IdentityId::IndexIntegrality,     IdentityId::DualCoxeterConjecture,
};

std::string to_string(IdentityId id);
IdentityId parse_identity(std::string_view s);  // throws InputError on unknown names

struct CheckResult {
    IdentityId identity{};
    SimpleType simple_type{};
    // For scalar identities lhs/rhs are the two sides; for aggregate ones
    // they are (number passing, number checked).  passed iff lhs == rhs.
    Rat lhs, rhs;
    bool passed = false;
    bool skipped = false;  // identity is vacuous here (counts as neither pass nor fail)
    std::string note;
    double elapsed_seconds = 0;  // never serialized; output stays byte-stable
};

struct CheckOptions {
    int max_rank = 8;              // rank bound used by check_all's default type list
    long max_dim = default_max_dim;
    std::optional<Weight> lambda;  // pin the weight-sum identities to one weight
};

// Whether the identity is meaningful for t at all (Unfolding needs a
// multiply-laced type).  SimplyLacedHeightSum applies everywhere but reports
// skipped=true off A/D/E.
bool identity_applies(IdentityId id, SimpleType t);

// Partner of the unfolding relation: C_n -> A_{2n-1}, B_n -> D_{n+1},
// F4 -> E6, G2 -> D4.  Throws InputError for simply-laced types.
SimpleType unfolding_partner(SimpleType t);

// Closed-form principal index per family: C(n+2,3) for A_n,
// n(n+1)(2n+1)/3 for B_n, C(2n+1,3) for C_n, (n-1)n(2n-1)/3 for D_n, and
// 156, 399, 1240, 156, 28 for E6, E7, E8, F4, G2.
Rat table_index_value(SimpleType t);

CheckResult check(IdentityId id, SimpleType t, const CheckOptions& opts = {});

// Every applicable (identity, type) pair, identity-major, types in the given
// order.  One shared cache of root systems and weight sums across the run.
std::vector<CheckResult> check_all(const std::vector<SimpleType>& types,
                                   const CheckOptions& opts = {});

}  // namespace lie
