#pragma once

#include <map>
#include <vector>

#include "lie/root_system.hpp"

namespace lie {

// Cap on Weyl dimensions before any weight-system enumeration starts.  The
// CLI lets LIE_INDEX_MAX_DIM / --max-dim override it.
inline constexpr long default_max_dim = 1'000'000;

// dim V(lambda) by the Weyl dimension formula.  lambda must be dominant.
Int weyl_dim(const RootSystem& rs, const Weight& lambda);

// Dynkin index of V(lambda): (dim V / dim g) * (lambda, lambda + 2 rho)
// under the normalized form.  Always a non-negative integer (returned as Rat
// so callers can keep computing with it).
Rat dynkin_index_rep(const RootSystem& rs, const Weight& lambda);

// Index with respect to the canonical form instead: dynkin / (2 h^vee).
Rat ave_index_rep(const RootSystem& rs, const Weight& lambda);

// All dominant weights mu <= lambda (lambda - mu a sum of positive roots),
// ordered by increasing ht(lambda - mu), ties lexicographic.  lambda itself
// comes first.
std::vector<Weight> dominant_weights(const RootSystem& rs, const Weight& lambda);

// The W-orbit of mu, each element once, sorted lexicographically descending
// (so the dominant representative, if mu is dominant, leads).
std::vector<Weight> weyl_orbit(const RootSystem& rs, const Weight& mu);

// The unique dominant weight in the W-orbit of mu.
Weight dominant_representative(const RootSystem& rs, const Weight& mu);

struct WeightEntry {
    long multiplicity = 0;
    long orbit_size = 0;
};

// Weight system of V(lambda), grouped by dominant representatives.
struct WeightSystem {
    Weight lambda;
    std::map<std::vector<int>, WeightEntry> entries;  // dominant weight coords -> data
    Int dim;                                          // == weyl_dim(lambda)
};

// Multiplicities by Freudenthal's recursion, cross-checked against the Weyl
// dimension.  Throws InputError when weyl_dim(lambda) exceeds max_dim.
WeightSystem freudenthal_multiplicities(const RootSystem& rs, const Weight& lambda,
                                        long max_dim = default_max_dim);

enum class WeightSumMode {
    RhoCheckNormalized,  // sum of (mu, rho^vee)^2, normalized form
    RhoCanonical,        // sum of <mu, rho>^2, canonical form
};

struct WeightSumPair {
    Rat rho_check_normalized;
    Rat rho_canonical;
};

// Both squared-pairing sums over the full (multiset) weight system in one
// sweep; the single-mode overloads pick a component.
WeightSumPair weight_sum_squares(const RootSystem& rs, const WeightSystem& ws);
Rat weight_sum_squares(const RootSystem& rs, const Weight& lambda, WeightSumMode mode,
                       long max_dim = default_max_dim);

}  // namespace lie
