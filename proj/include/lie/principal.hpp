#pragma once

#include <vector>

#include "lie/reps.hpp"
#include "lie/root_system.hpp"

namespace lie {

// Everything here concerns the principal sl2-subalgebra, whose semisimple
// generator h satisfies alpha_i(h) = 2 for every simple root.

// Eigenvalue of ad h on the mu-weight space: 2 (mu, rho^vee).  Integral for
// every integral weight.
Rat principal_h_eigenvalue(const RootSystem& rs, const Weight& mu);

// Sum of ht(gamma)^2 over the positive roots; checked against the closed
// form (dim g / 12) h^vee h^vee_dual r before returning.
Int sum_height_squares(const RootSystem& rs);

// The Dynkin index of the principal sl2, by three independent routes.
Rat index_closed_form(const RootSystem& rs);    // (dim g / 6) h^vee_dual r
Rat index_via_heights(const RootSystem& rs);    // (2 / h^vee) sum ht(gamma)^2
Rat index_via_exponents(const RootSystem& rs);  // (1 / 2h^vee) sum C(2m_i + 2, 3)

struct IndexReport {
    Rat closed_form;
    Rat via_heights;
    Rat via_exponents;
    bool agree = false;

    Int value() const { return to_integer(closed_form); }
};

// All three routes; throws ConsistencyError if they disagree or the common
// value is not a positive integer.
IndexReport principal_index(const RootSystem& rs);

struct SL2Part {
    int d = 0;                // highest h-eigenvalue of the part, dim d + 1
    long multiplicity = 0;
};

struct SL2Decomposition {
    std::vector<SL2Part> parts;  // ascending in d, multiplicities positive
    Int dim;
};

// Restriction of V(lambda) to the principal sl2, read off from the
// h-eigenvalue distribution of the weight system.
SL2Decomposition sl2_decompose(const RootSystem& rs, const Weight& lambda,
                               long max_dim = default_max_dim);

// Exponents recovered from the adjoint restriction (ad = sum of parts with
// d = 2 m_i); throws ConsistencyError if they differ from rs.exponents.
std::vector<int> exponents_via_adjoint(const RootSystem& rs);

// Dynkin index of V(lambda) restricted to the principal sl2, computed both
// as (dim V / 6) h^vee_dual r (lambda, lambda + 2 rho) and as the sum of
// C(d + 2, 3) over the sl2 parts; the two must agree.
Int principal_index_rep(const RootSystem& rs, const Weight& lambda,
                        long max_dim = default_max_dim);

// Highest weight of the adjoint representation (theta in fundamental coords).
Weight adjoint_weight(const RootSystem& rs);

}  // namespace lie
