#pragma once

#include <gmpxx.h>

#include <string>

#include "lie/errors.hpp"

namespace lie {

// All arithmetic is exact. Int is an arbitrary-precision integer, Rat an
// arbitrary-precision rational kept in lowest terms with positive denominator.
using Int = mpz_class;
using Rat = mpq_class;

// mpq_class does not reduce a fraction built from a numerator/denominator
// pair, so every construction from parts must go through here.
inline Rat make_rat(Int num, Int den) {
    if (den == 0) throw InputError("rational with zero denominator");
    Rat r(std::move(num), std::move(den));
    r.canonicalize();
    return r;
}

inline bool is_integer(const Rat& q) { return q.get_den() == 1; }

inline Int to_integer(const Rat& q) {
    if (!is_integer(q))
        throw ConsistencyError("expected an integer, got " + q.get_str());
    return q.get_num();
}

inline long to_long(const Rat& q) {
    Int z = to_integer(q);
    if (!z.fits_slong_p())
        throw ConsistencyError("integer out of machine range: " + z.get_str());
    return z.get_si();
}

// "p" when the denominator is 1, otherwise "p/q".
inline std::string rat_str(const Rat& q) { return q.get_str(); }

inline Int binomial(unsigned long n, unsigned long k) {
    Int r;
    mpz_bin_uiui(r.get_mpz_t(), n, k);
    return r;
}

}  // namespace lie
