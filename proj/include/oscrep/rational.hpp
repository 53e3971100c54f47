#pragma once

// Exact rational scalars. All coefficient arithmetic in this library is
// performed over the rationals with arbitrary precision; nothing is ever
// rounded. GMP's mpq_class already guarantees the canonical form we rely on
// (lowest terms, positive denominator), so Scalar is an alias rather than a
// wrapper.

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace oscrep {

using Integer = mpz_class;
using Scalar = mpq_class;

/// n! as an exact integer.
inline Integer factorial(unsigned long n) {
    Integer r;
    mpz_fac_ui(r.get_mpz_t(), n);
    return r;
}

/// Generalized binomial coefficient C(n, k) for integer n (possibly
/// negative) and k >= 0, via C(-n, k) = (-1)^k C(n+k-1, k).
inline Integer binomial(const Integer& n, unsigned long k) {
    Integer r;
    mpz_bin_ui(r.get_mpz_t(), n.get_mpz_t(), k);
    return r;
}

/// c^e for a nonnegative integer exponent.
inline Scalar scalar_pow(const Scalar& c, unsigned long e) {
    Scalar r;
    mpz_pow_ui(r.get_num_mpz_t(), c.get_num().get_mpz_t(), e);
    mpz_pow_ui(r.get_den_mpz_t(), c.get_den().get_mpz_t(), e);
    r.canonicalize();
    return r;
}

/// Parse "p/q" or "p" into a Scalar. Throws std::invalid_argument on a zero
/// denominator or malformed input.
inline Scalar scalar_from_string(const std::string& s) {
    Scalar r;
    if (r.set_str(s, 10) != 0)
        throw std::invalid_argument("not a rational literal: '" + s + "'");
    if (r.get_den() == 0)
        throw std::invalid_argument("zero denominator in rational literal: '" + s + "'");
    r.canonicalize();
    return r;
}

/// Canonical "p/q" (or "p" when q = 1) rendering.
inline std::string scalar_to_string(const Scalar& c) { return c.get_str(); }

}  // namespace oscrep
