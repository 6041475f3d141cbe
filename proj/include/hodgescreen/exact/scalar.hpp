#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <string>

namespace hodge {

// Arbitrary-precision rationals. mpq_class keeps the canonical form
// (positive denominator, coprime parts) after every operation.
using Rational = mpq_class;
using Integer = mpz_class;

inline bool is_zero(const Rational& x) { return sgn(x) == 0; }
inline bool is_one(const Rational& x) { return cmp(x, 1) == 0; }

// Bit size used for pivot selection during elimination.
inline std::size_t repr_size(const Rational& x) {
    return mpz_sizeinbase(x.get_num_mpz_t(), 2) + mpz_sizeinbase(x.get_den_mpz_t(), 2);
}

inline Rational q(long num, long den = 1) {
    Rational r(num);
    r /= den;
    return r;
}

inline std::string to_string(const Rational& x) { return x.get_str(); }

inline Rational parse_rational(const std::string& s) {
    Rational r(s, 10);
    r.canonicalize();
    return r;
}

} // namespace hodge
