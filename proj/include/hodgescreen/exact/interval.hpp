#pragma once

#include "hodgescreen/exact/scalar.hpp"

#include <algorithm>

namespace hodge {

// Closed rational interval with endpoints kept on a dyadic grid so that
// repeated arithmetic does not inflate denominators.
struct Interval {
    Rational lo;
    Rational hi;

    static Interval point(const Rational& x) { return {x, x}; }

    bool contains_zero() const { return sgn(lo) <= 0 && sgn(hi) >= 0; }
    bool positive() const { return sgn(lo) > 0; }
    bool negative() const { return sgn(hi) < 0; }
    Rational width() const { return hi - lo; }
};

inline Rational floor_dyadic(const Rational& x, unsigned bits) {
    Integer scaled_num = x.get_num();
    scaled_num <<= bits;
    Integer q;
    mpz_fdiv_q(q.get_mpz_t(), scaled_num.get_mpz_t(), x.get_den_mpz_t());
    Rational r(q);
    mpq_div_2exp(r.get_mpq_t(), r.get_mpq_t(), bits);
    return r;
}

inline Rational ceil_dyadic(const Rational& x, unsigned bits) {
    Integer scaled_num = x.get_num();
    scaled_num <<= bits;
    Integer q;
    mpz_cdiv_q(q.get_mpz_t(), scaled_num.get_mpz_t(), x.get_den_mpz_t());
    Rational r(q);
    mpq_div_2exp(r.get_mpq_t(), r.get_mpq_t(), bits);
    return r;
}

inline Interval round_out(const Interval& a, unsigned bits) {
    return {floor_dyadic(a.lo, bits), ceil_dyadic(a.hi, bits)};
}

inline Interval operator+(const Interval& a, const Interval& b) { return {a.lo + b.lo, a.hi + b.hi}; }
inline Interval operator-(const Interval& a, const Interval& b) { return {a.lo - b.hi, a.hi - b.lo}; }
inline Interval operator-(const Interval& a) { return {-a.hi, -a.lo}; }

inline Interval operator*(const Interval& a, const Interval& b) {
    Rational p[4] = {a.lo * b.lo, a.lo * b.hi, a.hi * b.lo, a.hi * b.hi};
    Interval r{p[0], p[0]};
    for (const auto& x : p) {
        if (x < r.lo) r.lo = x;
        if (x > r.hi) r.hi = x;
    }
    return r;
}

// Rectangle in the complex plane.
struct ComplexBox {
    Interval re;
    Interval im;

    static ComplexBox point(const Rational& re, const Rational& im) {
        return {Interval::point(re), Interval::point(im)};
    }
};

inline ComplexBox operator+(const ComplexBox& a, const ComplexBox& b) { return {a.re + b.re, a.im + b.im}; }
inline ComplexBox operator*(const ComplexBox& a, const ComplexBox& b) {
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
}

inline ComplexBox round_out(const ComplexBox& a, unsigned bits) {
    return {round_out(a.re, bits), round_out(a.im, bits)};
}

inline bool contains(const ComplexBox& outer, const ComplexBox& inner) {
    return outer.re.lo <= inner.re.lo && inner.re.hi <= outer.re.hi && outer.im.lo <= inner.im.lo &&
           inner.im.hi <= outer.im.hi;
}

// Rational u >= sqrt(x) for x >= 0, with roughly 64 correct bits.
inline Rational sqrt_upper(const Rational& x) {
    if (sgn(x) <= 0) return Rational(0);
    Integer nd = x.get_num() * x.get_den();
    nd <<= 128;
    Integer root;
    mpz_sqrt(root.get_mpz_t(), nd.get_mpz_t());
    if (root * root < nd) root += 1;
    Rational u(root, x.get_den());
    mpq_div_2exp(u.get_mpq_t(), u.get_mpq_t(), 64);
    u.canonicalize();
    return u;
}

} // namespace hodge
