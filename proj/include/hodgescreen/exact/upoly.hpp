#pragma once

#include "hodgescreen/errors.hpp"
#include "hodgescreen/exact/scalar.hpp"

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <set>
#include <string>
#include <vector>

namespace hodge::upoly {

// Dense univariate polynomials over Q, coefficients stored low degree first.
// The zero polynomial is the empty vector.
using Poly = std::vector<Rational>;

inline void trim(Poly& p) {
    while (!p.empty() && is_zero(p.back())) p.pop_back();
}

inline int degree(const Poly& p) { return static_cast<int>(p.size()) - 1; }

inline Poly add(const Poly& a, const Poly& b) {
    Poly r(std::max(a.size(), b.size()));
    for (std::size_t i = 0; i < a.size(); ++i) r[i] += a[i];
    for (std::size_t i = 0; i < b.size(); ++i) r[i] += b[i];
    trim(r);
    return r;
}

inline Poly sub(const Poly& a, const Poly& b) {
    Poly r(std::max(a.size(), b.size()));
    for (std::size_t i = 0; i < a.size(); ++i) r[i] += a[i];
    for (std::size_t i = 0; i < b.size(); ++i) r[i] -= b[i];
    trim(r);
    return r;
}

inline Poly mul(const Poly& a, const Poly& b) {
    if (a.empty() || b.empty()) return {};
    Poly r(a.size() + b.size() - 1);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (is_zero(a[i])) continue;
        for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    }
    trim(r);
    return r;
}

inline Poly scale(const Poly& a, const Rational& c) {
    if (is_zero(c)) return {};
    Poly r(a);
    for (auto& x : r) x *= c;
    return r;
}

// Euclidean division a = q*b + r with deg r < deg b.
inline void divmod(const Poly& a, const Poly& b, Poly& q, Poly& r) {
    if (b.empty()) throw DomainError("polynomial division by zero");
    r = a;
    trim(r);
    q.assign(r.size() >= b.size() ? r.size() - b.size() + 1 : 0, Rational(0));
    const Rational lead_inv = 1 / b.back();
    while (!r.empty() && r.size() >= b.size()) {
        const std::size_t shift = r.size() - b.size();
        const Rational c = r.back() * lead_inv;
        q[shift] = c;
        for (std::size_t j = 0; j < b.size(); ++j) r[shift + j] -= c * b[j];
        trim(r);
    }
    trim(q);
}

inline Poly rem(const Poly& a, const Poly& b) {
    Poly q, r;
    divmod(a, b, q, r);
    return r;
}

inline Poly monic(const Poly& a) {
    if (a.empty()) return a;
    return scale(a, 1 / a.back());
}

inline Poly gcd(Poly a, Poly b) {
    trim(a);
    trim(b);
    while (!b.empty()) {
        Poly r = rem(a, b);
        a = std::move(b);
        b = std::move(r);
    }
    return monic(a);
}

// Solves s*a + t*b = gcd(a, b); returns the monic gcd.
inline Poly ext_gcd(const Poly& a, const Poly& b, Poly& s, Poly& t) {
    Poly r0 = a, r1 = b;
    Poly s0{Rational(1)}, s1{};
    Poly t0{}, t1{Rational(1)};
    trim(r0);
    trim(r1);
    while (!r1.empty()) {
        Poly q, r;
        divmod(r0, r1, q, r);
        Poly s2 = sub(s0, mul(q, s1));
        Poly t2 = sub(t0, mul(q, t1));
        r0 = std::move(r1);
        r1 = std::move(r);
        s0 = std::move(s1);
        s1 = std::move(s2);
        t0 = std::move(t1);
        t1 = std::move(t2);
    }
    if (r0.empty()) {
        s = {};
        t = {};
        return {};
    }
    const Rational inv = 1 / r0.back();
    s = scale(s0, inv);
    t = scale(t0, inv);
    return scale(r0, inv);
}

inline Poly derivative(const Poly& a) {
    if (a.size() <= 1) return {};
    Poly r(a.size() - 1);
    for (std::size_t i = 1; i < a.size(); ++i) r[i - 1] = a[i] * static_cast<long>(i);
    trim(r);
    return r;
}

template <class T>
T eval(const Poly& p, const T& x) {
    T acc(0);
    for (std::size_t i = p.size(); i-- > 0;) acc = acc * x + T(p[i]);
    return acc;
}

inline std::string to_string(const Poly& p, const std::string& var = "x") {
    if (p.empty()) return "0";
    std::string out;
    for (std::size_t i = p.size(); i-- > 0;) {
        if (is_zero(p[i])) continue;
        Rational c = p[i];
        bool neg = sgn(c) < 0;
        if (neg) c = -c;
        if (out.empty())
            out += neg ? "-" : "";
        else
            out += neg ? " - " : " + ";
        const bool unit = is_one(c);
        if (i == 0 || !unit) out += c.get_str();
        if (i > 0) {
            if (!unit) out += "*";
            out += var;
            if (i > 1) out += "^" + std::to_string(i);
        }
    }
    return out;
}

// Primitive integer polynomial with positive leading coefficient and the
// same roots as p.
inline std::vector<Integer> primitive_integer(const Poly& p) {
    Integer den = 1;
    for (const auto& c : p) den = lcm(den, Integer(c.get_den()));
    std::vector<Integer> out(p.size());
    Integer g = 0;
    for (std::size_t i = 0; i < p.size(); ++i) {
        out[i] = p[i].get_num() * (den / p[i].get_den());
        g = gcd(g, out[i]);
    }
    if (g != 0)
        for (auto& c : out) c /= g;
    if (!out.empty() && out.back() < 0)
        for (auto& c : out) c = -c;
    return out;
}

namespace detail {

using u64 = std::uint64_t;
using ModPoly = std::vector<u64>;

inline u64 mulmod(u64 a, u64 b, u64 p) { return static_cast<u64>((__uint128_t)a * b % p); }

inline u64 powmod(u64 a, u64 e, u64 p) {
    u64 r = 1 % p;
    while (e) {
        if (e & 1) r = mulmod(r, a, p);
        a = mulmod(a, a, p);
        e >>= 1;
    }
    return r;
}

inline void mtrim(ModPoly& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

inline ModPoly mrem(ModPoly a, const ModPoly& b, u64 p) {
    mtrim(a);
    const u64 inv = powmod(b.back(), p - 2, p);
    while (!a.empty() && a.size() >= b.size()) {
        const std::size_t shift = a.size() - b.size();
        const u64 c = mulmod(a.back(), inv, p);
        for (std::size_t j = 0; j < b.size(); ++j)
            a[shift + j] = (a[shift + j] + p - mulmod(c, b[j], p)) % p;
        mtrim(a);
    }
    return a;
}

inline ModPoly mmul(const ModPoly& a, const ModPoly& b, u64 p) {
    if (a.empty() || b.empty()) return {};
    ModPoly r(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) r[i + j] = (r[i + j] + mulmod(a[i], b[j], p)) % p;
    mtrim(r);
    return r;
}

inline ModPoly mgcd(ModPoly a, ModPoly b, u64 p) {
    mtrim(a);
    mtrim(b);
    while (!b.empty()) {
        ModPoly r = mrem(a, b, p);
        a = std::move(b);
        b = std::move(r);
    }
    if (!a.empty()) {
        const u64 inv = powmod(a.back(), p - 2, p);
        for (auto& c : a) c = mulmod(c, inv, p);
    }
    return a;
}

inline ModPoly mdiv(ModPoly a, const ModPoly& b, u64 p) {
    mtrim(a);
    ModPoly q(a.size() >= b.size() ? a.size() - b.size() + 1 : 0, 0);
    const u64 inv = powmod(b.back(), p - 2, p);
    while (!a.empty() && a.size() >= b.size()) {
        const std::size_t shift = a.size() - b.size();
        const u64 c = mulmod(a.back(), inv, p);
        q[shift] = c;
        for (std::size_t j = 0; j < b.size(); ++j)
            a[shift + j] = (a[shift + j] + p - mulmod(c, b[j], p)) % p;
        mtrim(a);
    }
    mtrim(q);
    return q;
}

// x^(p^k) mod f by repeated p-th powering.
inline ModPoly frobenius(const ModPoly& base, const ModPoly& f, u64 p) {
    ModPoly result{1};
    ModPoly b = base;
    u64 e = p;
    while (e) {
        if (e & 1) result = mrem(mmul(result, b, p), f, p);
        b = mrem(mmul(b, b, p), f, p);
        e >>= 1;
    }
    return result;
}

// Degrees of the irreducible factors of a squarefree f over F_p
// (distinct-degree factorization), with multiplicity.
inline std::vector<int> factor_degrees_mod(ModPoly f, u64 p) {
    std::vector<int> degs;
    ModPoly h{0, 1};
    int d = 0;
    while (static_cast<int>(f.size()) - 1 >= 2 * (d + 1)) {
        ++d;
        h = frobenius(h, f, p);
        ModPoly hx = h;
        if (hx.size() < 2) hx.resize(2, 0);
        hx[1] = (hx[1] + p - 1) % p;
        mtrim(hx);
        ModPoly g = mgcd(f, hx, p);
        const int gd = static_cast<int>(g.size()) - 1;
        if (gd > 0) {
            for (int k = 0; k < gd / d; ++k) degs.push_back(d);
            f = mdiv(f, g, p);
            h = mrem(h, f, p);
        }
    }
    const int rest = static_cast<int>(f.size()) - 1;
    if (rest > 0) degs.push_back(rest);
    return degs;
}

inline bool is_prime(u64 n) {
    if (n < 2) return false;
    for (u64 d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

inline std::vector<Integer> divisors(Integer n) {
    n = abs(n);
    std::vector<Integer> out;
    for (Integer d = 1; d * d <= n; ++d) {
        if (n % d == 0) {
            out.push_back(d);
            if (d * d != n) out.push_back(n / d);
        }
    }
    return out;
}

inline Integer ieval(const std::vector<Integer>& f, const Integer& x) {
    Integer acc = 0;
    for (std::size_t i = f.size(); i-- > 0;) acc = acc * x + f[i];
    return acc;
}

// Lagrange interpolation through (xs[i], ys[i]); returns false when the
// interpolant has non-integer coefficients.
inline bool interpolate_integer(const std::vector<Integer>& xs, const std::vector<Integer>& ys,
                                std::vector<Integer>& out) {
    Poly acc;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        Poly basis{Rational(1)};
        Rational denom = 1;
        for (std::size_t j = 0; j < xs.size(); ++j) {
            if (j == i) continue;
            basis = mul(basis, Poly{Rational(-xs[j]), Rational(1)});
            denom *= Rational(xs[i] - xs[j]);
        }
        acc = add(acc, scale(basis, Rational(ys[i]) / denom));
    }
    out.clear();
    for (const auto& c : acc) {
        if (c.get_den() != 1) return false;
        out.push_back(c.get_num());
    }
    return true;
}

inline bool divides_integer(const std::vector<Integer>& g, const std::vector<Integer>& f) {
    Poly gq(g.begin(), g.end()), fq(f.begin(), f.end());
    trim(gq);
    if (gq.size() < 2) return false;
    return rem(fq, gq).empty();
}

} // namespace detail

enum class Irreducibility { irreducible, reducible, undetermined };

// Certifies irreducibility over Q without factoring: a squarefree check, a
// degree-pattern sieve over small primes and, for the residual cases, a
// bounded Kronecker search for a factor of the surviving degrees.
inline Irreducibility irreducibility(const Poly& p, std::size_t kronecker_budget = 2'000'000) {
    Poly f = p;
    trim(f);
    const int n = degree(f);
    if (n < 1) return Irreducibility::reducible;
    if (n == 1) return Irreducibility::irreducible;
    if (degree(gcd(f, derivative(f))) > 0) return Irreducibility::reducible;
    if (is_zero(f[0])) return Irreducibility::reducible;

    const auto F = primitive_integer(f);

    // Subset sums of possible factor degrees, intersected over primes.
    std::vector<bool> possible(n + 1, true);
    int primes_used = 0;
    for (detail::u64 q = 3; primes_used < 40 && q < 20000; q += 2) {
        if (!detail::is_prime(q)) continue;
        if (mpz_divisible_ui_p(F.back().get_mpz_t(), q)) continue;
        detail::ModPoly fm(F.size());
        for (std::size_t i = 0; i < F.size(); ++i) {
            Integer r = F[i] % static_cast<unsigned long>(q);
            if (r < 0) r += static_cast<unsigned long>(q);
            fm[i] = r.get_ui();
        }
        detail::mtrim(fm);
        detail::ModPoly dfm;
        for (std::size_t i = 1; i < fm.size(); ++i) dfm.push_back(detail::mulmod(fm[i], i % q, q));
        detail::mtrim(dfm);
        if (dfm.empty() || detail::mgcd(fm, dfm, q).size() > 1) continue;
        ++primes_used;
        const auto degs = detail::factor_degrees_mod(fm, q);
        std::vector<bool> sums(n + 1, false);
        sums[0] = true;
        for (int d : degs)
            for (int s = n; s >= d; --s)
                if (sums[s - d]) sums[s] = true;
        for (int s = 0; s <= n; ++s) possible[s] = possible[s] && sums[s];
        bool only_trivial = true;
        for (int s = 1; s < n; ++s)
            if (possible[s]) only_trivial = false;
        if (only_trivial) return Irreducibility::irreducible;
    }

    // Kronecker: look for an integer factor of each surviving degree m <= n/2.
    for (int m = 1; m <= n / 2; ++m) {
        if (!possible[m]) continue;
        std::vector<Integer> xs, vals;
        for (long x = 0; static_cast<int>(xs.size()) < m + 1; x = (x <= 0 ? 1 - x : -x)) {
            Integer v = detail::ieval(F, Integer(x));
            if (v == 0) return Irreducibility::reducible;
            xs.push_back(Integer(x));
            vals.push_back(v);
        }
        std::vector<std::vector<Integer>> choices;
        std::size_t combos = 1;
        for (std::size_t i = 0; i < vals.size(); ++i) {
            auto ds = detail::divisors(vals[i]);
            std::vector<Integer> signed_ds;
            for (const auto& d : ds) {
                signed_ds.push_back(d);
                if (i > 0) signed_ds.push_back(-d);
            }
            combos *= signed_ds.size();
            if (combos > kronecker_budget) return Irreducibility::undetermined;
            choices.push_back(std::move(signed_ds));
        }
        std::vector<std::size_t> idx(choices.size(), 0);
        std::vector<Integer> ys(choices.size()), g;
        while (true) {
            for (std::size_t i = 0; i < choices.size(); ++i) ys[i] = choices[i][idx[i]];
            if (detail::interpolate_integer(xs, ys, g) && detail::divides_integer(g, F))
                return Irreducibility::reducible;
            std::size_t k = 0;
            while (k < idx.size() && ++idx[k] == choices[k].size()) idx[k++] = 0;
            if (k == idx.size()) break;
        }
    }
    return Irreducibility::irreducible;
}

} // namespace hodge::upoly
