#pragma once

#include "hodgescreen/errors.hpp"
#include "hodgescreen/exact/number_field.hpp"
#include "hodgescreen/exact/scalar.hpp"

#include <algorithm>
#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <functional>
#include <vector>

namespace hodge {

// Exponent vector with trailing zeros removed, so polynomials in different
// numbers of variables compare and combine directly.
using Exponents = std::vector<std::uint32_t>;

namespace detail {

inline void trim_exps(Exponents& e) {
    while (!e.empty() && e.back() == 0) e.pop_back();
}

inline std::uint32_t exp_at(const Exponents& e, std::size_t i) { return i < e.size() ? e[i] : 0; }

// Lexicographic order with variable 0 most significant.
inline int lex_cmp(const Exponents& a, const Exponents& b) {
    const std::size_t n = std::max(a.size(), b.size());
    for (std::size_t i = 0; i < n; ++i) {
        const auto x = exp_at(a, i), y = exp_at(b, i);
        if (x != y) return x < y ? -1 : 1;
    }
    return 0;
}

struct LexGreater {
    bool operator()(const Exponents& a, const Exponents& b) const { return lex_cmp(a, b) > 0; }
};

inline Exponents exp_add(const Exponents& a, const Exponents& b) {
    Exponents r(std::max(a.size(), b.size()), 0);
    for (std::size_t i = 0; i < r.size(); ++i) r[i] = exp_at(a, i) + exp_at(b, i);
    return r;
}

inline bool exp_divides(const Exponents& d, const Exponents& m) {
    for (std::size_t i = 0; i < d.size(); ++i)
        if (d[i] > exp_at(m, i)) return false;
    return true;
}

inline Exponents exp_sub(const Exponents& a, const Exponents& b) {
    Exponents r(a);
    for (std::size_t i = 0; i < b.size(); ++i) r[i] -= b[i];
    trim_exps(r);
    return r;
}

inline bool coeff_is_plain(const Rational&) { return true; }
inline bool coeff_is_plain(const NfElem& x) { return x.is_rational(); }
inline int coeff_sign(const Rational& x) { return sgn(x); }
inline int coeff_sign(const NfElem& x) { return x.is_rational() ? sgn(x.rational_part()) : 1; }

} // namespace detail

// Sparse multivariate polynomial over a field K (Rational or NfElem), terms
// kept in strictly decreasing lex order with nonzero coefficients.
template <class K>
class MPoly {
public:
    using Term = std::pair<Exponents, K>;

    MPoly() = default;
    MPoly(const K& c) {
        if (!hodge::is_zero(c)) terms_.push_back({Exponents{}, c});
    }
    MPoly(long c) : MPoly(K(c)) {}

    static MPoly variable(std::size_t index) {
        Exponents e(index + 1, 0);
        e[index] = 1;
        MPoly p;
        p.terms_.push_back({std::move(e), K(1)});
        return p;
    }

    static MPoly monomial(Exponents e, const K& c) {
        MPoly p;
        detail::trim_exps(e);
        if (!hodge::is_zero(c)) p.terms_.push_back({std::move(e), c});
        return p;
    }

    static MPoly from_map(const std::map<Exponents, K, detail::LexGreater>& m) {
        MPoly p;
        for (const auto& [e, c] : m)
            if (!hodge::is_zero(c)) p.terms_.push_back({e, c});
        return p;
    }

    const std::vector<Term>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].first.empty()); }
    K constant_value() const { return is_constant() && !terms_.empty() ? terms_[0].second : K(0); }
    const Term& leading_term() const { return terms_.front(); }
    const K& leading_coeff() const { return terms_.front().second; }

    // Number of variables referenced (one past the highest index present).
    std::size_t num_vars() const {
        std::size_t n = 0;
        for (const auto& t : terms_) n = std::max(n, t.first.size());
        return n;
    }

    std::uint32_t degree_in(std::size_t var) const {
        std::uint32_t d = 0;
        for (const auto& t : terms_) d = std::max(d, detail::exp_at(t.first, var));
        return d;
    }

    std::uint32_t total_degree() const {
        std::uint32_t d = 0;
        for (const auto& t : terms_) {
            std::uint32_t s = 0;
            for (auto x : t.first) s += x;
            d = std::max(d, s);
        }
        return d;
    }

    std::size_t repr_size() const {
        std::size_t s = 0;
        for (const auto& t : terms_) s += hodge::repr_size(t.second) + t.first.size();
        return s;
    }

    friend MPoly operator+(const MPoly& a, const MPoly& b) { return merge(a, b, false); }
    friend MPoly operator-(const MPoly& a, const MPoly& b) { return merge(a, b, true); }
    friend MPoly operator-(const MPoly& a) {
        MPoly r = a;
        for (auto& t : r.terms_) t.second = -t.second;
        return r;
    }

    friend MPoly operator*(const MPoly& a, const MPoly& b) {
        if (a.is_zero() || b.is_zero()) return MPoly();
        if (a.is_constant()) return b.scaled(a.constant_value());
        if (b.is_constant()) return a.scaled(b.constant_value());
        std::map<Exponents, K, detail::LexGreater> acc;
        for (const auto& [ea, ca] : a.terms_)
            for (const auto& [eb, cb] : b.terms_) {
                auto e = detail::exp_add(ea, eb);
                auto it = acc.find(e);
                if (it == acc.end())
                    acc.emplace(std::move(e), ca * cb);
                else
                    it->second = it->second + ca * cb;
            }
        return from_map(acc);
    }

    MPoly scaled(const K& c) const {
        if (hodge::is_zero(c)) return MPoly();
        MPoly r = *this;
        for (auto& t : r.terms_) t.second = t.second * c;
        return r;
    }

    MPoly& operator+=(const MPoly& o) { return *this = *this + o; }
    MPoly& operator-=(const MPoly& o) { return *this = *this - o; }
    MPoly& operator*=(const MPoly& o) { return *this = *this * o; }

    friend bool operator==(const MPoly& a, const MPoly& b) { return (a - b).is_zero(); }
    friend bool operator!=(const MPoly& a, const MPoly& b) { return !(a == b); }

    MPoly pow(unsigned e) const {
        MPoly r(K(1)), base = *this;
        while (e) {
            if (e & 1) r = r * base;
            e >>= 1;
            if (e) base = base * base;
        }
        return r;
    }

    MPoly derivative(std::size_t var) const {
        std::map<Exponents, K, detail::LexGreater> acc;
        for (const auto& [e, c] : terms_) {
            const auto d = detail::exp_at(e, var);
            if (d == 0) continue;
            Exponents ne = e;
            ne[var] -= 1;
            detail::trim_exps(ne);
            acc[ne] = c * K(static_cast<long>(d));
        }
        return from_map(acc);
    }

    // Evaluates at a point; missing coordinates count as zero.
    template <class V>
    V evaluate(const std::vector<V>& point) const {
        V acc(0);
        for (const auto& [e, c] : terms_) {
            V term = V(c);
            for (std::size_t i = 0; i < e.size(); ++i)
                for (std::uint32_t k = 0; k < e[i]; ++k) term = term * (i < point.size() ? point[i] : V(0));
            acc = acc + term;
        }
        return acc;
    }

    // Replaces variable `var` by the constant `value`.
    MPoly substitute(std::size_t var, const K& value) const {
        std::map<Exponents, K, detail::LexGreater> acc;
        for (const auto& [e, c] : terms_) {
            const auto d = detail::exp_at(e, var);
            K coeff = c;
            for (std::uint32_t k = 0; k < d; ++k) coeff = coeff * value;
            Exponents ne = e;
            if (var < ne.size()) ne[var] = 0;
            detail::trim_exps(ne);
            auto it = acc.find(ne);
            if (it == acc.end())
                acc.emplace(std::move(ne), coeff);
            else
                it->second = it->second + coeff;
        }
        return from_map(acc);
    }

    // Coefficients with respect to `var`: result[d] multiplies var^d.
    std::vector<MPoly> coefficients_in(std::size_t var) const {
        std::vector<std::map<Exponents, K, detail::LexGreater>> parts(degree_in(var) + 1);
        for (const auto& [e, c] : terms_) {
            const auto d = detail::exp_at(e, var);
            Exponents ne = e;
            if (var < ne.size()) ne[var] = 0;
            detail::trim_exps(ne);
            parts[d].emplace(std::move(ne), c);
        }
        std::vector<MPoly> out;
        for (const auto& m : parts) out.push_back(from_map(m));
        return out;
    }

    static MPoly from_coefficients(const std::vector<MPoly>& coeffs, std::size_t var) {
        MPoly acc;
        const MPoly x = variable(var);
        for (std::size_t d = coeffs.size(); d-- > 0;) acc = acc * x + coeffs[d];
        return acc;
    }

    // Exact division; returns false (leaving q unspecified) if b does not divide a.
    friend bool try_divide(const MPoly& a, const MPoly& b, MPoly& q) {
        if (b.is_zero()) throw DomainError("polynomial division by zero");
        q = MPoly();
        if (b.is_constant()) {
            q = a.scaled(K(1) / b.constant_value());
            return true;
        }
        MPoly r = a;
        const auto& [lb, cb] = b.leading_term();
        const K inv = K(1) / cb;
        std::vector<Term> qterms;
        while (!r.is_zero()) {
            const auto& [lr, cr] = r.leading_term();
            if (!detail::exp_divides(lb, lr)) return false;
            Exponents e = detail::exp_sub(lr, lb);
            const K c = cr * inv;
            qterms.push_back({e, c});
            r = r - b.times_term(e, c);
        }
        q.terms_ = std::move(qterms);
        return true;
    }

    friend MPoly exact_divide(const MPoly& a, const MPoly& b) {
        MPoly q;
        if (!try_divide(a, b, q)) throw DomainError("inexact polynomial division");
        return q;
    }

    // Scales so the lex-leading coefficient is one.
    MPoly monic() const {
        if (is_zero()) return *this;
        return scaled(K(1) / leading_coeff());
    }

    std::string to_string(const std::vector<std::string>& names) const {
        if (terms_.empty()) return "0";
        std::string out;
        for (const auto& [e, c] : terms_) {
            const bool plain = detail::coeff_is_plain(c);
            const int s = detail::coeff_sign(c);
            K mag = (plain && s < 0) ? K(-c) : c;
            if (out.empty())
                out += (plain && s < 0) ? "-" : "";
            else
                out += (plain && s < 0) ? " - " : " + ";
            std::string mono;
            for (std::size_t i = 0; i < e.size(); ++i) {
                if (e[i] == 0) continue;
                if (!mono.empty()) mono += "*";
                mono += i < names.size() ? names[i] : "x" + std::to_string(i + 1);
                if (e[i] > 1) mono += "^" + std::to_string(e[i]);
            }
            const std::string cs = hodge::to_string(mag);
            const bool unit = plain && mag == K(1);
            if (mono.empty())
                out += plain ? cs : "(" + cs + ")";
            else if (unit)
                out += mono;
            else
                out += (plain ? cs : "(" + cs + ")") + "*" + mono;
        }
        return out;
    }

private:
    MPoly times_term(const Exponents& e, const K& c) const {
        MPoly r;
        r.terms_.reserve(terms_.size());
        for (const auto& [te, tc] : terms_) r.terms_.push_back({detail::exp_add(te, e), tc * c});
        for (auto& t : r.terms_) detail::trim_exps(t.first);
        return r;
    }

    static MPoly merge(const MPoly& a, const MPoly& b, bool subtract) {
        MPoly r;
        r.terms_.reserve(a.terms_.size() + b.terms_.size());
        std::size_t i = 0, j = 0;
        while (i < a.terms_.size() || j < b.terms_.size()) {
            int c;
            if (i == a.terms_.size())
                c = -1;
            else if (j == b.terms_.size())
                c = 1;
            else
                c = detail::lex_cmp(a.terms_[i].first, b.terms_[j].first);
            if (c > 0) {
                r.terms_.push_back(a.terms_[i++]);
            } else if (c < 0) {
                r.terms_.push_back({b.terms_[j].first, subtract ? K(-b.terms_[j].second) : b.terms_[j].second});
                ++j;
            } else {
                K s = subtract ? K(a.terms_[i].second - b.terms_[j].second) : K(a.terms_[i].second + b.terms_[j].second);
                if (!hodge::is_zero(s)) r.terms_.push_back({a.terms_[i].first, std::move(s)});
                ++i;
                ++j;
            }
        }
        return r;
    }

    std::vector<Term> terms_;
};

template <class K>
bool is_zero(const MPoly<K>& p) {
    return p.is_zero();
}

namespace detail {

template <class K>
int max_var(const MPoly<K>& p) {
    return static_cast<int>(p.num_vars()) - 1;
}

// Pseudo-remainder of a by b with respect to `var`, as coefficient vectors.
template <class K>
std::vector<MPoly<K>> pseudo_remainder(std::vector<MPoly<K>> a, const std::vector<MPoly<K>>& b) {
    const MPoly<K>& lb = b.back();
    while (!a.empty() && a.size() >= b.size()) {
        const MPoly<K> la = a.back();
        const std::size_t shift = a.size() - b.size();
        for (auto& c : a) c = c * lb;
        for (std::size_t j = 0; j < b.size(); ++j) a[shift + j] = a[shift + j] - la * b[j];
        while (!a.empty() && a.back().is_zero()) a.pop_back();
    }
    return a;
}

inline void for_each_rational(const Rational& x, const std::function<void(const Rational&)>& f) { f(x); }
inline void for_each_rational(const NfElem& x, const std::function<void(const Rational&)>& f) {
    for (const auto& c : x.coords()) f(c);
}

// Rescales a coefficient vector by a positive rational so that all rational
// coordinates become coprime integers. Keeps pseudo-remainders from growing.
template <class K>
void strip_numeric_content(std::vector<MPoly<K>>& v) {
    Integer den_lcm = 1, num_gcd = 0;
    for (const auto& p : v)
        for (const auto& [e, c] : p.terms())
            for_each_rational(c, [&](const Rational& r) {
                if (sgn(r) == 0) return;
                mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), r.get_den_mpz_t());
                mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), r.get_num_mpz_t());
            });
    if (num_gcd == 0) return;
    const Rational factor(den_lcm, num_gcd);
    if (factor == 1) return;
    const K kf(factor);
    for (auto& p : v) p = p.scaled(kf);
}

} // namespace detail

template <class K>
MPoly<K> gcd(const MPoly<K>& a, const MPoly<K>& b);

// Gcd of the coefficients of p viewed as a polynomial in `var`.
template <class K>
MPoly<K> content_in(const MPoly<K>& p, std::size_t var) {
    MPoly<K> g;
    for (const auto& c : p.coefficients_in(var)) {
        if (c.is_zero()) continue;
        g = gcd(g, c);
        if (g.is_constant()) return MPoly<K>(K(1));
    }
    return g;
}

// Monic gcd over K[x_1..x_n] via recursive primitive pseudo-remainder sequences.
template <class K>
MPoly<K> gcd(const MPoly<K>& a, const MPoly<K>& b) {
    if (a.is_zero()) return b.monic();
    if (b.is_zero()) return a.monic();
    if (a.is_constant() || b.is_constant()) return MPoly<K>(K(1));
    const int v = std::max(detail::max_var(a), detail::max_var(b));
    const auto var = static_cast<std::size_t>(v);
    if (a.degree_in(var) == 0) return gcd(a, content_in(b, var));
    if (b.degree_in(var) == 0) return gcd(content_in(a, var), b);

    const MPoly<K> ca = content_in(a, var);
    const MPoly<K> cb = content_in(b, var);
    const MPoly<K> c = gcd(ca, cb);

    auto primitive = [&](const MPoly<K>& p, const MPoly<K>& cont) {
        auto coeffs = p.coefficients_in(var);
        for (auto& x : coeffs) x = exact_divide(x, cont);
        return coeffs;
    };
    auto A = primitive(a, ca);
    auto B = primitive(b, cb);
    detail::strip_numeric_content(A);
    detail::strip_numeric_content(B);
    if (A.size() < B.size()) std::swap(A, B);
    while (true) {
        auto R = detail::pseudo_remainder(A, B);
        if (R.empty()) break;
        if (R.size() == 1) {
            B = {MPoly<K>(K(1))};
            break;
        }
        MPoly<K> cr;
        for (const auto& x : R) cr = gcd(cr, x);
        for (auto& x : R) x = exact_divide(x, cr);
        detail::strip_numeric_content(R);
        A = std::move(B);
        B = std::move(R);
    }
    return (c * MPoly<K>::from_coefficients(B, var)).monic();
}

// Resultant with respect to `var` via the Sylvester determinant, evaluated
// with fraction-free (Bareiss) elimination over the polynomial ring.
template <class K>
MPoly<K> resultant(const MPoly<K>& a, const MPoly<K>& b, std::size_t var) {
    if (a.is_zero() || b.is_zero()) return MPoly<K>();
    const auto ca = a.coefficients_in(var);
    const auto cb = b.coefficients_in(var);
    const std::size_t m = ca.size() - 1, n = cb.size() - 1;
    if (m == 0 && n == 0) return MPoly<K>(K(1));
    if (m == 0) return a.pow(static_cast<unsigned>(n));
    if (n == 0) return b.pow(static_cast<unsigned>(m));
    const std::size_t N = m + n;
    std::vector<std::vector<MPoly<K>>> S(N, std::vector<MPoly<K>>(N));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j <= m; ++j) S[i][i + j] = ca[m - j];
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j <= n; ++j) S[n + i][i + j] = cb[n - j];
    MPoly<K> prev(K(1));
    int sign = 1;
    for (std::size_t k = 0; k + 1 < N; ++k) {
        if (S[k][k].is_zero()) {
            std::size_t r = k + 1;
            while (r < N && S[r][k].is_zero()) ++r;
            if (r == N) return MPoly<K>();
            std::swap(S[k], S[r]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < N; ++i) {
            for (std::size_t j = k + 1; j < N; ++j)
                S[i][j] = exact_divide(S[k][k] * S[i][j] - S[i][k] * S[k][j], prev);
            S[i][k] = MPoly<K>();
        }
        prev = S[k][k];
    }
    MPoly<K> det = S[N - 1][N - 1];
    return sign < 0 ? -det : det;
}

} // namespace hodge
