#pragma once

#include "hodgescreen/errors.hpp"
#include "hodgescreen/exact/mpoly.hpp"

#include <string>
#include <vector>

namespace hodge {

// Element of K(t_1, ..., t_k). Numerator and denominator are coprime and the
// denominator is monic in lex order, so equal functions have equal
// representations.
template <class K>
class RatFunc {
public:
    using Poly = MPoly<K>;

    RatFunc() : num_(), den_(K(1)) {}
    RatFunc(long c) : num_(K(c)), den_(K(1)) {}
    RatFunc(const K& c) : num_(c), den_(K(1)) {}
    RatFunc(Poly p) : num_(std::move(p)), den_(K(1)) {}
    RatFunc(Poly num, Poly den) : num_(std::move(num)), den_(std::move(den)) {
        if (den_.is_zero()) throw DomainError("rational function with zero denominator");
        reduce();
    }

    static RatFunc variable(std::size_t i) { return RatFunc(Poly::variable(i)); }

    const Poly& num() const { return num_; }
    const Poly& den() const { return den_; }

    bool is_zero() const { return num_.is_zero(); }
    bool is_constant() const { return num_.is_constant() && den_.is_constant(); }
    K constant_value() const { return num_.constant_value() / den_.constant_value(); }
    std::size_t repr_size() const { return num_.repr_size() + den_.repr_size(); }
    std::size_t num_vars() const { return std::max(num_.num_vars(), den_.num_vars()); }

    friend RatFunc operator+(const RatFunc& a, const RatFunc& b) {
        if (a.is_zero()) return b;
        if (b.is_zero()) return a;
        if (a.den_ == b.den_) return RatFunc(a.num_ + b.num_, a.den_);
        return RatFunc(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
    }

    friend RatFunc operator-(const RatFunc& a, const RatFunc& b) {
        if (b.is_zero()) return a;
        if (a.den_ == b.den_) return RatFunc(a.num_ - b.num_, a.den_);
        return RatFunc(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
    }

    friend RatFunc operator-(const RatFunc& a) {
        RatFunc r = a;
        r.num_ = -r.num_;
        return r;
    }

    friend RatFunc operator*(const RatFunc& a, const RatFunc& b) {
        if (a.is_zero() || b.is_zero()) return RatFunc();
        if (a.den_.is_constant() && b.den_.is_constant() && (a.num_.is_constant() || b.num_.is_constant()))
            return RatFunc(a.num_ * b.num_, a.den_ * b.den_);
        // Cross-cancel first to keep the product small.
        const Poly g1 = gcd(a.num_, b.den_);
        const Poly g2 = gcd(b.num_, a.den_);
        RatFunc r;
        r.num_ = exact_divide(a.num_, g1) * exact_divide(b.num_, g2);
        r.den_ = exact_divide(a.den_, g2) * exact_divide(b.den_, g1);
        r.make_monic();
        return r;
    }

    RatFunc inverse() const {
        if (is_zero()) throw DomainError("division by zero rational function");
        RatFunc r;
        r.num_ = den_;
        r.den_ = num_;
        r.make_monic();
        return r;
    }

    friend RatFunc operator/(const RatFunc& a, const RatFunc& b) { return a * b.inverse(); }

    RatFunc& operator+=(const RatFunc& o) { return *this = *this + o; }
    RatFunc& operator-=(const RatFunc& o) { return *this = *this - o; }
    RatFunc& operator*=(const RatFunc& o) { return *this = *this * o; }
    RatFunc& operator/=(const RatFunc& o) { return *this = *this / o; }

    friend bool operator==(const RatFunc& a, const RatFunc& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend bool operator!=(const RatFunc& a, const RatFunc& b) { return !(a == b); }

    RatFunc derivative(std::size_t var) const {
        if (den_.is_constant()) return RatFunc(num_.derivative(var), den_);
        return RatFunc(num_.derivative(var) * den_ - num_ * den_.derivative(var), den_ * den_);
    }

    // Value at a point of K^k. Throws DenominatorVanishes if the denominator
    // is zero there.
    K evaluate(const std::vector<K>& point) const {
        const K d = den_.template evaluate<K>(point);
        if (hodge::is_zero(d)) throw DenominatorVanishes("denominator vanishes at evaluation point");
        return num_.template evaluate<K>(point) / d;
    }

    RatFunc substitute(std::size_t var, const K& value) const {
        const Poly d = den_.substitute(var, value);
        if (d.is_zero()) throw DenominatorVanishes("denominator vanishes under substitution");
        return RatFunc(num_.substitute(var, value), d);
    }

    std::string to_string(const std::vector<std::string>& names) const {
        if (den_.is_constant() && den_.constant_value() == K(1)) return num_.to_string(names);
        auto wrap = [&](const Poly& p) {
            const std::string s = p.to_string(names);
            return p.terms().size() > 1 ? "(" + s + ")" : s;
        };
        return wrap(num_) + "/" + wrap(den_);
    }

private:
    void reduce() {
        if (num_.is_zero()) {
            den_ = Poly(K(1));
            return;
        }
        if (!den_.is_constant()) {
            const Poly g = gcd(num_, den_);
            if (!g.is_constant()) {
                num_ = exact_divide(num_, g);
                den_ = exact_divide(den_, g);
            }
        }
        make_monic();
    }

    void make_monic() {
        if (num_.is_zero()) {
            den_ = Poly(K(1));
            return;
        }
        const K lc = den_.leading_coeff();
        if (lc == K(1)) return;
        const K inv = K(1) / lc;
        num_ = num_.scaled(inv);
        den_ = den_.scaled(inv);
    }

    Poly num_;
    Poly den_;
};

template <class K>
bool is_zero(const RatFunc<K>& x) {
    return x.is_zero();
}

template <class K>
std::size_t repr_size(const RatFunc<K>& x) {
    return x.repr_size();
}

} // namespace hodge
