#pragma once

#include "hodgescreen/errors.hpp"
#include "hodgescreen/exact/interval.hpp"
#include "hodgescreen/exact/scalar.hpp"
#include "hodgescreen/exact/upoly.hpp"

#include <complex>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace hodge {

class NfElem;

namespace detail {

// Approximation of the designated root: the disc |z - center| <= radius
// contains it and no other root of the minimal polynomial.
struct RootDisc {
    Rational re;
    Rational im;
    Rational radius;
};

struct FieldData {
    upoly::Poly minpoly; // monic, irreducible
    std::string name;
    ComplexBox isolating;
    RootDisc disc;
    std::optional<std::vector<Rational>> conj_image; // sigma(theta) in the power basis
    unsigned precision_budget_bits = 4096;
};

} // namespace detail

// Q(theta) for theta a designated complex root of an irreducible monic
// polynomial. Optionally carries an automorphism sigma that realizes complex
// conjugation under the designated embedding.
class NumberField {
public:
    struct Options {
        std::optional<std::vector<Rational>> conjugation; // sigma(theta) as power-basis coords
        unsigned precision_budget_bits = 4096;
    };

    // Validates irreducibility, that the rectangle isolates exactly one root,
    // and (when given) that the conjugation is an automorphism matching
    // complex conjugation. Throws DomainError otherwise.
    static NumberField create(upoly::Poly minpoly, std::string name, ComplexBox isolating, Options opts);
    static NumberField create(upoly::Poly minpoly, std::string name, ComplexBox isolating) {
        return create(std::move(minpoly), std::move(name), std::move(isolating), Options{});
    }

    // Q(i) with i the root in the upper half plane and sigma(i) = -i.
    static NumberField gaussian(std::string name = "i");

    std::size_t degree() const { return data_->minpoly.size() - 1; }
    const std::string& name() const { return data_->name; }
    const upoly::Poly& minpoly() const { return data_->minpoly; }
    const ComplexBox& isolating_box() const { return data_->isolating; }
    bool has_conjugation() const { return data_->conj_image.has_value(); }
    unsigned precision_budget_bits() const { return data_->precision_budget_bits; }

    NfElem generator() const;
    NfElem element(std::vector<Rational> coords) const;

    const std::shared_ptr<const detail::FieldData>& data() const { return data_; }

    friend bool operator==(const NumberField& a, const NumberField& b) { return a.data_ == b.data_; }

private:
    explicit NumberField(std::shared_ptr<const detail::FieldData> d) : data_(std::move(d)) {}
    std::shared_ptr<const detail::FieldData> data_;
};

// Element of Q(theta). An element without a field is a rational constant and
// is lifted into whichever field it is combined with.
class NfElem {
public:
    NfElem() : coords_{Rational(0)} {}
    NfElem(long v) : coords_{Rational(v)} {}
    NfElem(int v) : coords_{Rational(v)} {}
    NfElem(const Rational& v) : coords_{v} {}
    NfElem(std::shared_ptr<const detail::FieldData> f, std::vector<Rational> coords)
        : field_(std::move(f)), coords_(std::move(coords)) {
        normalize();
    }

    const std::shared_ptr<const detail::FieldData>& field() const { return field_; }
    const std::vector<Rational>& coords() const { return coords_; }

    bool is_zero() const {
        for (const auto& c : coords_)
            if (!hodge::is_zero(c)) return false;
        return true;
    }

    bool is_rational() const {
        for (std::size_t i = 1; i < coords_.size(); ++i)
            if (!hodge::is_zero(coords_[i])) return false;
        return true;
    }

    Rational rational_part() const { return coords_.empty() ? Rational(0) : coords_[0]; }

    std::size_t repr_size() const {
        std::size_t s = 0;
        for (const auto& c : coords_) s += hodge::repr_size(c);
        return s;
    }

    upoly::Poly as_poly() const {
        upoly::Poly p(coords_);
        upoly::trim(p);
        return p;
    }

    friend NfElem operator+(const NfElem& a, const NfElem& b) {
        auto f = common_field(a, b);
        const std::size_t n = f ? f->minpoly.size() - 1 : 1;
        std::vector<Rational> c(n);
        for (std::size_t i = 0; i < a.coords_.size(); ++i) c[i] += a.coords_[i];
        for (std::size_t i = 0; i < b.coords_.size(); ++i) c[i] += b.coords_[i];
        return NfElem(f, std::move(c));
    }

    friend NfElem operator-(const NfElem& a, const NfElem& b) {
        auto f = common_field(a, b);
        const std::size_t n = f ? f->minpoly.size() - 1 : 1;
        std::vector<Rational> c(n);
        for (std::size_t i = 0; i < a.coords_.size(); ++i) c[i] += a.coords_[i];
        for (std::size_t i = 0; i < b.coords_.size(); ++i) c[i] -= b.coords_[i];
        return NfElem(f, std::move(c));
    }

    friend NfElem operator-(const NfElem& a) {
        NfElem r = a;
        for (auto& c : r.coords_) c = -c;
        return r;
    }

    friend NfElem operator*(const NfElem& a, const NfElem& b) {
        auto f = common_field(a, b);
        if (!f) return NfElem(a.coords_[0] * b.coords_[0]);
        if (a.is_rational()) return b.scaled(a.rational_part(), f);
        if (b.is_rational()) return a.scaled(b.rational_part(), f);
        auto prod = upoly::rem(upoly::mul(a.as_poly(), b.as_poly()), f->minpoly);
        prod.resize(f->minpoly.size() - 1);
        return NfElem(f, std::move(prod));
    }

    NfElem inverse() const {
        if (is_zero()) throw DomainError("division by zero in number field");
        if (!field_ || is_rational()) return NfElem(field_, lift_coords(Rational(1) / rational_part(), field_));
        upoly::Poly s, t;
        upoly::ext_gcd(as_poly(), field_->minpoly, s, t);
        s.resize(field_->minpoly.size() - 1);
        return NfElem(field_, std::move(s));
    }

    friend NfElem operator/(const NfElem& a, const NfElem& b) { return a * b.inverse(); }

    NfElem& operator+=(const NfElem& o) { return *this = *this + o; }
    NfElem& operator-=(const NfElem& o) { return *this = *this - o; }
    NfElem& operator*=(const NfElem& o) { return *this = *this * o; }
    NfElem& operator/=(const NfElem& o) { return *this = *this / o; }

    friend bool operator==(const NfElem& a, const NfElem& b) { return (a - b).is_zero(); }
    friend bool operator!=(const NfElem& a, const NfElem& b) { return !(a == b); }

    // Image under the field's conjugation automorphism.
    NfElem conj() const {
        if (!field_ || is_rational()) return *this;
        if (!field_->conj_image) throw DomainError("field " + field_->name + " has no conjugation");
        const NfElem s(field_, *field_->conj_image);
        NfElem acc(field_, lift_coords(Rational(0), field_));
        for (std::size_t i = coords_.size(); i-- > 0;) acc = acc * s + NfElem(coords_[i]);
        return acc;
    }

    std::string to_string() const {
        if (!field_) return coords_[0].get_str();
        return upoly::to_string(as_poly(), field_->name);
    }

private:
    static std::vector<Rational> lift_coords(const Rational& c, const std::shared_ptr<const detail::FieldData>& f) {
        std::vector<Rational> v(f ? f->minpoly.size() - 1 : 1);
        v[0] = c;
        return v;
    }

    NfElem scaled(const Rational& c, const std::shared_ptr<const detail::FieldData>& f) const {
        std::vector<Rational> v(f->minpoly.size() - 1);
        for (std::size_t i = 0; i < coords_.size(); ++i) v[i] = coords_[i] * c;
        return NfElem(f, std::move(v));
    }

    static std::shared_ptr<const detail::FieldData> common_field(const NfElem& a, const NfElem& b) {
        if (!a.field_) return b.field_;
        if (!b.field_ || a.field_ == b.field_) return a.field_;
        throw DomainError("elements of different number fields combined");
    }

    void normalize() {
        const std::size_t n = field_ ? field_->minpoly.size() - 1 : 1;
        if (coords_.size() > n) {
            if (!field_) throw DomainError("rational constant with extra coordinates");
            upoly::Poly p(coords_);
            upoly::trim(p);
            coords_ = upoly::rem(p, field_->minpoly);
        }
        coords_.resize(n);
    }

    std::shared_ptr<const detail::FieldData> field_;
    std::vector<Rational> coords_;
};

inline bool is_zero(const NfElem& x) { return x.is_zero(); }
inline std::size_t repr_size(const NfElem& x) { return x.repr_size(); }
inline std::string to_string(const NfElem& x) { return x.to_string(); }

inline NfElem NumberField::generator() const {
    std::vector<Rational> c(degree());
    if (degree() == 1)
        c[0] = -data_->minpoly[0];
    else
        c[1] = 1;
    return NfElem(data_, std::move(c));
}

inline NfElem NumberField::element(std::vector<Rational> coords) const {
    if (coords.size() > degree()) throw DomainError("too many coordinates for field " + name());
    coords.resize(degree());
    return NfElem(data_, std::move(coords));
}

namespace detail {

struct GaussQ {
    Rational re;
    Rational im;
};

inline GaussQ gmul(const GaussQ& a, const GaussQ& b) {
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
}
inline GaussQ gadd(const GaussQ& a, const GaussQ& b) { return {a.re + b.re, a.im + b.im}; }
inline GaussQ gsub(const GaussQ& a, const GaussQ& b) { return {a.re - b.re, a.im - b.im}; }
inline Rational gnorm2(const GaussQ& a) { return a.re * a.re + a.im * a.im; }
inline GaussQ gdiv(const GaussQ& a, const GaussQ& b) {
    const Rational n = gnorm2(b);
    return {(a.re * b.re + a.im * b.im) / n, (a.im * b.re - a.re * b.im) / n};
}

inline GaussQ geval(const upoly::Poly& p, const GaussQ& z) {
    GaussQ acc{Rational(0), Rational(0)};
    for (std::size_t i = p.size(); i-- > 0;) acc = gadd(gmul(acc, z), GaussQ{p[i], Rational(0)});
    return acc;
}

inline Rational exact_from_long_double(long double x) {
    const double hi = static_cast<double>(x);
    const double lo = static_cast<double>(x - static_cast<long double>(hi));
    return Rational(hi) + Rational(lo);
}

inline GaussQ round_gauss(const GaussQ& z, unsigned bits) {
    return {floor_dyadic(z.re, bits), floor_dyadic(z.im, bits)};
}

// Durand-Kerner approximations of all roots of a monic polynomial.
inline std::vector<GaussQ> approximate_roots(const upoly::Poly& f) {
    using C = std::complex<long double>;
    const std::size_t n = f.size() - 1;
    std::vector<long double> c(f.size());
    for (std::size_t i = 0; i < f.size(); ++i) c[i] = static_cast<long double>(f[i].get_d());
    auto ev = [&](C z) {
        C acc = 0;
        for (std::size_t i = c.size(); i-- > 0;) acc = acc * z + C(c[i]);
        return acc;
    };
    long double bound = 1;
    for (std::size_t i = 0; i < n; ++i) bound = std::max(bound, 1 + std::abs(c[i]));
    std::vector<C> z(n);
    const C seed(0.4L, 0.9L);
    for (std::size_t k = 0; k < n; ++k) z[k] = std::pow(seed, static_cast<long double>(k)) * (bound / 2);
    for (int iter = 0; iter < 2000; ++iter) {
        long double delta = 0;
        for (std::size_t k = 0; k < n; ++k) {
            C den = 1;
            for (std::size_t j = 0; j < n; ++j)
                if (j != k) den *= (z[k] - z[j]);
            if (std::abs(den) == 0) den = C(1e-30L, 0);
            C step = ev(z[k]) / den;
            z[k] -= step;
            delta = std::max(delta, std::abs(step));
        }
        if (delta < 1e-30L) break;
    }
    std::vector<GaussQ> out;
    for (const auto& w : z) out.push_back({exact_from_long_double(w.real()), exact_from_long_double(w.imag())});
    return out;
}

// Squared-distance comparisons for a disc |z - c| <= r against a box.
inline bool disc_inside_box(const GaussQ& c, const Rational& r, const ComplexBox& b) {
    return b.re.lo <= c.re - r && c.re + r <= b.re.hi && b.im.lo <= c.im - r && c.im + r <= b.im.hi;
}

inline bool disc_outside_box(const GaussQ& c, const Rational& r, const ComplexBox& b) {
    return c.re + r < b.re.lo || c.re - r > b.re.hi || c.im + r < b.im.lo || c.im - r > b.im.hi;
}

// Verifies that `box` contains exactly one root and returns a disc around it.
inline RootDisc isolate_designated_root(const upoly::Poly& f, const ComplexBox& box) {
    const std::size_t n = f.size() - 1;
    const auto z = approximate_roots(f);
    std::vector<Rational> radius(n);
    for (std::size_t k = 0; k < n; ++k) {
        GaussQ den{Rational(1), Rational(0)};
        for (std::size_t j = 0; j < n; ++j)
            if (j != k) den = gmul(den, gsub(z[k], z[j]));
        if (is_zero(gnorm2(den))) throw DomainError("root approximations collide; cannot isolate roots");
        const Rational w2 = gnorm2(geval(f, z[k])) / gnorm2(den);
        radius[k] = Rational(static_cast<long>(n)) * sqrt_upper(w2);
    }
    for (std::size_t j = 0; j < n; ++j)
        for (std::size_t k = j + 1; k < n; ++k) {
            const Rational sum = radius[j] + radius[k];
            if (gnorm2(gsub(z[j], z[k])) <= sum * sum)
                throw DomainError("roots of the minimal polynomial are too close to isolate");
        }
    std::optional<std::size_t> inside;
    for (std::size_t k = 0; k < n; ++k) {
        if (disc_inside_box(z[k], radius[k], box)) {
            if (inside) throw DomainError("isolating rectangle contains more than one root");
            inside = k;
        } else if (!disc_outside_box(z[k], radius[k], box)) {
            throw DomainError("a root lies too close to the isolating rectangle boundary");
        }
    }
    if (!inside) throw DomainError("isolating rectangle contains no root");
    return {z[*inside].re, z[*inside].im, radius[*inside]};
}

// Box around the designated root after refining to about `bits` bits.
// `state` carries the current approximation between calls.
inline ComplexBox refine_root(const FieldData& fd, GaussQ& state, unsigned bits) {
    const upoly::Poly df = upoly::derivative(fd.minpoly);
    const Rational n(static_cast<long>(fd.minpoly.size() - 1));
    for (int step = 0; step < 64; ++step) {
        const GaussQ fz = geval(fd.minpoly, state);
        const GaussQ dfz = geval(df, state);
        if (!is_zero(gnorm2(dfz))) {
            // Some root lies within n|f/f'| of state; it is the designated one
            // when that disc sits inside the isolating disc.
            const Rational rho = n * sqrt_upper(gnorm2(fz) / gnorm2(dfz));
            const Rational off = sqrt_upper(gnorm2(gsub(state, GaussQ{fd.disc.re, fd.disc.im})));
            Rational target(1);
            mpq_div_2exp(target.get_mpq_t(), target.get_mpq_t(), bits);
            if (off + rho <= fd.disc.radius && rho <= target) {
                return {{state.re - rho, state.re + rho}, {state.im - rho, state.im + rho}};
            }
            state = round_gauss(gsub(state, gdiv(fz, dfz)), bits + 8);
        } else {
            state = round_gauss(gadd(state, GaussQ{fd.disc.radius / 3, fd.disc.radius / 5}), bits + 8);
        }
    }
    return {{fd.disc.re - fd.disc.radius, fd.disc.re + fd.disc.radius},
            {fd.disc.im - fd.disc.radius, fd.disc.im + fd.disc.radius}};
}

inline ComplexBox eval_box(const upoly::Poly& p, const ComplexBox& theta, unsigned bits) {
    ComplexBox acc = ComplexBox::point(Rational(0), Rational(0));
    for (std::size_t i = p.size(); i-- > 0;)
        acc = round_out(acc * theta + ComplexBox::point(p[i], Rational(0)), bits);
    return acc;
}

} // namespace detail

// Enclosure of the complex value of x under the designated embedding, with
// width roughly 2^-bits times the magnitude scale of x.
inline ComplexBox enclose(const NfElem& x, unsigned bits) {
    if (!x.field()) return ComplexBox::point(x.rational_part(), Rational(0));
    detail::GaussQ state{x.field()->disc.re, x.field()->disc.im};
    const auto theta = detail::refine_root(*x.field(), state, bits);
    return detail::eval_box(x.as_poly(), theta, bits + 16);
}

namespace detail {

inline int refine_sign(const NfElem& x, bool imaginary, unsigned budget) {
    const auto& fd = *x.field();
    GaussQ state{fd.disc.re, fd.disc.im};
    const upoly::Poly p = x.as_poly();
    for (unsigned bits = 32; bits <= budget; bits *= 2) {
        const auto theta = refine_root(fd, state, bits);
        const auto val = eval_box(p, theta, bits + 16);
        const Interval& part = imaginary ? val.im : val.re;
        if (part.positive()) return 1;
        if (part.negative()) return -1;
    }
    throw PrecisionExhausted(std::string("sign of the ") + (imaginary ? "imaginary" : "real") + " part of " +
                             x.to_string() + " undecided within " + std::to_string(budget) + " bits");
}

} // namespace detail

// Sign of the real part of x under the designated embedding, decided by
// interval refinement. When the field carries complex conjugation, a zero
// real part is detected exactly. Throws PrecisionExhausted when the budget
// runs out before the sign separates.
inline int sign_real_part(const NfElem& x, std::optional<unsigned> budget_bits = std::nullopt) {
    if (!x.field() || x.is_rational()) return sgn(x.rational_part());
    const unsigned budget = budget_bits.value_or(x.field()->precision_budget_bits);
    if (x.field()->conj_image) {
        const NfElem twice_re = x + x.conj();
        if (twice_re.is_rational()) return sgn(twice_re.rational_part());
        return detail::refine_sign(twice_re, false, budget);
    }
    return detail::refine_sign(x, false, budget);
}

inline int sign_imag_part(const NfElem& x, std::optional<unsigned> budget_bits = std::nullopt) {
    if (!x.field() || x.is_rational()) return 0;
    const unsigned budget = budget_bits.value_or(x.field()->precision_budget_bits);
    if (x.field()->conj_image) {
        const NfElem twice_i_im = x - x.conj();
        if (twice_i_im.is_zero()) return 0;
        return detail::refine_sign(twice_i_im, true, budget);
    }
    return detail::refine_sign(x, true, budget);
}

inline NumberField NumberField::create(upoly::Poly minpoly, std::string name, ComplexBox isolating,
                                       Options opts) {
    upoly::trim(minpoly);
    if (minpoly.size() < 2) throw DomainError("minimal polynomial must have positive degree");
    minpoly = upoly::monic(minpoly);
    switch (upoly::irreducibility(minpoly)) {
    case upoly::Irreducibility::reducible:
        throw DomainError("minimal polynomial " + upoly::to_string(minpoly) + " is reducible over Q");
    case upoly::Irreducibility::undetermined:
        throw DomainError("could not certify irreducibility of " + upoly::to_string(minpoly));
    case upoly::Irreducibility::irreducible:
        break;
    }
    if (isolating.re.lo > isolating.re.hi || isolating.im.lo > isolating.im.hi)
        throw DomainError("isolating rectangle has inverted corners");
    auto data = std::make_shared<detail::FieldData>();
    data->minpoly = minpoly;
    data->name = std::move(name);
    data->isolating = isolating;
    data->precision_budget_bits = opts.precision_budget_bits;
    data->disc = detail::isolate_designated_root(minpoly, isolating);

    if (opts.conjugation) {
        auto coords = *opts.conjugation;
        if (coords.size() > minpoly.size() - 1) throw DomainError("conjugation image has too many coordinates");
        coords.resize(minpoly.size() - 1);
        const NfElem s(data, coords);
        // sigma must send theta to a root of the minimal polynomial.
        NfElem acc(data, std::vector<Rational>(minpoly.size() - 1));
        for (std::size_t i = minpoly.size(); i-- > 0;) acc = acc * s + NfElem(minpoly[i]);
        if (!acc.is_zero()) throw DomainError("conjugation image is not a root of the minimal polynomial");
        // ... and that root must be the complex conjugate of theta.
        const ComplexBox conj_box{isolating.re, {-isolating.im.hi, -isolating.im.lo}};
        bool matched = false;
        for (unsigned bits = 32; bits <= data->precision_budget_bits && !matched; bits *= 2) {
            const auto img = enclose(s, bits);
            if (contains(conj_box, img)) matched = true;
        }
        if (!matched) throw DomainError("conjugation image does not match complex conjugation");
        data->conj_image = std::move(coords);
    }
    return NumberField(std::move(data));
}

inline NumberField NumberField::gaussian(std::string name) {
    Options opts;
    opts.conjugation = std::vector<Rational>{Rational(0), Rational(-1)};
    return create({Rational(1), Rational(0), Rational(1)}, std::move(name),
                  {{q(-1, 2), q(1, 2)}, {q(1, 2), q(3, 2)}}, opts);
}

} // namespace hodge
