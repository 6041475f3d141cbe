#include "hodgescreen/exact/expression.hpp"
#include "hodgescreen/exact/mpoly.hpp"
#include "hodgescreen/exact/ratfunc.hpp"
#include "hodgescreen/exact/upoly.hpp"
#include "test_support.hpp"

#include <gtest/gtest.h>

using namespace hodge;
using namespace testing_support;

using P = MPoly<Rational>;
using RF = RatFunc<Rational>;

namespace {

P x(std::size_t i) { return P::variable(i); }

bool divides(const P& d, const P& p) {
    P q;
    return try_divide(p, d, q);
}

} // namespace

TEST(UnivariatePoly, GcdAndExtendedGcd) {
    // (x-1)(x+2) and (x-1)(x-3)
    const upoly::Poly a{Rational(-2), Rational(1), Rational(1)};
    const upoly::Poly b{Rational(3), Rational(-4), Rational(1)};
    EXPECT_EQ(upoly::gcd(a, b), (upoly::Poly{Rational(-1), Rational(1)}));
    upoly::Poly s, t;
    const auto g = upoly::ext_gcd(a, b, s, t);
    EXPECT_EQ(upoly::add(upoly::mul(s, a), upoly::mul(t, b)), g);
}

TEST(UnivariatePoly, Irreducibility) {
    using upoly::Irreducibility;
    EXPECT_EQ(upoly::irreducibility({Rational(1), Rational(0), Rational(1)}), Irreducibility::irreducible);
    EXPECT_EQ(upoly::irreducibility({Rational(1), 0, 0, 0, Rational(1)}), Irreducibility::irreducible);
    EXPECT_EQ(upoly::irreducibility({Rational(4), 0, 0, 0, Rational(1)}), Irreducibility::reducible);
    EXPECT_EQ(upoly::irreducibility({Rational(-1), 0, 0, 0, Rational(1)}), Irreducibility::reducible);
    // x^4 - 10x^2 + 1 is irreducible but splits modulo every prime
    EXPECT_EQ(upoly::irreducibility({Rational(1), 0, Rational(-10), 0, Rational(1)}), Irreducibility::irreducible);
    // (x^2+x+1)(x^3+x+1)
    const auto prod = upoly::mul({1, 1, 1}, {1, 1, 0, 1});
    EXPECT_EQ(upoly::irreducibility(prod), Irreducibility::reducible);
}

TEST(MultivariatePoly, ArithmeticAndOrder) {
    const P p = x(0) * x(0) + x(1) * 3 - P(2L);
    EXPECT_EQ(p.degree_in(0), 2u);
    EXPECT_EQ(p.total_degree(), 2u);
    EXPECT_EQ(p.leading_coeff(), Rational(1));
    EXPECT_EQ(p.derivative(0), x(0) * 2);
    EXPECT_EQ(p.evaluate<Rational>({Rational(2), Rational(1)}), Rational(5));
    EXPECT_EQ(p.substitute(1, Rational(1)), x(0) * x(0) + P(1L));
}

TEST(MultivariatePoly, GcdOfKnownFactors) {
    const P g = x(0) * x(1) - P(1L);
    const P a = g * (x(0) + x(1));
    const P b = g * (x(0) - x(1) * 2 + P(3L));
    EXPECT_EQ(gcd(a, b), g.monic());
    EXPECT_EQ(gcd(a, P()), a.monic());
    EXPECT_EQ(gcd(x(0), x(1)), P(1L));
}

TEST(MultivariatePoly, GcdPropertyRandom) {
    std::mt19937_64 rng(31);
    for (int trial = 0; trial < 30; ++trial) {
        const P g = random_mpoly<Rational>(rng, 3, 2, 3);
        const P a = random_mpoly<Rational>(rng, 3, 2, 3);
        const P b = random_mpoly<Rational>(rng, 3, 2, 3);
        if (g.is_zero() || a.is_zero() || b.is_zero()) continue;
        const P ga = g * a, gb = g * b;
        const P d = gcd(ga, gb);
        EXPECT_TRUE(divides(d, ga));
        EXPECT_TRUE(divides(d, gb));
        EXPECT_TRUE(divides(g, d * P(1L)) || g.is_constant()) << "gcd lost a common factor";
        EXPECT_EQ(d.leading_coeff(), Rational(1));
    }
}

TEST(MultivariatePoly, ResultantDetectsCommonRoots) {
    // Res_x(x^2 - y, x - 1) = 1 - y
    const P a = x(0) * x(0) - x(1);
    const P b = x(0) - P(1L);
    EXPECT_EQ(resultant(a, b, 0), P(1L) - x(1));
    // Res_x(x^2 + y^2 - 2, x - y) vanishes exactly at y = +-1
    const P c = x(0) * x(0) + x(1) * x(1) - P(2L);
    const P d = x(0) - x(1);
    const P r = resultant(c, d, 0);
    EXPECT_EQ(r.degree_in(0), 0u);
    EXPECT_EQ(r.evaluate<Rational>({Rational(0), Rational(1)}), Rational(0));
    EXPECT_EQ(r.evaluate<Rational>({Rational(0), Rational(-1)}), Rational(0));
    EXPECT_NE(r.evaluate<Rational>({Rational(0), Rational(2)}), Rational(0));
}

TEST(MultivariatePoly, ResultantMatchesProductOverRoots) {
    // For monic quadratic b with roots r_j: Res(a, b) = prod a(r_j).
    std::mt19937_64 rng(33);
    for (int trial = 0; trial < 15; ++trial) {
        const Rational r1 = random_rational(rng), r2 = random_rational(rng);
        const P b = (x(0) - P(r1)) * (x(0) - P(r2));
        P a = random_mpoly<Rational>(rng, 2, 3, 4);
        if (a.degree_in(0) == 0) a += x(0) * x(0) * x(0);
        const P expect_poly = a.substitute(0, r1) * a.substitute(0, r2);
        EXPECT_EQ(resultant(a, b, 0), expect_poly);
    }
}

TEST(RationalFunction, NormalFormIsCanonical) {
    const RF t1 = RF::variable(0), t2 = RF::variable(1);
    const RF a = (t1 * t1 - RF(1L)) / (t1 - RF(1L));
    EXPECT_EQ(a, t1 + RF(1L));
    const RF b = (t1 * 2) / (t2 * 4);
    EXPECT_EQ(b.den().leading_coeff(), Rational(1));
    EXPECT_EQ(b, t1 / (t2 * 2));
}

TEST(RationalFunction, DerivativeRules) {
    std::mt19937_64 rng(35);
    for (int trial = 0; trial < 15; ++trial) {
        const RF a = random_ratfunc(rng, 2), b = random_ratfunc(rng, 2);
        EXPECT_EQ((a * b).derivative(0), a.derivative(0) * b + a * b.derivative(0));
        EXPECT_EQ((a + b).derivative(1), a.derivative(1) + b.derivative(1));
    }
}

TEST(RationalFunction, EvaluationAtPoleThrows) {
    const RF f = RF(1L) / (RF::variable(0) - RF(2L));
    EXPECT_EQ(f.evaluate({Rational(3)}), Rational(1));
    EXPECT_THROW((void)f.evaluate({Rational(2)}), DenominatorVanishes);
}

TEST(Expression, ParsesParametersAndFieldGenerator) {
    ExpressionContext ctx;
    ctx.params = {"t1", "t2"};
    ctx.field = NumberField::gaussian("i");
    const auto v = parse_expression("(1 + 2*t1^2)/(t2 - i)", ctx);
    const NfElem i = ctx.field->generator();
    const auto at = v.evaluate({NfElem(Rational(1)), NfElem(Rational(0))});
    // 3 / (-i) = 3i
    EXPECT_EQ(at, i * NfElem(Rational(3)));
    EXPECT_EQ(parse_rational_expression("3/4 - 1/4"), Rational(1, 2));
    EXPECT_EQ(parse_rational_expression("2^-2"), Rational(1, 4));
    EXPECT_EQ(parse_rational_expression("0.25"), Rational(1, 4));
}

TEST(Expression, RejectsMalformedInput) {
    ExpressionContext ctx;
    ctx.params = {"t1"};
    EXPECT_THROW(parse_expression("t1 +", ctx), SchemaError);
    EXPECT_THROW(parse_expression("t3", ctx), SchemaError);
    EXPECT_THROW(parse_expression("1/(t1 - t1)", ctx), SchemaError);
    EXPECT_THROW(parse_expression("(1", ctx), SchemaError);
    EXPECT_THROW(parse_rational_expression("i"), SchemaError);
}
