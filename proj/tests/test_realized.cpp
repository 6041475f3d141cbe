#include "hodgescreen/hodge/realized.hpp"
#include "test_support.hpp"

#include <gtest/gtest.h>

using namespace hodge;
using namespace testing_support;

namespace {

const HodgeNumbers elliptic(1, {{{1, 0}, 1}, {{0, 1}, 1}});

QMatrix standard_symplectic() { return QMatrix(2, 2, {Rational(0), Rational(1), Rational(-1), Rational(0)}); }

RealizedHodgeStructure curve(const NumberField& K, bool flip) {
    const NfElem i = K.generator();
    return realize_and_validate({K, elliptic, {{1, {{NfElem(1L), flip ? -i : i}}}}});
}

// Product of two elliptic curves with periods i and w, sitting in H^1 of the product (dim 4).
RealizedHodgeStructure product_of_curves(const NumberField& K, const std::vector<NfVec>& f1) {
    return realize_and_validate({K, HodgeNumbers(1, {{{1, 0}, 2}, {{0, 1}, 2}}), {{1, f1}}});
}

} // namespace

TEST(Realized, EllipticCurveDecomposition) {
    const auto K = NumberField::gaussian();
    const auto h = curve(K, false);
    const NfElem i = K.generator();
    ASSERT_EQ(h.pieces().size(), 2u);
    EXPECT_EQ(h.pieces().at({1, 0}).size(), 1u);
    // H^{0,1} is spanned by (1, -i) up to scale
    const auto& v = h.pieces().at({0, 1})[0];
    EXPECT_EQ(v[1] * v[0].inverse(), -i);
}

TEST(Realized, RationalLineIsNotAHodgeFiltration) {
    const auto K = NumberField::gaussian();
    EXPECT_THROW(realize_and_validate({K, elliptic, {{1, {{NfElem(1L), NfElem(0L)}}}}}), NotAHodgeFiltration);
}

TEST(Realized, WeightZeroSingleStep) {
    const auto K = NumberField::gaussian();
    const HodgeNumbers h(0, {{{0, 0}, 3}});
    std::vector<NfVec> all;
    for (int k = 0; k < 3; ++k) {
        NfVec e(3, NfElem(0L));
        e[k] = NfElem(1L);
        all.push_back(e);
    }
    const auto r = realize_and_validate({K, h, {{0, all}}});
    EXPECT_EQ(r.pieces().at({0, 0}).size(), 3u);
    // omitting the step defaults F^0 to everything
    EXPECT_NO_THROW(realize_and_validate({K, h, {}}));
}

TEST(Realized, WrongDimensionsAndNesting) {
    const auto K = NumberField::gaussian();
    const NfElem i = K.generator();
    // F^1 of dimension 2 for h^{1,0} = 1
    EXPECT_THROW(realize_and_validate({K, elliptic, {{1, {{NfElem(1L), i}, {NfElem(0L), NfElem(1L)}}}}}),
                 NotAHodgeFiltration);
    // weight 2, F^2 not inside F^1
    const HodgeNumbers k3ish(2, {{{2, 0}, 1}, {{1, 1}, 1}, {{0, 2}, 1}});
    const NfVec a{NfElem(1L), i, NfElem(0L)};
    const NfVec b{NfElem(0L), NfElem(0L), NfElem(1L)};
    const NfVec c{NfElem(1L), NfElem(0L), NfElem(0L)};
    EXPECT_THROW(realize_and_validate({K, k3ish, {{2, {a}}, {1, {b, c}}}}), NotAHodgeFiltration);
    EXPECT_THROW(realize_and_validate({K, elliptic, {{1, {{NfElem(1L)}}}}}), DomainError);
}

TEST(Realized, FieldWithoutConjugationIsRejected) {
    const auto K = NumberField::create({Rational(1), Rational(0), Rational(1)}, "i",
                                       ComplexBox{{q(-1, 2), q(1, 2)}, {q(1, 2), q(3, 2)}});
    EXPECT_THROW(realize_and_validate({K, elliptic, {}}), DomainError);
}

TEST(Polarization, EllipticCurveDatum) {
    const auto K = NumberField::gaussian();
    const PolarizationForm S(standard_symplectic(), 1);
    const NfElem i = K.generator();
    // i * S(v, conj v) = 2 by direct evaluation
    const NfVec v{NfElem(1L), i};
    EXPECT_EQ(i * S(v, conj(v)), NfElem(2L));
    EXPECT_EQ(polarization_check(curve(K, false), S).verdict, PolarizationVerdict::valid);
    const NfVec w{NfElem(1L), -i};
    EXPECT_EQ(i * S(w, conj(w)), NfElem(-2L));
    EXPECT_EQ(polarization_check(curve(K, true), S).verdict, PolarizationVerdict::positivity_fails);
}

TEST(Polarization, SymmetricFormOnOddWeightIsRejected) {
    EXPECT_THROW(PolarizationForm(QMatrix::identity(2), 1), DomainError);
    EXPECT_THROW(PolarizationForm(standard_symplectic(), 2), DomainError);
    EXPECT_NO_THROW(PolarizationForm(QMatrix::identity(2), 0));
}

TEST(Polarization, MorphismFailureIsDetected) {
    // weight 0, H = H^{0,0} twice; any form is a morphism. Use weight 2
    // with S pairing H^{2,0} against itself instead.
    const auto K = NumberField::gaussian();
    const NfElem i = K.generator();
    const HodgeNumbers h(2, {{{2, 0}, 1}, {{0, 2}, 1}});
    // F^2 = F^1 = span(1, i)
    const auto r = realize_and_validate({K, h, {{2, {{NfElem(1L), i}}}}});
    // identity pairs (1, i) with itself to 1 + i^2 = 0, but S(v, v) for
    // S = diag(1, 2) is 1 - 2 = -1 != 0
    const PolarizationForm bad(QMatrix::diagonal({Rational(1), Rational(2)}), 2);
    EXPECT_EQ(polarization_check(r, bad).verdict, PolarizationVerdict::morphism_fails);
    const PolarizationForm good(QMatrix::identity(2), 2);
    // i^{2} S(v, conj v) = -(1 + 1) < 0: the identity has the wrong sign on H^{2,0}
    EXPECT_EQ(polarization_check(r, good).verdict, PolarizationVerdict::positivity_fails);
    const PolarizationForm neg(QMatrix::identity(2).scaled(Rational(-1)), 2);
    EXPECT_EQ(polarization_check(r, neg).verdict, PolarizationVerdict::valid);
}

TEST(Polarization, InvariantUnderBasisChange) {
    const auto K = NumberField::gaussian();
    const NfElem i = K.generator();
    // E x E with period i: F^1 spanned by (1, i, 0, 0) and (0, 0, 1, i)
    QMatrix S(4, 4);
    S(0, 1) = 1;
    S(1, 0) = -1;
    S(2, 3) = 1;
    S(3, 2) = -1;
    const PolarizationForm form(S, 1);
    std::mt19937_64 rng(71);
    const NfVec v1{NfElem(1L), i, NfElem(0L), NfElem(0L)};
    const NfVec v2{NfElem(0L), NfElem(0L), NfElem(1L), i};
    for (int trial = 0; trial < 10; ++trial) {
        // random unimodular change of basis of F^1 over Z[i]
        std::uniform_int_distribution<long> small(-3, 3);
        const NfElem a = NfElem(small(rng)) + i * NfElem(small(rng));
        const bool flip = trial % 2;
        const NfVec w1 = flip ? v2 : v1;
        const NfVec w2 = flip ? v1 : v2;
        NfVec mixed(4);
        for (std::size_t k = 0; k < 4; ++k) mixed[k] = w2[k] + a * w1[k];
        const auto h = product_of_curves(K, {w1, mixed});
        EXPECT_EQ(polarization_check(h, form).verdict, PolarizationVerdict::valid);
        // flipping the sign of S everywhere must fail positivity for every basis
        EXPECT_EQ(polarization_check(h, PolarizationForm(S.scaled(Rational(-1)), 1)).verdict,
                  PolarizationVerdict::positivity_fails);
    }
}

TEST(Polarization, IndefiniteOnHigherDimensionalPiece) {
    // product with opposite sign on the second factor: positive on one
    // vector, negative on the other
    const auto K = NumberField::gaussian();
    const NfElem i = K.generator();
    QMatrix S(4, 4);
    S(0, 1) = 1;
    S(1, 0) = -1;
    S(2, 3) = -1;
    S(3, 2) = 1;
    const auto h = product_of_curves(K, {{NfElem(1L), i, NfElem(0L), NfElem(0L)}, {NfElem(0L), NfElem(0L), NfElem(1L), i}});
    const auto res = polarization_check(h, PolarizationForm(S, 1));
    EXPECT_EQ(res.verdict, PolarizationVerdict::positivity_fails);
}
