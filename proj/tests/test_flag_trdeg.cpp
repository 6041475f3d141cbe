#include "hodgescreen/flag/flag_point.hpp"
#include "trdeg_oracle.hpp"

#include <gtest/gtest.h>

using namespace hodge;
using namespace testing_support;

namespace {

FnElem t(std::size_t i) { return FnElem::variable(i); }
FnElem c(long v) { return FnElem(NfElem(Rational(v))); }

FlagPoint line(std::vector<FnElem> v, std::vector<std::string> params) {
    const std::size_t d = v.size();
    return FlagPoint(d, std::move(params), {{1, {std::move(v)}}});
}

} // namespace

TEST(Chart, Examples) {
    EXPECT_EQ(normalize_chart(line({c(1), t(0)}, {"t1"})), (std::vector<FnElem>{t(0)}));
    EXPECT_EQ(normalize_chart(line({t(0), t(0) * t(0)}, {"t1"})), (std::vector<FnElem>{t(0)}));
    EXPECT_EQ(normalize_chart(line({c(1), t(0), t(1)}, {"t1", "t2"})), (std::vector<FnElem>{t(0), t(1)}));
}

TEST(Chart, BasisChangeInvariance) {
    // F^1 = span((1, 0, t1), (0, 1, t2)), mixed by an invertible matrix
    const FnVec a{c(1), c(0), t(0)}, b{c(0), c(1), t(1)};
    const FlagPoint f(3, {"t1", "t2"}, {{1, {a, b}}});
    FnVec a2(3), b2(3);
    for (std::size_t i = 0; i < 3; ++i) {
        a2[i] = a[i] * c(2) + b[i] * t(0);
        b2[i] = a[i] - b[i] * c(3);
    }
    const FlagPoint g(3, {"t1", "t2"}, {{1, {a2, b2}}});
    EXPECT_EQ(normalize_chart(f), normalize_chart(g));
    EXPECT_EQ(normalize_chart(f), (std::vector<FnElem>{t(0), t(1)}));
}

TEST(FlagPoint, ValidatesNestingAndDimensions) {
    const FnVec a{c(1), c(0), t(0)}, b{c(0), c(1), t(1)}, e{c(0), c(0), c(1)};
    EXPECT_NO_THROW(FlagPoint(3, {"t1", "t2"}, {{2, {a}}, {1, {a, b}}}));
    EXPECT_THROW(FlagPoint(3, {"t1", "t2"}, {{2, {e}}, {1, {a, b}}}), DomainError);
    EXPECT_THROW(FlagPoint(3, {"t1", "t2"}, {{2, {a, b}}, {1, {a, b}}}), DomainError);
    EXPECT_THROW(FlagPoint(3, {"t1"}, {{1, {a, a}}}), DomainError);
    EXPECT_THROW(FlagPoint(3, {"t1"}, {{1, {{c(1), c(0)}}}}), DomainError);
}

TEST(Trdeg, Examples) {
    EXPECT_EQ(trdeg(FlagPoint(2, {}, {{1, {{c(1), c(3)}}}})).value, 0u);
    EXPECT_EQ(trdeg(line({c(1), t(0), t(0) * t(0)}, {"t1"})).value, 1u);
    EXPECT_EQ(trdeg(line({c(1), t(0), t(1)}, {"t1", "t2"})).value, 2u);
    // the relation y - x^2 = 0 is found by the elimination oracle as well
    EXPECT_EQ(oracle_trdeg({t(0), t(0) * t(0)}, 1), 1u);
}

TEST(Trdeg, NumberFieldCoefficientsContributeNothing) {
    const auto K = NumberField::gaussian();
    const FnElem i(K.generator());
    EXPECT_EQ(trdeg(FlagPoint(2, {}, {{1, {{FnElem(1L), i}}}})).value, 0u);
    EXPECT_EQ(trdeg(line({FnElem(1L), i * t(0), t(0) + i}, {"t1"})).value, 1u);
}

TEST(Trdeg, FastPathAgreesWithSymbolicRank) {
    std::mt19937_64 rng(91);
    for (int trial = 0; trial < 15; ++trial) {
        const auto f = random_flag_point(rng);
        TrdegOptions sym;
        sym.fast_path = false;
        const auto a = trdeg(f);
        const auto b = trdeg(f, sym);
        EXPECT_EQ(a.value, b.value);
        EXPECT_TRUE(b.symbolic);
        if (a.evaluation_point) EXPECT_EQ(a.evaluation_point->size(), f.params().size());
    }
}

TEST(Trdeg, DependentCoordinatesUseSymbolicRank) {
    // (t1 + t2, (t1 + t2)^2): rank 1 < min(2, 2), so the evaluation is not a certificate
    const FnElem u = t(0) + t(1);
    const auto r = trdeg(line({c(1), u, u * u}, {"t1", "t2"}));
    EXPECT_EQ(r.value, 1u);
    EXPECT_TRUE(r.symbolic);
    EXPECT_FALSE(r.evaluation_point.has_value());
}

TEST(Trdeg, InvarianceProperties) {
    // substitution t -> t + c, parameter permutation, redundant coordinate
    const FlagPoint base = line({c(1), t(0) * t(1), t(0) + t(2) * t(2), t(2)}, {"t1", "t2", "t3"});
    const std::size_t v = trdeg(base).value;
    EXPECT_EQ(v, 3u);
    const FlagPoint shifted =
        line({c(1), (t(0) + c(2)) * t(1), t(0) + c(2) + t(2) * t(2), t(2)}, {"t1", "t2", "t3"});
    EXPECT_EQ(trdeg(shifted).value, v);
    const FlagPoint permuted = line({c(1), t(2) * t(1), t(2) + t(0) * t(0), t(0)}, {"t1", "t2", "t3"});
    EXPECT_EQ(trdeg(permuted).value, v);
    const FlagPoint two = line({c(1), t(0) * t(1), t(0) * t(1) * t(0) * t(1) + c(1)}, {"t1", "t2", "t3"});
    EXPECT_EQ(trdeg(two).value, 1u);
}

TEST(Trdeg, MaximalTranscendence) {
    const auto cy = grade(make_classical(ClassicalKind::gsp, 4), HodgeCocharacter({3, 2, 1, 0}));
    const auto torus = grade(make_classical(ClassicalKind::diag_torus, 4), HodgeCocharacter({3, 2, 1, 0}));
    TrdegResult four;
    four.value = 4;
    TrdegResult zero;
    EXPECT_TRUE(is_maximal_transcendence(four, cy));
    EXPECT_TRUE(is_maximal_transcendence(zero, torus));
    EXPECT_FALSE(is_maximal_transcendence(zero, cy));
}

TEST(Oracle, AgreesOnRandomFlagPoints) {
    std::mt19937_64 rng(92);
    for (int trial = 0; trial < 12; ++trial) {
        const auto f = random_flag_point(rng);
        const auto r = trdeg(f);
        EXPECT_EQ(r.value, oracle_trdeg(r.chart_coordinates, f.params().size())) << "trial " << trial;
    }
}
