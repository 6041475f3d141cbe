#include "hodgescreen/hodge/hodge_numbers.hpp"
#include "hodge_oracles.hpp"

#include <gtest/gtest.h>

using namespace hodge;
using namespace testing_support;

namespace {

const HodgeNumbers curve1(1, {{{1, 0}, 1}, {{0, 1}, 1}});
const HodgeNumbers surface_h1(1, {{{1, 0}, 2}, {{0, 1}, 2}});

} // namespace

TEST(HodgeNumbers, RejectsAsymmetricOrWrongWeight) {
    EXPECT_THROW(HodgeNumbers(1, {{{1, 0}, 1}}), DomainError);
    EXPECT_THROW(HodgeNumbers(1, {{{1, 1}, 1}}), DomainError);
    EXPECT_THROW(HodgeNumbers(2, {{{2, 0}, 1}, {{0, 2}, 2}}), DomainError);
    EXPECT_NO_THROW(HodgeNumbers(2, {{{2, 0}, 1}, {{0, 2}, 1}, {{1, 1}, 0}}));
}

TEST(TateTwist, Examples) {
    EXPECT_EQ(tate_twist(curve1, 1), HodgeNumbers(-1, {{{0, -1}, 1}, {{-1, 0}, 1}}));
    EXPECT_EQ(tate_twist(curve1, 0), curve1);
    EXPECT_EQ(tate_twist(HodgeNumbers::unit(), -1), HodgeNumbers(2, {{{1, 1}, 1}}));
}

TEST(Tensor, Examples) {
    EXPECT_EQ(tensor(curve1, curve1), HodgeNumbers(2, {{{2, 0}, 1}, {{1, 1}, 2}, {{0, 2}, 1}}));
    EXPECT_EQ(tensor(surface_h1, HodgeNumbers::unit()), surface_h1);
    EXPECT_EQ(tensor(surface_h1, HodgeNumbers(2, {{{1, 1}, 1}})), HodgeNumbers(3, {{{2, 1}, 2}, {{1, 2}, 2}}));
}

TEST(Dual, Examples) {
    EXPECT_EQ(dual(curve1), HodgeNumbers(-1, {{{-1, 0}, 1}, {{0, -1}, 1}}));
    EXPECT_EQ(dual(dual(surface_h1)), surface_h1);
    EXPECT_EQ(dual(HodgeNumbers(2, {{{1, 1}, 1}})), HodgeNumbers(-2, {{{-1, -1}, 1}}));
}

TEST(Powers, ExamplesAgainstEnumeration) {
    const auto w2 = wedge(surface_h1, 2);
    EXPECT_EQ(w2, HodgeNumbers(2, {{{2, 0}, 1}, {{1, 1}, 4}, {{0, 2}, 1}}));
    EXPECT_EQ(w2.dims(), enumerate_power(surface_h1, 2, true));
    const auto top = wedge(surface_h1, 4);
    EXPECT_EQ(top, HodgeNumbers(4, {{{2, 2}, 1}}));
    const auto s2 = sym(curve1, 2);
    EXPECT_EQ(s2, HodgeNumbers(2, {{{2, 0}, 1}, {{1, 1}, 1}, {{0, 2}, 1}}));
    EXPECT_EQ(s2.dims(), enumerate_power(curve1, 2, false));
    EXPECT_EQ(wedge(curve1, 3).total_dim(), 0u);
    EXPECT_EQ(wedge(curve1, 0), HodgeNumbers::unit());
}

TEST(FiltrationDims, Examples) {
    auto counts = [](const HodgeNumbers& h) {
        std::vector<std::size_t> out;
        for (const auto& [p, d] : filtration_dims(h)) out.push_back(d);
        return out;
    };
    EXPECT_EQ(counts(HodgeNumbers(2, {{{2, 0}, 1}, {{1, 1}, 1}, {{0, 2}, 1}})), (std::vector<std::size_t>{1, 2, 3}));
    EXPECT_EQ(counts(HodgeNumbers(3, {{{3, 0}, 1}, {{2, 1}, 1}, {{1, 2}, 1}, {{0, 3}, 1}})),
              (std::vector<std::size_t>{1, 2, 3, 4}));
    EXPECT_EQ(counts(HodgeNumbers(0, {{{0, 0}, 5}})), (std::vector<std::size_t>{5}));
    // gaps in the Hodge levels still give one entry per p
    const auto gap = filtration_dims(HodgeNumbers(2, {{{2, 0}, 1}, {{0, 2}, 1}}));
    EXPECT_EQ(gap, (std::vector<std::pair<int, std::size_t>>{{2, 1}, {1, 1}, {0, 2}}));
}

TEST(Properties, RandomTables) {
    std::mt19937_64 rng(61);
    for (int trial = 0; trial < 60; ++trial) {
        const auto a = random_hodge_numbers(rng), b = random_hodge_numbers(rng), c = random_hodge_numbers(rng);
        EXPECT_EQ(dual(dual(a)), a);
        EXPECT_EQ(tate_twist(tate_twist(a, 3), -3), a);
        EXPECT_EQ(tensor(a, b), tensor(b, a));
        EXPECT_EQ(tensor(tensor(a, b), c), tensor(a, tensor(b, c)));
        EXPECT_EQ(tensor(a, b).total_dim(), a.total_dim() * b.total_dim());
        const std::size_t d = a.total_dim();
        for (std::size_t k = 0; k <= 3; ++k) {
            EXPECT_EQ(wedge(a, k).dims(), enumerate_power(a, k, true));
            EXPECT_EQ(sym(a, k).dims(), enumerate_power(a, k, false));
            EXPECT_EQ(wedge(a, k).total_dim(), detail::binomial(d, k));
            EXPECT_EQ(sym(a, k).total_dim(), detail::binomial(d + k - 1, k));
        }
        const auto f = filtration_dims(a);
        ASSERT_FALSE(f.empty());
        EXPECT_EQ(f.back().second, d);
    }
}
