#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "ldiag/enumerate.hpp"
#include "ldiag/mqsym_oracle.hpp"
#include "ldiag/polyzeta.hpp"
#include "ldiag/product.hpp"
#include "support/brute_force.hpp"

using namespace ldiag;

namespace {

CompositionSum words(std::initializer_list<std::pair<Composition, std::int64_t>> terms) {
    CompositionSum s;
    for (const auto& [w, c] : terms) s.add_term(w, c);
    return s;
}

Composition random_composition(std::mt19937& rng) {
    std::uniform_int_distribution<int> len(0, 3), part(1, 4);
    std::vector<std::uint64_t> p;
    for (int k = len(rng); k > 0; --k) p.push_back(part(rng));
    return Composition(p);
}

} // namespace

TEST(MqsymOracle, SingleLines) {
    const DiagramSum expected = diagram(WeightMatrix{{1, 0}, {0, 1}}) + diagram(WeightMatrix{{0, 1}, {1, 0}}) +
                                diagram(WeightMatrix{{1}, {1}});
    EXPECT_EQ(mqsym_oracle_product(WeightMatrix{{1}}, WeightMatrix{{1}}), expected);
}

TEST(MqsymOracle, EmptyIsUnit) {
    const WeightMatrix b{{1, 2}, {0, 1}};
    EXPECT_EQ(mqsym_oracle_product(WeightMatrix{}, b), diagram(b));
    EXPECT_EQ(mqsym_oracle_product(b, WeightMatrix{}), diagram(b));
}

TEST(MqsymOracle, MatchesProductAtOne) {
    const WeightMatrix a{{2}}, b{{1}};
    const auto o = mqsym_oracle_product(a, b);
    EXPECT_EQ(o.size(), 3u);
    EXPECT_EQ(o, specialize(deformed_product(a, b), 1, 1));
}

TEST(MqsymOracle, TopAndBottomBlocksRepack) {
    const auto deck = deck_up_to(2);
    for (const auto& a : deck)
        for (const auto& b : deck)
            for (const auto& [c, coeff] : mqsym_oracle_product(a, b)) {
                std::vector<std::size_t> top(a.rows()), bottom(b.rows());
                std::iota(top.begin(), top.end(), 0);
                std::iota(bottom.begin(), bottom.end(), a.rows());
                ASSERT_EQ(restrict_rows(c, top), a);
                ASSERT_EQ(restrict_rows(c, bottom), b);
                ASSERT_EQ(coeff, DeformPoly(1));
            }
}

TEST(QuasiShuffle, Examples) {
    EXPECT_EQ(quasi_shuffle(Composition{2}, Composition{3}), words({{{2, 3}, 1}, {{3, 2}, 1}, {{5}, 1}}));
    EXPECT_EQ(quasi_shuffle(Composition{1}, Composition{1}), words({{{1, 1}, 2}, {{2}, 1}}));
    EXPECT_EQ(quasi_shuffle(Composition{1}, Composition{2, 3}),
              words({{{1, 2, 3}, 1}, {{2, 1, 3}, 1}, {{2, 3, 1}, 1}, {{2, 4}, 1}, {{3, 3}, 1}}));
}

TEST(QuasiShuffle, EmptyWordIsUnit) {
    const Composition w{3, 1};
    EXPECT_EQ(quasi_shuffle(Composition{}, w), CompositionSum::basis(w));
    EXPECT_EQ(quasi_shuffle(w, Composition{}), CompositionSum::basis(w));
}

TEST(QuasiShuffle, CommutativeAndAssociativeRandomized) {
    std::mt19937 rng(11);
    for (int t = 0; t < 150; ++t) {
        const auto u = random_composition(rng), v = random_composition(rng), w = random_composition(rng);
        ASSERT_EQ(quasi_shuffle(u, v), quasi_shuffle(v, u));
        const auto U = CompositionSum::basis(u), V = CompositionSum::basis(v), W = CompositionSum::basis(w);
        ASSERT_EQ(quasi_shuffle(quasi_shuffle(U, V), W), quasi_shuffle(U, quasi_shuffle(V, W)));
    }
}

TEST(QuasiShuffle, SingleLetterCoefficientSum) {
    for (std::uint64_t a = 1; a <= 4; ++a)
        for (std::uint64_t b = 1; b <= 4; ++b) {
            std::int64_t total = 0;
            for (const auto& [w, c] : quasi_shuffle(Composition{a}, Composition{b})) total += c;
            EXPECT_EQ(total, 3);
        }
}

TEST(BlackWeightWord, Examples) {
    EXPECT_EQ(black_weight_word(WeightMatrix{{1, 0}, {0, 2}}), (Composition{1, 2}));
    EXPECT_EQ(black_weight_word(WeightMatrix{}), Composition{});
    EXPECT_EQ(black_weight_word(WeightMatrix{{1}, {1}}), Composition{2});
}

TEST(BlackWeightProjection, RequiresSpecializedCoefficients) {
    EXPECT_THROW(black_weight_projection(deformed_product(WeightMatrix{{1}}, WeightMatrix{{1}})), Error);
}

TEST(Mzv, PartialSums) {
    // frozen from exact rational summation: Σ_{n<=10} n^-2
    EXPECT_NEAR(mzv_truncated({2}, 10), 1.5497677311665408, 1e-15);
    EXPECT_NEAR(mzv_truncated({2}, 200000), std::numbers::pi * std::numbers::pi / 6, 1e-5);
    for (std::uint64_t s = 1; s <= 5; ++s) EXPECT_EQ(mzv_truncated({s}, 1), 1.0);
    EXPECT_EQ(mzv_truncated({}, 7), 1.0);
}

TEST(Mzv, DepthTwoMatchesNestedLoops) {
    EXPECT_NEAR(mzv_truncated({2, 1}, 10), 0.8303661265432098, 1e-14);
    EXPECT_NEAR(mzv_truncated({3, 2}, 20), 0.2268938315805233, 1e-14);
    for (std::uint64_t a = 1; a <= 4; ++a)
        for (std::uint64_t b = 1; b <= 3; ++b)
            EXPECT_NEAR(mzv_truncated({a, b}, 60), oracle::naive_mzv({a, b}, 60), 1e-13);
}

TEST(Mzv, DepthOneAtLeadingIndexOnly) {
    // ζ_N(s, ...) with depth larger than N vanishes
    EXPECT_EQ(mzv_truncated({2, 2, 2}, 2), 0.0);
    EXPECT_GT(mzv_truncated({2, 2, 2}, 3), 0.0);
}

TEST(StuffleCheck, BoundaryAndSmallness) {
    EXPECT_EQ(stuffle_check(2, 3, 1), 0.0);
    EXPECT_LT(stuffle_check(2, 2, 1000), 1e-12);
    EXPECT_LT(stuffle_check(2, 3, 100000), 1e-4);
    EXPECT_LT(stuffle_residual({2, 1}, {3}, 500), 1e-12);
}
