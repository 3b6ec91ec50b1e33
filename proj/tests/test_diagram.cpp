#include <gtest/gtest.h>

#include <set>

#include "ldiag/diagram.hpp"
#include "ldiag/enumerate.hpp"
#include "support/brute_force.hpp"

using namespace ldiag;

TEST(CanonicalUnlabel, PermutationMatrixOrbit) {
    const auto a = canonical_unlabel(WeightMatrix{{1, 0}, {0, 1}});
    const auto b = canonical_unlabel(WeightMatrix{{0, 1}, {1, 0}});
    EXPECT_EQ(a.canon(), (WeightMatrix{{0, 1}, {1, 0}}));
    EXPECT_EQ(a, b);
}

TEST(CanonicalUnlabel, Singleton) {
    EXPECT_EQ(canonical_unlabel(WeightMatrix{{2}}).canon(), WeightMatrix{{2}});
    EXPECT_TRUE(canonical_unlabel(WeightMatrix{}).canon().empty());
}

TEST(CanonicalUnlabel, MatchesFullBruteForce) {
    for (const auto& d : deck_up_to(4)) {
        const auto c = canonical_unlabel(d).canon();
        const auto flat = c.flat();
        ASSERT_EQ(std::vector<Entry>(flat.begin(), flat.end()), oracle::brute_canonical_flat(d));
    }
}

TEST(CanonicalUnlabel, ConstantOnOrbitsAndIdempotent) {
    std::mt19937 rng(7);
    for (const auto& d : deck_up_to(4)) {
        const auto c = canonical_unlabel(d);
        EXPECT_EQ(canonical_unlabel(c.canon()), c);
        for (int trial = 0; trial < 5; ++trial) {
            std::vector<std::size_t> rp(d.rows()), cp(d.cols());
            std::iota(rp.begin(), rp.end(), 0);
            std::iota(cp.begin(), cp.end(), 0);
            std::shuffle(rp.begin(), rp.end(), rng);
            std::shuffle(cp.begin(), cp.end(), rng);
            ASSERT_EQ(canonical_unlabel(oracle::permuted(d, rp, cp)), c);
        }
    }
}

TEST(CanonicalUnlabel, DistinguishesDifferentOrbits) {
    EXPECT_NE(canonical_unlabel(WeightMatrix{{1, 1}}), canonical_unlabel(WeightMatrix{{1}, {1}}));
    EXPECT_NE(canonical_unlabel(WeightMatrix{{2, 1}, {0, 1}}), canonical_unlabel(WeightMatrix{{2, 0}, {1, 1}}));
}

TEST(MonomialOf, SpotTypes) {
    const auto m = monomial_of(WeightMatrix{{1, 0}, {0, 2}, {1, 1}});
    EXPECT_EQ(m.alpha, (std::map<std::uint64_t, std::uint64_t>{{1, 1}, {2, 2}}));
    EXPECT_EQ(m.beta, (std::map<std::uint64_t, std::uint64_t>{{2, 1}, {3, 1}}));
    EXPECT_EQ(monomial_of(WeightMatrix{}), Monomial{});
    const auto s = monomial_of(WeightMatrix{{3}});
    EXPECT_EQ(s.alpha, (std::map<std::uint64_t, std::uint64_t>{{3, 1}}));
    EXPECT_EQ(s.beta, (std::map<std::uint64_t, std::uint64_t>{{3, 1}}));
}

TEST(MonomialOf, CountsMatchShape) {
    for (const auto& d : deck_up_to(4)) {
        const auto m = monomial_of(d);
        std::uint64_t p = 0, q = 0;
        for (auto [deg, n] : m.alpha) {
            EXPECT_GE(n, 1u);
            p += n;
        }
        for (auto [deg, n] : m.beta) {
            EXPECT_GE(n, 1u);
            q += n;
        }
        EXPECT_EQ(p, d.rows());
        EXPECT_EQ(q, d.cols());
    }
}

TEST(Factor, Examples) {
    EXPECT_EQ(factor_irreducibles(WeightMatrix{{1, 0}, {0, 2}}), (std::vector<WeightMatrix>{{{1}}, {{2}}}));
    EXPECT_EQ(factor_irreducibles(WeightMatrix{{0, 1}, {1, 0}}), (std::vector<WeightMatrix>{{{0, 1}, {1, 0}}}));
    EXPECT_TRUE(factor_irreducibles(WeightMatrix{}).empty());
}

TEST(Factor, ThreeBlocks) {
    const WeightMatrix a{{1, 1}}, b{{0, 1}, {1, 0}}, c{{2}, {1}};
    const auto d = concat(concat(a, b), c);
    EXPECT_EQ(factor_irreducibles(d), (std::vector<WeightMatrix>{a, b, c}));
}

TEST(Factor, BlockTouchingCornerIsIrreducible) {
    // row 1 spans both blocks' columns
    EXPECT_EQ(factor_irreducibles(WeightMatrix{{1, 1}, {0, 1}}).size(), 1u);
    EXPECT_EQ(factor_irreducibles(WeightMatrix{{1, 0}, {1, 1}}).size(), 1u);
}

TEST(Factor, ConcatOfFactorsIsIdentity) {
    for (const auto& d : deck_up_to(4)) {
        WeightMatrix r;
        for (const auto& f : factor_irreducibles(d)) {
            EXPECT_TRUE(is_irreducible(f));
            r = concat(r, f);
        }
        ASSERT_EQ(r, d);
    }
}

TEST(Enumerate, SmallWeights) {
    EXPECT_EQ(enumerate_by_weight(0), std::vector<WeightMatrix>{WeightMatrix{}});
    EXPECT_EQ(enumerate_by_weight(1), std::vector<WeightMatrix>{WeightMatrix{{1}}});
    const std::vector<WeightMatrix> two{{{2}}, {{1, 1}}, {{1}, {1}}, {{0, 1}, {1, 0}}, {{1, 0}, {0, 1}}};
    EXPECT_EQ(enumerate_by_weight(2), two);
}

TEST(Enumerate, MatchesGenerateAndFilter) {
    // counts frozen from the stars-and-bars oracle: 1, 1, 5, 33, 281
    const std::size_t expected[] = {1, 1, 5, 33, 281};
    for (std::size_t n = 0; n <= 4; ++n) {
        const auto listed = enumerate_by_weight(n);
        EXPECT_EQ(listed.size(), expected[n]);
        std::set<oracle::Grid> got;
        for (const auto& d : listed) got.insert(oracle::to_grid(d));
        EXPECT_EQ(got.size(), listed.size()) << "duplicates at weight " << n;
        EXPECT_EQ(got, oracle::packed_grids_of_weight(n));
        EXPECT_TRUE(std::is_sorted(listed.begin(), listed.end()));
    }
}

TEST(Enumerate, BoundExceeded) {
    EXPECT_THROW(enumerate_by_weight(6), Error);
    EXPECT_NO_THROW(enumerate_by_weight(6, 6));
    try {
        enumerate_by_weight(3, 2);
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), Errc::bound_exceeded);
    }
}
