#include <gtest/gtest.h>

#include <random>

#include "fpbk/basket.hpp"
#include "fpbk/braid.hpp"
#include "fpbk/grid.hpp"
#include "fpbk/homfly.hpp"
#include "oracles.hpp"

using namespace fpbk;

TEST(Braid, ParseFormats) {
    EXPECT_EQ(parse_braid("1 -2 1").word, (std::vector<int>{1, -2, 1}));
    EXPECT_EQ(parse_braid("[1,-2,1]").word, (std::vector<int>{1, -2, 1}));
    EXPECT_EQ(parse_braid("s1 s2^-1 s1").word, (std::vector<int>{1, -2, 1}));
    EXPECT_EQ(parse_braid("s1 s2^-1 s1").strands, 3);
    EXPECT_EQ(parse_braid("1", 4).strands, 4);
    EXPECT_THROW(parse_braid("s0"), ParseError);
    EXPECT_THROW(parse_braid("x1"), ParseError);
    EXPECT_THROW(parse_braid("3", 3), ValidationError);
}

TEST(Braid, TextRoundTrip) {
    const Braid b{3, {1, -2, 1}};
    EXPECT_EQ(b.to_string(), "s1 s2^-1 s1");
    EXPECT_EQ(parse_braid(b.to_string(), 3), b);
    EXPECT_EQ((Braid{2, {}}).to_string(), "1");
}

TEST(Braid, Validate) {
    EXPECT_THROW((Braid{2, {2}}).validate(), ValidationError);
    EXPECT_THROW((Braid{2, {0}}).validate(), ValidationError);
    EXPECT_THROW((Braid{0, {}}).validate(), ValidationError);
    EXPECT_NO_THROW((Braid{3, {2, -1}}).validate());
}

TEST(BandGenerator, Examples) {
    EXPECT_EQ(band_generator(1, 2, 2).word, (std::vector<int>{1}));
    EXPECT_EQ(band_generator(1, 3, 3).word, (std::vector<int>{-1, 2, 1}));
    EXPECT_EQ(band_generator(2, 4, 5).word, (std::vector<int>{-2, 3, 2}));
    EXPECT_EQ(band_generator(1, 4, 4).word, (std::vector<int>{-1, -2, 3, 2, 1}));
    EXPECT_THROW(band_generator(2, 2, 3), ValidationError);
    EXPECT_THROW(band_generator(0, 2, 3), ValidationError);
    EXPECT_THROW(band_generator(1, 4, 3), ValidationError);
}

TEST(BandGenerator, ExponentSumOneAndUnknottedBand) {
    for (int k = 2; k <= 6; ++k)
        for (int i = 1; i < k; ++i)
            for (int j = i + 1; j <= k; ++j) {
                const Braid a = band_generator(i, j, k);
                EXPECT_EQ(a.exponent_sum(), 1);
                // a single band joins two strands: one fewer component
                EXPECT_EQ(closure_stats(a).components, k - 1);
            }
}

TEST(ClosureStats, Examples) {
    const auto id = closure_stats(Braid{2, {}});
    EXPECT_EQ(id.components, 2);
    EXPECT_EQ(id.sl, -2);
    const auto neg = closure_stats(Braid{2, {-1, -1, -1}});
    EXPECT_EQ(neg.components, 1);
    EXPECT_EQ(neg.e, -3);
    EXPECT_EQ(neg.sl, -5);
    const auto t32 = closure_stats(torus_braid(3, 2));
    EXPECT_EQ(t32.e, 3);
    EXPECT_EQ(t32.components, 1);
    EXPECT_EQ(t32.sl, 1);
}

TEST(ClosureStats, ComponentsMatchDiagram) {
    std::mt19937 rng(3);
    for (int i = 0; i < 100; ++i) {
        const Braid b = fpbk_test::random_braid(rng, 1 + i % 5, i % 9);
        EXPECT_EQ(closure_stats(b).components, closure_diagram(b).components()) << b.to_string();
    }
}

TEST(Mirror, Examples) {
    EXPECT_EQ(mirror(Braid{2, {1, 1, 1}}).word, (std::vector<int>{-1, -1, -1}));
    EXPECT_EQ(mirror(torus_braid(5, 2)).exponent_sum(), -5);
    std::mt19937 rng(4);
    for (int i = 0; i < 50; ++i) {
        const Braid b = fpbk_test::random_braid(rng, 2 + i % 4, i % 10);
        const auto s = closure_stats(b), ms = closure_stats(mirror(b));
        EXPECT_EQ(ms.e, -s.e);
        EXPECT_EQ(ms.components, s.components);
        EXPECT_EQ(ms.sl, -b.strands - s.e);
    }
}

TEST(TorusBraid, Examples) {
    EXPECT_EQ(torus_braid(3, 2).word, (std::vector<int>{1, 1, 1}));
    EXPECT_EQ(torus_braid(4, 3).exponent_sum(), 8);
    EXPECT_EQ(torus_braid(4, 3).strands, 3);
    EXPECT_EQ(closure_stats(torus_braid(5, 2)).sl, 3);
    EXPECT_THROW(torus_braid(2, 3), ValidationError);
    EXPECT_THROW(torus_braid(3, 1), ValidationError);
}

TEST(PositiveBraidFpbk, Examples) {
    EXPECT_EQ(positive_braid_fpbk(torus_braid(3, 2)), 4);
    EXPECT_EQ(positive_braid_fpbk(torus_braid(7, 2)), 8);
    EXPECT_EQ(positive_braid_fpbk(torus_braid(4, 3)), 10);
    EXPECT_THROW(positive_braid_fpbk(Braid{2, {1, -1}}), ValidationError);
}

TEST(BasketToBraid, Examples) {
    const Braid one = basket_to_braid(FlatBasketCode({1, 1}));
    EXPECT_EQ(one, (Braid{2, {1, -1}}));
    EXPECT_EQ(closure_stats(one).components, 2);
    EXPECT_EQ(closure_stats(one).sl, -2);
    const Braid two = basket_to_braid(FlatBasketCode({1, 2, 1, 2}));
    // a12 a13 a12^-1 a13^-1
    EXPECT_EQ(two, (Braid{3, {1, -1, 2, 1, -1, -1, -2, 1}}));
    EXPECT_EQ(two.exponent_sum(), 0);
    EXPECT_EQ(closure_stats(two).sl, -3);
}

TEST(BasketToBraid, ExponentSumAndComponentsForAllCodes) {
    for (int n = 1; n <= 6; ++n)
        for_each_code(n, true, [&](const FlatBasketCode& c) {
            const Braid b = basket_to_braid(c);
            const auto s = closure_stats(b);
            ASSERT_EQ(b.strands, n + 1);
            ASSERT_EQ(s.e, 0) << c;
            ASSERT_EQ(s.sl, -n - 1) << c;
            ASSERT_EQ(s.components, trace_boundary(c).components) << c;
            ASSERT_EQ(s.components, to_grid(c).components()) << c;
        });
}

TEST(BasketToBraid, SameLinkAsGridUpToFourBands) {
    for (int n = 1; n <= 4; ++n)
        for (const auto& c : enumerate_codes(n, true))
            EXPECT_EQ(homflypt(closure_diagram(basket_to_braid(c))), homflypt(grid_diagram_pd(to_grid(c)))) << c;
}

TEST(FreeReduce, CancelsInversePairs) {
    EXPECT_EQ(free_reduce(Braid{3, {1, 2, -2, -1, 1}}).word, (std::vector<int>{1}));
    EXPECT_TRUE(free_reduce(basket_to_braid(FlatBasketCode({1, 1}))).word.empty());
}
