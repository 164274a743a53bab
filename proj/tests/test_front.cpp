#include <gtest/gtest.h>

#include <map>

#include "fpbk/basket.hpp"
#include "fpbk/braid.hpp"
#include "fpbk/front.hpp"
#include "fpbk/grid.hpp"
#include "fpbk/homfly.hpp"

using namespace fpbk;

TEST(Front, SingleBand) {
    const FrontData f = build_front(FlatBasketCode({1, 1}));
    EXPECT_EQ(f.right_cusps, 2);
    EXPECT_TRUE(f.crossings.empty());
    EXPECT_EQ(tb_front(f), -2);
    EXPECT_EQ(rot_front(f), 0);
    EXPECT_EQ(sl_front(f), -2);
}

TEST(Front, TwoBands) {
    for (const auto& w : {std::vector<int>{1, 1, 2, 2}, std::vector<int>{1, 2, 1, 2}}) {
        const FrontData f = build_front(FlatBasketCode(w));
        EXPECT_EQ(sl_front(f), -3);
        EXPECT_EQ(f.writhe, 0);
    }
    const FrontData f = build_front(FlatBasketCode({1, 2, 1, 2}));
    int sum = 0;
    for (const auto& x : f.crossings) sum += x.sign;
    EXPECT_EQ(sum, 0);
    EXPECT_EQ(f.crossings.size(), 4u);
}

TEST(Front, FourBandsFormulas) {
    for (const auto& c : enumerate_codes(4, true)) {
        const FrontData f = build_front(c);
        EXPECT_EQ(f.right_cusps, 8);
        EXPECT_EQ(f.writhe, 0);
        EXPECT_EQ(tb_front(f), -8);
        EXPECT_EQ(rot_front(f), -3);
        EXPECT_EQ(sl_front(f), -5);
    }
}

TEST(Front, RejectsEmptyCode) { EXPECT_THROW(build_front(FlatBasketCode()), ValidationError); }

TEST(Front, ClosedFormsForAllCodes) {
    for (int n = 1; n <= 6; ++n)
        for_each_code(n, true, [&](const FlatBasketCode& c) {
            const FrontData f = build_front(c);
            ASSERT_EQ(f.right_cusps, 2 * n) << c;
            ASSERT_EQ(f.left_cusps, 2 * n) << c;
            ASSERT_EQ(f.down_right_cusps, 1) << c;
            ASSERT_EQ(f.up_right_cusps, 2 * n - 1) << c;
            ASSERT_EQ(f.writhe, 0) << c;
            ASSERT_EQ(tb_front(f), -2 * n) << c;
            ASSERT_EQ(rot_front(f), 1 - n) << c;
            ASSERT_EQ(sl_front(f), -n - 1) << c;
            ASSERT_EQ(static_cast<int>(f.components.size()), trace_boundary(c).components) << c;
        });
}

TEST(Front, CrossingSignsCancelPerBandPair) {
    for (int n = 2; n <= 5; ++n)
        for (const auto& c : enumerate_codes(n, true)) {
            std::map<std::pair<int, int>, int> pair_sum;
            for (const auto& x : build_front(c).crossings)
                pair_sum[{std::min(x.over_band, x.under_band), std::max(x.over_band, x.under_band)}] += x.sign;
            for (auto [k, s] : pair_sum) EXPECT_EQ(s, 0) << c << " bands " << k.first << "," << k.second;
        }
}

TEST(Front, CrossingsFollowFootInterleaving) {
    // each foot of band j strictly between the feet of band i < j costs four crossings,
    // one for every pair of band edges
    for (int n = 2; n <= 5; ++n)
        for (const auto& c : enumerate_codes(n, true)) {
            int expect = 0;
            for (int i = 1; i <= n; ++i)
                for (int j = i + 1; j <= n; ++j) {
                    auto [a, b] = c.feet(i);
                    auto [p, q] = c.feet(j);
                    expect += 4 * ((a < p && p < b) + (a < q && q < b));
                }
            EXPECT_EQ(static_cast<int>(build_front(c).crossings.size()), expect) << c;
        }
}

TEST(Front, SameLinkAsBraidUpToFourBands) {
    for (int n = 1; n <= 4; ++n)
        for (const auto& c : enumerate_codes(n, true))
            EXPECT_EQ(homflypt(front_diagram_pd(build_front(c))), homflypt(closure_diagram(basket_to_braid(c)))) << c;
}
