#include <gtest/gtest.h>

#include <map>

#include "fpbk/fpbk.hpp"
#include "oracles.hpp"

using namespace fpbk;
using namespace fpbk_test;

namespace {

LaurentPoly2 boundary_poly(const FlatBasketCode& c) { return homflypt(basket_to_braid(c)); }

const std::vector<KnotRecord>& table() {
    static const auto recs = load_knot_csv(FPBK_DEFAULT_DATA);
    return recs;
}

}  // namespace

TEST(Properties, InvariantSuiteUpToFiveBands) {
    for (int n = 1; n <= 5; ++n) {
        const VerifySummary s = verify_all(n, VerifyOptions{4});
        for (const auto& [name, t] : s) {
            EXPECT_EQ(t.fail, 0) << name << " n=" << n;
            EXPECT_GT(t.pass, 0) << name << " n=" << n;
        }
    }
}

TEST(Properties, MfwUpToFiveBands) {
    for (int n = 1; n <= 5; ++n)
        for (const auto& c : enumerate_codes(n, true)) {
            const LaurentPoly2 p = boundary_poly(c);
            EXPECT_LE(*p.max_v_degree(), n) << c;
            EXPECT_LE(-*p.min_v_degree(), n) << c;
        }
}

TEST(Properties, TwoBandBoundariesAreTrivial) {
    for (const auto& c : enumerate_codes(2, false)) {
        const int k = trace_boundary(c).components;
        EXPECT_EQ(boundary_poly(c), LaurentPoly2::delta().pow(k - 1)) << c;
    }
}

TEST(Properties, MirrorRuleOnCorpus) {
    for (int n = 1; n <= 4; ++n)
        for (const auto& c : enumerate_codes(n, true)) {
            const Braid b = basket_to_braid(c);
            EXPECT_EQ(homflypt(closure_diagram(mirror(b))), homflypt(closure_diagram(b)).mirrored()) << c;
        }
}

TEST(Properties, RotationKeepsTheLink) {
    for (int n = 1; n <= 3; ++n)
        for (const auto& c : enumerate_codes(n, false)) {
            const LaurentPoly2 p = boundary_poly(c);
            for (int r = 1; r < c.length(); ++r) EXPECT_EQ(boundary_poly(rotate(c, r)), p) << c << " rot " << r;
        }
}

TEST(Properties, RenumberingCanChangeTheLink) {
    const FlatBasketCode raw({1, 3, 2, 1, 3, 2});
    const FlatBasketCode canon = canonical_form(raw);
    EXPECT_EQ(canon.word(), (std::vector<int>{1, 2, 3, 1, 2, 3}));
    EXPECT_NE(boundary_poly(raw), boundary_poly(canon));
    int differ = 0;
    for (const auto& c : enumerate_codes(3, false)) differ += boundary_poly(c) != boundary_poly(canonical_form(c));
    EXPECT_EQ(differ, 3);
}

TEST(Properties, AlexanderSymmetricOnBasketKnots) {
    for (int n = 2; n <= 4; n += 2)
        for (const auto& c : enumerate_codes(n, true)) {
            if (trace_boundary(c).components != 1) continue;
            const auto a = alexander_from_homfly(boundary_poly(c));
            EXPECT_EQ(a.poly, a.poly.inverted().shifted(a.degree)) << c;
            EXPECT_TRUE(burau_agrees(basket_to_braid(c), a.poly, 2.0)) << c;
        }
}

TEST(Properties, ReferenceBraidsMatchTableRows) {
    for (const auto& k : reference_knots()) {
        const Braid b{k.strands, k.word};
        const KnotRecord& r = find_record(table(), k.name);
        ASSERT_EQ(closure_stats(b).components, 1) << k.name;
        EXPECT_GE(b.strands, *r.braid_index) << k.name;
        const LaurentPoly2 p = homflypt(closure_diagram(b));
        const auto a = alexander_from_homfly(p);
        EXPECT_EQ(a.degree, *r.alex_deg) << k.name;
        EXPECT_EQ(a.monic, *r.monic) << k.name;
        EXPECT_TRUE(burau_agrees(b, a.poly, 2.0)) << k.name;
        // MFW: both chiralities bound fpbk
        const int span = std::max(*p.max_v_degree(), -*p.min_v_degree());
        EXPECT_LE(span, *r.fpbk_hi) << k.name;
    }
}

TEST(Properties, BasketsForTableKnotsRespectFpbk) {
    std::map<std::string, LaurentPoly2> ref;
    for (const auto& k : reference_knots()) ref[k.name] = homflypt(Braid{k.strands, k.word});
    std::map<std::string, int> smallest;
    // raw words keep the page order, which the canonical classes fix by renumbering
    for (int n = 2; n <= 4; ++n)
        for (const auto& c : enumerate_codes(n, false)) {
            if (trace_boundary(c).components != 1) continue;
            const LaurentPoly2 p = boundary_poly(c);
            for (const auto& [name, q] : ref)
                if ((p == q || p == q.mirrored()) && !smallest.count(name)) smallest[name] = n;
        }
    EXPECT_EQ(smallest["3_1"], 4);
    EXPECT_EQ(smallest["4_1"], 4);
    EXPECT_NE(canonical_form(FlatBasketCode({1, 2, 4, 3, 1, 2, 4, 3})).word(), (std::vector<int>{1, 2, 4, 3, 1, 2, 4, 3}));
    for (const auto& [name, n] : smallest) EXPECT_GE(n, *find_record(table(), name).fpbk_lo) << name;
}
