#include <gtest/gtest.h>

#include "tolman/tolman.hpp"

using namespace tolman;

namespace {
const BasisMap kIdentity{{{1, 0}, {0, 1}}};
}

TEST(Jupp, InvariantsOfTolmanManifold) {
    auto inv = gkm_jupp_invariants(tolman_graph(), {2, 1});
    EXPECT_EQ(inv.w2, (std::array<int, 2>{0, 0}));
    EXPECT_EQ(inv.p1_pairings[0], 0);
    EXPECT_EQ(inv.p1_pairings[1], 8);
}

TEST(Jupp, InvariantsOfBundle) {
    auto inv = bundle_jupp_invariants({-1, -1});
    EXPECT_EQ(inv.w2, (std::array<int, 2>{0, 0}));
    EXPECT_EQ(inv.p1_pairings[0], 0);
    EXPECT_EQ(inv.p1_pairings[1], 8);
    EXPECT_EQ(inv.trilinear.at(0, 0, 0), 0);
    EXPECT_EQ(inv.trilinear.at(0, 0, 1), 1);
    EXPECT_EQ(inv.trilinear.at(0, 1, 1), 1);
    EXPECT_EQ(inv.trilinear.at(1, 1, 1), 2);
}

TEST(Jupp, TensorsAgreeEntrywise) {
    auto gkm = cubic_form_from_gkm(tolman_graph(), {2, 1});
    auto bundle = trilinear_from_cubic(bundle_cubic({-1, -1}));
    EXPECT_EQ(gkm, bundle);
}

TEST(Jupp, IdentityMapIsAnEquivalence) {
    auto r = jupp_compare(gkm_jupp_invariants(tolman_graph(), {2, 1}), bundle_jupp_invariants({-1, -1}), kIdentity);
    EXPECT_TRUE(r.equivalent);
    ASSERT_EQ(r.checks.size(), 3u);
    for (const auto& c : r.checks) EXPECT_TRUE(c.pass) << c.name << ": " << c.detail;
}

TEST(Jupp, IndependentOfLocalizingSubcircle) {
    auto bundle = bundle_jupp_invariants({-1, -1});
    for (auto [a, b] : std::vector<std::pair<int, int>>{{2, 1}, {7, 2}, {3, 5}, {-4, 1}})
        EXPECT_TRUE(jupp_compare(gkm_jupp_invariants(tolman_graph(), {a, b}), bundle, kIdentity).equivalent);
}

TEST(Jupp, SwappedBasisFailsCubicCheck) {
    auto r = jupp_compare(gkm_jupp_invariants(tolman_graph(), {2, 1}), bundle_jupp_invariants({-1, -1}),
                          BasisMap{{{0, 1}, {1, 0}}});
    EXPECT_FALSE(r.equivalent);
    EXPECT_FALSE(r.checks[0].pass);
}

TEST(Jupp, TrivialBundleDiffersInW2) {
    auto r = jupp_compare(gkm_jupp_invariants(tolman_graph(), {2, 1}), bundle_jupp_invariants({0, 0}), kIdentity);
    EXPECT_FALSE(r.equivalent);
    EXPECT_FALSE(r.checks[1].pass);
    EXPECT_FALSE(find_jupp_equivalence(gkm_jupp_invariants(tolman_graph(), {2, 1}), bundle_jupp_invariants({0, 0}))
                     .has_value());
}

TEST(Jupp, SearchFindsAMap) {
    auto q = find_jupp_equivalence(gkm_jupp_invariants(tolman_graph(), {2, 1}), bundle_jupp_invariants({-1, -1}));
    ASSERT_TRUE(q.has_value());
    EXPECT_TRUE(
        jupp_compare(gkm_jupp_invariants(tolman_graph(), {2, 1}), bundle_jupp_invariants({-1, -1}), *q).equivalent);
}

TEST(Jupp, NonUnimodularRejected) {
    auto inv = bundle_jupp_invariants({-1, -1});
    try {
        jupp_compare(inv, inv, BasisMap{{{2, 0}, {0, 1}}});
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), ErrorCode::NotUnimodular);
    }
}
