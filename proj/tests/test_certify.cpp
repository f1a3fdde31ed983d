#include <gtest/gtest.h>

#include "ckfree/certify.hpp"
#include "oracles.hpp"

using namespace ckfree;

TEST(Structural, H2013) {
    const auto h = build_construction(20, 13);
    const auto r = certify_ck_free_structural(h);
    EXPECT_EQ(r.mode, CertifyMode::structural);
    EXPECT_TRUE(r.conclusive);
    EXPECT_TRUE(r.verdict);
    EXPECT_EQ(r.circumference, 12u);
    EXPECT_EQ(r.two_block_length, 12u);
    EXPECT_EQ(r.blocks, 4u);
    ASSERT_EQ(r.groups.size(), 2u);  // three full T_2 blocks and the 5-vertex block
    EXPECT_EQ(r.groups[0].multiplicity, 3u);
    EXPECT_EQ(r.groups[0].circumference, 7u);
    EXPECT_EQ(r.groups[0].xy_path, 6u);
    ASSERT_TRUE(r.witness);
    EXPECT_EQ(r.witness->length(), 12u);
    EXPECT_TRUE(validate_cycle(h.graph.abstract(), *r.witness));
    EXPECT_FALSE(r.lemma_backed);
}

TEST(Structural, DegenerateH77) {
    const auto h = build_construction(7, 7);
    const auto r = certify_ck_free_structural(h);
    EXPECT_TRUE(r.verdict);
    EXPECT_EQ(r.circumference, 6u);
    ASSERT_EQ(r.groups.size(), 2u);
    EXPECT_EQ(r.groups[0].circumference, 4u);
    EXPECT_EQ(r.groups[0].xy_path, 3u);
    EXPECT_EQ(r.groups[1].order, 3u);
    EXPECT_EQ(r.groups[1].circumference, 3u);
    EXPECT_EQ(r.groups[1].xy_path, 2u);
}

TEST(Structural, SingleBlockReducesToLongestCycle) {
    const auto h = build_construction(16, 25);
    const auto r = certify_ck_free_structural(h);
    EXPECT_EQ(r.blocks, 1u);
    EXPECT_EQ(r.two_block_length, 0u);
    EXPECT_EQ(r.circumference, longest_cycle(h.graph.abstract()).best->length());
    EXPECT_EQ(r.circumference, 14u);
    EXPECT_TRUE(r.verdict);
}

TEST(Structural, AgreesWithBruteForceOnSmallInstances) {
    for (std::uint64_t k = 7; k <= 14; ++k) {
        const std::uint64_t full = moon_moser_order(choose_level(k));
        for (std::uint64_t n = full; n <= 16; ++n) {
            const auto h = build_construction(n, k);
            const auto s = certify_ck_free_structural(h);
            const auto b = certify_brute(h.graph.abstract(), k);
            ASSERT_EQ(s.circumference, b.circumference) << n << "," << k;
            ASSERT_EQ(s.verdict, b.verdict);
            ASSERT_TRUE(s.verdict);
        }
    }
}

TEST(Structural, CaseBoundsHold) {
    for (std::uint64_t k = 7; k <= 40; ++k) {
        const unsigned i = choose_level(k);
        const std::uint64_t full = moon_moser_order(i);
        for (std::uint64_t n : {full, full + 1, 2 * full, 3 * full, 3 * full + 2}) {
            const auto r = certify_ck_free_structural(build_construction(n, k));
            for (const auto& g : r.groups) {
                if (i >= 2) {
                    ASSERT_LT(12 * g.circumference, 7 * k);
                } else if (g.order == 4) {
                    ASSERT_EQ(g.circumference, 4u);
                }
                ASSERT_LT(g.circumference, k);
            }
            if (r.blocks >= 2) {
                ASSERT_LT(r.two_block_length, k);
            }
            ASSERT_TRUE(r.verdict);
        }
    }
}

TEST(Structural, ExactLengthDecisionWhenCircumferenceReachesK) {
    // Reuse H(20, 13) but ask about shorter cycles, where the structural
    // maximum alone no longer settles the verdict.
    const auto h = build_construction(20, 13);
    const Graph g = h.graph.abstract();
    const auto lengths = oracle::cycle_lengths(g);
    for (std::uint64_t k = 3; k <= 13; ++k) {
        const auto r = certify_two_cut(g, h.x, h.y, k);
        ASSERT_TRUE(r.conclusive);
        EXPECT_EQ(r.verdict, !lengths[k]) << "k=" << k;
    }
}

TEST(Structural, HubsNeedNotBeAdjacent) {
    // Two 4-cycles sharing the non-adjacent pair {0, 1}: x-a-y-b-x and x-c-y-d-x.
    const Graph g = Graph::from_edges(6, std::vector<Edge>{{0, 2}, {2, 1}, {1, 3}, {3, 0}, {0, 4}, {4, 1}, {1, 5}, {5, 0}});
    const auto r = certify_two_cut(g, 0, 1, 5);
    EXPECT_EQ(r.circumference, 4u);
    EXPECT_EQ(r.circumference, longest_cycle(g).best->length());
    EXPECT_TRUE(r.verdict);
}

TEST(Structural, LemmaBackedModeIsFlagged) {
    const auto h = build_construction(40, 25);
    CertifyOptions opt;
    opt.budget.node_limit = 3;
    const auto strict = certify_ck_free_structural(h, opt);
    EXPECT_FALSE(strict.conclusive);

    opt.allow_lemma = true;
    const auto trusted = certify_ck_free_structural(h, opt);
    EXPECT_TRUE(trusted.lemma_backed);
    EXPECT_TRUE(trusted.conclusive);
    EXPECT_EQ(trusted.circumference, 24u);  // 3 * 2^(3-1) twice
    EXPECT_TRUE(trusted.verdict);
}

TEST(Brute, ReportsWitnessAndVerdict) {
    const Graph t2 = moon_moser(2).graph.abstract();
    const auto yes = certify_brute(t2, 7);
    EXPECT_EQ(yes.circumference, 7u);
    EXPECT_FALSE(yes.verdict);
    const auto no = certify_brute(t2, 8);
    EXPECT_TRUE(no.verdict);
    ASSERT_TRUE(no.witness);
    EXPECT_TRUE(validate_cycle(t2, *no.witness));
}
