#include <gtest/gtest.h>

#include <random>

#include "longhole/configurations.hpp"
#include "longhole/generate.hpp"
#include "longhole/oracle.hpp"

using namespace longhole;

namespace {

TEST(ShortHole, CycleExamples) {
    EllParams params(5);
    auto h7 = detect_short_long_odd_hole(gen_cycle(7), params, 12);
    ASSERT_TRUE(h7);
    EXPECT_EQ(h7->length(), 7);
    EXPECT_FALSE(detect_short_long_odd_hole(gen_cycle(13), params, 12));  // 13 exceeds the cap
    EXPECT_THROW(detect_short_long_odd_hole(gen_cycle(7), params, 4), std::invalid_argument);
}

TEST(ShortHole, FindsShortestFirst) {
    EllParams params(5);
    Graph g = disjoint_union(gen_cycle(9), gen_cycle(7));
    auto h = detect_short_long_odd_hole(g, params, 12);
    ASSERT_TRUE(h);
    EXPECT_EQ(h->length(), 7);
}

TEST(ShortHole, AgreesWithOracleOnRandom) {
    EllParams params(5);
    for (std::uint32_t seed = 0; seed < 60; ++seed) {
        Graph g = gen_random(11, 0.3, seed + 7000);
        auto mine = detect_short_long_odd_hole(g, params, 12);
        bool truth = false;
        oracle::enum_induced_cycles(g, 12, [&](const Hole& h) {
            truth |= h.odd() && h.length() >= 5;
            return !truth;
        });
        ASSERT_EQ(mine.has_value(), truth) << "seed " << seed;
        if (mine) ASSERT_TRUE(is_long_odd_hole(g, *mine, params));
    }
}

TEST(Jewel, PlantedFound) {
    EllParams params(5);
    auto planted = gen_planted_jewel(2, 3, 5);
    auto w = detect_long_jewel(planted.graph, params, 7);
    ASSERT_TRUE(w);
    EXPECT_TRUE(verify_jewel(planted.graph, *w, params));
    EXPECT_LE(w->order, 7);
}

TEST(Jewel, CycleHasNone) {
    EllParams params(5);
    EXPECT_FALSE(detect_long_jewel(gen_cycle(9), params, 7));
}

TEST(Jewel, AgreesWithOracleOnRandom) {
    EllParams params(5);
    std::mt19937 rng(321);
    for (int i = 0; i < 120; ++i) {
        int n = 6 + static_cast<int>(rng() % 5);
        Graph g = gen_random(n, 0.2 + 0.1 * static_cast<double>(rng() % 4), rng());
        auto mine = detect_long_jewel(g, params, 7);
        auto truth = oracle::long_jewel(g, params, 7, 12);
        ASSERT_EQ(mine.has_value(), truth.has_value()) << "instance " << i;
        if (mine) ASSERT_TRUE(verify_jewel(g, *mine, params));
    }
}

TEST(Pyramid, PlantedFound) {
    EllParams params(5);
    auto planted = gen_planted_pyramid(5, 5, 1);
    auto w = detect_long_pyramid(planted.graph, params);
    ASSERT_TRUE(w);
    EXPECT_TRUE(verify_pyramid(planted.graph, *w, params));

    auto planted2 = gen_planted_pyramid(6, 6, 1);
    auto w2 = detect_long_pyramid(planted2.graph, params);
    ASSERT_TRUE(w2);
    EXPECT_TRUE(verify_pyramid(planted2.graph, *w2, params));

    auto planted3 = gen_planted_pyramid(5, 6, 7);
    auto w3 = detect_long_pyramid(planted3.graph, params);
    ASSERT_TRUE(w3);
    EXPECT_TRUE(verify_pyramid(planted3.graph, *w3, params));
}

TEST(Pyramid, TriangleFreeHasNone) {
    EllParams params(5);
    EXPECT_FALSE(detect_long_pyramid(gen_cycle(12), params));
    EXPECT_FALSE(detect_long_pyramid(gen_petersen(), params));
}

TEST(Pyramid, AgreesWithOracleOnRandom) {
    EllParams params(5);
    std::mt19937 rng(654);
    for (int i = 0; i < 120; ++i) {
        int n = 6 + static_cast<int>(rng() % 5);
        Graph g = gen_random(n, 0.2 + 0.1 * static_cast<double>(rng() % 4), rng());
        auto mine = detect_long_pyramid(g, params);
        auto truth = oracle::long_pyramid(g, params, 12);
        ASSERT_EQ(mine.has_value(), truth.has_value()) << "instance " << i;
        if (mine) ASSERT_TRUE(verify_pyramid(g, *mine, params));
    }
}

TEST(Candidate, CycleGateExamples) {
    EllParams params(5);
    auto r7 = is_candidate(gen_cycle(7), params);
    ASSERT_FALSE(r7.is_candidate());
    EXPECT_TRUE(std::holds_alternative<Hole>(*r7.blocker));

    EXPECT_TRUE(is_candidate(gen_cycle(13), params).is_candidate());
}

TEST(Candidate, DisjointUnionWithPyramid) {
    EllParams params(5);
    // arms (6,6,1): the forced odd hole has length 13 > 12, so only the
    // pyramid detector can reject this graph
    Graph g = disjoint_union(gen_cycle(13), gen_planted_pyramid(6, 6, 1).graph);
    auto rep = is_candidate(g, params);
    ASSERT_FALSE(rep.is_candidate());
    EXPECT_TRUE(std::holds_alternative<PyramidWitness>(*rep.blocker));
    Hole h = witness_to_hole(g, *rep.blocker, params);
    EXPECT_TRUE(is_long_odd_hole(g, h, params));
}

TEST(Candidate, ImpliesAllOracleSearchesEmpty) {
    EllParams params(5);
    std::mt19937 rng(246);
    int checked = 0;
    for (int i = 0; i < 150 && checked < 40; ++i) {
        int n = 7 + static_cast<int>(rng() % 4);
        Graph g = gen_random(n, 0.25 + 0.05 * static_cast<double>(rng() % 4), rng());
        if (!is_candidate(g, params).is_candidate()) continue;
        ++checked;
        ASSERT_FALSE(oracle::long_jewel(g, params, params.jewel_order_cap(), 12));
        ASSERT_FALSE(oracle::long_pyramid(g, params, 12));
        bool short_hole = false;
        oracle::enum_induced_cycles(g, params.short_hole_cap(), [&](const Hole& h) {
            short_hole |= h.odd() && h.length() >= params.ell;
            return !short_hole;
        }, 12);
        ASSERT_FALSE(short_hole);
    }
    EXPECT_GT(checked, 10);
}

TEST(Candidate, Hereditary) {
    // candidacy survives taking induced subgraphs
    EllParams params(5);
    std::mt19937 rng(987);
    int checked = 0;
    for (int i = 0; i < 200 && checked < 30; ++i) {
        Graph g = gen_random(9, 0.3, rng());
        if (!is_candidate(g, params).is_candidate()) continue;
        ++checked;
        VertexSet keep = VertexSet::full(9);
        keep.reset(static_cast<Vertex>(rng() % 9));
        Graph sub = induced_subgraph(g, keep).graph;
        EXPECT_TRUE(is_candidate(sub, params).is_candidate());
    }
    EXPECT_GT(checked, 0);
}

TEST(WitnessToHole, JewelParityChoice) {
    EllParams params(5);
    auto planted = gen_planted_jewel(2, 3, 5);
    JewelWitness w;
    w.q1 = planted.q1;
    w.q2 = planted.q2;
    w.p = planted.p;
    w.u = planted.u;
    w.v = planted.v;
    w.order = 4;
    Hole h = witness_to_hole(planted.graph, Witness{w}, params);
    EXPECT_EQ(h.length(), 7);  // P(5) + Q1(2), the odd union

    JewelWitness bad = w;
    bad.p.verts[1] = bad.p.verts[2];  // corrupt
    EXPECT_THROW(witness_to_hole(planted.graph, Witness{bad}, params), std::invalid_argument);
}

TEST(WitnessToHole, PyramidParityChoice) {
    EllParams params(5);
    auto planted = gen_planted_pyramid(5, 5, 1);
    PyramidWitness w;
    w.apex = planted.apex;
    w.base = planted.base;
    w.arms = planted.arms;
    Hole h = witness_to_hole(planted.graph, Witness{w}, params);
    EXPECT_EQ(h.length(), 11);

    auto mixed = gen_planted_pyramid(6, 5, 2);  // same-parity pair is (6,2)
    PyramidWitness w2{mixed.apex, mixed.base, mixed.arms};
    Hole h2 = witness_to_hole(mixed.graph, Witness{w2}, params);
    EXPECT_EQ(h2.length(), 9);
}

TEST(LongHole, Examples) {
    EllParams params(5);
    auto h6 = detect_long_hole(gen_cycle(6), params);
    ASSERT_TRUE(h6);
    EXPECT_EQ(h6->length(), 6);
    EXPECT_FALSE(detect_long_hole(gen_cycle(4), params));
    auto h5 = detect_long_hole(gen_cycle(5), params);
    ASSERT_TRUE(h5);  // holes of length exactly ell are found too
    EXPECT_EQ(h5->length(), 5);
}

TEST(LongHole, AgreesWithOracle) {
    EllParams params(5);
    for (std::uint32_t seed = 0; seed < 60; ++seed) {
        Graph g = gen_random(10, 0.3, seed + 8101);
        bool truth = false;
        oracle::enum_induced_cycles(g, std::nullopt, [&](const Hole& h) {
            truth |= h.length() >= params.ell;
            return !truth;
        });
        auto mine = detect_long_hole(g, params);
        ASSERT_EQ(mine.has_value(), truth) << "seed " << seed;
        if (mine) {
            ASSERT_TRUE(is_induced_cycle(g, mine->verts));
            ASSERT_GE(mine->length(), params.ell);
        }
    }
}

TEST(Detectors, BudgetSignal) {
    EllParams params(5);
    Graph g = gen_random(12, 0.3, 5);
    Budget tiny(50);
    EXPECT_THROW(detect_long_jewel(g, params, 7, &tiny), BudgetExceeded);
}

}  // namespace
