#include <gtest/gtest.h>

#include <random>

#include "longhole/marker.hpp"
#include "support/brute.hpp"

using namespace longhole;

namespace {

Path line(int n_edges) {
    Path p;
    for (Vertex v = 0; v <= n_edges; ++v) p.verts.push_back(v + 100);  // arbitrary vertex ids
    return p;
}

TEST(Marker, WholePathForced) {
    // A = [{p0},{p5}] forces Q = P with the two singleton owners
    Path p = line(5);
    auto r = marker_subpath(p, {{p.verts[0]}, {p.verts[5]}});
    EXPECT_EQ(r.q.verts, p.verts);
    EXPECT_EQ(r.s, 0);
    EXPECT_EQ(r.t, 1);
}

TEST(Marker, SingleSetAdjacentPair) {
    Path p = line(5);
    auto r = marker_subpath(p, {{p.verts[1], p.verts[2]}});
    EXPECT_EQ(r.q.verts, (std::vector<Vertex>{p.verts[1], p.verts[2]}));
    EXPECT_EQ(r.s, 0);
    EXPECT_EQ(r.t, 0);
}

TEST(Marker, Errors) {
    Path p_even = line(4);
    EXPECT_THROW(marker_subpath(p_even, {{p_even.verts[0]}}), std::invalid_argument);
    Path p = line(5);
    EXPECT_THROW(marker_subpath(p, {{}}), std::invalid_argument);
    EXPECT_THROW(marker_subpath(p, {{999}}), std::invalid_argument);  // not on the path
    // hypothesis violation: prefix cover has length 1, suffix cover length 2
    EXPECT_THROW(marker_subpath(p, {{p.verts[1], p.verts[3]}, {p.verts[0], p.verts[3]}}), std::invalid_argument);
}

TEST(Marker, DeterministicOutput) {
    // prefix cover [0..8] and suffix cover [1..9] share a parity
    Path p = line(9);
    std::vector<std::vector<Vertex>> sets{{p.verts[0], p.verts[1]}, {p.verts[4], p.verts[5]}, {p.verts[8], p.verts[9]}};
    auto r1 = marker_subpath(p, sets);
    auto r2 = marker_subpath(p, sets);
    EXPECT_EQ(r1.q.verts, r2.q.verts);
    EXPECT_EQ(r1.s, r2.s);
    EXPECT_EQ(r1.t, r2.t);
}

TEST(Marker, RandomizedAgainstBrute) {
    std::mt19937 rng(1234);
    auto covering = [](const std::vector<std::vector<int>>& sets, int lo, int hi) {
        for (const auto& s : sets) {
            bool hit = false;
            for (int pos : s) hit |= (pos >= lo && pos <= hi);
            if (!hit) return false;
        }
        return true;
    };
    int done = 0;
    while (done < 2000) {
        int n = 2 * (1 + static_cast<int>(rng() % 15)) + 1;
        int k = 1 + static_cast<int>(rng() % 6);
        std::vector<std::vector<int>> sets(static_cast<std::size_t>(k));
        for (auto& s : sets) {
            for (int pos = 0; pos <= n; ++pos)
                if (rng() % 100 < 25) s.push_back(pos);
            if (s.empty()) s.push_back(static_cast<int>(rng() % (n + 1)));
        }
        int d = 0;
        while (!covering(sets, 0, d)) ++d;
        int e = n;
        while (!covering(sets, e, n)) --e;
        if (d % 2 != (n - e) % 2) continue;
        ++done;
        auto m = longhole::detail::marker_scan(n, sets);
        ASSERT_TRUE(brute::marker_result_valid(n, sets, m.lo, m.hi, m.s, m.t))
            << "n=" << n << " case " << done;
        ASSERT_TRUE(brute::marker_by_scan(n, sets).has_value());
    }
}

}  // namespace
