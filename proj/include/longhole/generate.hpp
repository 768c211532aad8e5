#ifndef LONGHOLE_GENERATE_HPP
#define LONGHOLE_GENERATE_HPP

#include <array>
#include <cmath>
#include <cstdint>
#include <random>
#include <vector>

#include "longhole/path.hpp"

namespace longhole {

inline Graph gen_cycle(int n) {
    if (n < 3) throw std::invalid_argument("cycle needs at least 3 vertices");
    Graph g(n);
    for (Vertex v = 0; v < n; ++v) g.add_edge(v, (v + 1) % n);
    return g;
}

/// G(n,p) with a fixed pair order and one mt19937 draw per pair, so the
/// result depends only on (n, p, seed).
inline Graph gen_random(int n, double p, std::uint32_t seed) {
    if (n < 0 || p < 0.0 || p > 1.0) throw std::invalid_argument("gen_random: bad parameters");
    Graph g(n);
    std::mt19937 rng(seed);
    const auto threshold = static_cast<std::uint64_t>(std::llround(p * 4294967296.0));
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = u + 1; v < n; ++v)
            if (static_cast<std::uint64_t>(rng()) < threshold) g.add_edge(u, v);
    return g;
}

/// Outer 5-cycle 0..4, inner pentagram 5..9, spokes i -- 5+i.
inline Graph gen_petersen() {
    Graph g(10);
    for (int i = 0; i < 5; ++i) {
        g.add_edge(i, (i + 1) % 5);
        g.add_edge(5 + i, 5 + (i + 2) % 5);
        g.add_edge(i, 5 + i);
    }
    return g;
}

/// Replaces every edge by a path with t new internal vertices, in sorted
/// edge order; original ids are preserved.
inline Graph gen_subdivide(const Graph& g, int t) {
    if (t < 0) throw std::invalid_argument("gen_subdivide: t must be nonnegative");
    if (t == 0) return g;
    auto es = g.edges();
    Graph out(g.vertex_count() + t * static_cast<int>(es.size()));
    Vertex next = g.vertex_count();
    for (auto [u, v] : es) {
        Vertex prev = u;
        for (int i = 0; i < t; ++i) {
            out.add_edge(prev, next);
            prev = next++;
        }
        out.add_edge(prev, v);
    }
    return out;
}

struct PlantedJewel {
    Graph graph;
    Path q1, q2, p;
    Vertex u, v;
};

/// Two internally disjoint u-v paths of the given lengths plus a third path
/// whose interior is anticomplete to both; no extra edges.
inline PlantedJewel gen_planted_jewel(int len_q1, int len_q2, int len_p) {
    if (len_q1 < 2 || len_q2 < 2) throw std::invalid_argument("planted jewel: Q paths need length >= 2");
    if ((len_q1 + len_q2) % 2 == 0) throw std::invalid_argument("planted jewel: Q paths must have opposite parity");
    if (len_p < 2) throw std::invalid_argument("planted jewel: P needs length >= 2");
    PlantedJewel out;
    const int n = 2 + (len_q1 - 1) + (len_q2 - 1) + (len_p - 1);
    Graph g(n);
    out.u = 0;
    out.v = 1;
    Vertex next = 2;
    auto lay = [&](int len) {
        Path p;
        p.verts.push_back(out.u);
        Vertex prev = out.u;
        for (int i = 0; i + 1 < len; ++i) {
            g.add_edge(prev, next);
            p.verts.push_back(next);
            prev = next++;
        }
        g.add_edge(prev, out.v);
        p.verts.push_back(out.v);
        return p;
    };
    out.q1 = lay(len_q1);
    out.q2 = lay(len_q2);
    out.p = lay(len_p);
    out.graph = std::move(g);
    return out;
}

struct PlantedPyramid {
    Graph graph;
    Vertex apex;
    std::array<Vertex, 3> base;
    std::array<Path, 3> arms;
};

/// Apex 0 joined to the triangle {1,2,3} by three internally disjoint paths
/// of the given lengths; no cross edges beyond the base triangle.
inline PlantedPyramid gen_planted_pyramid(int len1, int len2, int len3) {
    std::array<int, 3> len{len1, len2, len3};
    for (int l : len)
        if (l < 1) throw std::invalid_argument("planted pyramid: arm lengths must be >= 1");
    PlantedPyramid out;
    const int n = 4 + (len1 - 1) + (len2 - 1) + (len3 - 1);
    Graph g(n);
    out.apex = 0;
    out.base = {1, 2, 3};
    g.add_edge(1, 2);
    g.add_edge(1, 3);
    g.add_edge(2, 3);
    Vertex next = 4;
    for (int i = 0; i < 3; ++i) {
        Path arm;
        arm.verts.push_back(out.apex);
        Vertex prev = out.apex;
        for (int j = 0; j + 1 < len[static_cast<std::size_t>(i)]; ++j) {
            g.add_edge(prev, next);
            arm.verts.push_back(next);
            prev = next++;
        }
        g.add_edge(prev, out.base[static_cast<std::size_t>(i)]);
        arm.verts.push_back(out.base[static_cast<std::size_t>(i)]);
        out.arms[static_cast<std::size_t>(i)] = std::move(arm);
    }
    out.graph = std::move(g);
    return out;
}

struct PlantedBase {
    Graph graph;
    Hole hole;                          // the cycle 0..k-1
    std::vector<Vertex> attached;       // the extra vertices, k, k+1, ...
};

/// C_k plus one extra vertex per attachment list, adjacent to the listed
/// cycle positions.
inline PlantedBase gen_planted_base(int k, const std::vector<std::vector<int>>& attachments) {
    if (k < 4) throw std::invalid_argument("planted base: hole length must be >= 4");
    PlantedBase out;
    Graph g(k + static_cast<int>(attachments.size()));
    for (Vertex v = 0; v < k; ++v) g.add_edge(v, (v + 1) % k);
    Vertex next = k;
    for (const auto& att : attachments) {
        for (int pos : att) {
            if (pos < 0 || pos >= k) throw std::invalid_argument("planted base: attachment position out of range");
            g.add_edge(next, pos);
        }
        out.attached.push_back(next++);
    }
    out.hole.verts.resize(static_cast<std::size_t>(k));
    for (Vertex v = 0; v < k; ++v) out.hole.verts[static_cast<std::size_t>(v)] = v;
    out.graph = std::move(g);
    return out;
}

}  // namespace longhole

#endif
