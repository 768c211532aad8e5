#ifndef LONGHOLE_TESTS_BRUTE_HPP
#define LONGHOLE_TESTS_BRUTE_HPP

// Independent test oracles. Everything here recomputes results by a route
// disjoint from the library implementation it checks.

#include <algorithm>
#include <optional>
#include <queue>
#include <set>
#include <vector>

#include "longhole/graph.hpp"
#include "longhole/path.hpp"

namespace brute {

using longhole::Graph;
using longhole::Hole;
using longhole::Path;
using longhole::Vertex;

// Plain queue-based BFS, no bitsets, no tie-breaking.
inline std::vector<int> bfs(const Graph& g, Vertex src, const std::vector<bool>& blocked) {
    std::vector<int> dist(static_cast<std::size_t>(g.vertex_count()), -1);
    if (blocked[static_cast<std::size_t>(src)]) return dist;
    std::queue<Vertex> q;
    q.push(src);
    dist[static_cast<std::size_t>(src)] = 0;
    while (!q.empty()) {
        Vertex u = q.front();
        q.pop();
        for (Vertex v = 0; v < g.vertex_count(); ++v)
            if (g.has_edge(u, v) && !blocked[static_cast<std::size_t>(v)] && dist[static_cast<std::size_t>(v)] == -1) {
                dist[static_cast<std::size_t>(v)] = dist[static_cast<std::size_t>(u)] + 1;
                q.push(v);
            }
    }
    return dist;
}

inline std::vector<int> bfs(const Graph& g, Vertex src) {
    return bfs(g, src, std::vector<bool>(static_cast<std::size_t>(g.vertex_count()), false));
}

// Every induced path as a vertex sequence, by trying all sequences.
inline std::vector<std::vector<Vertex>> induced_paths_by_sequences(const Graph& g, int len_min, int len_max) {
    std::vector<std::vector<Vertex>> out;
    std::vector<Vertex> seq;
    auto induced = [&](Vertex w) {
        for (std::size_t i = 0; i + 1 < seq.size(); ++i)
            if (g.has_edge(seq[i], w)) return false;
        return true;
    };
    auto rec = [&](auto&& self) -> void {
        int len = static_cast<int>(seq.size()) - 1;
        if (len >= len_min && (len == 0 || seq.front() < seq.back())) out.push_back(seq);
        if (len == len_max) return;
        for (Vertex w = 0; w < g.vertex_count(); ++w) {
            if (std::find(seq.begin(), seq.end(), w) != seq.end()) continue;
            if (!g.has_edge(seq.back(), w) || !induced(w)) continue;
            seq.push_back(w);
            self(self);
            seq.pop_back();
        }
    };
    for (Vertex s = 0; s < g.vertex_count(); ++s) {
        seq.assign(1, s);
        rec(rec);
    }
    return out;
}

// Induced cycles found by checking every vertex subset: a second enumeration
// route, independent of any backtracking order.
inline std::vector<Hole> induced_cycles_by_subsets(const Graph& g, int max_len) {
    const int n = g.vertex_count();
    std::vector<Hole> out;
    for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
        int size = std::popcount(mask);
        if (size < 4 || size > max_len) continue;
        std::vector<Vertex> vs;
        for (Vertex v = 0; v < n; ++v)
            if ((mask >> v) & 1u) vs.push_back(v);
        // a subset induces a cycle iff it is connected and 2-regular
        bool two_regular = true;
        for (Vertex v : vs) {
            int deg = 0;
            for (Vertex u : vs) deg += g.has_edge(u, v);
            if (deg != 2) {
                two_regular = false;
                break;
            }
        }
        if (!two_regular) continue;
        std::vector<Vertex> cyc{vs[0]};
        Vertex prev = -1, cur = vs[0];
        while (static_cast<int>(cyc.size()) < size) {
            Vertex nxt = -1;
            for (Vertex u : vs)
                if (u != prev && g.has_edge(cur, u)) {
                    nxt = u;
                    break;
                }
            prev = cur;
            cur = nxt;
            cyc.push_back(cur);
        }
        if (!g.has_edge(cyc.back(), cyc.front())) continue;  // two-regular but disconnected
        out.push_back(longhole::canonical_hole(cyc));
    }
    std::sort(out.begin(), out.end());
    return out;
}

// Direct quantifier version of the C-major test: some neighbour escapes
// every three-vertex subpath.
inline bool is_c_major(const Graph& g, const Hole& c, Vertex v) {
    const int k = c.length();
    if (std::find(c.verts.begin(), c.verts.end(), v) != c.verts.end()) return false;
    std::vector<Vertex> nbrs;
    for (Vertex u : c.verts)
        if (g.has_edge(u, v)) nbrs.push_back(u);
    if (nbrs.empty()) return false;
    for (int i = 0; i < k; ++i) {
        bool all_inside = true;
        for (Vertex u : nbrs) {
            bool inside = false;
            for (int d = 0; d < 3; ++d)
                if (c.verts[static_cast<std::size_t>((i + d) % k)] == u) inside = true;
            if (!inside) {
                all_inside = false;
                break;
            }
        }
        if (all_inside) return false;
    }
    return true;
}

// Exhaustive scan for any subpath satisfying the covering-subpath
// postconditions (strict form: each owning set meets Q only in its end).
struct MarkerBrute {
    int lo, hi, s, t;
};

inline bool marker_result_valid(int n, const std::vector<std::vector<int>>& sets, int lo, int hi, int s, int t);

inline std::optional<MarkerBrute> marker_by_scan(int n, const std::vector<std::vector<int>>& sets) {
    const int k = static_cast<int>(sets.size());
    for (int lo = 0; lo <= n; ++lo)
        for (int hi = lo + 1; hi <= n; hi += 2)  // odd length only
            for (int s = 0; s < k; ++s)
                for (int t = 0; t < k; ++t)
                    if (marker_result_valid(n, sets, lo, hi, s, t)) return MarkerBrute{lo, hi, s, t};
    return std::nullopt;
}

// Validates a marker result against the postconditions: Q = [lo,hi] odd and
// covering, lo owned by A_s, hi by A_t, no other vertex of Q in either set.
inline bool marker_result_valid(int n, const std::vector<std::vector<int>>& sets, int lo, int hi, int s, int t) {
    if (lo < 0 || hi > n || lo >= hi || (hi - lo) % 2 == 0) return false;
    const int k = static_cast<int>(sets.size());
    if (s < 0 || t < 0 || s >= k || t >= k) return false;
    for (int c = 0; c < k; ++c) {
        bool hit = false;
        for (int pos : sets[static_cast<std::size_t>(c)]) hit |= (pos >= lo && pos <= hi);
        if (!hit) return false;
    }
    auto in_set = [&](int c, int pos) {
        return std::find(sets[static_cast<std::size_t>(c)].begin(), sets[static_cast<std::size_t>(c)].end(), pos) !=
               sets[static_cast<std::size_t>(c)].end();
    };
    if (!in_set(s, lo) || !in_set(t, hi)) return false;
    for (int pos : sets[static_cast<std::size_t>(s)])
        if (pos >= lo && pos <= hi && pos != lo && !(s == t && pos == hi)) return false;
    for (int pos : sets[static_cast<std::size_t>(t)])
        if (pos >= lo && pos <= hi && pos != hi && !(s == t && pos == lo)) return false;
    return true;
}

}  // namespace brute

#endif
