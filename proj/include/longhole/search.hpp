#ifndef LONGHOLE_SEARCH_HPP
#define LONGHOLE_SEARCH_HPP

#include <optional>
#include <vector>

#include "longhole/path.hpp"

namespace longhole {

constexpr int kUnreachable = -1;

/// BFS distances from src inside G[allowed]. src must be allowed.
inline std::vector<int> bfs_distances(const Graph& g, Vertex src, const VertexSet& allowed) {
    std::vector<int> dist(static_cast<std::size_t>(g.vertex_count()), kUnreachable);
    dist[static_cast<std::size_t>(src)] = 0;
    VertexSet frontier(g.vertex_count());
    frontier.set(src);
    VertexSet remaining = allowed;
    remaining.reset(src);
    int d = 0;
    while (!frontier.empty()) {
        VertexSet nxt = neighborhood(g, frontier);
        nxt &= remaining;
        ++d;
        nxt.for_each([&](Vertex v) { dist[static_cast<std::size_t>(v)] = d; });
        remaining -= nxt;
        frontier = std::move(nxt);
    }
    return dist;
}

inline std::vector<int> bfs_distances(const Graph& g, Vertex src) {
    return bfs_distances(g, src, VertexSet::full(g.vertex_count()));
}

/// Shortest u-v path in G minus `avoid`, ties broken by the lexicographically
/// smallest vertex sequence. A shortest path is automatically induced.
/// u == v yields the single-vertex path; nullopt when disconnected.
inline std::optional<Path> shortest_path(const Graph& g, Vertex u, Vertex v, const VertexSet& avoid) {
    if (u == v) return Path{{u}};
    VertexSet allowed = VertexSet::full(g.vertex_count());
    allowed -= avoid;
    std::vector<int> dist = bfs_distances(g, v, allowed);
    if (dist[static_cast<std::size_t>(u)] == kUnreachable) return std::nullopt;
    Path p;
    p.verts.reserve(static_cast<std::size_t>(dist[static_cast<std::size_t>(u)]) + 1);
    p.verts.push_back(u);
    Vertex cur = u;
    while (cur != v) {
        int want = dist[static_cast<std::size_t>(cur)] - 1;
        Vertex next = -1;
        VertexSet cand = g.neighbors(cur) & allowed;
        for (Vertex w = cand.first(); w != -1; w = cand.next(w))
            if (dist[static_cast<std::size_t>(w)] == want) {
                next = w;
                break;
            }
        p.verts.push_back(next);
        cur = next;
    }
    return p;
}

inline std::optional<Path> shortest_path(const Graph& g, Vertex u, Vertex v) {
    return shortest_path(g, u, v, VertexSet(g.vertex_count()));
}

/// All-pairs BFS distance table.
class DistanceMatrix {
public:
    explicit DistanceMatrix(const Graph& g) {
        rows_.reserve(static_cast<std::size_t>(g.vertex_count()));
        for (Vertex v = 0; v < g.vertex_count(); ++v) rows_.push_back(bfs_distances(g, v));
    }

    int operator()(Vertex u, Vertex v) const { return rows_[static_cast<std::size_t>(u)][static_cast<std::size_t>(v)]; }

    /// Lex-least shortest u->v walk read off the precomputed table.
    Path reconstruct(const Graph& g, Vertex u, Vertex v) const {
        Path p;
        p.verts.push_back(u);
        Vertex cur = u;
        const auto& dv = rows_[static_cast<std::size_t>(v)];
        while (cur != v) {
            int want = dv[static_cast<std::size_t>(cur)] - 1;
            const VertexSet& cand = g.neighbors(cur);
            for (Vertex w = cand.first(); w != -1; w = cand.next(w))
                if (dv[static_cast<std::size_t>(w)] == want) {
                    cur = w;
                    break;
                }
            p.verts.push_back(cur);
        }
        return p;
    }

private:
    std::vector<std::vector<int>> rows_;
};

}  // namespace longhole

#endif
