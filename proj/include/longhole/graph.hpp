#ifndef LONGHOLE_GRAPH_HPP
#define LONGHOLE_GRAPH_HPP

#include <stdexcept>
#include <utility>
#include <vector>

#include "longhole/bitset.hpp"

namespace longhole {

/// Simple undirected graph on dense ids 0..n-1, adjacency stored as one
/// bitset per vertex. No loops, no parallel edges, symmetric by construction.
/// Immutable once built; safe to share across threads.
class Graph {
public:
    Graph() = default;

    explicit Graph(int n) : n_(n), adj_(static_cast<std::size_t>(n), VertexSet(n)) {
        if (n < 0) throw std::invalid_argument("negative vertex count");
    }

    int vertex_count() const { return n_; }
    int edge_count() const { return m_; }

    bool has_edge(Vertex u, Vertex v) const { return adj_[static_cast<std::size_t>(u)].test(v); }

    void add_edge(Vertex u, Vertex v) {
        if (u < 0 || v < 0 || u >= n_ || v >= n_) throw std::invalid_argument("vertex id out of range");
        if (u == v) throw std::invalid_argument("loop edge rejected");
        if (has_edge(u, v)) throw std::invalid_argument("duplicate edge rejected");
        adj_[static_cast<std::size_t>(u)].set(v);
        adj_[static_cast<std::size_t>(v)].set(u);
        ++m_;
    }

    const VertexSet& neighbors(Vertex v) const { return adj_[static_cast<std::size_t>(v)]; }

    int degree(Vertex v) const { return adj_[static_cast<std::size_t>(v)].count(); }

    std::vector<std::pair<Vertex, Vertex>> edges() const {
        std::vector<std::pair<Vertex, Vertex>> out;
        out.reserve(static_cast<std::size_t>(m_));
        for (Vertex u = 0; u < n_; ++u)
            neighbors(u).for_each([&](Vertex v) {
                if (u < v) out.emplace_back(u, v);
            });
        return out;
    }

    VertexSet all_vertices() const { return VertexSet::full(n_); }

    bool operator==(const Graph& o) const = default;

private:
    int n_ = 0;
    int m_ = 0;
    std::vector<VertexSet> adj_;
};

struct SubgraphResult {
    Graph graph;
    std::vector<Vertex> old_id;  // new id -> id in the parent graph
};

/// Induced subgraph on the vertices of `keep`, relabelled to 0..k-1
/// in ascending original-id order.
inline SubgraphResult induced_subgraph(const Graph& g, const VertexSet& keep) {
    SubgraphResult res;
    res.old_id = keep.to_vector();
    std::vector<int> new_id(static_cast<std::size_t>(g.vertex_count()), -1);
    for (std::size_t i = 0; i < res.old_id.size(); ++i)
        new_id[static_cast<std::size_t>(res.old_id[i])] = static_cast<int>(i);
    res.graph = Graph(static_cast<int>(res.old_id.size()));
    for (std::size_t i = 0; i < res.old_id.size(); ++i) {
        VertexSet nb = g.neighbors(res.old_id[i]) & keep;
        nb.for_each([&](Vertex v) {
            if (res.old_id[i] < v) res.graph.add_edge(static_cast<int>(i), new_id[static_cast<std::size_t>(v)]);
        });
    }
    return res;
}

/// Neighbourhood of a vertex set: union of N(v) over v in s (may intersect s).
inline VertexSet neighborhood(const Graph& g, const VertexSet& s) {
    VertexSet out(g.vertex_count());
    s.for_each([&](Vertex v) { out |= g.neighbors(v); });
    return out;
}

inline Graph disjoint_union(const Graph& a, const Graph& b) {
    Graph g(a.vertex_count() + b.vertex_count());
    for (auto [u, v] : a.edges()) g.add_edge(u, v);
    for (auto [u, v] : b.edges()) g.add_edge(u + a.vertex_count(), v + a.vertex_count());
    return g;
}

}  // namespace longhole

#endif
