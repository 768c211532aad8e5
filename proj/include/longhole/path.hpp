#ifndef LONGHOLE_PATH_HPP
#define LONGHOLE_PATH_HPP

#include <algorithm>
#include <span>
#include <vector>

#include "longhole/graph.hpp"
#include "longhole/params.hpp"

namespace longhole {

/// Induced path, stored as its vertex sequence. length() counts edges.
struct Path {
    std::vector<Vertex> verts;

    Path() = default;
    explicit Path(std::vector<Vertex> v) : verts(std::move(v)) {}

    int length() const { return static_cast<int>(verts.size()) - 1; }
    Vertex front() const { return verts.front(); }
    Vertex back() const { return verts.back(); }

    /// P*: the vertices that are not ends.
    std::vector<Vertex> interior() const {
        if (verts.size() <= 2) return {};
        return {verts.begin() + 1, verts.end() - 1};
    }

    VertexSet vertex_set(int universe) const {
        VertexSet s(universe);
        for (Vertex v : verts) s.set(v);
        return s;
    }

    VertexSet interior_set(int universe) const {
        VertexSet s(universe);
        for (std::size_t i = 1; i + 1 < verts.size(); ++i) s.set(verts[i]);
        return s;
    }

    bool operator==(const Path& o) const = default;
};

/// Induced cycle of length >= 4, stored in canonical cyclic order
/// (smallest vertex first, then its smaller neighbour). length() counts edges.
struct Hole {
    std::vector<Vertex> verts;

    int length() const { return static_cast<int>(verts.size()); }
    bool odd() const { return length() % 2 == 1; }

    VertexSet vertex_set(int universe) const {
        VertexSet s(universe);
        for (Vertex v : verts) s.set(v);
        return s;
    }

    /// Cyclic distance between positions i and j.
    int arc_distance(int i, int j) const {
        int d = std::abs(i - j);
        return std::min(d, length() - d);
    }

    bool operator==(const Hole& o) const = default;
    auto operator<=>(const Hole& o) const = default;
};

inline bool all_distinct(std::span<const Vertex> seq, int universe) {
    VertexSet seen(universe);
    for (Vertex v : seq) {
        if (v < 0 || v >= universe || seen.test(v)) return false;
        seen.set(v);
    }
    return true;
}

/// Consecutive vertices adjacent, non-consecutive non-adjacent.
inline bool is_induced_path(const Graph& g, std::span<const Vertex> seq) {
    const int n = g.vertex_count();
    if (seq.empty() || !all_distinct(seq, n)) return false;
    VertexSet mask(n);
    for (Vertex v : seq) mask.set(v);
    for (std::size_t i = 0; i < seq.size(); ++i) {
        VertexSet expect(n);
        if (i > 0) expect.set(seq[i - 1]);
        if (i + 1 < seq.size()) expect.set(seq[i + 1]);
        if ((g.neighbors(seq[i]) & mask) != expect) return false;
    }
    return true;
}

inline bool is_induced_path(const Graph& g, const Path& p) { return is_induced_path(g, p.verts); }

/// Cyclically consecutive adjacent, all other pairs non-adjacent; length >= 4.
inline bool is_induced_cycle(const Graph& g, std::span<const Vertex> seq) {
    const int n = g.vertex_count();
    const std::size_t k = seq.size();
    if (k < 4 || !all_distinct(seq, n)) return false;
    VertexSet mask(n);
    for (Vertex v : seq) mask.set(v);
    for (std::size_t i = 0; i < k; ++i) {
        VertexSet expect(n);
        expect.set(seq[(i + 1) % k]);
        expect.set(seq[(i + k - 1) % k]);
        if ((g.neighbors(seq[i]) & mask) != expect) return false;
    }
    return true;
}

/// The universal witness checker: true iff seq is an induced cycle of G,
/// odd, with length at least ell. Malformed sequences return false.
inline bool is_long_odd_hole(const Graph& g, std::span<const Vertex> seq, const EllParams& params) {
    if (static_cast<int>(seq.size()) < params.ell || seq.size() % 2 == 0) return false;
    return is_induced_cycle(g, seq);
}

inline bool is_long_odd_hole(const Graph& g, const Hole& h, const EllParams& params) {
    return is_long_odd_hole(g, std::span<const Vertex>(h.verts), params);
}

/// Canonical cyclic order: rotate the smallest vertex to the front, then
/// orient so the second vertex is its smaller cycle-neighbour.
inline Hole canonical_hole(std::span<const Vertex> seq) {
    const std::size_t k = seq.size();
    std::size_t best = 0;
    for (std::size_t i = 1; i < k; ++i)
        if (seq[i] < seq[best]) best = i;
    Vertex succ = seq[(best + 1) % k];
    Vertex pred = seq[(best + k - 1) % k];
    Hole h;
    h.verts.resize(k);
    if (succ <= pred)
        for (std::size_t i = 0; i < k; ++i) h.verts[i] = seq[(best + i) % k];
    else
        for (std::size_t i = 0; i < k; ++i) h.verts[i] = seq[(best + k - i) % k];
    return h;
}

/// Path positions of v in the hole; -1 when absent.
inline int hole_position(const Hole& h, Vertex v) {
    for (std::size_t i = 0; i < h.verts.size(); ++i)
        if (h.verts[i] == v) return static_cast<int>(i);
    return -1;
}

/// d_C(u,v): distance measured along the hole.
inline int hole_distance(const Hole& h, Vertex u, Vertex v) {
    return h.arc_distance(hole_position(h, u), hole_position(h, v));
}

/// C-major vertices: v off the hole such that no subpath of C with at most
/// three vertices contains all neighbours of v on C.
inline VertexSet c_major_vertices(const Graph& g, const Hole& c) {
    const int n = g.vertex_count();
    const int k = c.length();
    VertexSet on_hole = c.vertex_set(n);
    std::vector<VertexSet> windows(static_cast<std::size_t>(k), VertexSet(n));
    for (int i = 0; i < k; ++i)
        for (int d = 0; d < 3; ++d) windows[static_cast<std::size_t>(i)].set(c.verts[static_cast<std::size_t>((i + d) % k)]);
    VertexSet majors(n);
    for (Vertex v = 0; v < n; ++v) {
        if (on_hole.test(v)) continue;
        VertexSet nb = g.neighbors(v) & on_hole;
        if (nb.empty()) continue;
        bool fits = false;
        for (int i = 0; i < k && !fits; ++i) fits = nb.is_subset_of(windows[static_cast<std::size_t>(i)]);
        if (!fits) majors.set(v);
    }
    return majors;
}

inline bool is_clean_hole(const Graph& g, const Hole& c) { return c_major_vertices(g, c).empty(); }

/// P catches v: v is off P and adjacent to an internal vertex of P.
inline bool catches(const Graph& g, const Path& p, Vertex v) {
    if (std::find(p.verts.begin(), p.verts.end(), v) != p.verts.end()) return false;
    return g.neighbors(v).intersects(p.interior_set(g.vertex_count()));
}

/// All vertices caught by at least one path of the family.
inline VertexSet catch_set(const Graph& g, std::span<const Path> family) {
    const int n = g.vertex_count();
    VertexSet caught(n);
    for (const Path& p : family) {
        VertexSet hit = neighborhood(g, p.interior_set(n));
        hit -= p.vertex_set(n);
        caught |= hit;
    }
    return caught;
}

/// Cost of a path family: number of vertices in the union of its paths.
inline int family_cost(int universe, std::span<const Path> family) {
    VertexSet u(universe);
    for (const Path& p : family)
        for (Vertex v : p.verts) u.set(v);
    return u.count();
}

}  // namespace longhole

#endif
