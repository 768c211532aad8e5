#ifndef LONGHOLE_ORACLE_HPP
#define LONGHOLE_ORACLE_HPP

#include <optional>

#include "longhole/enumerate.hpp"
#include "longhole/path.hpp"
#include "longhole/search.hpp"

namespace longhole {

/// Deliberately naive ground truth, used only for testing and
/// cross-validation; never called from the main pipeline.
namespace oracle {

constexpr int kDefaultCap = 16;

inline void check_cap(const Graph& g, int n_cap) {
    if (g.vertex_count() > n_cap)
        throw std::invalid_argument("oracle: graph exceeds the vertex cap; raise n_cap explicitly");
}

namespace detail {

/// Backtracking cycle search anchored at the canonical start: c0 is the
/// minimum vertex, c1 its smaller cycle-neighbour, so each induced cycle is
/// produced exactly once.
template <typename Visit>
class CycleEnumerator {
public:
    CycleEnumerator(const Graph& g, int max_len, Visit& visit, Budget* budget)
        : g_(g), max_len_(max_len), visit_(visit), budget_(budget) {}

    bool run() {
        const int n = g_.vertex_count();
        for (Vertex s = 0; s < n; ++s) {
            seq_.assign(1, s);
            VertexSet blocked(n);
            blocked.set(s);
            blocked_.assign(1, blocked);
            if (!extend()) return false;
        }
        return true;
    }

private:
    // blocked at depth k holds the path vertices plus N(c1..c_{k-2});
    // adjacency to c0 is what closes a cycle and never extends.
    bool extend() {
        charge(budget_, Stage::CycleEnum);
        const int k = static_cast<int>(seq_.size());
        if (k >= max_len_) return true;
        const Vertex s = seq_.front();
        VertexSet cand = g_.neighbors(seq_.back());
        cand -= blocked_.back();
        for (Vertex w = cand.first(); w != -1; w = cand.next(w)) {
            if (w < s) continue;  // canonical: s is the cycle minimum
            if (k >= 2 && g_.neighbors(w).test(s)) {
                if (k >= 3 && seq_[1] < w) {  // canonical: smaller neighbour second
                    seq_.push_back(w);
                    bool go = visit_(std::span<const Vertex>(seq_));
                    seq_.pop_back();
                    if (!go) return false;
                }
                continue;
            }
            VertexSet nb = blocked_.back();
            nb.set(w);
            if (k >= 2) nb |= g_.neighbors(seq_.back());
            seq_.push_back(w);
            blocked_.push_back(std::move(nb));
            bool go = extend();
            seq_.pop_back();
            blocked_.pop_back();
            if (!go) return false;
        }
        return true;
    }

    const Graph& g_;
    int max_len_;
    Visit& visit_;
    Budget* budget_;
    std::vector<Vertex> seq_;
    std::vector<VertexSet> blocked_;
};

}  // namespace detail

/// Every induced cycle of length >= 4 (and <= max_len when given), exactly
/// once, in canonical form. Visitor returns false to stop early.
template <typename Visit>
bool enum_induced_cycles(const Graph& g, std::optional<int> max_len, Visit&& visit, int n_cap = kDefaultCap,
                         Budget* budget = nullptr) {
    check_cap(g, n_cap);
    int cap = max_len.value_or(g.vertex_count());
    auto canonical_visit = [&](std::span<const Vertex> seq) { return visit(canonical_hole(seq)); };
    detail::CycleEnumerator<decltype(canonical_visit)> e(g, cap, canonical_visit, budget);
    return e.run();
}

inline std::vector<Hole> collect_induced_cycles(const Graph& g, std::optional<int> max_len = std::nullopt,
                                                int n_cap = kDefaultCap) {
    std::vector<Hole> out;
    enum_induced_cycles(g, max_len, [&](const Hole& h) {
        out.push_back(h);
        return true;
    }, n_cap);
    return out;
}

/// A shortest long odd hole (lexicographically least canonical form among
/// the shortest), or nullopt.
inline std::optional<Hole> long_odd_hole(const Graph& g, const EllParams& params, int n_cap = kDefaultCap) {
    std::optional<Hole> best;
    enum_induced_cycles(g, std::nullopt, [&](const Hole& h) {
        if (h.odd() && h.length() >= params.ell)
            if (!best || h.length() < best->length() || (h.length() == best->length() && h.verts < best->verts))
                best = h;
        return true;
    }, n_cap);
    return best;
}

/// True iff some shortest long odd hole of G is clean.
inline bool has_clean_slooh(const Graph& g, const EllParams& params, int n_cap = kDefaultCap) {
    std::optional<Hole> any = long_odd_hole(g, params, n_cap);
    if (!any) return false;
    bool found = false;
    enum_induced_cycles(g, any->length(), [&](const Hole& h) {
        if (h.odd() && h.length() == any->length() && is_clean_hole(g, h)) {
            found = true;
            return false;
        }
        return true;
    }, n_cap);
    return found;
}

struct PyramidFound {
    Vertex apex;
    std::array<Vertex, 3> base;
    std::array<Path, 3> arms;
};

/// Literal backtracking search for a long pyramid: apex, base triangle and
/// three internally disjoint arms, every clause of the definition checked.
inline std::optional<PyramidFound> long_pyramid(const Graph& g, const EllParams& params, int n_cap = kDefaultCap,
                                                Budget* budget = nullptr) {
    check_cap(g, n_cap);
    const int n = g.vertex_count();
    auto only_edge = [&](const Path& a, const Path& b, Vertex va, Vertex vb) {
        // between V(a)\{apex} and V(b)\{apex} the only edge is va--vb
        for (std::size_t i = 1; i < a.verts.size(); ++i)
            for (std::size_t j = 1; j < b.verts.size(); ++j) {
                bool adj = g.has_edge(a.verts[i], b.verts[j]);
                bool is_base = a.verts[i] == va && b.verts[j] == vb;
                if (adj != is_base) return false;
            }
        return true;
    };
    std::optional<PyramidFound> found;
    for (Vertex v0 = 0; v0 < n && !found; ++v0)
        for (Vertex v1 = 0; v1 < n && !found; ++v1) {
            if (v1 == v0) continue;
            for (Vertex v2 = v1 + 1; v2 < n && !found; ++v2) {
                if (v2 == v0 || !g.has_edge(v1, v2)) continue;
                for (Vertex v3 = v2 + 1; v3 < n && !found; ++v3) {
                    if (v3 == v0 || !g.has_edge(v1, v3) || !g.has_edge(v2, v3)) continue;
                    VertexSet allowed1 = VertexSet::full(n);
                    allowed1.reset(v2);
                    allowed1.reset(v3);
                    PathEnumOptions o1{1, n, v0, v1, &allowed1};
                    enum_induced_paths(g, o1, [&](std::span<const Vertex> p1seq) {
                        charge(budget, Stage::Pyramid);
                        Path p1{std::vector<Vertex>(p1seq.begin(), p1seq.end())};
                        VertexSet used1 = p1.vertex_set(n);
                        VertexSet allowed2 = VertexSet::full(n);
                        allowed2 -= used1;
                        allowed2.set(v0);
                        allowed2.reset(v3);
                        PathEnumOptions o2{1, n, v0, v2, &allowed2};
                        enum_induced_paths(g, o2, [&](std::span<const Vertex> p2seq) {
                            Path p2{std::vector<Vertex>(p2seq.begin(), p2seq.end())};
                            if (!only_edge(p1, p2, v1, v2)) return true;
                            VertexSet allowed3 = allowed2;
                            allowed3 -= p2.vertex_set(n);
                            allowed3.set(v0);
                            allowed3.set(v3);
                            PathEnumOptions o3{1, n, v0, v3, &allowed3};
                            enum_induced_paths(g, o3, [&](std::span<const Vertex> p3seq) {
                                Path p3{std::vector<Vertex>(p3seq.begin(), p3seq.end())};
                                if (!only_edge(p1, p3, v1, v3) || !only_edge(p2, p3, v2, v3)) return true;
                                int longs = (p1.length() >= params.ell) + (p2.length() >= params.ell) +
                                            (p3.length() >= params.ell);
                                if (longs < 2) return true;
                                found = PyramidFound{v0, {v1, v2, v3}, {p1, p2, p3}};
                                return false;
                            }, budget);
                            return !found;
                        }, budget);
                        return !found;
                    }, budget);
                }
            }
        }
    return found;
}

struct JewelFound {
    Path q1, q2, p;
    Vertex u, v;
};

/// Literal search for a long jewel of order at most k: two same-endpoint
/// induced paths of opposite parity (each with at most k vertices) plus a
/// long path whose interior avoids and is anticomplete to their interiors.
inline std::optional<JewelFound> long_jewel(const Graph& g, const EllParams& params, int k, int n_cap = kDefaultCap,
                                            Budget* budget = nullptr) {
    check_cap(g, n_cap);
    if (k < 3) throw std::invalid_argument("oracle: jewel order cap must be at least 3");
    const int n = g.vertex_count();
    std::optional<JewelFound> found;
    for (Vertex u = 0; u < n && !found; ++u)
        for (Vertex v = u + 1; v < n && !found; ++v) {
            if (g.has_edge(u, v)) continue;  // an induced u-v path of length >= 2 cannot exist
            PathEnumOptions oq{2, k - 1, u, v, nullptr};
            std::vector<Path> odd_q, even_q;
            enum_induced_paths(g, oq, [&](std::span<const Vertex> seq) {
                charge(budget, Stage::Jewel);
                Path q{std::vector<Vertex>(seq.begin(), seq.end())};
                (q.length() % 2 ? odd_q : even_q).push_back(std::move(q));
                return true;
            }, budget);
            for (const Path& q1 : odd_q) {
                for (const Path& q2 : even_q) {
                    charge(budget, Stage::Jewel);
                    VertexSet interiors = q1.interior_set(n);
                    interiors |= q2.interior_set(n);
                    VertexSet allowed = VertexSet::full(n);
                    allowed -= interiors;
                    allowed -= neighborhood(g, interiors);
                    allowed.set(u);
                    allowed.set(v);
                    PathEnumOptions op{params.ell, n, u, v, &allowed};
                    enum_induced_paths(g, op, [&](std::span<const Vertex> seq) {
                        found = JewelFound{q1, q2, Path{std::vector<Vertex>(seq.begin(), seq.end())}, u, v};
                        return false;
                    }, budget);
                    if (found) break;
                }
                if (found) break;
            }
        }
    return found;
}

}  // namespace oracle

}  // namespace longhole

#endif
