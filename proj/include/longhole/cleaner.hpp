#ifndef LONGHOLE_CLEANER_HPP
#define LONGHOLE_CLEANER_HPP

#include <algorithm>
#include <optional>

#include "longhole/clean_detector.hpp"
#include "longhole/enumerate.hpp"
#include "longhole/marker.hpp"
#include "longhole/path.hpp"
#include "longhole/search.hpp"

namespace longhole {

struct Verdict {
    enum class Kind { HasLongOddHole, NoLongOddHole, Inconclusive };

    Kind kind = Kind::NoLongOddHole;
    std::optional<Hole> witness;
    BudgetReport report;

    static Verdict has(Hole h) { return {Kind::HasLongOddHole, std::move(h), {}}; }
    static Verdict none() { return {Kind::NoLongOddHole, std::nullopt, {}}; }
    static Verdict inconclusive(BudgetReport r) { return {Kind::Inconclusive, std::nullopt, std::move(r)}; }

    bool has_hole() const { return kind == Kind::HasLongOddHole; }
};

inline const char* verdict_name(Verdict::Kind k) {
    switch (k) {
        case Verdict::Kind::HasLongOddHole: return "has_long_odd_hole";
        case Verdict::Kind::NoLongOddHole: return "no_long_odd_hole";
        default: return "inconclusive";
    }
}

/// Base (x, D): a C-major vertex adjacent to both ends of a maximal path D
/// of C and to none of its internal vertices.
struct Base {
    Vertex x = -1;
    Path d;  // subpath of C
    Vertex d1() const { return d.front(); }
    Vertex d2() const { return d.back(); }
};

/// The two (x,v)-gaps inside D for a major v nonadjacent to x, each running
/// from an end of D to the nearest neighbour of v.
struct GapSet {
    Path d1_gap;  // ends d1 .. d1(v)
    Path d2_gap;  // ends d2 .. d2(v)
    Vertex d1_of_v() const { return d1_gap.back(); }
    Vertex d2_of_v() const { return d2_gap.back(); }
};

/// All bases of C: for each major x, the arcs between cyclically consecutive
/// neighbours of x on C (each is maximal by construction).
inline std::vector<Base> find_bases(const Graph& g, const Hole& c) {
    std::vector<Base> out;
    const int k = c.length();
    VertexSet majors = c_major_vertices(g, c);
    majors.for_each([&](Vertex x) {
        std::vector<int> nbr_pos;
        for (int i = 0; i < k; ++i)
            if (g.has_edge(x, c.verts[static_cast<std::size_t>(i)])) nbr_pos.push_back(i);
        for (std::size_t a = 0; a < nbr_pos.size(); ++a) {
            int from = nbr_pos[a];
            int to = nbr_pos[(a + 1) % nbr_pos.size()];
            Base b;
            b.x = x;
            for (int i = from;; i = (i + 1) % k) {
                b.d.verts.push_back(c.verts[static_cast<std::size_t>(i)]);
                if (i == to) break;
            }
            if (b.d.verts.size() >= 2) out.push_back(std::move(b));
        }
    });
    return out;
}

/// Remote: D has length at least 2*ell and every other major keeps all its
/// C-neighbours at hole distance at least ell from both ends of D.
inline bool is_remote_base(const Graph& g, const Hole& c, const Base& b, const EllParams& params) {
    if (b.d.length() < params.base_arm()) return false;
    VertexSet majors = c_major_vertices(g, c);
    bool ok = true;
    majors.for_each([&](Vertex m) {
        if (m == b.x || !ok) return;
        for (std::size_t i = 0; i < c.verts.size() && ok; ++i) {
            Vertex w = c.verts[i];
            if (!g.has_edge(m, w)) continue;
            if (hole_distance(c, w, b.d1()) < params.ell || hole_distance(c, w, b.d2()) < params.ell) ok = false;
        }
    });
    return ok;
}

/// All x-gaps: arcs of C of length >= 2 between consecutive neighbours of x.
inline std::vector<Path> x_gaps(const Graph& g, const Hole& c, Vertex x) {
    std::vector<Path> out;
    for (const Base& b : find_bases(g, c))
        if (b.x == x && b.d.length() >= 2) out.push_back(b.d);
    return out;
}

/// All (x,y)-gaps: subpaths P of C such that x-P-y is an induced path of G
/// (of G minus the edge xy when x,y are adjacent). Each gap is oriented with
/// its front adjacent to x and its back adjacent to y.
inline std::vector<Path> xy_gaps(const Graph& g, const Hole& c, Vertex x, Vertex y) {
    std::vector<Path> out;
    const int k = c.length();
    auto try_arc = [&](int from, int len, bool x_first) {
        Vertex first_owner = x_first ? x : y;
        Vertex last_owner = x_first ? y : x;
        std::vector<Vertex> arc;
        for (int i = 0; i <= len; ++i) arc.push_back(c.verts[static_cast<std::size_t>((from + i) % k)]);
        if (!g.has_edge(first_owner, arc.front()) || !g.has_edge(last_owner, arc.back())) return;
        for (std::size_t i = 1; i < arc.size(); ++i)
            if (g.has_edge(first_owner, arc[i])) return;
        for (std::size_t i = 0; i + 1 < arc.size(); ++i)
            if (g.has_edge(last_owner, arc[i])) return;
        if (!x_first) std::reverse(arc.begin(), arc.end());
        out.emplace_back(std::move(arc));
    };
    for (int from = 0; from < k; ++from)
        for (int len = 0; len <= k - 2; ++len) {
            try_arc(from, len, true);
            if (len == 0) continue;  // zero-length arcs are symmetric
            try_arc(from, len, false);
        }
    return out;
}

/// The two (x,v)-gaps contained in D, for a major v nonadjacent to x whose
/// neighbours meet the interior of D; nullopt when the shape is degenerate.
inline std::optional<GapSet> gaps_in_base(const Graph& g, const Base& b, Vertex v) {
    const auto& dv = b.d.verts;
    int lo = -1, hi = -1;
    for (std::size_t i = 1; i + 1 < dv.size(); ++i)
        if (g.has_edge(v, dv[i])) {
            if (lo == -1) lo = static_cast<int>(i);
            hi = static_cast<int>(i);
        }
    if (lo == -1) return std::nullopt;
    GapSet gs;
    gs.d1_gap.verts.assign(dv.begin(), dv.begin() + lo + 1);
    gs.d2_gap.verts.assign(dv.rbegin(), dv.rbegin() + (static_cast<int>(dv.size()) - hi));
    return gs;
}

/// The remote-base special case: guesses x, the two ends and the middle of
/// D, recovers the union of interiors of constrained shortest paths by the
/// distance-sum criterion, deletes the attachment fringe plus x, and runs
/// the clean detector on the remainder. Sound for every guess; complete
/// whenever some shortest long odd hole has a remote base whose majors are
/// all equal or adjacent to x.
inline Verdict inconst0(const Graph& g, const EllParams& params, Budget* budget = nullptr) {
    const int n = g.vertex_count();
    const VertexSet everything = VertexSet::full(n);
    for (Vertex x = 0; x < n; ++x) {
        VertexSet z = g.neighbors(x);
        z.set(x);
        VertexSet zc = everything - z;
        const VertexSet nx = g.neighbors(x);
        for (Vertex d1 = nx.first(); d1 != -1; d1 = nx.next(d1))
            for (Vertex d2 = nx.next(d1); d2 != -1; d2 = nx.next(d2))
                for (Vertex d0 = zc.first(); d0 != -1; d0 = zc.next(d0)) {
                    charge(budget, Stage::Inconst0);
                    VertexSet interior_union(n);
                    for (Vertex di : {d1, d2}) {
                        VertexSet keep = zc;
                        keep.set(di);
                        std::vector<int> from_di = bfs_distances(g, di, keep);
                        std::vector<int> from_d0 = bfs_distances(g, d0, keep);
                        int span = from_di[static_cast<std::size_t>(d0)];
                        if (span == kUnreachable) continue;
                        keep.for_each([&](Vertex u) {
                            if (u == di || u == d0) return;
                            if (from_di[static_cast<std::size_t>(u)] != kUnreachable &&
                                from_d0[static_cast<std::size_t>(u)] != kUnreachable &&
                                from_di[static_cast<std::size_t>(u)] + from_d0[static_cast<std::size_t>(u)] == span)
                                interior_union.set(u);
                        });
                    }
                    VertexSet core = interior_union;
                    core.set(d0);
                    VertexSet protected_set = core;
                    protected_set.set(d1);
                    protected_set.set(d2);
                    VertexSet y = neighborhood(g, core);
                    y -= protected_set;
                    VertexSet keep = everything - y;
                    keep.reset(x);
                    SubgraphResult sub = induced_subgraph(g, keep);
                    if (auto h = detect_clean_slooh(sub.graph, params, budget)) {
                        Hole lifted;
                        lifted.verts.reserve(h->verts.size());
                        for (Vertex sv : h->verts) lifted.verts.push_back(sub.old_id[static_cast<std::size_t>(sv)]);
                        lifted = canonical_hole(lifted.verts);
                        if (!is_long_odd_hole(g, lifted, params))
                            throw std::logic_error("inconst0: lifted hole failed verification");
                        return Verdict::has(std::move(lifted));
                    }
                }
    }
    return Verdict::none();
}

/// Desk-scale-complete cleaning: runs the clean detector on G minus X for
/// every subset X, in deterministic order (size, then lexicographic). The
/// true major set of a shortest long odd hole is one of the subsets, and
/// candidacy is hereditary, so the sweep is exact for candidates.
inline Verdict exhaustive_cleaning(const Graph& g, const EllParams& params, int n_cap = 16,
                                   Budget* budget = nullptr) {
    const int n = g.vertex_count();
    if (n > n_cap) throw std::invalid_argument("exhaustive_cleaning: graph exceeds n_cap");
    std::optional<Hole> found;
    std::vector<Vertex> chosen;
    auto run_subset = [&]() {
        charge(budget, Stage::ExhaustiveSubset);
        VertexSet keep = VertexSet::full(n);
        for (Vertex v : chosen) keep.reset(v);
        SubgraphResult sub = induced_subgraph(g, keep);
        if (auto h = detect_clean_slooh(sub.graph, params, budget)) {
            Hole lifted;
            for (Vertex sv : h->verts) lifted.verts.push_back(sub.old_id[static_cast<std::size_t>(sv)]);
            lifted = canonical_hole(lifted.verts);
            if (!is_long_odd_hole(g, lifted, params))
                throw std::logic_error("exhaustive_cleaning: lifted hole failed verification");
            found = std::move(lifted);
        }
    };
    // subsets by size, then lexicographic on the sorted vertex list
    auto combos = [&](auto&& self, Vertex start, int remaining) -> void {
        if (found) return;
        if (remaining == 0) {
            run_subset();
            return;
        }
        for (Vertex v = start; v <= n - remaining && !found; ++v) {
            chosen.push_back(v);
            self(self, v + 1, remaining - 1);
            chosen.pop_back();
        }
    };
    for (int size = 0; size <= n && !found; ++size) combos(combos, 0, size);
    if (found) return Verdict::has(std::move(*found));
    return Verdict::none();
}

namespace detail {

inline std::optional<Hole> clean_check_minus(const Graph& g, const EllParams& params, const VertexSet& remove,
                                             Budget* budget) {
    VertexSet keep = VertexSet::full(g.vertex_count());
    keep -= remove;
    SubgraphResult sub = induced_subgraph(g, keep);
    if (auto h = detect_clean_slooh(sub.graph, params, budget)) {
        Hole lifted;
        for (Vertex sv : h->verts) lifted.verts.push_back(sub.old_id[static_cast<std::size_t>(sv)]);
        lifted = canonical_hole(lifted.verts);
        if (!is_long_odd_hole(g, lifted, params))
            throw std::logic_error("structured_cleaning: lifted hole failed verification");
        return lifted;
    }
    return std::nullopt;
}

}  // namespace detail

/// The structured cleaning: bounded guesses instead of the subset sweep.
/// Breadth-first over stages so cheap configurations resolve before the
/// family explosion:
///   A. the empty cleaning (the clean detector on G itself);
///   B. pairs (R1,R2) of induced 2*ell-paths crossed with x: delete what the
///      pair catches except x, then the clean detector on H minus x;
///   C. the same (R1,R2,x) guesses crossed with catching families of at most
///      f_max induced paths of H (each of length at most 2*ell+1, family
///      cost at most 16*ell+28), deleting what the family catches and
///      invoking inconst0.
/// A verified hole wins immediately; exhausting every guess proves
/// NoLongOddHole; running out of budget yields Inconclusive with counters.
inline Verdict structured_cleaning(const Graph& g, const EllParams& params, Budget& budget, int f_max = 16) {
    const int n = g.vertex_count();
    try {
        // Stage A: the empty cleaning set.
        if (auto h = detect_clean_slooh(g, params, &budget)) return Verdict::has(std::move(*h));

        // The 2*ell-path pool is independent of x; collect it once.
        std::vector<Path> r_paths;
        {
            PathEnumOptions opt{params.base_arm(), params.base_arm(), std::nullopt, std::nullopt, nullptr};
            enum_induced_paths(g, opt, [&](std::span<const Vertex> seq) {
                r_paths.emplace_back(std::vector<Vertex>(seq.begin(), seq.end()));
                return true;
            }, &budget);
        }

        // Stage B.
        for (std::size_t i = 0; i < r_paths.size(); ++i)
            for (std::size_t j = i; j < r_paths.size(); ++j) {
                std::array<Path, 2> pair{r_paths[i], r_paths[j]};
                VertexSet caught = catch_set(g, pair);
                for (Vertex x = 0; x < n; ++x) {
                    budget.charge(Stage::RPair);
                    VertexSet remove = caught;  // (caught \ {x}) plus x itself: H \ {x}
                    remove.set(x);
                    if (auto h = detail::clean_check_minus(g, params, remove, &budget))
                        return Verdict::has(std::move(*h));
                }
            }

        // Stage C.
        for (std::size_t i = 0; i < r_paths.size(); ++i)
            for (std::size_t j = i; j < r_paths.size(); ++j) {
                std::array<Path, 2> pair{r_paths[i], r_paths[j]};
                VertexSet caught_pair = catch_set(g, pair);
                for (Vertex x = 0; x < n; ++x) {
                    VertexSet removed = caught_pair;
                    removed.reset(x);
                    VertexSet keep = VertexSet::full(n) - removed;
                    SubgraphResult hsub = induced_subgraph(g, keep);
                    const Graph& h = hsub.graph;

                    std::vector<Path> pool;
                    {
                        constexpr std::size_t kPoolCap = 2'000'000;  // memory guard; surfaces as Inconclusive
                        PathEnumOptions opt{2, 2 * params.ell + 1, std::nullopt, std::nullopt, nullptr};
                        enum_induced_paths(h, opt, [&](std::span<const Vertex> seq) {
                            budget.charge(Stage::Family, 4);  // storage counts as guess work
                            if (pool.size() >= kPoolCap) throw BudgetExceeded(budget.report());
                            pool.emplace_back(std::vector<Vertex>(seq.begin(), seq.end()));
                            return true;
                        }, &budget);
                    }

                    // families by size, then lexicographic combination order
                    std::vector<std::size_t> idx;
                    const int cost_cap = params.catch_cost_cap();
                    auto run_family = [&](std::span<const std::size_t> chosen) -> std::optional<Verdict> {
                        budget.charge(Stage::Family);
                        std::vector<Path> family;
                        family.reserve(chosen.size());
                        for (std::size_t c : chosen) family.push_back(pool[c]);
                        if (family_cost(h.vertex_count(), family) > cost_cap) return std::nullopt;
                        VertexSet fam_caught = catch_set(h, family);
                        VertexSet keep2 = VertexSet::full(h.vertex_count()) - fam_caught;
                        SubgraphResult sub2 = induced_subgraph(h, keep2);
                        Verdict inner = inconst0(sub2.graph, params, &budget);
                        if (!inner.has_hole()) return std::nullopt;
                        Hole lifted;
                        for (Vertex sv : inner.witness->verts)
                            lifted.verts.push_back(hsub.old_id[static_cast<std::size_t>(
                                sub2.old_id[static_cast<std::size_t>(sv)])]);
                        lifted = canonical_hole(lifted.verts);
                        if (!is_long_odd_hole(g, lifted, params))
                            throw std::logic_error("structured_cleaning: lifted hole failed verification");
                        return Verdict::has(std::move(lifted));
                    };

                    std::optional<Verdict> out;
                    auto combos = [&](auto&& self, std::size_t start, int remaining) -> void {
                        if (out) return;
                        if (remaining == 0) {
                            out = run_family(idx);
                            return;
                        }
                        for (std::size_t c = start; c < pool.size() && !out; ++c) {
                            idx.push_back(c);
                            self(self, c + 1, remaining - 1);
                            idx.pop_back();
                        }
                    };
                    for (int size = 0; size <= f_max && !out; ++size) {
                        if (size > static_cast<int>(pool.size())) break;
                        combos(combos, 0, size);
                    }
                    if (out) return std::move(*out);
                }
            }
        Verdict v = Verdict::none();
        v.report = budget.report();
        return v;
    } catch (const BudgetExceeded& e) {
        return Verdict::inconclusive(e.report);
    }
}

}  // namespace longhole

#endif
