#ifndef LONGHOLE_CONFIGURATIONS_HPP
#define LONGHOLE_CONFIGURATIONS_HPP

#include <optional>
#include <variant>

#include "longhole/enumerate.hpp"
#include "longhole/path.hpp"
#include "longhole/search.hpp"

namespace longhole {

/// Long jewel of order max(|V(Q1)|,|V(Q2)|): two same-endpoint induced paths
/// of opposite parity plus a long path whose interior avoids and is
/// anticomplete to their interiors.
struct JewelWitness {
    Path q1, q2, p;
    Vertex u = -1, v = -1;
    int order = 0;
};

struct PyramidWitness {
    Vertex apex = -1;
    std::array<Vertex, 3> base{};
    std::array<Path, 3> arms{};  // each oriented apex -> base[i]
};

using Witness = std::variant<Hole, JewelWitness, PyramidWitness>;

inline bool verify_jewel(const Graph& g, const JewelWitness& w, const EllParams& params) {
    const int n = g.vertex_count();
    for (const Path* q : {&w.q1, &w.q2, &w.p}) {
        if (q->verts.size() < 2 || q->front() != w.u || q->back() != w.v) return false;
        if (!is_induced_path(g, *q)) return false;
    }
    if (w.q1.length() % 2 == w.q2.length() % 2) return false;
    if (w.p.length() < params.ell) return false;
    if (w.order != std::max(static_cast<int>(w.q1.verts.size()), static_cast<int>(w.q2.verts.size()))) return false;
    VertexSet interiors = w.q1.interior_set(n);
    interiors |= w.q2.interior_set(n);
    VertexSet bad = interiors | neighborhood(g, interiors);
    for (std::size_t i = 1; i + 1 < w.p.verts.size(); ++i)
        if (bad.test(w.p.verts[i])) return false;
    return true;
}

inline bool verify_pyramid(const Graph& g, const PyramidWitness& w, const EllParams& params) {
    int longs = 0;
    for (int i = 0; i < 3; ++i) {
        const Path& arm = w.arms[static_cast<std::size_t>(i)];
        if (arm.verts.size() < 2 || arm.front() != w.apex || arm.back() != w.base[static_cast<std::size_t>(i)]) return false;
        if (w.base[static_cast<std::size_t>(i)] == w.apex) return false;
        if (!is_induced_path(g, arm)) return false;
        if (arm.length() >= params.ell) ++longs;
    }
    if (longs < 2) return false;
    for (int i = 0; i < 3; ++i)
        for (int j = i + 1; j < 3; ++j) {
            const Path& a = w.arms[static_cast<std::size_t>(i)];
            const Path& b = w.arms[static_cast<std::size_t>(j)];
            // vertex-disjoint except the apex; the only cross edge is the base edge
            for (std::size_t x = 1; x < a.verts.size(); ++x)
                for (std::size_t y = 1; y < b.verts.size(); ++y) {
                    if (a.verts[x] == b.verts[y]) return false;
                    bool adj = g.has_edge(a.verts[x], b.verts[y]);
                    bool is_base = a.verts[x] == w.base[static_cast<std::size_t>(i)] &&
                                   b.verts[y] == w.base[static_cast<std::size_t>(j)];
                    if (adj != is_base) return false;
                }
        }
    return true;
}

/// Extracts a verified long odd hole from any witness. For a jewel the odd
/// one of P + Q1, P + Q2 is a hole; for a pyramid two arms share a parity and
/// close into an odd hole through the base edge.
inline Hole witness_to_hole(const Graph& g, const Witness& w, const EllParams& params) {
    std::vector<Vertex> cyc;
    if (const Hole* h = std::get_if<Hole>(&w)) {
        cyc = h->verts;
    } else if (const JewelWitness* jw = std::get_if<JewelWitness>(&w)) {
        if (!verify_jewel(g, *jw, params)) throw std::invalid_argument("witness_to_hole: invalid jewel witness");
        const Path& q = (jw->p.length() + jw->q1.length()) % 2 == 1 ? jw->q1 : jw->q2;
        cyc = jw->p.verts;                                            // u .. v
        cyc.insert(cyc.end(), q.verts.rbegin() + 1, q.verts.rend() - 1);  // v .. back towards u
    } else {
        const PyramidWitness& pw = std::get<PyramidWitness>(w);
        if (!verify_pyramid(g, pw, params)) throw std::invalid_argument("witness_to_hole: invalid pyramid witness");
        int i = 0, j = 1;
        if (pw.arms[0].length() % 2 != pw.arms[1].length() % 2) {
            if (pw.arms[0].length() % 2 == pw.arms[2].length() % 2)
                j = 2;
            else
                i = 1, j = 2;
        }
        const Path& a = pw.arms[static_cast<std::size_t>(i)];
        const Path& b = pw.arms[static_cast<std::size_t>(j)];
        cyc.assign(a.verts.begin(), a.verts.end());                      // apex .. base_i
        cyc.insert(cyc.end(), b.verts.rbegin(), b.verts.rend() - 1);     // base_j .. back to apex side
    }
    Hole h = canonical_hole(cyc);
    if (!is_long_odd_hole(g, h, params)) throw std::logic_error("witness_to_hole: extracted cycle failed verification");
    return h;
}

/// Long odd hole of length at most k, shortest first (deterministic), via
/// induced-path enumeration completed by a single vertex; equivalent to the
/// bounded subset sweep but output-sensitive.
inline std::optional<Hole> detect_short_long_odd_hole(const Graph& g, const EllParams& params, int k,
                                                      Budget* budget = nullptr) {
    if (k < params.ell) throw std::invalid_argument("detect_short_long_odd_hole: k must be at least ell");
    const int n = g.vertex_count();
    std::optional<Hole> found;
    for (int len = params.ell; len <= std::min(k, n) && !found; ++len) {
        if (len % 2 == 0) continue;
        PathEnumOptions opt{len - 2, len - 2, std::nullopt, std::nullopt, nullptr};
        enum_induced_paths(g, opt, [&](std::span<const Vertex> seq) {
            charge(budget, Stage::ShortHole);
            VertexSet cand = g.neighbors(seq.front()) & g.neighbors(seq.back());
            for (std::size_t i = 0; i < seq.size(); ++i) cand.reset(seq[i]);
            for (std::size_t i = 1; i + 1 < seq.size(); ++i) cand -= g.neighbors(seq[i]);
            Vertex w = cand.first();
            if (w == -1) return true;
            std::vector<Vertex> cyc(seq.begin(), seq.end());
            cyc.push_back(w);
            Hole h = canonical_hole(cyc);
            if (!is_long_odd_hole(g, h, params)) throw std::logic_error("short hole completion failed verification");
            found = h;
            return false;
        }, budget);
    }
    return found;
}

/// The jewel test: guess two same-endpoint induced paths of opposite parity
/// with at most k vertices each and an initial length-(ell-2) segment R of
/// the long path, then look for the tail of the long path by connectivity.
/// Both endpoint roles are tried, so the anchor orientation never matters.
inline std::optional<JewelWitness> detect_long_jewel(const Graph& g, const EllParams& params, int k,
                                                     Budget* budget = nullptr) {
    if (k < 3) throw std::invalid_argument("detect_long_jewel: k must be at least 3");
    const int n = g.vertex_count();
    const VertexSet everything = VertexSet::full(n);
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = 0; v < n; ++v) {
            if (u == v || g.has_edge(u, v)) continue;
            std::vector<Path> odd_q, even_q;
            PathEnumOptions oq{2, k - 1, u, v, nullptr};
            enum_induced_paths(g, oq, [&](std::span<const Vertex> seq) {
                Path q{std::vector<Vertex>(seq.begin(), seq.end())};
                (q.length() % 2 ? odd_q : even_q).push_back(std::move(q));
                return true;
            }, budget);
            if (odd_q.empty() || even_q.empty()) continue;
            for (const Path& q1 : odd_q)
                for (const Path& q2 : even_q) {
                    charge(budget, Stage::Jewel);
                    VertexSet qset = q1.vertex_set(n) | q2.vertex_set(n);
                    VertexSet s = qset;
                    s.reset(u);
                    VertexSet allowed_r = everything;
                    allowed_r -= s;
                    allowed_r -= neighborhood(g, s);
                    allowed_r.set(u);
                    PathEnumOptions orr{params.ell - 2, params.ell - 2, u, std::nullopt, &allowed_r};
                    std::optional<JewelWitness> found;
                    enum_induced_paths(g, orr, [&](std::span<const Vertex> rseq) {
                        Vertex w = rseq.back();
                        VertexSet t = qset;
                        for (Vertex x : rseq) t.set(x);
                        t.reset(v);
                        t.reset(w);
                        VertexSet avoid = t | neighborhood(g, t);
                        avoid.reset(w);
                        avoid.reset(v);
                        std::optional<Path> tail = shortest_path(g, w, v, avoid);
                        if (!tail) return true;
                        JewelWitness jw;
                        jw.q1 = q1;
                        jw.q2 = q2;
                        jw.u = u;
                        jw.v = v;
                        jw.order = std::max(static_cast<int>(q1.verts.size()), static_cast<int>(q2.verts.size()));
                        jw.p.verts.assign(rseq.begin(), rseq.end());
                        jw.p.verts.insert(jw.p.verts.end(), tail->verts.begin() + 1, tail->verts.end());
                        if (!verify_jewel(g, jw, params)) return true;
                        found = std::move(jw);
                        return false;
                    }, budget);
                    if (found) return found;
                }
        }
    return std::nullopt;
}

namespace detail {

/// One guessed arm: either a whole short arm, or the two end segments of
/// length ell that will be completed through a guessed midpoint.
struct ArmGuess {
    bool is_short = false;
    Path a;  // starts at the apex (the whole arm when short)
    Path b;  // starts at the base vertex (equal to a when short)
};

/// G[verts] must be exactly a path with the given ends; returns its sequence.
inline std::optional<Path> union_path(const Graph& g, const VertexSet& verts, Vertex from, Vertex to) {
    if (!verts.test(from) || !verts.test(to) || from == to) return std::nullopt;
    int edges = 0;
    bool ok = true;
    verts.for_each([&](Vertex x) {
        int d = (g.neighbors(x) & verts).count();
        edges += d;
        if (x == from || x == to) {
            if (d != 1) ok = false;
        } else if (d != 2) {
            ok = false;
        }
    });
    if (!ok || edges != 2 * (verts.count() - 1)) return std::nullopt;
    Path p;
    p.verts.push_back(from);
    Vertex prev = -1, cur = from;
    while (cur != to) {
        VertexSet nb = g.neighbors(cur) & verts;
        if (prev != -1) nb.reset(prev);
        Vertex next = nb.first();
        if (next == -1) return std::nullopt;  // disconnected piece
        p.verts.push_back(next);
        prev = cur;
        cur = next;
    }
    if (p.verts.size() != static_cast<std::size_t>(verts.count())) return std::nullopt;
    return p;
}

}  // namespace detail

/// The smallest-pyramid test: guess the apex, the base triangle, for each arm
/// either the whole arm (when shorter than ell) or its two end segments of
/// length ell plus a midpoint, then complete the middles with constrained
/// shortest paths and test whether the three completed arms form a pyramid.
inline std::optional<PyramidWitness> detect_long_pyramid(const Graph& g, const EllParams& params,
                                                         Budget* budget = nullptr) {
    const int n = g.vertex_count();
    if (n < 2 * params.ell + 2) return std::nullopt;  // two long arms need 2ell+2 vertices
    const VertexSet everything = VertexSet::full(n);

    auto pieces_compatible = [&](const VertexSet& pi, Vertex vi, const VertexSet& pj, Vertex vj) {
        // guessed pieces of distinct arms share nothing but the apex, and the
        // only edge between them is the base edge
        VertexSet overlap = pi & pj;
        if (!overlap.empty()) return false;
        bool ok = true;
        pi.for_each([&](Vertex x) {
            if (!ok) return;
            VertexSet hits = g.neighbors(x) & pj;
            if (hits.empty()) return;
            if (x != vi) { ok = false; return; }
            VertexSet base_only(n);
            base_only.set(vj);
            if (hits != base_only) ok = false;
        });
        return ok;
    };

    std::optional<PyramidWitness> result;

    for (Vertex v0 = 0; v0 < n && !result; ++v0) {
        for (Vertex v1 = 0; v1 < n && !result; ++v1) {
            if (v1 == v0) continue;
            for (Vertex v2 = v1 + 1; v2 < n && !result; ++v2) {
                if (v2 == v0 || !g.has_edge(v1, v2)) continue;
                for (Vertex v3 = v2 + 1; v3 < n && !result; ++v3) {
                    if (v3 == v0 || !g.has_edge(v1, v3) || !g.has_edge(v2, v3)) continue;
                    const std::array<Vertex, 3> base{v1, v2, v3};

                    // per-arm guess lists
                    std::array<std::vector<detail::ArmGuess>, 3> guesses;
                    for (int i = 0; i < 3; ++i) {
                        Vertex vi = base[static_cast<std::size_t>(i)];
                        VertexSet allow = everything;
                        for (Vertex b : base)
                            if (b != vi) allow.reset(b);
                        PathEnumOptions oshort{1, params.ell - 1, v0, vi, &allow};
                        enum_induced_paths(g, oshort, [&](std::span<const Vertex> seq) {
                            charge(budget, Stage::Pyramid);
                            detail::ArmGuess ag;
                            ag.is_short = true;
                            ag.a.verts.assign(seq.begin(), seq.end());
                            ag.b = ag.a;
                            guesses[static_cast<std::size_t>(i)].push_back(std::move(ag));
                            return true;
                        }, budget);
                        std::vector<Path> a_segs, b_segs;
                        PathEnumOptions oa{params.ell, params.ell, v0, std::nullopt, &allow};
                        enum_induced_paths(g, oa, [&](std::span<const Vertex> seq) {
                            charge(budget, Stage::Pyramid);
                            a_segs.emplace_back(std::vector<Vertex>(seq.begin(), seq.end()));
                            return true;
                        }, budget);
                        VertexSet allow_b = allow;
                        allow_b.set(vi);
                        PathEnumOptions ob{params.ell, params.ell, vi, std::nullopt, &allow_b};
                        enum_induced_paths(g, ob, [&](std::span<const Vertex> seq) {
                            charge(budget, Stage::Pyramid);
                            b_segs.emplace_back(std::vector<Vertex>(seq.begin(), seq.end()));
                            return true;
                        }, budget);
                        for (const Path& a : a_segs)
                            for (const Path& b : b_segs) {
                                if (a.vertex_set(n).test(vi) && !(a.back() == vi)) continue;
                                if (b.vertex_set(n).test(v0) && !(b.back() == v0)) continue;
                                detail::ArmGuess ag;
                                ag.a = a;
                                ag.b = b;
                                guesses[static_cast<std::size_t>(i)].push_back(std::move(ag));
                            }
                    }

                    // joint guess over the three arms with cross pruning
                    std::array<const detail::ArmGuess*, 3> pick{};
                    std::array<VertexSet, 3> pickset{VertexSet(n), VertexSet(n), VertexSet(n)};

                    auto try_combination = [&]() {
                        int longs = (!pick[0]->is_short) + (!pick[1]->is_short) + (!pick[2]->is_short);
                        if (longs < 2) return;

                        // midpoint guesses only for long arms
                        std::array<std::vector<Vertex>, 3> mid_choices;
                        for (int i = 0; i < 3; ++i) {
                            if (pick[static_cast<std::size_t>(i)]->is_short) {
                                mid_choices[static_cast<std::size_t>(i)] = {-1};
                                continue;
                            }
                            VertexSet forbidden(n);
                            forbidden.set(v0);
                            for (Vertex b : base) forbidden.set(b);
                            for (int j = 0; j < 3; ++j)
                                if (j != i) forbidden |= pickset[static_cast<std::size_t>(j)];
                            for (Vertex m = 0; m < n; ++m)
                                if (!forbidden.test(m)) mid_choices[static_cast<std::size_t>(i)].push_back(m);
                        }

                        for (Vertex m1 : mid_choices[0]) {
                            for (Vertex m2 : mid_choices[1]) {
                                for (Vertex m3 : mid_choices[2]) {
                                    charge(budget, Stage::Pyramid);
                                    const std::array<Vertex, 3> mids{m1, m2, m3};
                                    VertexSet x(n);
                                    x.set(v0);
                                    for (Vertex b : base) x.set(b);
                                    for (int i = 0; i < 3; ++i) {
                                        x |= pickset[static_cast<std::size_t>(i)];
                                        if (mids[static_cast<std::size_t>(i)] != -1) x.set(mids[static_cast<std::size_t>(i)]);
                                    }

                                    PyramidWitness w;
                                    w.apex = v0;
                                    w.base = base;
                                    bool ok = true;
                                    for (int i = 0; i < 3 && ok; ++i) {
                                        const detail::ArmGuess& ag = *pick[static_cast<std::size_t>(i)];
                                        if (ag.is_short) {
                                            w.arms[static_cast<std::size_t>(i)] = ag.a;
                                            continue;
                                        }
                                        Vertex m = mids[static_cast<std::size_t>(i)];
                                        VertexSet uset = ag.a.vertex_set(n) | ag.b.vertex_set(n);
                                        auto complete = [&](const Path& seg) -> bool {
                                            if (seg.vertex_set(n).test(m)) return true;
                                            Vertex far = seg.back();
                                            VertexSet xp = x;
                                            xp.reset(m);
                                            xp.reset(far);
                                            VertexSet avoid = xp | neighborhood(g, xp);
                                            avoid.reset(m);
                                            avoid.reset(far);
                                            std::optional<Path> mid = shortest_path(g, far, m, avoid);
                                            if (!mid) return false;
                                            for (Vertex z : mid->verts) uset.set(z);
                                            return true;
                                        };
                                        if (!complete(ag.a) || !complete(ag.b)) {
                                            ok = false;
                                            break;
                                        }
                                        auto arm = detail::union_path(g, uset, v0, base[static_cast<std::size_t>(i)]);
                                        if (!arm) {
                                            ok = false;
                                            break;
                                        }
                                        w.arms[static_cast<std::size_t>(i)] = std::move(*arm);
                                    }
                                    if (ok && verify_pyramid(g, w, params)) {
                                        result = std::move(w);
                                        return;
                                    }
                                }
                                if (result) return;
                            }
                            if (result) return;
                        }
                    };

                    for (const auto& g1 : guesses[0]) {
                        pick[0] = &g1;
                        pickset[0] = g1.a.vertex_set(n) | g1.b.vertex_set(n);
                        pickset[0].reset(v0);
                        for (const auto& g2 : guesses[1]) {
                            pick[1] = &g2;
                            pickset[1] = g2.a.vertex_set(n) | g2.b.vertex_set(n);
                            pickset[1].reset(v0);
                            if (!pieces_compatible(pickset[0], v1, pickset[1], v2)) continue;
                            for (const auto& g3 : guesses[2]) {
                                pick[2] = &g3;
                                pickset[2] = g3.a.vertex_set(n) | g3.b.vertex_set(n);
                                pickset[2].reset(v0);
                                if (!pieces_compatible(pickset[0], v1, pickset[2], v3)) continue;
                                if (!pieces_compatible(pickset[1], v2, pickset[2], v3)) continue;
                                try_combination();
                                if (result) break;
                            }
                            if (result) break;
                        }
                        if (result) break;
                    }
                }
            }
        }
    }
    return result;
}

/// A hole of length >= ell, any parity: enumerate induced paths of length
/// ell-2 and look for an endpoint-connecting path through vertices
/// anticomplete to the interior.
inline std::optional<Hole> detect_long_hole(const Graph& g, const EllParams& params, Budget* budget = nullptr) {
    const int n = g.vertex_count();
    std::optional<Hole> found;
    PathEnumOptions opt{params.ell - 2, params.ell - 2, std::nullopt, std::nullopt, nullptr};
    enum_induced_paths(g, opt, [&](std::span<const Vertex> seq) {
        charge(budget, Stage::LongHole);
        VertexSet interior(n);
        for (std::size_t i = 1; i + 1 < seq.size(); ++i) interior.set(seq[i]);
        VertexSet avoid = interior | neighborhood(g, interior);
        avoid.reset(seq.front());
        avoid.reset(seq.back());
        std::optional<Path> conn = shortest_path(g, seq.back(), seq.front(), avoid);
        if (!conn || conn->length() < 2) return true;
        std::vector<Vertex> cyc(seq.begin(), seq.end());
        cyc.insert(cyc.end(), conn->verts.begin() + 1, conn->verts.end() - 1);
        if (!is_induced_cycle(g, cyc) || static_cast<int>(cyc.size()) < params.ell)
            throw std::logic_error("long hole completion failed verification");
        found = canonical_hole(cyc);
        return false;
    }, budget);
    return found;
}

/// Candidate gate: no long odd hole of length <= 2*ell+2, no long jewel of
/// order <= ell+2, no long pyramid. Not-candidate reports carry the witness.
struct CandidateReport {
    std::optional<Witness> blocker;
    bool is_candidate() const { return !blocker.has_value(); }
};

inline CandidateReport is_candidate(const Graph& g, const EllParams& params, Budget* budget = nullptr) {
    if (auto h = detect_short_long_odd_hole(g, params, params.short_hole_cap(), budget)) return {Witness{*h}};
    if (auto j = detect_long_jewel(g, params, params.jewel_order_cap(), budget)) return {Witness{*j}};
    if (auto p = detect_long_pyramid(g, params, budget)) return {Witness{*p}};
    return {};
}

}  // namespace longhole

#endif
