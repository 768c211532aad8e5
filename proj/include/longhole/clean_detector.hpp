#ifndef LONGHOLE_CLEAN_DETECTOR_HPP
#define LONGHOLE_CLEAN_DETECTOR_HPP

#include <optional>

#include "longhole/path.hpp"
#include "longhole/search.hpp"

namespace longhole {

/// The shortest-path triple detector. Guesses every triple u < v < w, joins
/// the three deterministic shortest paths into a cycle and keeps the best
/// verified long odd hole (minimum length, then lexicographically least).
///
/// Sound unconditionally: anything returned passes is_long_odd_hole. When
/// the caller guarantees G is a candidate, a nullopt return means G has no
/// clean shortest long odd hole. All triples are enumerated, not only the
/// near-third ones the completeness proof uses; a superset preserves both
/// soundness and completeness.
inline std::optional<Hole> detect_clean_slooh(const Graph& g, const EllParams& params, Budget* budget = nullptr) {
    const int n = g.vertex_count();
    if (n < params.ell) return std::nullopt;
    DistanceMatrix dist(g);
    std::optional<Hole> best;
    std::vector<Vertex> cyc;
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = u + 1; v < n; ++v) {
            if (dist(u, v) == kUnreachable) continue;
            for (Vertex w = v + 1; w < n; ++w) {
                charge(budget, Stage::CleanTriple);
                if (dist(u, w) == kUnreachable || dist(v, w) == kUnreachable) continue;
                const int total = dist(u, v) + dist(v, w) + dist(w, u);
                if (total % 2 == 0 || total < params.ell) continue;
                if (best && total > best->length()) continue;
                Path puv = dist.reconstruct(g, u, v);
                Path pvw = dist.reconstruct(g, v, w);
                Path pwu = dist.reconstruct(g, w, u);
                cyc.assign(puv.verts.begin(), puv.verts.end());
                cyc.insert(cyc.end(), pvw.verts.begin() + 1, pvw.verts.end());
                cyc.insert(cyc.end(), pwu.verts.begin() + 1, pwu.verts.end() - 1);
                if (!is_long_odd_hole(g, cyc, params)) continue;
                Hole h = canonical_hole(cyc);
                if (!best || h.length() < best->length() ||
                    (h.length() == best->length() && h.verts < best->verts))
                    best = std::move(h);
            }
        }
    return best;
}

/// Diagnostic: on a clean shortest long odd hole of a candidate, graph
/// distance equals hole distance for every vertex pair. Used only by the
/// test suite on oracle-certified inputs.
inline bool verify_distance_theorem(const Graph& g, const Hole& c) {
    for (std::size_t i = 0; i < c.verts.size(); ++i) {
        std::vector<int> d = bfs_distances(g, c.verts[i]);
        for (std::size_t j = 0; j < c.verts.size(); ++j) {
            int along = c.arc_distance(static_cast<int>(i), static_cast<int>(j));
            if (d[static_cast<std::size_t>(c.verts[j])] != along) return false;
        }
    }
    return true;
}

}  // namespace longhole

#endif
