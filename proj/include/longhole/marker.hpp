#ifndef LONGHOLE_MARKER_HPP
#define LONGHOLE_MARKER_HPP

#include <algorithm>
#include <vector>

#include "longhole/path.hpp"

namespace longhole {

struct MarkerResult {
    Path q;      // odd covering subpath
    int lo = 0;  // index of q's first vertex within p
    int hi = 0;  // index of q's last vertex within p
    int s = 0;   // family index owning q's first vertex
    int t = 0;   // family index owning q's last vertex
};

namespace detail {

/// Index-level core of the covering-subpath construction. Positions run
/// 0..n with n odd; each set is a nonempty set of positions. Returns
/// (lo, hi, s, t) with hi - lo odd, [lo,hi] covering, lo in A_s, hi in A_t
/// and no other position of [lo,hi] in A_s or A_t.
struct MarkerIndices {
    int lo, hi, s, t;
};

inline MarkerIndices marker_scan(int n, const std::vector<std::vector<int>>& sets) {
    const int k = static_cast<int>(sets.size());
    if (n < 1 || n % 2 == 0) throw std::invalid_argument("marker: path length must be odd");
    if (k == 0) throw std::invalid_argument("marker: need at least one set");
    std::vector<std::vector<bool>> member(static_cast<std::size_t>(k), std::vector<bool>(static_cast<std::size_t>(n) + 1, false));
    for (int s = 0; s < k; ++s) {
        if (sets[static_cast<std::size_t>(s)].empty()) throw std::invalid_argument("marker: empty set");
        for (int pos : sets[static_cast<std::size_t>(s)]) {
            if (pos < 0 || pos > n) throw std::invalid_argument("marker: position out of range");
            member[static_cast<std::size_t>(s)][static_cast<std::size_t>(pos)] = true;
        }
    }

    // f[s][j] = largest position of A_s at most j, or -1. A window [i..j]
    // is covering iff i <= min_s f[s][j].
    std::vector<std::vector<int>> f(static_cast<std::size_t>(k), std::vector<int>(static_cast<std::size_t>(n) + 1));
    for (int s = 0; s < k; ++s) {
        int last = -1;
        for (int j = 0; j <= n; ++j) {
            if (member[static_cast<std::size_t>(s)][static_cast<std::size_t>(j)]) last = j;
            f[static_cast<std::size_t>(s)][static_cast<std::size_t>(j)] = last;
        }
    }
    auto max_start = [&](int j) {  // largest i with [i..j] covering, or -1
        int m = j;
        for (int s = 0; s < k; ++s) m = std::min(m, f[static_cast<std::size_t>(s)][static_cast<std::size_t>(j)]);
        return m;
    };

    int d = -1;  // minimal covering prefix [0..d]
    for (int j = 0; j <= n && d == -1; ++j)
        if (max_start(j) >= 0) d = j;
    if (d == -1) throw std::invalid_argument("marker: no covering subpath exists");

    auto m_of = [&](int j) { return j - max_start(j); };

    // hypothesis: the minimal covering prefix and the minimal covering
    // suffix have the same parity
    if (d % 2 != m_of(n) % 2)
        throw std::invalid_argument("marker: minimal end-covering subpaths differ in parity");

    auto owner_of_start = [&](int i, int j) {
        // the set certifying maximality of i for window [i..j]: contains
        // position i and nothing in (i..j]
        for (int s = 0; s < k; ++s)
            if (f[static_cast<std::size_t>(s)][static_cast<std::size_t>(j)] == i) return s;
        return -1;
    };

    if (m_of(d) % 2 == 1) {
        int lo = d - m_of(d), hi = d;
        // minimality of d: some set meets [0..d] only at d
        int s = -1;
        for (int c = 0; c < k && s == -1; ++c)
            if (f[static_cast<std::size_t>(c)][static_cast<std::size_t>(d)] == d &&
                (d == 0 || f[static_cast<std::size_t>(c)][static_cast<std::size_t>(d - 1)] == -1))
                s = c;
        int t = owner_of_start(lo, hi);
        return {lo, hi, t, s};  // left end owner first
    }

    // parity of m(j)+j flips somewhere in (d..n]
    int i = -1;
    for (int j = d + 1; j <= n && i == -1; ++j)
        if ((m_of(j) + j) % 2 != (m_of(j - 1) + j - 1) % 2) i = j;
    if (i == -1) throw std::logic_error("marker: parity flip missing");  // m(n)+n and m(d)+d differ
    int h = (i - 1) - m_of(i - 1);
    int t = owner_of_start(h, i - 1);
    // m(i) and m(i-1) share parity, so A_t reappears at position i
    if (i % 2 != h % 2) return {h, i, t, t};
    int gidx = i - m_of(i);
    int s = owner_of_start(gidx, i);
    return {gidx, i, s, t};
}

}  // namespace detail

/// The covering-subpath construction: given an odd path and nonempty vertex
/// subsets whose minimal covering end-subpaths share a parity, produces an
/// odd covering subpath whose ends are the only vertices of their owning
/// sets on it. Deterministic; identical inputs give identical output.
inline MarkerResult marker_subpath(const Path& p, const std::vector<std::vector<Vertex>>& sets) {
    std::vector<std::vector<int>> idx_sets;
    idx_sets.reserve(sets.size());
    for (const auto& set : sets) {
        std::vector<int> is;
        for (Vertex v : set) {
            auto it = std::find(p.verts.begin(), p.verts.end(), v);
            if (it == p.verts.end()) throw std::invalid_argument("marker: set vertex not on path");
            is.push_back(static_cast<int>(it - p.verts.begin()));
        }
        idx_sets.push_back(std::move(is));
    }
    detail::MarkerIndices m = detail::marker_scan(p.length(), idx_sets);
    MarkerResult out;
    out.lo = m.lo;
    out.hi = m.hi;
    out.s = m.s;
    out.t = m.t;
    out.q.verts.assign(p.verts.begin() + m.lo, p.verts.begin() + m.hi + 1);
    return out;
}

}  // namespace longhole

#endif
