#ifndef LONGHOLE_ENUMERATE_HPP
#define LONGHOLE_ENUMERATE_HPP

#include <optional>
#include <span>
#include <vector>

#include "longhole/path.hpp"

namespace longhole {

/// Constraints for induced-path enumeration.
///  - from/to fix an endpoint (paths are emitted oriented from -> to);
///  - allowed restricts usable vertices (must contain the fixed endpoints);
///  - with neither endpoint fixed, each path is emitted once in canonical
///    direction (smaller endpoint first), in lexicographic sequence order.
struct PathEnumOptions {
    int len_min = 0;
    int len_max = 0;
    std::optional<Vertex> from{};
    std::optional<Vertex> to{};
    const VertexSet* allowed = nullptr;
};

namespace detail {

/// Backtracking over induced extensions. At depth k the candidate set is
/// N(last) & allowed minus the path and minus N(p_0..p_{k-1}), which keeps
/// every emitted sequence an induced path by construction.
template <typename Visit>
class PathEnumerator {
public:
    PathEnumerator(const Graph& g, const PathEnumOptions& opt, Visit& visit, Budget* budget)
        : g_(g), opt_(opt), visit_(visit), budget_(budget), allowed_(opt.allowed ? *opt.allowed : VertexSet::full(g.vertex_count())) {}

    bool run() {
        if (opt_.len_min > opt_.len_max || opt_.len_min < 0) return true;
        if (opt_.from) {
            if (!allowed_.test(*opt_.from)) return true;
            return start(*opt_.from);
        }
        if (opt_.to) {
            // Symmetric case: enumerate from the fixed end and reverse on emit.
            reverse_emit_ = true;
            if (!allowed_.test(*opt_.to)) return true;
            return start(*opt_.to);
        }
        for (Vertex s = allowed_.first(); s != -1; s = allowed_.next(s))
            if (!start(s)) return false;
        return true;
    }

private:
    bool start(Vertex s) {
        seq_.assign(1, s);
        blocked_.assign(1, VertexSet(g_.vertex_count()));
        blocked_[0].set(s);
        return extend();
    }

    bool emit() {
        if (reverse_emit_) {
            std::vector<Vertex> rev(seq_.rbegin(), seq_.rend());
            return visit_(std::span<const Vertex>(rev));
        }
        return visit_(std::span<const Vertex>(seq_));
    }

    bool want_here() const {
        int len = static_cast<int>(seq_.size()) - 1;
        if (len < opt_.len_min) return false;
        if (opt_.from && opt_.to) return seq_.back() == *opt_.to && seq_.front() == *opt_.from;
        if (opt_.from || opt_.to) return true;
        return len == 0 || seq_.front() < seq_.back();  // canonical direction
    }

    bool extend() {
        charge(budget_, Stage::PathEnum);
        const int len = static_cast<int>(seq_.size()) - 1;
        const bool target_mode = opt_.from && opt_.to;

        if (want_here())
            if (!emit()) return false;
        if (len == opt_.len_max) return true;
        if (target_mode && seq_.back() == *opt_.to) return true;  // no path revisits its endpoint

        VertexSet cand = g_.neighbors(seq_.back()) & allowed_;
        cand -= blocked_.back();
        for (Vertex w = cand.first(); w != -1; w = cand.next(w)) {
            VertexSet nb = blocked_.back();
            nb |= g_.neighbors(seq_.back());
            nb.set(w);
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
    const PathEnumOptions& opt_;
    Visit& visit_;
    Budget* budget_;
    VertexSet allowed_;
    bool reverse_emit_ = false;
    std::vector<Vertex> seq_;
    std::vector<VertexSet> blocked_;
};

}  // namespace detail

/// Enumerates induced paths with len_min <= length <= len_max, each exactly
/// once (up to direction when no endpoint is fixed). The visitor returns
/// false to stop; the function returns false iff it was stopped early.
template <typename Visit>
bool enum_induced_paths(const Graph& g, const PathEnumOptions& opt, Visit&& visit, Budget* budget = nullptr) {
    detail::PathEnumerator<Visit> e(g, opt, visit, budget);
    return e.run();
}

inline std::vector<Path> collect_induced_paths(const Graph& g, const PathEnumOptions& opt, Budget* budget = nullptr) {
    std::vector<Path> out;
    enum_induced_paths(
        g, opt,
        [&](std::span<const Vertex> seq) {
            out.emplace_back(std::vector<Vertex>(seq.begin(), seq.end()));
            return true;
        },
        budget);
    return out;
}

}  // namespace longhole

#endif
