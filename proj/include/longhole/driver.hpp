#ifndef LONGHOLE_DRIVER_HPP
#define LONGHOLE_DRIVER_HPP

#include <map>
#include <sstream>
#include <string>
#include <thread>

#include "longhole/cleaner.hpp"
#include "longhole/configurations.hpp"
#include "longhole/generate.hpp"
#include "longhole/oracle.hpp"

namespace longhole {

enum class DetectMode { Auto, Exhaustive, Structured };

inline const char* mode_name(DetectMode m) {
    switch (m) {
        case DetectMode::Auto: return "auto";
        case DetectMode::Exhaustive: return "exhaustive";
        default: return "structured";
    }
}

struct Detection {
    Verdict verdict;
    std::string stage;  // pipeline stage that decided
};

struct DriverOptions {
    DetectMode mode = DetectMode::Auto;
    std::uint64_t budget_limit = Budget::kDefaultLimit;
    int exhaustive_cap = 16;  // Auto switches to Structured above this
    int family_max = 16;
};

/// The full pipeline: candidate gate, then the clean detector, then cleaning
/// per mode. Every positive witness is re-verified at this boundary, so an
/// internal bug surfaces as an integrity error, never as a false positive.
inline Detection detect_long_odd_hole(const Graph& g, const EllParams& params, const DriverOptions& opt = {}) {
    auto accept = [&](Hole h, const char* stage) {
        if (!is_long_odd_hole(g, h, params)) throw std::logic_error("driver: witness failed re-verification");
        return Detection{Verdict::has(std::move(h)), stage};
    };

    if (g.vertex_count() < params.ell) return {Verdict::none(), "small_graph"};

    CandidateReport gate = is_candidate(g, params);
    if (!gate.is_candidate()) return accept(witness_to_hole(g, *gate.blocker, params), "candidate_gate");

    if (auto h = detect_clean_slooh(g, params)) return accept(std::move(*h), "clean_detector");

    DetectMode mode = opt.mode;
    if (mode == DetectMode::Auto)
        mode = g.vertex_count() <= opt.exhaustive_cap ? DetectMode::Exhaustive : DetectMode::Structured;

    if (mode == DetectMode::Exhaustive) {
        Verdict v = exhaustive_cleaning(g, params, opt.exhaustive_cap);
        if (v.has_hole()) return accept(std::move(*v.witness), "exhaustive");
        return {std::move(v), "exhaustive"};
    }
    Budget budget(opt.budget_limit);
    Verdict v = structured_cleaning(g, params, budget, opt.family_max);
    if (v.has_hole()) return accept(std::move(*v.witness), "structured");
    v.report = budget.report();
    return {std::move(v), "structured"};
}

struct CorpusSpec {
    int n = 0;
    double p = 0.0;
    int samples = 0;
    std::uint32_t seed = 0;
};

struct CrosscheckReport {
    int total = 0;
    int agreements = 0;
    std::vector<std::string> disagreements;  // must stay empty
    std::map<std::string, int> stage_counts;
    std::map<std::string, int> verdict_counts;
    std::vector<std::string> witnesses;  // one line per positive instance

    std::string render() const {
        std::ostringstream out;
        out << "instances " << total << ", agreements " << agreements << ", disagreements "
            << disagreements.size() << '\n';
        for (const auto& [k, v] : verdict_counts) out << "  verdict " << k << ": " << v << '\n';
        for (const auto& [k, v] : stage_counts) out << "  stage " << k << ": " << v << '\n';
        for (const auto& d : disagreements) out << "  DISAGREE " << d << '\n';
        return out.str();
    }
};

/// Runs the driver and the naive oracle over a G(n,p) corpus and tallies
/// agreement. Deterministic for a fixed spec regardless of the worker count:
/// instance i uses seed + i and results merge in seed order.
inline CrosscheckReport crosscheck(const CorpusSpec& spec, const EllParams& params, const DriverOptions& opt = {},
                                   int oracle_cap = oracle::kDefaultCap, int jobs = 1) {
    if (spec.n > oracle_cap) throw std::invalid_argument("crosscheck: instance size exceeds the oracle cap");
    if (jobs < 1) throw std::invalid_argument("crosscheck: jobs must be positive");

    struct InstanceResult {
        Detection det;
        bool truth = false;
        bool witness_ok = false;
    };
    std::vector<InstanceResult> results(static_cast<std::size_t>(spec.samples));
    auto run_instance = [&](int i) {
        Graph g = gen_random(spec.n, spec.p, spec.seed + static_cast<std::uint32_t>(i));
        InstanceResult r;
        r.det = detect_long_odd_hole(g, params, opt);
        r.truth = oracle::long_odd_hole(g, params, oracle_cap).has_value();
        r.witness_ok = r.det.verdict.has_hole() && is_long_odd_hole(g, *r.det.verdict.witness, params);
        results[static_cast<std::size_t>(i)] = std::move(r);
    };
    if (jobs == 1) {
        for (int i = 0; i < spec.samples; ++i) run_instance(i);
    } else {
        std::vector<std::thread> pool;
        for (int t = 0; t < jobs; ++t)
            pool.emplace_back([&, t] {
                for (int i = t; i < spec.samples; i += jobs) run_instance(i);
            });
        for (auto& th : pool) th.join();
    }

    CrosscheckReport rep;
    for (int i = 0; i < spec.samples; ++i) {
        const InstanceResult& r = results[static_cast<std::size_t>(i)];
        ++rep.total;
        ++rep.stage_counts[r.det.stage];
        ++rep.verdict_counts[verdict_name(r.det.verdict.kind)];
        bool agree;
        switch (r.det.verdict.kind) {
            case Verdict::Kind::HasLongOddHole:
                agree = r.truth && r.witness_ok;
                break;
            case Verdict::Kind::NoLongOddHole:
                agree = !r.truth;
                break;
            default:
                agree = true;  // Inconclusive never contradicts
        }
        if (agree) {
            ++rep.agreements;
        } else {
            std::ostringstream d;
            d << "seed " << spec.seed + static_cast<std::uint32_t>(i) << " n " << spec.n << " p " << spec.p
              << " driver " << verdict_name(r.det.verdict.kind) << " oracle "
              << (r.truth ? "has_long_odd_hole" : "no_long_odd_hole");
            rep.disagreements.push_back(d.str());
        }
        if (r.det.verdict.has_hole()) {
            std::ostringstream w;
            w << "seed " << spec.seed + static_cast<std::uint32_t>(i) << " witness";
            for (Vertex v : r.det.verdict.witness->verts) w << ' ' << v;
            rep.witnesses.push_back(w.str());
        }
    }
    return rep;
}

}  // namespace longhole

#endif
