// Command-line front end: detection, oracle runs, cross-checking and
// instance generation. Exit codes: 0 hole found, 1 no hole, 2 inconclusive,
// 64 usage error, 65 input error.

#include <chrono>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "longhole/longhole.hpp"

namespace {

using json = nlohmann::ordered_json;
using namespace longhole;

constexpr int kExitHole = 0;
constexpr int kExitNoHole = 1;
constexpr int kExitInconclusive = 2;
constexpr int kExitUsage = 64;
constexpr int kExitInput = 65;

struct InputError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw InputError("cannot open input file: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

bool looks_like_edge_list(const std::string& text) {
    std::istringstream in(text);
    long long a, b;
    return static_cast<bool>(in >> a >> b);
}

Graph load_graph(const std::string& path, const std::string& format) {
    std::string text = read_file(path);
    std::string fmt = format;
    if (fmt == "auto") {
        if (path.size() >= 3 && path.substr(path.size() - 3) == ".g6")
            fmt = "graph6";
        else if (text.rfind(">>graph6<<", 0) == 0)
            fmt = "graph6";
        else
            fmt = looks_like_edge_list(text) ? "edges" : "graph6";
    }
    try {
        if (fmt == "graph6") {
            // use the first line only, so files with trailing newlines work
            std::string line = text.substr(0, text.find('\n'));
            return parse_graph6(line);
        }
        return parse_edge_list(text);
    } catch (const std::invalid_argument& e) {
        throw InputError(std::string("bad input: ") + e.what());
    }
}

json witness_json(const Hole& h) {
    json arr = json::array();
    for (Vertex v : h.verts) arr.push_back(v);
    return arr;
}

json counters_json(const BudgetReport& r) {
    json c = json::object();
    for (const auto& [k, v] : r.stages) c[k] = v;
    return c;
}

void emit_result(const Graph& g, int ell, const Verdict& verdict, const std::string& stage, bool as_json,
                 long long elapsed_ms) {
    if (as_json) {
        json out;
        out["verdict"] = verdict_name(verdict.kind);
        out["ell"] = ell;
        out["n"] = g.vertex_count();
        if (verdict.has_hole()) out["witness"] = witness_json(*verdict.witness);
        out["stage"] = stage;
        out["counters"] = counters_json(verdict.report);
        out["elapsed_ms"] = elapsed_ms;
        std::cout << out.dump() << '\n';
        return;
    }
    std::cout << verdict_name(verdict.kind) << " (ell=" << ell << ", n=" << g.vertex_count() << ", stage=" << stage
              << ")\n";
    if (verdict.has_hole()) {
        std::cout << "witness:";
        for (Vertex v : verdict.witness->verts) std::cout << ' ' << v;
        std::cout << '\n';
    }
}

int verdict_exit(const Verdict& v) {
    switch (v.kind) {
        case Verdict::Kind::HasLongOddHole: return kExitHole;
        case Verdict::Kind::NoLongOddHole: return kExitNoHole;
        default: return kExitInconclusive;
    }
}

void write_output(const std::string& out_path, const std::string& data) {
    if (out_path.empty()) {
        std::cout << data;
        return;
    }
    std::ofstream out(out_path, std::ios::binary);
    if (!out) throw InputError("cannot open output file: " + out_path);
    out << data;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"long odd hole detection"};
    app.require_subcommand(1);

    // detect
    auto* detect = app.add_subcommand("detect", "decide whether the graph has a long odd hole");
    int ell = 5;
    std::string input, format = "auto", mode = "auto";
    std::uint64_t budget = Budget::kDefaultLimit;
    bool as_json = false, timing = false;
    detect->add_option("--ell", ell, "target length (>= 5)")->required();
    detect->add_option("--input", input, "graph file")->required();
    detect->add_option("--format", format)->check(CLI::IsMember({"auto", "graph6", "edges"}));
    detect->add_option("--mode", mode)->check(CLI::IsMember({"auto", "exhaustive", "structured"}));
    detect->add_option("--budget", budget, "guess-expansion budget for structured mode");
    detect->add_flag("--json", as_json, "machine-readable output");
    detect->add_flag("--timing", timing, "report real elapsed time (otherwise 0 for reproducible output)");

    // oracle
    auto* oracle_cmd = app.add_subcommand("oracle", "ground-truth check by exhaustive enumeration");
    int o_ell = 5, o_cap = oracle::kDefaultCap;
    std::string o_input, o_format = "auto";
    bool o_json = false, o_timing = false;
    oracle_cmd->add_option("--ell", o_ell)->required();
    oracle_cmd->add_option("--input", o_input)->required();
    oracle_cmd->add_option("--format", o_format)->check(CLI::IsMember({"auto", "graph6", "edges"}));
    oracle_cmd->add_option("--cap", o_cap, "maximum vertex count the oracle accepts");
    oracle_cmd->add_flag("--json", o_json);
    oracle_cmd->add_flag("--timing", o_timing);

    // crosscheck
    auto* cross = app.add_subcommand("crosscheck", "driver vs oracle over a random corpus");
    int c_ell = 5, c_n = 8, c_samples = 100;
    double c_p = 0.3;
    std::uint32_t c_seed = 1;
    int c_jobs = 1;
    bool c_json = false;
    cross->add_option("--ell", c_ell)->required();
    cross->add_option("--n", c_n)->required();
    cross->add_option("--samples", c_samples)->required();
    cross->add_option("--p", c_p)->required();
    cross->add_option("--seed", c_seed)->required();
    cross->add_option("--jobs", c_jobs, "worker pool size");
    cross->add_flag("--json", c_json);

    // gen
    auto* gen = app.add_subcommand("gen", "write a generated graph as graph6");
    gen->fallthrough();
    std::string g_out;
    gen->add_option("--out", g_out, "output file (default stdout)");
    gen->require_subcommand(1);
    auto* g_cycle = gen->add_subcommand("cycle");
    int cyc_n = 5;
    g_cycle->add_option("n", cyc_n)->required();
    auto* g_random = gen->add_subcommand("random");
    int rnd_n = 8;
    double rnd_p = 0.3;
    std::uint32_t rnd_seed = 1;
    g_random->add_option("n", rnd_n)->required();
    g_random->add_option("p", rnd_p)->required();
    g_random->add_option("seed", rnd_seed)->required();
    auto* g_petersen = gen->add_subcommand("petersen");
    auto* g_subdivide = gen->add_subcommand("subdivide");
    std::string sub_file;
    int sub_t = 1;
    g_subdivide->add_option("file", sub_file)->required();
    g_subdivide->add_option("t", sub_t)->required();
    auto* g_jewel = gen->add_subcommand("planted-jewel");
    int j_q1 = 2, j_q2 = 3, j_p = 5;
    g_jewel->add_option("q1", j_q1)->required();
    g_jewel->add_option("q2", j_q2)->required();
    g_jewel->add_option("p", j_p)->required();
    auto* g_pyramid = gen->add_subcommand("planted-pyramid");
    int p_a1 = 5, p_a2 = 5, p_a3 = 1;
    g_pyramid->add_option("a1", p_a1)->required();
    g_pyramid->add_option("a2", p_a2)->required();
    g_pyramid->add_option("a3", p_a3)->required();
    auto* g_base = gen->add_subcommand("planted-base");
    int b_k = 13;
    std::vector<int> b_attach;
    g_base->add_option("k", b_k)->required();
    g_base->add_option("attach", b_attach, "cycle positions of one attached vertex");
    for (auto* sub : gen->get_subcommands(nullptr)) sub->fallthrough();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);  // --help
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (*detect) {
            if (ell < 5) {
                std::cerr << "error: --ell must be at least 5\n";
                return kExitUsage;
            }
            Graph g = load_graph(input, format);
            DriverOptions opt;
            opt.budget_limit = budget;
            opt.mode = mode == "exhaustive" ? DetectMode::Exhaustive
                       : mode == "structured" ? DetectMode::Structured
                                              : DetectMode::Auto;
            auto t0 = std::chrono::steady_clock::now();
            Detection det = detect_long_odd_hole(g, EllParams(ell), opt);
            auto t1 = std::chrono::steady_clock::now();
            long long ms =
                timing ? std::chrono::duration_cast<std::chrono::milliseconds>(t1 - t0).count() : 0;
            emit_result(g, ell, det.verdict, det.stage, as_json, ms);
            return verdict_exit(det.verdict);
        }
        if (*oracle_cmd) {
            if (o_ell < 5) {
                std::cerr << "error: --ell must be at least 5\n";
                return kExitUsage;
            }
            Graph g = load_graph(o_input, o_format);
            auto t0 = std::chrono::steady_clock::now();
            std::optional<Hole> h = oracle::long_odd_hole(g, EllParams(o_ell), o_cap);
            auto t1 = std::chrono::steady_clock::now();
            long long ms =
                o_timing ? std::chrono::duration_cast<std::chrono::milliseconds>(t1 - t0).count() : 0;
            Verdict v = h ? Verdict::has(*h) : Verdict::none();
            emit_result(g, o_ell, v, "oracle", o_json, ms);
            return verdict_exit(v);
        }
        if (*cross) {
            if (c_ell < 5) {
                std::cerr << "error: --ell must be at least 5\n";
                return kExitUsage;
            }
            if (c_jobs < 1) {
                std::cerr << "error: --jobs must be positive\n";
                return kExitUsage;
            }
            CorpusSpec spec{c_n, c_p, c_samples, c_seed};
            CrosscheckReport rep = crosscheck(spec, EllParams(c_ell), {}, oracle::kDefaultCap, c_jobs);
            if (c_json) {
                json out;
                out["instances"] = rep.total;
                out["agreements"] = rep.agreements;
                out["disagreements"] = rep.disagreements;
                json stages = json::object(), verdicts = json::object();
                for (const auto& [k, v] : rep.stage_counts) stages[k] = v;
                for (const auto& [k, v] : rep.verdict_counts) verdicts[k] = v;
                out["stages"] = stages;
                out["verdicts"] = verdicts;
                out["witnesses"] = rep.witnesses;
                std::cout << out.dump() << '\n';
            } else {
                std::cout << rep.render();
            }
            return rep.disagreements.empty() ? 0 : 1;
        }
        if (*gen) {
            Graph g;
            if (*g_cycle)
                g = gen_cycle(cyc_n);
            else if (*g_random)
                g = gen_random(rnd_n, rnd_p, rnd_seed);
            else if (*g_petersen)
                g = gen_petersen();
            else if (*g_subdivide)
                g = gen_subdivide(load_graph(sub_file, "auto"), sub_t);
            else if (*g_jewel)
                g = gen_planted_jewel(j_q1, j_q2, j_p).graph;
            else if (*g_pyramid)
                g = gen_planted_pyramid(p_a1, p_a2, p_a3).graph;
            else if (*g_base)
                g = gen_planted_base(b_k, {std::vector<int>(b_attach.begin(), b_attach.end())}).graph;
            write_output(g_out, encode_graph6(g) + "\n");
            return 0;
        }
    } catch (const InputError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitInput;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    }
    return kExitUsage;
}
