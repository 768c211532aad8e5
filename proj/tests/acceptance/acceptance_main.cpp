#include <cstdlib>
#include <cstring>
#include <iostream>

#include "criteria.hpp"

int main(int argc, char** argv) {
    bool full = std::getenv("LONGHOLE_ACCEPT_FULL") != nullptr;
    for (int i = 2; i < argc; ++i)
        if (std::strcmp(argv[i], "--full") == 0) full = true;

    if (argc < 2) {
        std::cerr << "usage: acceptance <criterion 1..9|all> [--full]\n";
        return 64;
    }
    const std::string which = argv[1];
    bool ok = true;
    auto run = [&](int c) {
        switch (c) {
            case 1: return acceptance::c1_exhaustive_sweep(full);
            case 2: return acceptance::c2_randomized_equivalence();
            case 3: return acceptance::c3_named_graph_regressions();
            case 4: return acceptance::c4_configuration_detectors();
            case 5: return acceptance::c5_marker_construction();
            case 6: return acceptance::c6_clean_detector_completeness();
            case 7: return acceptance::c7_structured_soundness_under_budget();
            case 8: return acceptance::c8_cli_determinism();
            case 9: return acceptance::c9_scaling_sanity();
            default: std::cerr << "unknown criterion " << c << '\n'; return false;
        }
    };
    if (which == "all") {
        for (int c = 1; c <= 9; ++c) ok = run(c) && ok;
    } else {
        ok = run(std::atoi(which.c_str()));
    }
    return ok ? 0 : 1;
}
