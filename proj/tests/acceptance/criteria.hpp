#ifndef LONGHOLE_ACCEPTANCE_CRITERIA_HPP
#define LONGHOLE_ACCEPTANCE_CRITERIA_HPP

// Acceptance criteria runners. Each prints one "PASS criterion-N ..." or
// "FAIL criterion-N ..." line and returns true on pass.

namespace acceptance {

bool c1_exhaustive_sweep(bool full);      // all labeled graphs on 6 (and optionally 7) vertices
bool c2_randomized_equivalence();         // G(n,p) grid vs oracle
bool c3_named_graph_regressions();        // cycles and Petersen
bool c4_configuration_detectors();        // jewel/pyramid detectors vs oracles
bool c5_marker_construction();            // 10,000 covering-subpath instances
bool c6_clean_detector_completeness();    // oracle-certified clean instances
bool c7_structured_soundness_under_budget();
bool c8_cli_determinism();
bool c9_scaling_sanity();                 // clean-detector runtime slope

}  // namespace acceptance

#endif
