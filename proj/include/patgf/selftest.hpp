#pragma once

#include <string>
#include <vector>

namespace patgf {

struct CheckResult {
    std::string name;
    bool passed = false;
    std::string detail;  // filled in on failure
};

// Runs the module invariant batteries: rational-function field axioms,
// series/convolution agreement, derivative commutativity, substitution-point
// closure, counter cross-checks, weight-polynomial marginals, solver
// back-substitution, and JSON round-tripping. Deterministic (fixed seeds).
std::vector<CheckResult> run_selftest();

}  // namespace patgf
