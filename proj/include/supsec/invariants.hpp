#pragma once

#include "supsec/core.hpp"

namespace supsec {

struct CheckResult {
    std::string name;
    bool passed;
    std::string detail;  // reason on failure, or why the check was vacuous
};

/// Structural invariants of one representation, checked end to end:
/// downward closure and the face-size bound of Σ(R), the prefix subcomplex
/// chain, the ψ pairing properties per layer, the A -> B bijection, layer
/// confinement of matched pairs, the matching verdicts (including agreement
/// of the two acyclicity checkers), and extraction + replay down to a point.
/// Layer checks are vacuous for d = 1. Exceptions inside a check fail it.
std::vector<CheckResult> run_invariant_suite(const Representation& r);

bool all_passed(const std::vector<CheckResult>& results);

}  // namespace supsec
