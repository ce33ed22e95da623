#pragma once

#include <string>
#include <vector>

#include "qfb/systems.hpp"

namespace qfb {

struct SuiteResult {
  std::string name;
  bool passed = false;
  std::string detail;
};

// Completeness of the bundled operator families plus randomized probability
// vectors.
SuiteResult validate_povm();

// Unitarity and exact-restore property of synthesized correction unitaries
// over random states and outcomes in dimensions 2..9.
SuiteResult validate_feedback();

// Ramsey-probe equivalence with the diagonal qubit family over a strength
// sweep, plus invariance of outcome probabilities under a Larmor offset.
// An optional extra parameter set (e.g. from a config) is checked as well.
SuiteResult validate_dilation(const DilationParams* extra = nullptr);

// Two-level reduction of the atom-pair dynamics (oscillation period, blockade
// leakage, excited-state population).
SuiteResult validate_effective(const RydbergParams* params = nullptr);

std::vector<SuiteResult> validate_all(const DilationParams* dilation_extra,
                                      const RydbergParams* rydberg_params);

}  // namespace qfb
