#pragma once

#include <string>
#include <vector>

#include "nsgate/closed_form_maps.hpp"

namespace nsgate {

struct SuiteResult {
  int passed = 0;
  int failed = 0;
  std::vector<std::string> failures;

  bool ok() const { return failed == 0; }
};

// Checks all four closed-form map families against conditional_map_oracle,
// canonical factors and relative signs included, over k <= max_k and
// eta in {0.05, 0.10, ..., 0.95}.
SuiteResult verify_closed_forms(int max_k = 4, double tolerance = 1e-9);

// Checks that branch probabilities summed over every detection outcome
// equal 1 for offsets {0, 1}, k <= max_k, the signed amplitude grid
// t in {+-0.1, +-0.3, +-0.5, +-0.7, +-0.9}, and a deterministic set of
// random normalized states.
SuiteResult verify_unitarity(int max_k = 4, int states_per_case = 20,
                             double tolerance = 1e-9, unsigned seed = 20060901);

// Cross-checks two_mode_amplitude against brute-force state evolution
// (TwoModeFockVector::apply) over every basis state up to the given total.
SuiteResult verify_amplitudes_against_state_evolution(int max_total = 6,
                                                      double tolerance = 1e-12);

}  // namespace nsgate
