#pragma once

#include <Eigen/Dense>
#include <span>
#include <utility>

#include "nsgate/fock_oracle.hpp"
#include "nsgate/sequence.hpp"

namespace nsgate {

// Real coefficient triple (alpha, beta, gamma) on the Fock levels
// |offset>, |offset+1>, |offset+2>.
struct ModeState {
  Eigen::Vector3d c = Eigen::Vector3d::Zero();
  int offset = 0;

  ModeState() = default;
  ModeState(double alpha, double beta, double gamma, int offset_in = 0)
      : c(alpha, beta, gamma), offset(offset_in) {}

  bool is_normalized(double tol = 1e-9) const {
    return std::abs(c.squaredNorm() - 1.0) <= tol;
  }
};

// Product of element factor triples with matching offsets chained.
struct ComposedMap {
  Eigen::Vector3d F = Eigen::Vector3d::Ones();
  int net_offset = 0;
  std::vector<double> element_amplitudes;
  SequenceSpec sequence;
};

// Chains conditional_map_oracle over the sequence at the given signed
// amplitudes, threading offsets from 0.
ComposedMap compose(const SequenceSpec& seq, std::span<const double> amps);

// (F1/F0 - 1, F2/F0 + 1); both vanish iff the map is proportional to
// diag(1, 1, -1) with a positive constant.
std::pair<double, double> ns_residuals(const ComposedMap& map);

// F0^2, input-state independent because |F0| = |F1| = |F2| at an NS
// solution.  Refuses when the residuals exceed 1e-6.
double success_probability(const ComposedMap& map);

// Norm of the transformed state: F0^2 a^2 + F1^2 b^2 + F2^2 c^2, the
// probability of this heralded branch for that input.
double branch_probability(const ComposedMap& map, const ModeState& state);

}  // namespace nsgate
