#include "nsgate/compose.hpp"

#include <cmath>
#include <string>

namespace nsgate {

ComposedMap compose(const SequenceSpec& seq, std::span<const double> amps) {
  if (amps.size() != seq.size()) {
    throw std::invalid_argument("expected " + std::to_string(seq.size()) +
                                " amplitudes, got " +
                                std::to_string(amps.size()));
  }
  ComposedMap out;
  out.sequence = seq;
  out.element_amplitudes.assign(amps.begin(), amps.end());

  int offset = seq.start_offset();
  for (std::size_t i = 0; i < seq.size(); ++i) {
    const auto bs = BeamSplitter::from_amplitude(amps[i]);
    const ConditionalMap map = conditional_map_oracle(
        offset, seq[i].injected, seq[i].detected, bs);
    out.F = out.F.cwiseProduct(map.f);
    offset = map.output_offset;
  }
  out.net_offset = offset - seq.start_offset();
  return out;
}

std::pair<double, double> ns_residuals(const ComposedMap& map) {
  if (map.net_offset != 0) {
    throw NotAGateError("net offset " + std::to_string(map.net_offset) +
                        " != 0; the map does not return to the gate subspace");
  }
  if (map.F[0] == 0.0) {
    throw DegenerateMapError("composed vacuum factor F0 vanished");
  }
  return {map.F[1] / map.F[0] - 1.0, map.F[2] / map.F[0] + 1.0};
}

double success_probability(const ComposedMap& map) {
  const auto [r1, r2] = ns_residuals(map);
  constexpr double kTol = 1e-6;
  if (std::abs(r1) > kTol || std::abs(r2) > kTol) {
    throw NotAGateError(
        "NS residuals out of tolerance; the branch probability would be "
        "input-dependent");
  }
  return map.F[0] * map.F[0];
}

double branch_probability(const ComposedMap& map, const ModeState& state) {
  if (!state.is_normalized()) {
    throw std::invalid_argument("mode state is not normalized");
  }
  return map.F.cwiseProduct(state.c).squaredNorm();
}

}  // namespace nsgate
