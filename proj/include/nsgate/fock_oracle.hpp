#pragma once

#include <Eigen/Dense>
#include <array>
#include <complex>

#include "nsgate/beam_splitter.hpp"
#include "nsgate/errors.hpp"

namespace nsgate {

// Hard cap on the two-mode photon total.  Covers signal level <= 2 plus
// offset <= 3 and k <= 4 with margin; exceeding it is an error, never a
// silent truncation.
inline constexpr int kMaxTotalPhotons = 12;

// A matrix element of the beam-splitter unitary is always a real number
// times i^x, where x is the number of cross-mode transfers.  Only the
// parity of x matters and it is fixed per element.
struct Amplitude {
  double value = 0.0;
  int i_parity = 0;  // 0 or 1

  std::complex<double> to_complex() const {
    return i_parity ? std::complex<double>(0.0, value)
                    : std::complex<double>(value, 0.0);
  }
};

// <out_signal, out_aux | U | in_signal, in_aux> for the convention fixed in
// BeamSplitter.  Returns an exact zero when the photon totals differ.
// Factorial ratios are formed over exact integers; the square root is
// applied last.
Amplitude two_mode_amplitude(int out_signal, int out_aux, int in_signal,
                             int in_aux, const BeamSplitter& bs);

// Diagonal conditional action on a signal state
//   alpha|0+off> + beta|1+off> + gamma|2+off>
// after one beam splitter with k photons injected and n detected in the
// auxiliary output.  Factors are canonical: the shared i^m phase is
// stripped and recorded, relative signs are preserved.
struct ConditionalMap {
  Eigen::Vector3d f = Eigen::Vector3d::Zero();
  int input_offset = 0;
  int output_offset = 0;
  int injected = 0;          // k
  int detected = 0;          // n
  double amplitude = 1.0;    // signed t of the splitter that produced it
  int removed_phase_power = 0;  // raw = canonical * i^m, m in {0,1,2,3}
};

struct CanonicalTriple {
  Eigen::Vector3d f = Eigen::Vector3d::Zero();
  int removed_phase_power = 0;
};

// Strips the common i^m phase (and a global -1 when needed) so the first
// nonzero factor is positive.  All three raw factors must share one parity;
// the zero triple passes through unchanged.
CanonicalTriple canonical_phase(const std::array<Amplitude, 3>& raw);

// Exact conditional map for one element, computed from two_mode_amplitude.
// Throws InvalidDetectionError when n exceeds the available photon total and
// LossyBranchError when n - k > input_offset.
ConditionalMap conditional_map_oracle(int input_offset, int injected,
                                      int detected, const BeamSplitter& bs);

// Dense amplitudes over the two-mode Fock basis, indexed by photon counts
// (signal, aux).  apply() expands the transformed creation-operator
// monomials term by term, an independent route from the closed-form sum in
// two_mode_amplitude.
class TwoModeFockVector {
 public:
  explicit TwoModeFockVector(int max_total_photons = kMaxTotalPhotons);

  int max_total() const { return cap_; }

  std::complex<double>& at(int n_signal, int n_aux);
  const std::complex<double>& at(int n_signal, int n_aux) const;

  double squared_norm() const;

  // In-place beam-splitter application.  Conserves total photon number.
  void apply(const BeamSplitter& bs);

 private:
  void check_index(int n_signal, int n_aux) const;

  int cap_;
  Eigen::MatrixXcd amp_;
};

}  // namespace nsgate
