#include "nsgate/fock_oracle.hpp"

#include <algorithm>
#include <cstdint>
#include <string>

namespace nsgate {

namespace {

constexpr std::array<std::uint64_t, kMaxTotalPhotons + 1> make_factorials() {
  std::array<std::uint64_t, kMaxTotalPhotons + 1> f{};
  f[0] = 1;
  for (int i = 1; i <= kMaxTotalPhotons; ++i) f[i] = f[i - 1] * i;
  return f;
}

constexpr auto kFactorial = make_factorials();

// Exact binomial coefficients up to the photon cap.
constexpr std::array<std::array<std::uint64_t, kMaxTotalPhotons + 1>,
                     kMaxTotalPhotons + 1>
make_binomials() {
  std::array<std::array<std::uint64_t, kMaxTotalPhotons + 1>,
             kMaxTotalPhotons + 1>
      c{};
  for (int n = 0; n <= kMaxTotalPhotons; ++n) {
    c[n][0] = 1;
    for (int k = 1; k <= n; ++k)
      c[n][k] = c[n - 1][k - 1] + (k <= n - 1 ? c[n - 1][k] : 0);
  }
  return c;
}

constexpr auto kBinomial = make_binomials();

void require_counts(int out_signal, int out_aux, int in_signal, int in_aux) {
  if (out_signal < 0 || out_aux < 0 || in_signal < 0 || in_aux < 0) {
    throw std::invalid_argument("photon counts must be non-negative");
  }
  if (in_signal + in_aux > kMaxTotalPhotons ||
      out_signal + out_aux > kMaxTotalPhotons) {
    throw CapacityError("two-mode photon total exceeds cap of " +
                        std::to_string(kMaxTotalPhotons));
  }
}

}  // namespace

Amplitude two_mode_amplitude(int out_signal, int out_aux, int in_signal,
                             int in_aux, const BeamSplitter& bs) {
  require_counts(out_signal, out_aux, in_signal, in_aux);
  const int parity = (in_signal + out_signal) % 2;
  if (out_signal + out_aux != in_signal + in_aux) return {0.0, parity};

  // Collect the coefficient of a+^out_signal b+^out_aux in
  // (t a+ + i r b+)^in_signal (i r a+ + t b+)^in_aux.  m counts photons
  // transmitted signal-to-signal.
  double sum = 0.0;
  const int m_lo = std::max(0, out_signal - in_aux);
  const int m_hi = std::min(in_signal, out_signal);
  for (int m = m_lo; m <= m_hi; ++m) {
    const int t_pow = 2 * m + in_aux - out_signal;
    const int r_pow = in_signal + out_signal - 2 * m;  // cross transfers
    const int half = (r_pow - parity) / 2;             // i^r_pow = i^parity (-1)^half
    const double coeff =
        static_cast<double>(kBinomial[in_signal][m] *
                            kBinomial[in_aux][out_signal - m]);
    const double term = coeff * bs.t_power(t_pow) * bs.r_power(r_pow);
    sum += (half % 2 != 0) ? -term : term;
  }

  const auto num = kFactorial[out_signal] * kFactorial[out_aux];
  const auto den = kFactorial[in_signal] * kFactorial[in_aux];
  const double pref =
      std::sqrt(static_cast<double>(num) / static_cast<double>(den));
  return {pref * sum, parity};
}

CanonicalTriple canonical_phase(const std::array<Amplitude, 3>& raw) {
  int parity = -1;
  for (const auto& a : raw) {
    if (a.value == 0.0) continue;
    if (parity < 0) parity = a.i_parity;
    if (a.i_parity != parity) {
      throw std::invalid_argument(
          "raw factors do not share a common i^m phase");
    }
  }
  CanonicalTriple out;
  if (parity < 0) return out;  // zero map

  out.f = Eigen::Vector3d(raw[0].value, raw[1].value, raw[2].value);
  out.removed_phase_power = parity;
  for (int j = 0; j < 3; ++j) {
    if (out.f[j] == 0.0) continue;
    if (out.f[j] < 0.0) {
      out.f = -out.f;
      out.removed_phase_power += 2;
    }
    break;
  }
  return out;
}

ConditionalMap conditional_map_oracle(int input_offset, int injected,
                                      int detected, const BeamSplitter& bs) {
  if (input_offset < 0) {
    throw std::invalid_argument("input offset must be non-negative");
  }
  if (injected < 0 || detected < 0) {
    throw std::invalid_argument("photon counts must be non-negative");
  }
  if (detected > injected + input_offset + 2) {
    throw InvalidDetectionError(
        "cannot detect " + std::to_string(detected) + " photons from k=" +
        std::to_string(injected) + " at offset " +
        std::to_string(input_offset));
  }
  if (input_offset + injected - detected < 0) {
    throw LossyBranchError("outcome (" + std::to_string(injected) + "," +
                           std::to_string(detected) +
                           ") truncates the state at offset " +
                           std::to_string(input_offset));
  }

  std::array<Amplitude, 3> raw{};
  for (int j = 0; j < 3; ++j) {
    raw[j] = two_mode_amplitude(j + input_offset + injected - detected,
                                detected, j + input_offset, injected, bs);
  }
  const CanonicalTriple canon = canonical_phase(raw);

  ConditionalMap map;
  map.f = canon.f;
  map.input_offset = input_offset;
  map.output_offset = input_offset + injected - detected;
  map.injected = injected;
  map.detected = detected;
  map.amplitude = bs.amplitude();
  map.removed_phase_power = canon.removed_phase_power;
  return map;
}

TwoModeFockVector::TwoModeFockVector(int max_total_photons)
    : cap_(max_total_photons) {
  if (cap_ < 0 || cap_ > kMaxTotalPhotons) {
    throw CapacityError("photon cap must lie in [0, " +
                        std::to_string(kMaxTotalPhotons) + "]");
  }
  amp_ = Eigen::MatrixXcd::Zero(cap_ + 1, cap_ + 1);
}

void TwoModeFockVector::check_index(int n_signal, int n_aux) const {
  if (n_signal < 0 || n_aux < 0) {
    throw std::invalid_argument("photon counts must be non-negative");
  }
  if (n_signal + n_aux > cap_) {
    throw CapacityError("basis state exceeds photon cap");
  }
}

std::complex<double>& TwoModeFockVector::at(int n_signal, int n_aux) {
  check_index(n_signal, n_aux);
  return amp_(n_signal, n_aux);
}

const std::complex<double>& TwoModeFockVector::at(int n_signal,
                                                  int n_aux) const {
  check_index(n_signal, n_aux);
  return amp_(n_signal, n_aux);
}

double TwoModeFockVector::squared_norm() const { return amp_.squaredNorm(); }

void TwoModeFockVector::apply(const BeamSplitter& bs) {
  const std::complex<double> it(0.0, 1.0);
  const std::complex<double> trans(bs.amplitude(), 0.0);
  const std::complex<double> refl = it * bs.reflection();

  Eigen::MatrixXcd out = Eigen::MatrixXcd::Zero(cap_ + 1, cap_ + 1);
  Eigen::MatrixXcd poly(cap_ + 1, cap_ + 1);

  for (int ma = 0; ma <= cap_; ++ma) {
    for (int mb = 0; ma + mb <= cap_; ++mb) {
      const std::complex<double> psi = amp_(ma, mb);
      if (psi == 0.0) continue;

      // Expand (t a+ + i r b+)^ma (i r a+ + t b+)^mb one factor at a time.
      poly.setZero();
      poly(0, 0) = 1.0;
      const int total = ma + mb;
      for (int step = 0; step < total; ++step) {
        const std::complex<double> on_a = step < ma ? trans : refl;
        const std::complex<double> on_b = step < ma ? refl : trans;
        // Degree-(step+1) coefficients live on one anti-diagonal and read
        // only from the degree-step anti-diagonal, so in-place is safe.
        for (int p = step + 1; p >= 0; --p) {
          const int q = step + 1 - p;
          std::complex<double> v = 0.0;
          if (p > 0) v += on_a * poly(p - 1, q);
          if (q > 0) v += on_b * poly(p, q - 1);
          poly(p, q) = v;
        }
      }

      const double in_norm = std::sqrt(
          static_cast<double>(kFactorial[ma]) * kFactorial[mb]);
      for (int p = 0; p <= total; ++p) {
        const int q = total - p;
        if (poly(p, q) == 0.0) continue;
        const double out_norm =
            std::sqrt(static_cast<double>(kFactorial[p]) * kFactorial[q]);
        out(p, q) += psi * poly(p, q) * (out_norm / in_norm);
      }
    }
  }
  amp_.swap(out);
}

}  // namespace nsgate
