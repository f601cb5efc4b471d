#include "nsgate/verify.hpp"

#include <cmath>
#include <random>
#include <sstream>

namespace nsgate {

namespace {

void record(SuiteResult& result, bool ok, const std::string& what) {
  if (ok) {
    ++result.passed;
  } else {
    ++result.failed;
    result.failures.push_back(what);
  }
}

std::string describe(const char* family, int k, double eta) {
  std::ostringstream os;
  os << family << " k=" << k << " eta=" << eta;
  return os.str();
}

}  // namespace

SuiteResult verify_closed_forms(int max_k, double tolerance) {
  SuiteResult result;
  for (int step = 1; step <= 19; ++step) {
    const double eta = 0.05 * step;
    const auto bs = BeamSplitter::from_eta(eta);
    for (int k = 0; k <= max_k; ++k) {
      struct Case {
        const char* name;
        ConditionalMap closed;
        ConditionalMap oracle;
      };
      std::vector<Case> cases;
      cases.push_back({"keep", map_keep(k, eta),
                       conditional_map_oracle(0, k, k, bs)});
      if (k >= 1) {
        cases.push_back({"add", map_add(k, eta),
                         conditional_map_oracle(0, k, k - 1, bs)});
      }
      cases.push_back({"remove", map_remove(k, eta),
                       conditional_map_oracle(1, k, k + 1, bs)});
      cases.push_back({"keep_offset1", map_keep_offset1(k, eta),
                       conditional_map_oracle(1, k, k, bs)});
      for (const auto& c : cases) {
        const double gap = (c.closed.f - c.oracle.f).cwiseAbs().maxCoeff();
        const bool offsets_ok =
            c.closed.input_offset == c.oracle.input_offset &&
            c.closed.output_offset == c.oracle.output_offset;
        record(result, gap <= tolerance && offsets_ok,
               describe(c.name, k, eta) + " gap=" + std::to_string(gap));
      }
    }
  }
  return result;
}

SuiteResult verify_unitarity(int max_k, int states_per_case, double tolerance,
                             unsigned seed) {
  SuiteResult result;
  std::mt19937 rng(seed);
  std::normal_distribution<double> gauss(0.0, 1.0);

  const double grid[] = {0.1, 0.3, 0.5, 0.7, 0.9};
  for (int offset = 0; offset <= 1; ++offset) {
    for (int k = 0; k <= max_k; ++k) {
      for (double mag : grid) {
        for (int sign = -1; sign <= 1; sign += 2) {
          const auto bs = BeamSplitter::from_amplitude(sign * mag);
          for (int s = 0; s < states_per_case; ++s) {
            Eigen::Vector3d c(gauss(rng), gauss(rng), gauss(rng));
            c.normalize();

            // Sum branch probabilities over every detection outcome,
            // including truncating ones, with un-stripped magnitudes.
            double total = 0.0;
            const int max_detect = k + offset + 2;
            for (int n = 0; n <= max_detect; ++n) {
              for (int j = 0; j < 3; ++j) {
                const int out_level = j + offset + k - n;
                if (out_level < 0) continue;
                const Amplitude a = two_mode_amplitude(out_level, n,
                                                       j + offset, k, bs);
                total += a.value * a.value * c[j] * c[j];
              }
            }
            std::ostringstream os;
            os << "unitarity offset=" << offset << " k=" << k
               << " t=" << sign * mag << " state#" << s << " sum=" << total;
            record(result, std::abs(total - 1.0) <= tolerance, os.str());
          }
        }
      }
    }
  }
  return result;
}

SuiteResult verify_amplitudes_against_state_evolution(int max_total,
                                                      double tolerance) {
  SuiteResult result;
  const double grid[] = {-0.9, -0.55, -0.2, 0.35, 0.6, 0.95};
  for (double t : grid) {
    const auto bs = BeamSplitter::from_amplitude(t);
    for (int ma = 0; ma <= max_total; ++ma) {
      for (int mb = 0; ma + mb <= max_total; ++mb) {
        TwoModeFockVector state(max_total);
        state.at(ma, mb) = 1.0;
        state.apply(bs);

        double gap = 0.0;
        for (int p = 0; p <= max_total; ++p) {
          for (int q = 0; p + q <= max_total; ++q) {
            const auto direct = two_mode_amplitude(p, q, ma, mb, bs);
            gap = std::max(gap,
                           std::abs(state.at(p, q) - direct.to_complex()));
          }
        }
        std::ostringstream os;
        os << "amplitude cross-check t=" << t << " in=(" << ma << "," << mb
           << ") gap=" << gap;
        record(result, gap <= tolerance &&
               std::abs(state.squared_norm() - 1.0) <= 1e-9, os.str());
      }
    }
  }
  return result;
}

}  // namespace nsgate
