#include "nsgate/closed_form_maps.hpp"

#include <cmath>

namespace nsgate {

namespace {

// sqrt(eta)^n with the square root applied only to an odd remainder.
double sqrt_eta_pow(double eta, int n) {
  double v = 1.0;
  for (int i = 0; i < n / 2; ++i) v *= eta;
  return (n % 2 != 0) ? v * std::sqrt(eta) : v;
}

ConditionalMap finish(Eigen::Vector3d f, int input_offset, int k, int n,
                      double eta) {
  ConditionalMap map;
  map.input_offset = input_offset;
  map.output_offset = input_offset + k - n;
  map.injected = k;
  map.detected = n;
  map.amplitude = std::sqrt(eta);
  map.removed_phase_power = (k + n) % 2;
  // Same canonical form as the oracle: first nonzero factor positive.
  for (int j = 0; j < 3; ++j) {
    if (f[j] == 0.0) continue;
    if (f[j] < 0.0) {
      f = -f;
      map.removed_phase_power += 2;
    }
    break;
  }
  map.f = f;
  return map;
}

}  // namespace

ConditionalMap map_keep(int k, double eta) {
  if (k < 0) throw std::invalid_argument("k must be non-negative");
  const EtaXi ex(eta);
  const double b1 = 1.0 - k * ex.xi;
  const double b2 =
      1.0 - 2.0 * k * ex.xi + 0.5 * k * (k - 1) * ex.xi * ex.xi;
  Eigen::Vector3d f(sqrt_eta_pow(eta, k), sqrt_eta_pow(eta, k + 1) * b1,
                    sqrt_eta_pow(eta, k + 2) * b2);
  return finish(f, 0, k, k, eta);
}

ConditionalMap map_add(int k, double eta) {
  if (k < 1) throw std::invalid_argument("cannot detect -1 photons");
  const EtaXi ex(eta);
  const double loss = 1.0 - eta;
  const double b1 = 1.0 - (k - 1) * ex.xi / 2.0;
  const double b2 = 1.0 - (k - 1) * ex.xi +
                    (k - 1) * (k - 2) * ex.xi * ex.xi / 6.0;
  Eigen::Vector3d f(std::sqrt(k * loss) * sqrt_eta_pow(eta, k - 1),
                    std::sqrt(2.0 * k * loss) * sqrt_eta_pow(eta, k) * b1,
                    std::sqrt(3.0 * k * loss) * sqrt_eta_pow(eta, k + 1) * b2);
  return finish(f, 0, k, k - 1, eta);
}

ConditionalMap map_remove(int k, double eta) {
  if (k < 0) throw std::invalid_argument("k must be non-negative");
  const EtaXi ex(eta);
  const double loss = 1.0 - eta;
  const double kk = k + 1.0;
  const double b1 = 1.0 - k * ex.xi / 2.0;
  const double b2 = 1.0 - k * ex.xi + k * (k - 1) * ex.xi * ex.xi / 6.0;
  Eigen::Vector3d f(std::sqrt(kk * loss) * sqrt_eta_pow(eta, k),
                    std::sqrt(2.0 * kk * loss) * sqrt_eta_pow(eta, k + 1) * b1,
                    std::sqrt(3.0 * kk * loss) * sqrt_eta_pow(eta, k + 2) * b2);
  return finish(f, 1, k, k + 1, eta);
}

ConditionalMap map_keep_offset1(int k, double eta) {
  if (k < 0) throw std::invalid_argument("k must be non-negative");
  const EtaXi ex(eta);
  const double xi2 = ex.xi * ex.xi;
  const double b0 = 1.0 - k * ex.xi;
  const double b1 = 1.0 - 2.0 * k * ex.xi + 0.5 * k * (k - 1) * xi2;
  // k(k-1)(k-2) is the falling factorial: zero for k < 3.
  const double b2 = 1.0 - 3.0 * k * ex.xi + 1.5 * k * (k - 1) * xi2 -
                    k * (k - 1) * (k - 2) * xi2 * ex.xi / 6.0;
  Eigen::Vector3d f(sqrt_eta_pow(eta, k + 1) * b0,
                    sqrt_eta_pow(eta, k + 2) * b1,
                    sqrt_eta_pow(eta, k + 3) * b2);
  return finish(f, 1, k, k, eta);
}

}  // namespace nsgate
