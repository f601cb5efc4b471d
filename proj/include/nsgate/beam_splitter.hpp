#pragma once

#include <cmath>
#include <stdexcept>

#include "nsgate/errors.hpp"

namespace nsgate {

// Lossless beam splitter with a signed transmission amplitude t in [-1, 1].
// Creation operators transform as a+ -> t a+ + i r b+, b+ -> i r a+ + t b+,
// with r = sqrt(1 - t^2) >= 0.  The transmitivity eta = t^2 is what reports
// quote; the sign of t is the pi phase-plate freedom between elements.
//
// eta and 1 - eta are stored explicitly so that matrix elements can be
// evaluated as integer powers of eta and 1 - eta with at most one square
// root applied last.  Constructing from eta keeps eta exact, which makes
// polynomial zeros such as 2*eta - 1 at eta = 1/2 land exactly on 0.
class BeamSplitter {
 public:
  static BeamSplitter from_amplitude(double t) {
    if (!(t >= -1.0 && t <= 1.0)) {
      throw std::invalid_argument("beam splitter amplitude must lie in [-1, 1]");
    }
    BeamSplitter bs;
    bs.t_ = t;
    bs.eta_ = t * t;
    bs.one_minus_eta_ = (1.0 - t) * (1.0 + t);
    return bs;
  }

  static BeamSplitter from_eta(double eta, int sign = +1) {
    if (!(eta >= 0.0 && eta <= 1.0)) {
      throw std::invalid_argument("transmitivity must lie in [0, 1]");
    }
    BeamSplitter bs;
    bs.t_ = (sign < 0 ? -1.0 : 1.0) * std::sqrt(eta);
    bs.eta_ = eta;
    bs.one_minus_eta_ = 1.0 - eta;
    return bs;
  }

  double amplitude() const { return t_; }
  double eta() const { return eta_; }
  double one_minus_eta() const { return one_minus_eta_; }
  double reflection() const { return std::sqrt(one_minus_eta_); }

  // t^n evaluated as eta^(n/2) times a trailing signed sqrt for odd n.
  double t_power(int n) const {
    double v = int_power(eta_, n / 2);
    return (n % 2 != 0) ? v * t_ : v;
  }

  // r^n with r = sqrt(1 - eta) >= 0.
  double r_power(int n) const {
    double v = int_power(one_minus_eta_, n / 2);
    return (n % 2 != 0) ? v * reflection() : v;
  }

 private:
  BeamSplitter() = default;

  static double int_power(double base, int n) {
    double v = 1.0;
    for (int i = 0; i < n; ++i) v *= base;
    return v;
  }

  double t_ = 1.0;
  double eta_ = 1.0;
  double one_minus_eta_ = 0.0;
};

}  // namespace nsgate
