#pragma once

#include "nsgate/fock_oracle.hpp"

namespace nsgate {

// Transmitivity together with the derived xi = (1 - eta)/eta.  eta = 0 is a
// domain error: xi is undefined there and the closed forms are simply not
// evaluated at that endpoint.
struct EtaXi {
  double eta;
  double xi;

  explicit EtaXi(double eta_in) : eta(eta_in), xi(0.0) {
    if (!(eta_in > 0.0 && eta_in <= 1.0)) {
      throw std::invalid_argument("eta must lie in (0, 1]");
    }
    xi = (1.0 - eta_in) / eta_in;
  }
};

// Closed forms for the four displayed conditional transformation sets, all
// at t = +sqrt(eta).  Signed-amplitude maps always come from the oracle;
// these exist to validate it and to document the algebra.  Every factor
// follows the one pattern
//   f_L = prefactor * sqrt(eta)^(k+L) * sum_m (-xi)^m C(L, m) C(k, m)
// for output level L, which the oracle reproduces to 1e-9 over the full
// test grid.

// Inject k, detect k: offsets 0 -> 0.
ConditionalMap map_keep(int k, double eta);

// Inject k >= 1, detect k - 1: offsets 0 -> 1.  One uniform formula; the
// k = 1 case needs no special handling.
ConditionalMap map_add(int k, double eta);

// Inject k >= 0, detect k + 1: offsets 1 -> 0.  Transpose of map_add(k+1).
ConditionalMap map_remove(int k, double eta);

// Inject k, detect k, acting on a state carrying one extra photon:
// offsets 1 -> 1.
ConditionalMap map_keep_offset1(int k, double eta);

}  // namespace nsgate
