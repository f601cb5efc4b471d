#pragma once

#include <optional>
#include <vector>

#include "nsgate/compose.hpp"

namespace nsgate {

struct SolveConfig {
  int grid = 41;                 // |t| seeds per free axis
  double tol = 1e-10;            // accepted residual norm
  double dedupe_radius = 1e-6;   // eta-vector radius of one solution class
  int max_iterations = 200;
  int workers = 1;               // seed batches run across this many threads
  double t_min = 1e-4;           // endpoint exclusion: |t| in (t_min, t_max)
  double t_max = 1.0 - 1e-9;
  long seed_cap = 0;             // 0 = unlimited; otherwise truncate the seed list
};

// A verified NS-gate solution.  Residuals are re-evaluated through compose,
// never taken from solver state, and must satisfy |r| <= 1e-8 and
// 0 < P < 1/2 (1/2 is an absolute upper bound for a heralded NS gate).
struct GateSolution {
  SequenceSpec sequence;
  std::vector<double> amplitudes;
  std::vector<double> etas;
  std::pair<double, double> residuals{0.0, 0.0};
  double probability = 0.0;
};

// Builds a GateSolution from candidate amplitudes, re-deriving residuals and
// probability through compose.  Throws NotAGateError if the candidate fails
// the solution invariants.
GateSolution verify_solution(const SequenceSpec& seq,
                             std::span<const double> amps);

// Multistart damped Newton on the NS residuals over the signed amplitude
// cube.  The first `frozen` amplitudes are held fixed; the remaining ones
// are seeded on a magnitude grid with every sign pattern.  Converged
// solutions are deduplicated by eta-vector and sorted by probability
// descending (ties lexicographic by eta-vector).  With more than two free
// amplitudes the system is underdetermined and each converged point is
// pushed along the solution manifold by projected gradient steps on F0^2.
// An empty result means no NS solution exists in the search domain.
std::vector<GateSolution> solve_ns(const SequenceSpec& seq,
                                   const SolveConfig& config = {},
                                   std::span<const double> frozen = {});

// Minimum of F2*F0 over the signed seed grid; a non-negative value
// certifies that r2 = F2/F0 + 1 >= 1 everywhere on the grid, so no NS
// solution can exist there.
double ns_sign_certificate(const SequenceSpec& seq, int grid = 41);

struct ScanEntry {
  SequenceSpec sequence;
  std::vector<GateSolution> solutions;  // empty when no NS solution exists

  const GateSolution* best() const {
    return solutions.empty() ? nullptr : &solutions.front();
  }
};

// Enumerates every offset-valid sequence of `length` elements with photon
// counts up to max_k and zero net offset, solves each, and ranks by best
// probability (sequences without solutions last, lexicographically).
std::vector<ScanEntry> scan_sequences(int max_k, int length,
                                      const SolveConfig& config = {});

}  // namespace nsgate
