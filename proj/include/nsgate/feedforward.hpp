#pragma once

#include <optional>

#include "nsgate/solver.hpp"

namespace nsgate {

// Correction chains handle the (1,0) outcome at the first splitter: the
// detector saw nothing, so one photon was added to the beam and the
// two-element correction pair must take it back out (net offset -1).
struct CorrectionProblem {
  double eta1 = 0.0;    // fixed first-splitter transmitivity
  SequenceSpec pair;    // exactly two elements, net offset -1

  CorrectionProblem(double eta1_in, SequenceSpec pair_in);

  // The full error-then-correct chain [(1,0), pair...].
  SequenceSpec chain() const;
};

// Solves the three-element chain with the first amplitude frozen at
// +sqrt(eta1); the reported P is the probability of the full chain.
std::vector<GateSolution> correction_search(const CorrectionProblem& problem,
                                            const SolveConfig& config = {});

// Main gate and correction branch share the first physical splitter; the
// two first-splitter outcomes are mutually exclusive, so the heralded
// success probabilities add.  Class counts record how many solution classes
// each branch's search produced.
struct FeedForwardReport {
  GateSolution main;
  std::optional<GateSolution> correction;
  double total = 0.0;
  int main_classes = 1;
  int correction_classes = 0;
};

FeedForwardReport total_gate_probability(const GateSolution& main,
                                         const GateSolution& correction);
FeedForwardReport total_gate_probability(const GateSolution& main);

// One published reference row for the three-splitter table.
struct Table1Reference {
  SequenceSpec pair;
  double eta1;
  double eta2;
  double eta3;
  double p;
};

const std::vector<Table1Reference>& table1_reference();

// The candidate correction pairs examined by the reference table.
const std::vector<SequenceSpec>& correction_pair_candidates();

// Threshold below which a correction is not considered appreciable.
inline constexpr double kAppreciableP = 1e-4;

struct Table1Entry {
  double eta1 = 0.0;
  GateSolution solution;            // over the full three-element chain
  int solution_classes = 0;         // appreciable classes for this chain
  std::optional<Table1Reference> reference;  // matching printed row, if any
};

// Runs correction_search for every candidate pair at eta1 in
// {0.2265, 0.9197, 0.2275} and reports every solution with P >= 1e-4,
// attaching the printed reference row where one exists.
std::vector<Table1Entry> table1_report(const SolveConfig& config = {});

}  // namespace nsgate
