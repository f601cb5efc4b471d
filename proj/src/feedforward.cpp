#include "nsgate/feedforward.hpp"

#include <cmath>

namespace nsgate {

CorrectionProblem::CorrectionProblem(double eta1_in, SequenceSpec pair_in)
    : eta1(eta1_in), pair(std::move(pair_in)) {
  if (!(eta1 > 0.0 && eta1 < 1.0)) {
    throw NotACorrectionError("eta1 must lie in (0, 1)");
  }
  if (pair.size() != 2) {
    throw NotACorrectionError("correction pair must have exactly 2 elements");
  }
  if (pair.net_offset() != -1) {
    throw NotACorrectionError(
        "correction pair must subtract exactly one photon (net offset -1)");
  }
  chain();  // throws if an intermediate offset of the full chain is invalid
}

SequenceSpec CorrectionProblem::chain() const {
  std::vector<ElementSpec> elements{{1, 0}};
  elements.insert(elements.end(), pair.elements().begin(),
                  pair.elements().end());
  try {
    return SequenceSpec(std::move(elements));
  } catch (const Error& e) {
    throw NotACorrectionError(std::string("invalid correction chain: ") +
                              e.what());
  }
}

std::vector<GateSolution> correction_search(const CorrectionProblem& problem,
                                            const SolveConfig& config) {
  const double frozen[] = {std::sqrt(problem.eta1)};
  return solve_ns(problem.chain(), config, frozen);
}

FeedForwardReport total_gate_probability(const GateSolution& main,
                                         const GateSolution& correction) {
  if (main.sequence.size() != 2 || main.sequence[0] != ElementSpec{1, 1}) {
    throw IncompatibleBranchesError(
        "main gate must be a two-element sequence starting with (1,1)");
  }
  if (correction.sequence.empty() ||
      correction.sequence[0] != ElementSpec{1, 0}) {
    throw IncompatibleBranchesError(
        "correction chain must start with the (1,0) error element");
  }
  if (std::abs(main.etas[0] - correction.etas[0]) > 1e-6) {
    throw IncompatibleBranchesError(
        "main and correction branches disagree on the first splitter");
  }
  FeedForwardReport report;
  report.main = main;
  report.correction = correction;
  report.total = main.probability + correction.probability;
  report.correction_classes = 1;
  return report;
}

FeedForwardReport total_gate_probability(const GateSolution& main) {
  FeedForwardReport report;
  report.main = main;
  report.total = main.probability;
  return report;
}

const std::vector<SequenceSpec>& correction_pair_candidates() {
  // Photon extracted at the first splitter of the pair, then at the second.
  static const std::vector<SequenceSpec> pairs = {
      SequenceSpec({{0, 1}, {0, 0}}, 1), SequenceSpec({{0, 1}, {1, 1}}, 1),
      SequenceSpec({{1, 2}, {0, 0}}, 1), SequenceSpec({{1, 2}, {1, 1}}, 1),
      SequenceSpec({{0, 0}, {0, 1}}, 1), SequenceSpec({{1, 1}, {0, 1}}, 1),
      SequenceSpec({{0, 0}, {1, 2}}, 1), SequenceSpec({{1, 1}, {1, 2}}, 1),
  };
  return pairs;
}

const std::vector<Table1Reference>& table1_reference() {
  static const std::vector<Table1Reference> rows = {
      {SequenceSpec({{0, 1}, {1, 1}}, 1), 0.9197, 0.2947, 0.2567, 0.0145},
      {SequenceSpec({{1, 2}, {0, 0}}, 1), 0.9197, 0.1472, 0.5137, 0.0202},
      {SequenceSpec({{1, 2}, {1, 1}}, 1), 0.9197, 0.1511, 0.8398, 0.0173},
      {SequenceSpec({{0, 0}, {1, 2}}, 1), 0.9197, 0.5137, 0.1472, 0.0104},
      {SequenceSpec({{1, 1}, {0, 1}}, 1), 0.9197, 0.6500, 0.4182, 0.0042},
      {SequenceSpec({{1, 1}, {1, 2}}, 1), 0.2265, 0.3315, 0.0531, 0.0088},
      {SequenceSpec({{1, 1}, {1, 2}}, 1), 0.9197, 0.8690, 0.1766, 0.0127},
  };
  return rows;
}

std::vector<Table1Entry> table1_report(const SolveConfig& config) {
  static constexpr double kEta1[] = {0.2265, 0.9197, 0.2275};

  std::vector<Table1Entry> entries;
  for (const double eta1 : kEta1) {
    for (const auto& pair : correction_pair_candidates()) {
      const CorrectionProblem problem(eta1, pair);
      const auto solutions = correction_search(problem, config);
      int appreciable = 0;
      for (const auto& sol : solutions) {
        if (sol.probability >= kAppreciableP) ++appreciable;
      }
      for (const auto& sol : solutions) {
        if (sol.probability < kAppreciableP) continue;
        Table1Entry entry;
        entry.eta1 = eta1;
        entry.solution = sol;
        entry.solution_classes = appreciable;
        for (const auto& ref : table1_reference()) {
          if (ref.pair == pair && std::abs(ref.eta1 - eta1) < 1e-9) {
            entry.reference = ref;
            break;
          }
        }
        entries.push_back(std::move(entry));
      }
    }
  }
  return entries;
}

}  // namespace nsgate
