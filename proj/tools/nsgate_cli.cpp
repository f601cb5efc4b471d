// Command-line surface: oracle checks, NS-gate solving, configuration scans,
// and the three-splitter correction / feed-forward reports.

#include <CLI11.hpp>

#include <cmath>
#include <iostream>

#include "nsgate/report.hpp"

namespace {

struct CommonOptions {
  std::string format = "text";
  int grid = 41;
  double tol = 1e-10;
  double dedupe = 1e-6;
  int jobs = 1;
  long seed_cap = 0;
};

void add_common(CLI::App* cmd, CommonOptions& opts) {
  cmd->add_option("--format", opts.format, "Output format: text, csv, json")
      ->check(CLI::IsMember({"text", "csv", "json"}));
  cmd->add_option("--grid", opts.grid, "Seed magnitudes per free amplitude")
      ->check(CLI::Range(5, 1001));
  cmd->add_option("--tol", opts.tol, "Residual norm accepted as converged")
      ->check(CLI::PositiveNumber);
  cmd->add_option("--dedupe", opts.dedupe,
                  "Eta-vector radius of one solution class")
      ->check(CLI::PositiveNumber);
  cmd->add_option("--jobs", opts.jobs, "Worker threads for seed batches")
      ->check(CLI::Range(1, 256));
  cmd->add_option("--seed-cap", opts.seed_cap,
                  "Hard limit on seeds per solve (0 = unlimited)")
      ->check(CLI::NonNegativeNumber);
}

nsgate::SolveConfig to_config(const CommonOptions& opts) {
  nsgate::SolveConfig cfg;
  cfg.grid = opts.grid;
  cfg.tol = opts.tol;
  cfg.dedupe_radius = opts.dedupe;
  cfg.workers = opts.jobs;
  cfg.seed_cap = opts.seed_cap;
  return cfg;
}

// Feed-forward pairings: each main gate with one photon injected at the
// first splitter, combined with the best correction for its (1,0) error
// branch.
std::vector<nsgate::FeedForwardReport> build_feedforward_reports(
    const nsgate::SolveConfig& cfg) {
  using namespace nsgate;
  struct Main {
    GateSolution solution;
    int classes;
  };
  std::vector<Main> mains;
  for (const auto& seq :
       {SequenceSpec{{1, 1}, {0, 0}}, SequenceSpec{{1, 1}, {1, 1}}}) {
    const auto solutions = solve_ns(seq, cfg);
    for (const auto& sol : solutions) {
      mains.push_back({sol, static_cast<int>(solutions.size())});
    }
  }

  std::vector<FeedForwardReport> reports;
  for (const auto& main : mains) {
    struct Candidate {
      GateSolution solution;
      int classes;  // appreciable classes of its pair family
    };
    std::vector<Candidate> kept;
    for (const auto& pair : correction_pair_candidates()) {
      const CorrectionProblem problem(main.solution.etas[0], pair);
      std::vector<GateSolution> appreciable;
      for (auto& sol : correction_search(problem, cfg)) {
        if (sol.probability >= nsgate::kAppreciableP) {
          appreciable.push_back(std::move(sol));
        }
      }
      for (auto& sol : appreciable) {
        kept.push_back({std::move(sol), static_cast<int>(appreciable.size())});
      }
    }
    const Candidate* best = nullptr;
    for (const auto& c : kept) {
      if (!best || c.solution.probability > best->solution.probability) {
        best = &c;
      }
    }
    auto report = best ? total_gate_probability(main.solution, best->solution)
                       : total_gate_probability(main.solution);
    report.main_classes = main.classes;
    if (best) report.correction_classes = best->classes;
    reports.push_back(std::move(report));
  }
  return reports;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Heralded NS gates from concatenated beam splitters"};
  app.require_subcommand(1);

  CommonOptions opts;
  std::string sequence_text;
  int max_k = 4;
  int length = 2;
  int photon_cap = 8;

  auto* verify_cmd =
      app.add_subcommand("verify-oracle",
                         "Run the closed-form and unitarity suites");
  verify_cmd->add_option("--photon-cap", photon_cap,
                         "Two-mode photon total for the brute-force cross-check")
      ->check(CLI::Range(2, nsgate::kMaxTotalPhotons));

  auto* solve_cmd =
      app.add_subcommand("solve", "Find NS solutions for one sequence");
  solve_cmd->add_option("--sequence", sequence_text,
                        "Sequence, e.g. \"(1,1),(0,0)\"")
      ->required();
  add_common(solve_cmd, opts);

  auto* scan_cmd =
      app.add_subcommand("scan", "Rank all offset-valid sequences");
  scan_cmd->add_option("--max-k", max_k, "Photon bound per element")
      ->check(CLI::Range(0, 4));
  scan_cmd->add_option("--length", length, "Elements per sequence")
      ->check(CLI::Range(2, 3));
  add_common(scan_cmd, opts);

  auto* table_cmd = app.add_subcommand(
      "table1", "Reproduce the three-splitter correction table with deltas");
  add_common(table_cmd, opts);

  auto* ff_cmd = app.add_subcommand(
      "feedforward", "Gate-plus-correction totals for the shared splitter");
  add_common(ff_cmd, opts);

  CLI11_PARSE(app, argc, argv);

  try {
    const auto format = nsgate::parse_format(opts.format);
    const auto cfg = to_config(opts);

    if (verify_cmd->parsed()) {
      const auto closed = nsgate::verify_closed_forms();
      const auto unitarity = nsgate::verify_unitarity();
      const auto amplitudes =
          nsgate::verify_amplitudes_against_state_evolution(photon_cap);
      std::cout << nsgate::render_verify(closed, unitarity, amplitudes);
      return (closed.ok() && unitarity.ok() && amplitudes.ok()) ? 0 : 2;
    }
    if (solve_cmd->parsed()) {
      const auto seq = nsgate::SequenceSpec::parse(sequence_text);
      const auto solutions = nsgate::solve_ns(seq, cfg);
      std::cout << nsgate::render_solutions(seq, solutions, format);
      return 0;
    }
    if (scan_cmd->parsed()) {
      const auto entries = nsgate::scan_sequences(max_k, length, cfg);
      std::cout << nsgate::render_scan(entries, max_k, length, format);
      return 0;
    }
    if (table_cmd->parsed()) {
      const auto entries = nsgate::table1_report(cfg);
      std::cout << nsgate::render_table1(entries, format);
      return 0;
    }
    if (ff_cmd->parsed()) {
      const auto reports = build_feedforward_reports(cfg);
      std::cout << nsgate::render_feedforward(reports, format);
      return 0;
    }
  } catch (const nsgate::ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
