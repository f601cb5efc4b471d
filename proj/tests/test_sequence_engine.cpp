#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "nsgate/solver.hpp"

using namespace nsgate;

namespace {

// Derived quadratic for [(1,1),(0,0)]: 7 eta^2 - 6 eta + 1 = 0, in-range root.
const double kEtaA1 = (3.0 - std::sqrt(2.0)) / 7.0;
const double kEtaA2 = kEtaA1 / ((1.0 - 2.0 * kEtaA1) * (1.0 - 2.0 * kEtaA1));

SolveConfig quick_config() {
  SolveConfig cfg;
  cfg.grid = 21;
  return cfg;
}

}  // namespace

TEST(SequenceParse, AcceptsTheGrammar) {
  const auto seq = SequenceSpec::parse("(1,1),(0,0)");
  ASSERT_EQ(seq.size(), 2u);
  EXPECT_EQ(seq[0], (ElementSpec{1, 1}));
  EXPECT_EQ(seq[1], (ElementSpec{0, 0}));
  EXPECT_EQ(seq.str(), "(1,1),(0,0)");

  const auto spaced = SequenceSpec::parse("  ( 1 , 0 ) ,\t( 1 , 2 ) , (0,0) ");
  EXPECT_EQ(spaced.str(), "(1,0),(1,2),(0,0)");
  EXPECT_EQ(spaced.net_offset(), 0);
}

TEST(SequenceParse, ErrorsNameTheCharacterOffset) {
  try {
    SequenceSpec::parse("(1,1,(0,0)");
    FAIL() << "expected ParseError";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.offset(), 4u);
    EXPECT_NE(std::string(e.what()).find("offset 4"), std::string::npos);
  }

  try {
    SequenceSpec::parse("(1,a)");
    FAIL() << "expected ParseError";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.offset(), 3u);
  }

  try {
    SequenceSpec::parse("(1,1)x");
    FAIL() << "expected ParseError";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.offset(), 5u);
  }

  EXPECT_THROW(SequenceSpec::parse(""), ParseError);
  EXPECT_THROW(SequenceSpec::parse("   "), ParseError);
}

TEST(SequenceSpecType, OffsetValidation) {
  EXPECT_THROW(SequenceSpec({{0, 1}}), LossyBranchError);
  EXPECT_THROW(SequenceSpec({{1, 3}}), LossyBranchError);
  EXPECT_THROW(SequenceSpec({{0, 4}}), InvalidDetectionError);
  EXPECT_THROW(SequenceSpec({{1, 0}, {0, 2}}), LossyBranchError);

  const SequenceSpec chain{{1, 0}, {1, 1}, {1, 2}};
  EXPECT_EQ(chain.offset_before(0), 0);
  EXPECT_EQ(chain.offset_before(1), 1);
  EXPECT_EQ(chain.offset_before(2), 1);
  EXPECT_EQ(chain.net_offset(), 0);
}

TEST(Compose, IdentityElement) {
  const double amps[] = {1.0};
  const auto map = compose(SequenceSpec{{1, 1}}, amps);
  EXPECT_DOUBLE_EQ(map.F[0], 1.0);
  EXPECT_DOUBLE_EQ(map.F[1], 1.0);
  EXPECT_DOUBLE_EQ(map.F[2], 1.0);
  EXPECT_EQ(map.net_offset, 0);
}

TEST(Compose, GateAConditionsHoldAtTheDerivedSolution) {
  // Sign structure (+, -): the second element's odd-parity factors flip.
  const double t1 = std::sqrt(kEtaA1);
  const double t2 = t1 / (2.0 * kEtaA1 - 1.0);
  ASSERT_LT(t2, 0.0);
  const double amps[] = {t1, t2};
  const auto map = compose(SequenceSpec{{1, 1}, {0, 0}}, amps);
  EXPECT_NEAR(map.F[1] / map.F[0], 1.0, 1e-9);
  EXPECT_NEAR(map.F[2] / map.F[0], -1.0, 1e-9);

  // The rounded published values land within 1e-3.
  const double rounded[] = {std::sqrt(0.2265), -std::sqrt(0.7574)};
  const auto approx = compose(SequenceSpec{{1, 1}, {0, 0}}, rounded);
  EXPECT_NEAR(approx.F[1] / approx.F[0], 1.0, 1e-3);
  EXPECT_NEAR(approx.F[2] / approx.F[0], -1.0, 1e-3);
}

TEST(Compose, PhotonPreservingElementsCommute) {
  const double a = 0.62, b = -0.48;
  const double fwd[] = {a, b};
  const double rev[] = {b, a};
  const auto f = compose(SequenceSpec{{1, 1}, {2, 2}}, fwd);
  const auto r = compose(SequenceSpec{{2, 2}, {1, 1}}, rev);
  for (int j = 0; j < 3; ++j) EXPECT_EQ(f.F[j], r.F[j]);  // bitwise

  // Three factors associate differently; equality up to rounding.
  const double f3[] = {a, b, 0.9};
  const double r3[] = {0.9, b, a};
  const auto m3 = compose(SequenceSpec{{1, 1}, {0, 0}, {2, 2}}, f3);
  const auto p3 = compose(SequenceSpec{{2, 2}, {0, 0}, {1, 1}}, r3);
  for (int j = 0; j < 3; ++j) EXPECT_NEAR(m3.F[j], p3.F[j], 1e-15);
}

TEST(Compose, ErrorPaths) {
  const double amps[] = {0.5};
  EXPECT_THROW(compose(SequenceSpec{{1, 1}, {0, 0}}, amps),
               std::invalid_argument);
}

TEST(NsResiduals, ExactDiagonalTarget) {
  ComposedMap map;
  map.F = Eigen::Vector3d(0.3, 0.3, -0.3);
  map.net_offset = 0;
  const auto [r1, r2] = ns_residuals(map);
  EXPECT_EQ(r1, 0.0);
  EXPECT_EQ(r2, 0.0);
}

TEST(NsResiduals, VacuumKeepElementsCannotFlipSigns) {
  const double amps[] = {std::sqrt(0.5)};
  const auto map = compose(SequenceSpec{{0, 0}}, amps);
  const auto [r1, r2] = ns_residuals(map);
  EXPECT_GT(r2, 0.0);  // r2 = eta + 1, never zero
  EXPECT_NEAR(r2, 1.5, 1e-12);
  EXPECT_NEAR(r1, std::sqrt(0.5) - 1.0, 1e-12);
}

TEST(NsResiduals, PublishedGateBValuesLandWithinAThousandth) {
  // eta = (0.2275, 0.91968) with one sign flipped; the rounded published
  // transmitivities satisfy the NS conditions to about 1e-4.
  const double amps[] = {-std::sqrt(0.2275), std::sqrt(0.91968)};
  const auto map = compose(SequenceSpec{{1, 1}, {1, 1}}, amps);
  const auto [r1, r2] = ns_residuals(map);
  EXPECT_LT(std::abs(r1), 1e-3);
  EXPECT_LT(std::abs(r2), 1e-3);
}

TEST(NsResiduals, ErrorPaths) {
  ComposedMap shifted;
  shifted.net_offset = 1;
  EXPECT_THROW(ns_residuals(shifted), NotAGateError);

  ComposedMap degenerate;
  degenerate.F = Eigen::Vector3d(0.0, 0.5, 0.5);
  EXPECT_THROW(ns_residuals(degenerate), DegenerateMapError);
}

TEST(SuccessProbability, RefusesOffTargetMaps) {
  ComposedMap identity;
  identity.F = Eigen::Vector3d(1.0, 1.0, 1.0);
  EXPECT_THROW(success_probability(identity), NotAGateError);

  ComposedMap ns;
  ns.F = Eigen::Vector3d(0.476, 0.476, -0.476);
  EXPECT_NEAR(success_probability(ns), 0.476 * 0.476, 1e-15);
}

TEST(BranchProbability, KnownBranches) {
  ComposedMap identity;
  identity.F = Eigen::Vector3d(1.0, 1.0, 1.0);
  EXPECT_DOUBLE_EQ(branch_probability(identity, ModeState(1.0, 0.0, 0.0)), 1.0);

  const double amps[] = {std::sqrt(0.5)};
  const auto vacuum_keep = compose(SequenceSpec{{0, 0}}, amps);
  EXPECT_DOUBLE_EQ(branch_probability(vacuum_keep, ModeState(1.0, 0.0, 0.0)),
                   1.0);

  // The 2*eta - 1 zero; t = sqrt(0.5) squares to 0.5 + 1 ulp, so the branch
  // probability lands within one rounding of exact zero.
  const double balanced[] = {std::sqrt(0.5)};
  const auto one_one = compose(SequenceSpec{{1, 1}}, balanced);
  EXPECT_NEAR(branch_probability(one_one, ModeState(0.0, 1.0, 0.0)), 0.0,
              1e-30);

  EXPECT_THROW(branch_probability(identity, ModeState(0.5, 0.5, 0.5)),
               std::invalid_argument);
}

TEST(SolveNs, GateA) {
  const auto solutions = solve_ns(SequenceSpec{{1, 1}, {0, 0}}, quick_config());
  ASSERT_EQ(solutions.size(), 1u);
  const auto& best = solutions.front();
  EXPECT_NEAR(best.etas[0], kEtaA1, 1e-9);
  EXPECT_NEAR(best.etas[1], kEtaA2, 1e-9);
  EXPECT_NEAR(best.probability, kEtaA1, 1e-9);
  EXPECT_LT(std::abs(7.0 * best.etas[0] * best.etas[0] -
                     6.0 * best.etas[0] + 1.0),
            1e-8);
  // A relative sign between the two amplitudes is required.
  EXPECT_LT(best.amplitudes[0] * best.amplitudes[1], 0.0);
}

TEST(SolveNs, GateBKeepsBothOrderings) {
  const auto solutions = solve_ns(SequenceSpec{{1, 1}, {1, 1}}, quick_config());
  ASSERT_EQ(solutions.size(), 2u);
  for (const auto& sol : solutions) {
    // Independent algebraic route: eliminating the NS constraints gives
    // (3a-2)(3b-2) = -1 and a b = (2a-1)^2 (2b-1)^2.
    const double a = sol.etas[0], b = sol.etas[1];
    EXPECT_NEAR((3.0 * a - 2.0) * (3.0 * b - 2.0), -1.0, 1e-9);
    EXPECT_NEAR(a * b,
                std::pow((2.0 * a - 1.0) * (2.0 * b - 1.0), 2.0), 1e-9);
    EXPECT_NEAR(sol.probability, a * b, 1e-12);
  }
  // Equal P: ties ordered lexicographically by eta-vector.
  EXPECT_LT(solutions[0].etas[0], solutions[1].etas[0]);
  EXPECT_NEAR(solutions[0].etas[0], solutions[1].etas[1], 1e-9);
  EXPECT_NEAR(solutions[0].probability, solutions[1].probability, 1e-12);
}

TEST(SolveNs, AddThenRemoveIsImpossible) {
  EXPECT_TRUE(solve_ns(SequenceSpec{{1, 0}, {0, 1}}, quick_config()).empty());
  // Grid certificate: F2*F0 >= 0 over the whole signed grid, so
  // r2 = F2/F0 + 1 >= 1 everywhere.
  EXPECT_GE(ns_sign_certificate(SequenceSpec{{1, 0}, {0, 1}}, 41), 0.0);
}

TEST(SolveNs, TwoPhotonKeepPlusVacuumKeepHasASolution) {
  // [(2,2),(0,0)]: eliminating the constraints gives 15 eta^2 - 18 eta + 5 = 0
  // with in-range root (9 - sqrt(6))/15 and eta2 = eta1/(3 eta1 - 2)^2.
  const double eta1 = (9.0 - std::sqrt(6.0)) / 15.0;
  const double eta2 = eta1 / ((3.0 * eta1 - 2.0) * (3.0 * eta1 - 2.0));
  const auto solutions = solve_ns(SequenceSpec{{2, 2}, {0, 0}}, quick_config());
  ASSERT_FALSE(solutions.empty());
  const auto& best = solutions.front();
  EXPECT_NEAR(best.etas[0], eta1, 1e-9);
  EXPECT_NEAR(best.etas[1], eta2, 1e-9);
  EXPECT_NEAR(best.probability, eta1 * eta1, 1e-9);
}

TEST(SolveNs, SolutionsReverifyThroughCompose) {
  for (const auto& seq :
       {SequenceSpec{{1, 1}, {0, 0}}, SequenceSpec{{1, 1}, {1, 1}},
        SequenceSpec{{2, 1}, {0, 1}}}) {
    for (const auto& sol : solve_ns(seq, quick_config())) {
      const auto map = compose(seq, sol.amplitudes);
      const auto [r1, r2] = ns_residuals(map);
      EXPECT_LT(std::hypot(r1, r2), 1e-8);
      EXPECT_NEAR(map.F[0] * map.F[0], sol.probability, 1e-15);
      EXPECT_GT(sol.probability, 0.0);
      EXPECT_LT(sol.probability, 0.5);
    }
  }
}

TEST(SolveNs, BranchProbabilityIsInputIndependentAtSolutions) {
  const auto solutions = solve_ns(SequenceSpec{{1, 1}, {0, 0}}, quick_config());
  ASSERT_FALSE(solutions.empty());
  const auto map = compose(solutions[0].sequence, solutions[0].amplitudes);
  const double p = success_probability(map);
  std::mt19937 rng(42);
  std::normal_distribution<double> gauss;
  for (int i = 0; i < 100; ++i) {
    Eigen::Vector3d c(gauss(rng), gauss(rng), gauss(rng));
    c.normalize();
    ModeState state(c[0], c[1], c[2]);
    EXPECT_NEAR(branch_probability(map, state), p, 1e-12);
  }
}

TEST(SolveNs, RejectsShiftedSequences) {
  EXPECT_THROW(solve_ns(SequenceSpec{{1, 0}}, quick_config()), NotAGateError);
}

TEST(SolveNs, UnderdeterminedChainMaximizesAlongTheManifold) {
  // [(1,1),(0,0),(0,0)] has a one-parameter solution family with constant
  // P = eta1; every reported point must sit on it at full precision.
  SolveConfig cfg;
  cfg.grid = 7;
  const auto solutions =
      solve_ns(SequenceSpec{{1, 1}, {0, 0}, {0, 0}}, cfg);
  ASSERT_FALSE(solutions.empty());
  for (const auto& sol : solutions) {
    EXPECT_NEAR(sol.etas[0], kEtaA1, 1e-8);
    EXPECT_NEAR(sol.probability, kEtaA1, 1e-8);
  }
}

TEST(ScanSequences, RanksTwoElementConfigurations) {
  SolveConfig cfg;
  cfg.grid = 15;
  const auto entries = scan_sequences(4, 2, cfg);
  ASSERT_FALSE(entries.empty());

  // Top entry: the one-photon keep paired with the vacuum keep (the two
  // orderings are equivalent and tie at the same probability).
  ASSERT_NE(entries.front().best(), nullptr);
  EXPECT_TRUE(entries.front().sequence.str() == "(1,1),(0,0)" ||
              entries.front().sequence.str() == "(0,0),(1,1)")
      << entries.front().sequence.str();
  EXPECT_NEAR(entries.front().best()->probability, kEtaA1, 1e-8);

  double best_keep_pair = -1.0;
  std::vector<double> keep_m(5, -1.0);
  for (const auto& e : entries) {
    if (e.sequence.size() == 2 && e.sequence[0] == ElementSpec{1, 1}) {
      for (int m = 0; m <= 4; ++m) {
        if (e.sequence[1] == ElementSpec{m, m} && e.best()) {
          keep_m[m] = e.best()->probability;
        }
      }
    }
    if (e.sequence.str() == "(1,1),(1,1)" && e.best()) {
      best_keep_pair = e.best()->probability;
    }
    if (e.sequence.str() == "(1,0),(0,1)") {
      EXPECT_TRUE(e.solutions.empty());
    }
  }
  EXPECT_NEAR(best_keep_pair, 0.209, 1e-3);
  for (int m = 1; m <= 4; ++m) {
    ASSERT_GT(keep_m[m], 0.0) << "[(1,1),(" << m << "," << m << ")] missing";
    EXPECT_LE(keep_m[m], keep_m[m - 1] + 1e-12);
  }
}

TEST(Compose, MatchesBruteForceStateEvolutionThroughChains) {
  // Independent route: extract each element's raw conditional amplitudes
  // from full two-mode state evolution and chain their ratios.  Phases are
  // common within one element, so the chained ratios must land on the real
  // ratios compose produces.
  const SequenceSpec chains[] = {
      SequenceSpec{{1, 1}, {0, 0}},
      SequenceSpec{{1, 0}, {1, 1}, {1, 2}},
      SequenceSpec{{2, 1}, {0, 0}, {0, 1}},
      SequenceSpec{{1, 0}, {1, 2}, {1, 1}},
  };
  const double amp_sets[][3] = {
      {0.55, -0.81, 0.33},
      {-0.47, 0.92, 0.61},
      {0.71, 0.29, -0.95},
  };
  for (const auto& seq : chains) {
    for (const auto& amps_raw : amp_sets) {
      std::span<const double> amps(amps_raw, seq.size());
      const auto map = compose(seq, amps);

      std::complex<double> ratio1 = 1.0, ratio2 = 1.0;
      int offset = 0;
      for (std::size_t i = 0; i < seq.size(); ++i) {
        const auto bs = BeamSplitter::from_amplitude(amps[i]);
        const int k = seq[i].injected, n = seq[i].detected;
        std::complex<double> raw[3];
        for (int j = 0; j < 3; ++j) {
          TwoModeFockVector state(10);
          state.at(j + offset, k) = 1.0;
          state.apply(bs);
          raw[j] = state.at(j + offset + k - n, n);
        }
        ratio1 *= raw[1] / raw[0];
        ratio2 *= raw[2] / raw[0];
        offset += k - n;
      }
      EXPECT_NEAR(ratio1.imag(), 0.0, 1e-12) << seq.str();
      EXPECT_NEAR(ratio2.imag(), 0.0, 1e-12) << seq.str();
      EXPECT_NEAR(ratio1.real(), map.F[1] / map.F[0], 1e-12) << seq.str();
      EXPECT_NEAR(ratio2.real(), map.F[2] / map.F[0], 1e-12) << seq.str();
    }
  }
}

TEST(ScanSequences, ValidatesArguments) {
  EXPECT_THROW(scan_sequences(4, 1), std::invalid_argument);
  EXPECT_THROW(scan_sequences(4, 4), std::invalid_argument);
  EXPECT_THROW(scan_sequences(5, 2), std::invalid_argument);
}
