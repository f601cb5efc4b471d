#include "nsgate/solver.hpp"

#include <Eigen/SVD>
#include <algorithm>
#include <cmath>
#include <limits>
#include <thread>

namespace nsgate {

namespace {

constexpr double kResidualBound = 1e-8;  // GateSolution invariant

struct Residual {
  Eigen::Vector2d r;
  double f0 = 0.0;
};

class NsSystem {
 public:
  NsSystem(const SequenceSpec& seq, std::span<const double> frozen,
           const SolveConfig& cfg)
      : seq_(seq), frozen_(frozen.begin(), frozen.end()), cfg_(cfg) {
    free_count_ = seq.size() - frozen_.size();
  }

  std::size_t free_count() const { return free_count_; }

  std::vector<double> full_amplitudes(const Eigen::VectorXd& x) const {
    std::vector<double> amps = frozen_;
    for (Eigen::Index i = 0; i < x.size(); ++i) amps.push_back(x[i]);
    return amps;
  }

  // NS residuals at x; nullopt when the point is degenerate (F0 ~ 0).
  std::optional<Residual> eval(const Eigen::VectorXd& x) const {
    const auto amps = full_amplitudes(x);
    const ComposedMap map = compose(seq_, amps);
    if (std::abs(map.F[0]) < 1e-14) return std::nullopt;
    Residual res;
    res.r = Eigen::Vector2d(map.F[1] / map.F[0] - 1.0,
                            map.F[2] / map.F[0] + 1.0);
    res.f0 = map.F[0];
    return res;
  }

  double clamp_axis(double t) const {
    t = std::clamp(t, -cfg_.t_max, cfg_.t_max);
    if (std::abs(t) < cfg_.t_min) t = (t < 0.0 ? -cfg_.t_min : cfg_.t_min);
    return t;
  }

  Eigen::VectorXd clamp(Eigen::VectorXd x) const {
    for (Eigen::Index i = 0; i < x.size(); ++i) x[i] = clamp_axis(x[i]);
    return x;
  }

  // Central-difference Jacobian of the residual pair, one-sided next to the
  // amplitude endpoints.
  std::optional<Eigen::MatrixXd> jacobian(const Eigen::VectorXd& x,
                                          const Eigen::Vector2d& r0) const {
    constexpr double h = 1e-6;
    Eigen::MatrixXd jac(2, x.size());
    for (Eigen::Index i = 0; i < x.size(); ++i) {
      Eigen::VectorXd xp = x, xm = x;
      xp[i] = x[i] + h;
      xm[i] = x[i] - h;
      const bool plus_ok = std::abs(xp[i]) <= cfg_.t_max;
      const bool minus_ok = std::abs(xm[i]) <= cfg_.t_max;
      if (plus_ok && minus_ok) {
        const auto rp = eval(xp);
        const auto rm = eval(xm);
        if (!rp || !rm) return std::nullopt;
        jac.col(i) = (rp->r - rm->r) / (2.0 * h);
      } else if (plus_ok) {
        const auto rp = eval(xp);
        if (!rp) return std::nullopt;
        jac.col(i) = (rp->r - r0) / h;
      } else if (minus_ok) {
        const auto rm = eval(xm);
        if (!rm) return std::nullopt;
        jac.col(i) = (r0 - rm->r) / h;
      } else {
        return std::nullopt;
      }
    }
    return jac;
  }

  // Damped Newton from one seed.  Returns the converged point or nullopt.
  std::optional<Eigen::VectorXd> newton(Eigen::VectorXd x) const {
    auto res = eval(x);
    if (!res) return std::nullopt;
    double norm = res->r.norm();
    for (int iter = 0; iter < cfg_.max_iterations; ++iter) {
      if (norm < cfg_.tol) return x;
      const auto jac = jacobian(x, res->r);
      if (!jac) return std::nullopt;
      Eigen::VectorXd step;
      if (free_count() == 2) {
        const Eigen::Matrix2d j2 = *jac;
        if (std::abs(j2.determinant()) < 1e-300) return std::nullopt;
        step = j2.partialPivLu().solve(-res->r);
      } else {
        // Least-norm step for non-square systems.
        Eigen::JacobiSVD<Eigen::MatrixXd> svd(
            *jac, Eigen::ComputeThinU | Eigen::ComputeThinV);
        svd.setThreshold(1e-12);
        step = svd.solve(-res->r);
      }
      if (!step.allFinite()) return std::nullopt;

      double lambda = 1.0;
      bool moved = false;
      for (int ls = 0; ls < 40; ++ls) {
        const Eigen::VectorXd cand = clamp(x + lambda * step);
        const auto cand_res = eval(cand);
        if (cand_res && cand_res->r.norm() < norm) {
          x = cand;
          res = cand_res;
          norm = cand_res->r.norm();
          moved = true;
          break;
        }
        lambda *= 0.5;
      }
      if (!moved) break;
    }
    return (norm < cfg_.tol) ? std::optional<Eigen::VectorXd>(x) : std::nullopt;
  }

  // For underdetermined systems: climb F0^2 along the solution manifold.
  Eigen::VectorXd maximize_on_manifold(Eigen::VectorXd x) const {
    auto res = eval(x);
    if (!res) return x;
    double best_p = res->f0 * res->f0;
    for (int outer = 0; outer < 100; ++outer) {
      const auto jac = jacobian(x, res->r);
      if (!jac) break;
      Eigen::JacobiSVD<Eigen::MatrixXd> svd(*jac, Eigen::ComputeFullV);
      svd.setThreshold(1e-10);
      const Eigen::Index rank = svd.rank();
      if (rank >= x.size()) break;
      const Eigen::MatrixXd null_basis =
          svd.matrixV().rightCols(x.size() - rank);

      // Numeric gradient of F0^2.
      constexpr double h = 1e-6;
      Eigen::VectorXd grad(x.size());
      bool grad_ok = true;
      for (Eigen::Index i = 0; i < x.size(); ++i) {
        Eigen::VectorXd xp = clamp([&] { auto v = x; v[i] += h; return v; }());
        Eigen::VectorXd xm = clamp([&] { auto v = x; v[i] -= h; return v; }());
        const auto rp = eval(xp);
        const auto rm = eval(xm);
        if (!rp || !rm || xp[i] == xm[i]) {
          grad_ok = false;
          break;
        }
        grad[i] = (rp->f0 * rp->f0 - rm->f0 * rm->f0) / (xp[i] - xm[i]);
      }
      if (!grad_ok) break;

      const Eigen::VectorXd tangent = null_basis * (null_basis.transpose() * grad);
      if (tangent.norm() < 1e-9) break;

      bool advanced = false;
      double alpha = 0.1;
      for (int ls = 0; ls < 20; ++ls) {
        const auto trial = newton(clamp(x + alpha * tangent.normalized()));
        if (trial) {
          const auto trial_res = eval(*trial);
          if (trial_res && trial_res->f0 * trial_res->f0 > best_p + 1e-14) {
            x = *trial;
            res = trial_res;
            best_p = trial_res->f0 * trial_res->f0;
            advanced = true;
            break;
          }
        }
        alpha *= 0.5;
      }
      if (!advanced) break;
    }
    return x;
  }

 private:
  SequenceSpec seq_;
  std::vector<double> frozen_;
  SolveConfig cfg_;
  std::size_t free_count_ = 0;
};

std::vector<Eigen::VectorXd> make_seeds(std::size_t dims,
                                        const SolveConfig& cfg) {
  std::vector<double> mags(cfg.grid);
  for (int i = 0; i < cfg.grid; ++i) {
    mags[i] = (i + 0.5) / cfg.grid;  // open (0, 1), no zero, no endpoint
  }
  std::vector<Eigen::VectorXd> seeds;
  const long patterns = 1L << dims;
  Eigen::VectorXd seed(static_cast<Eigen::Index>(dims));
  std::vector<int> idx(dims, 0);
  while (true) {
    for (long s = 0; s < patterns; ++s) {
      for (std::size_t d = 0; d < dims; ++d) {
        const double sign = (s >> d) & 1 ? -1.0 : 1.0;
        seed[static_cast<Eigen::Index>(d)] = sign * mags[idx[d]];
      }
      seeds.push_back(seed);
      if (cfg.seed_cap > 0 &&
          static_cast<long>(seeds.size()) >= cfg.seed_cap) {
        return seeds;
      }
    }
    std::size_t d = 0;
    while (d < dims && ++idx[d] == cfg.grid) {
      idx[d] = 0;
      ++d;
    }
    if (d == dims) break;
  }
  return seeds;
}

bool lexicographic_less(const std::vector<double>& a,
                        const std::vector<double>& b) {
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

}  // namespace

GateSolution verify_solution(const SequenceSpec& seq,
                             std::span<const double> amps) {
  const ComposedMap map = compose(seq, amps);
  GateSolution sol;
  sol.sequence = seq;
  sol.amplitudes.assign(amps.begin(), amps.end());
  sol.etas.reserve(amps.size());
  for (double t : amps) sol.etas.push_back(t * t);
  sol.residuals = ns_residuals(map);
  if (std::abs(sol.residuals.first) > kResidualBound ||
      std::abs(sol.residuals.second) > kResidualBound) {
    throw NotAGateError("candidate does not satisfy the NS conditions");
  }
  sol.probability = map.F[0] * map.F[0];
  if (!(sol.probability > 0.0 && sol.probability < 0.5)) {
    throw NotAGateError("success probability outside (0, 1/2)");
  }
  return sol;
}

std::vector<GateSolution> solve_ns(const SequenceSpec& seq,
                                   const SolveConfig& config,
                                   std::span<const double> frozen) {
  if (seq.net_offset() != 0) {
    throw NotAGateError("sequence net offset must be 0");
  }
  if (frozen.size() > seq.size()) {
    throw std::invalid_argument("more frozen amplitudes than elements");
  }
  if (config.grid < 5) throw std::invalid_argument("grid must be >= 5");
  if (!(config.tol > 0.0)) throw std::invalid_argument("tolerance must be > 0");

  const NsSystem system(seq, frozen, config);
  const std::size_t dims = system.free_count();
  if (dims == 0) {
    // Nothing to solve; the frozen amplitudes either are a gate or are not.
    std::vector<GateSolution> out;
    try {
      out.push_back(verify_solution(seq, frozen));
    } catch (const Error&) {
    }
    return out;
  }

  const auto seeds = make_seeds(dims, config);

  // Converged points, gathered per contiguous seed chunk so that the result
  // set does not depend on thread scheduling.
  const int workers = std::max(1, config.workers);
  std::vector<std::vector<Eigen::VectorXd>> found(workers);
  auto run_chunk = [&](int w) {
    const std::size_t lo = seeds.size() * w / workers;
    const std::size_t hi = seeds.size() * (w + 1) / workers;
    for (std::size_t i = lo; i < hi; ++i) {
      auto root = system.newton(seeds[i]);
      if (!root) continue;
      if (dims > 2) *root = system.maximize_on_manifold(*root);
      found[w].push_back(*root);
    }
  };
  if (workers == 1) {
    run_chunk(0);
  } else {
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (int w = 0; w < workers; ++w) pool.emplace_back(run_chunk, w);
    for (auto& th : pool) th.join();
  }

  // Build candidates with a canonical ordering, then deduplicate by
  // eta-vector: sign gauges with one eta-vector are one solution class.
  struct Candidate {
    std::vector<double> amps;
    std::vector<double> etas;
    double residual_norm;
  };
  std::vector<Candidate> candidates;
  for (const auto& chunk : found) {
    for (const auto& x : chunk) {
      const auto res = system.eval(x);
      if (!res || res->r.norm() >= config.tol) continue;
      Candidate c;
      c.amps = system.full_amplitudes(x);
      for (double t : c.amps) c.etas.push_back(t * t);
      c.residual_norm = res->r.norm();
      candidates.push_back(std::move(c));
    }
  }
  std::sort(candidates.begin(), candidates.end(),
            [](const Candidate& a, const Candidate& b) {
              if (a.residual_norm != b.residual_norm)
                return a.residual_norm < b.residual_norm;
              if (a.etas != b.etas) return lexicographic_less(a.etas, b.etas);
              return lexicographic_less(a.amps, b.amps);
            });

  std::vector<GateSolution> out;
  for (const auto& c : candidates) {
    bool duplicate = false;
    for (const auto& kept : out) {
      double gap = 0.0;
      for (std::size_t i = 0; i < c.etas.size(); ++i) {
        gap = std::max(gap, std::abs(c.etas[i] - kept.etas[i]));
      }
      if (gap <= config.dedupe_radius) {
        duplicate = true;
        break;
      }
    }
    if (duplicate) continue;
    out.push_back(verify_solution(seq, c.amps));
  }

  // Probabilities equal within 1e-9 are one rank; such ties are ordered
  // lexicographically by eta-vector.
  std::sort(out.begin(), out.end(),
            [](const GateSolution& a, const GateSolution& b) {
              const auto qa = std::llround(a.probability * 1e9);
              const auto qb = std::llround(b.probability * 1e9);
              if (qa != qb) return qa > qb;
              return lexicographic_less(a.etas, b.etas);
            });
  return out;
}

double ns_sign_certificate(const SequenceSpec& seq, int grid) {
  SolveConfig cfg;
  cfg.grid = grid;
  const auto seeds = make_seeds(seq.size(), cfg);
  double min_product = std::numeric_limits<double>::infinity();
  std::vector<double> amps(seq.size());
  for (const auto& seed : seeds) {
    for (std::size_t i = 0; i < amps.size(); ++i) amps[i] = seed[i];
    const ComposedMap map = compose(seq, amps);
    min_product = std::min(min_product, map.F[2] * map.F[0]);
  }
  return min_product;
}

std::vector<ScanEntry> scan_sequences(int max_k, int length,
                                      const SolveConfig& config) {
  if (length < 2 || length > 3) {
    throw std::invalid_argument("scan length must be 2 or 3");
  }
  if (max_k < 0 || max_k > 4) {
    throw std::invalid_argument("max_k must lie in [0, 4]");
  }

  std::vector<ScanEntry> entries;
  std::vector<ElementSpec> stack;
  auto enumerate = [&](auto&& self, int offset) -> void {
    if (static_cast<int>(stack.size()) == length) {
      if (offset == 0) {
        entries.push_back({SequenceSpec(stack), {}});
      }
      return;
    }
    for (int k = 0; k <= max_k; ++k) {
      for (int n = 0; n <= max_k; ++n) {
        if (n > k + offset + 2) continue;
        if (offset + k - n < 0) continue;
        stack.push_back({k, n});
        self(self, offset + k - n);
        stack.pop_back();
      }
    }
  };
  enumerate(enumerate, 0);

  for (auto& entry : entries) {
    entry.solutions = solve_ns(entry.sequence, config);
  }

  std::sort(entries.begin(), entries.end(),
            [](const ScanEntry& a, const ScanEntry& b) {
              const double pa = a.best() ? a.best()->probability : -1.0;
              const double pb = b.best() ? b.best()->probability : -1.0;
              if (pa != pb) return pa > pb;
              return a.sequence.str() < b.sequence.str();
            });
  return entries;
}

}  // namespace nsgate
