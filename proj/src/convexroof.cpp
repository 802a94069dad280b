#include "qcoh/convexroof.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>

#include "qcoh/entanglement.hpp"

namespace qcoh {

namespace {

struct Spectral {
  Eigen::VectorXd lambda;  // positive eigenvalues, size r
  Matrix vectors;          // d x r
};

Spectral spectral_support(const DensityMatrix& rho) {
  Eigen::SelfAdjointEigenSolver<Matrix> es(rho.mat);
  const Eigen::VectorXd lam = clipped_eigenvalues(es);
  std::vector<int> keep;
  for (int i = 0; i < lam.size(); ++i)
    if (lam(i) > 1e-12) keep.push_back(i);
  // descending eigenvalue order
  std::reverse(keep.begin(), keep.end());
  Spectral s;
  s.lambda.resize(keep.size());
  s.vectors.resize(rho.dim(), keep.size());
  for (size_t i = 0; i < keep.size(); ++i) {
    s.lambda(i) = lam(keep[i]);
    s.vectors.col(i) = es.eigenvectors().col(keep[i]);
  }
  return s;
}

// Weighted objective of one unnormalized member: |w|^2 f(w / |w|). The
// concrete functors keep the hot loop devirtualized; make_objective wraps
// them for callers that need type erasure.
using ColumnObjective = std::function<double(const Vector&)>;

struct CoherenceConcurrenceObjective {
  // sum_{j<k} 2|w_j||w_k| = (sum |w_j|)^2 - |w|^2
  double operator()(const Vector& w) const {
    double s1 = 0.0;
    for (int i = 0; i < w.size(); ++i) s1 += std::abs(w(i));
    return s1 * s1 - w.squaredNorm();
  }
};

struct IntrinsicRandomnessObjective {
  double operator()(const Vector& w) const {
    const double n2 = w.squaredNorm();
    if (n2 < 1e-28) return 0.0;
    double s = 0.0;
    for (int i = 0; i < w.size(); ++i) {
      const double p = std::norm(w(i)) / n2;
      if (p > 0.0) s -= p * std::log2(p);
    }
    return n2 * s;
  }
};

struct EntanglementConcurrenceObjective {
  int dS;
  int dA;

  double operator()(const Vector& w) const {
    Eigen::Map<const Eigen::Matrix<Complex, Eigen::Dynamic, Eigen::Dynamic,
                                   Eigen::RowMajor>>
        a(w.data(), dS, dA);
    const double n2 = w.squaredNorm();
    double tr_g2;
    if (dS <= dA) {
      Matrix g = a * a.adjoint();
      tr_g2 = g.cwiseAbs2().sum();
    } else {
      Matrix g = a.adjoint() * a;
      tr_g2 = g.cwiseAbs2().sum();
    }
    return std::sqrt(std::max(0.0, 2.0 * (n2 * n2 - tr_g2)));
  }
};

EntanglementConcurrenceObjective checked_ce_objective(
    const std::optional<BipartiteSplit>& split, int dim) {
  if (!split) throw Error("BadObjective: entanglement roof needs a split");
  if (split->dim() != dim) {
    throw Error("DimMismatch: split " + std::to_string(split->dimS) + "x" +
                std::to_string(split->dimA) + " for dim " + std::to_string(dim));
  }
  return EntanglementConcurrenceObjective{split->dimS, split->dimA};
}

ColumnObjective make_objective(RoofObjective objective,
                               const std::optional<BipartiteSplit>& split, int dim) {
  switch (objective) {
    case RoofObjective::CoherenceConcurrence: return CoherenceConcurrenceObjective{};
    case RoofObjective::IntrinsicRandomness: return IntrinsicRandomnessObjective{};
    case RoofObjective::EntanglementConcurrence: return checked_ce_objective(split, dim);
  }
  throw Error("BadObjective");
}

double golden_minimize(const std::function<double(double)>& g, double lo, double hi,
                       int iters = 40) {
  constexpr double phi = 0.6180339887498949;
  double a = lo, b = hi;
  double x1 = b - phi * (b - a), x2 = a + phi * (b - a);
  double f1 = g(x1), f2 = g(x2);
  for (int i = 0; i < iters; ++i) {
    if (f1 < f2) {
      b = x2;
      x2 = x1;
      f2 = f1;
      x1 = b - phi * (b - a);
      f1 = g(x1);
    } else {
      a = x1;
      x1 = x2;
      f1 = f2;
      x2 = a + phi * (b - a);
      f2 = g(x2);
    }
  }
  return f1 < f2 ? x1 : x2;
}

Matrix random_unitary(int m, std::mt19937_64& rng) {
  std::normal_distribution<double> n(0.0, 1.0);
  Matrix z(m, m);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) z(i, j) = Complex(n(rng), n(rng));
  Eigen::HouseholderQR<Matrix> qr(z);
  return qr.householderQ();
}

// One restart of the Givens-sweep local search on the unnormalized-member
// matrix phi (d x m). Returns the final total value; phi is optimized in
// place. The objective is invariant under per-column phases, so two
// generator types (real and imaginary two-column rotations) span all
// value-changing directions.
template <typename H>
double sweep_optimize(Matrix& phi, const H& h, const RoofConfig& config,
                      int& sweeps_used) {
  const int m = static_cast<int>(phi.cols());
  std::vector<double> col_value(m);
  double total = 0.0;
  for (int c = 0; c < m; ++c) {
    col_value[c] = h(phi.col(c));
    total += col_value[c];
  }

  constexpr int kGrid = 17;
  const double half_pi = M_PI / 2.0;
  const int d = static_cast<int>(phi.rows());
  Vector up(d), vq(d);

  // The objective is invariant under per-column phases, so the value-changing
  // part of a two-column unitary is the mixing angle t plus the relative
  // phase f: up = cos(t) u - sin(t) e^{if} v, vq = sin(t) e^{-if} u + cos(t) v.
  // (f, t) and (f + pi, -t) coincide, so f ranges over [0, pi).
  constexpr double kPhases[] = {0.0, M_PI / 4.0, M_PI / 2.0, 3.0 * M_PI / 4.0};
  // Coarse sweeps scan a grid only; once they stall, fine sweeps add a
  // golden-section pass around zero angle to capture the sub-grid tail.
  bool fine = false;
  for (int sweep = 0; sweep < config.max_iterations; ++sweep) {
    const double before = total;
    for (int p = 0; p < m; ++p) {
      for (int q = p + 1; q < m; ++q) {
        const auto u = phi.col(p);
        const auto v = phi.col(q);
        auto rotate_into = [&](double t, double f) {
          const double c = std::cos(t), s = std::sin(t);
          const Complex se(s * std::cos(f), s * std::sin(f));
          up = c * u - se * v;
          vq = std::conj(se) * u + c * v;
        };
        auto rotated_value = [&](double t, double f) {
          rotate_into(t, f);
          return h(up) + h(vq);
        };
        const double base = col_value[p] + col_value[q];
        // coarse grid over the angle for each candidate phase, then
        // alternating golden-section refinements in angle and phase
        double best_t = 0.0, best_f = 0.0, best_g = base;
        const double step = M_PI / kGrid;
        for (const double f : kPhases) {
          for (int i = 0; i < kGrid; ++i) {
            const double t = -half_pi + (i + 0.5) * step;
            const double g = rotated_value(t, f);
            if (g < best_g) {
              best_g = g;
              best_t = t;
              best_f = f;
            }
          }
        }
        if (fine && best_g >= base - 1e-15) {
          for (const double f : kPhases) {
            const double t = golden_minimize(
                [&](double tt) { return rotated_value(tt, f); }, -step, step, 25);
            const double g = rotated_value(t, f);
            if (g < best_g) {
              best_g = g;
              best_t = t;
              best_f = f;
            }
          }
        }
        if (best_g < base - 1e-15) {
          best_t = golden_minimize(
              [&](double t) { return rotated_value(t, best_f); }, best_t - step,
              best_t + step, 25);
          best_f = golden_minimize(
              [&](double f) { return rotated_value(best_t, f); },
              best_f - M_PI / 4.0, best_f + M_PI / 4.0, 25);
          best_t = golden_minimize(
              [&](double t) { return rotated_value(t, best_f); }, best_t - step,
              best_t + step, 25);
          const double g_star = rotated_value(best_t, best_f);
          if (g_star < base - 1e-15) {
            rotate_into(best_t, best_f);
            phi.col(p) = up;
            phi.col(q) = vq;
            col_value[p] = h(phi.col(p));
            col_value[q] = h(phi.col(q));
            total += col_value[p] + col_value[q] - base;
          }
        }
      }
    }
    ++sweeps_used;
    if (before - total < config.tolerance) {
      if (fine) break;
      fine = true;
    }
  }
  return total;
}

// Local search plus a short iterated-local-search phase: kick the converged
// point with a random near-identity column mixing and re-sweep, keeping the
// kick only when it improves. Escapes the shallow basins that plain restarts
// keep refinding.
template <typename H>
double optimize_with_polish(Matrix& phi, const H& h, const RoofConfig& config,
                            int& sweeps_used, std::uint64_t kick_seed) {
  double value = sweep_optimize(phi, h, config, sweeps_used);
  const int m = static_cast<int>(phi.cols());
  std::mt19937_64 rng(kick_seed);
  std::normal_distribution<double> n(0.0, 1.0);
  constexpr double kKicks[] = {0.4, 0.15, 0.05};
  for (const double eps : kKicks) {
    Matrix g(m, m);
    for (int i = 0; i < m; ++i)
      for (int j = 0; j < m; ++j) g(i, j) = Complex(n(rng), n(rng));
    Eigen::HouseholderQR<Matrix> qr(Matrix::Identity(m, m) + eps * g);
    Matrix cand = phi * Matrix(qr.householderQ());
    const double v = sweep_optimize(cand, h, config, sweeps_used);
    if (v < value) {
      value = v;
      phi = cand;
    }
  }
  return value;
}

Ensemble ensemble_from_columns(const Matrix& phi) {
  Ensemble e;
  for (int c = 0; c < phi.cols(); ++c) {
    const double p = phi.col(c).squaredNorm();
    if (p < 1e-14) continue;
    e.members.push_back({p, PureState{phi.col(c) / std::sqrt(p)}});
  }
  return e;
}

}  // namespace

Ensemble decomposition_from_isometry(const DensityMatrix& rho, const Matrix& V) {
  const Spectral s = spectral_support(rho);
  const int r = static_cast<int>(s.lambda.size());
  if (V.rows() != r) {
    throw Error("NotIsometry: expected " + std::to_string(r) + " rows, got " +
                std::to_string(V.rows()));
  }
  const double err =
      (V * V.adjoint() - Matrix::Identity(r, r)).cwiseAbs().maxCoeff();
  if (err > 1e-10) {
    throw Error("NotIsometry: |V V^dag - I| = " + std::to_string(err));
  }
  const Matrix phi =
      s.vectors * s.lambda.cwiseSqrt().asDiagonal().toDenseMatrix().cast<Complex>() *
      V.conjugate();
  return ensemble_from_columns(phi);
}

double ensemble_objective(const Ensemble& e, RoofObjective objective,
                          std::optional<BipartiteSplit> split) {
  if (e.members.empty()) throw Error("EmptyEnsemble");
  const auto h = make_objective(objective, split, e.members.front().state.dim());
  double total = 0.0;
  for (const auto& [p, psi] : e.members) total += p * h(psi.amps);
  return total;
}

namespace {

template <typename H>
RoofResult run_restarts(const Matrix& phi0, const H& h, const RoofConfig& config) {
  const int m = static_cast<int>(phi0.cols());
  RoofResult best;
  best.value = std::numeric_limits<double>::infinity();
  Matrix best_phi;
  for (int k = 0; k < config.restarts; ++k) {
    Matrix phi = phi0;
    if (k > 0) {
      // restart 0 starts from the spectral decomposition itself
      std::mt19937_64 rng(derive_seed(config.seed, k));
      phi = phi0 * random_unitary(m, rng);
    }
    int sweeps = 0;
    const double value =
        optimize_with_polish(phi, h, config, sweeps, derive_seed(config.seed, 0x10000 + k));
    best.restart_values.push_back(value);
    best.iterations_used += sweeps;
    if (value < best.value) {
      best.value = value;
      best.best_restart = k;
      best_phi = phi;
    }
  }
  best.ensemble = ensemble_from_columns(best_phi);
  return best;
}

}  // namespace

RoofResult convex_roof_minimize(const DensityMatrix& rho, RoofObjective objective,
                                const RoofConfig& config,
                                std::optional<BipartiteSplit> split) {
  if (config.restarts < 1) throw Error("BadParams: restarts must be >= 1");
  const Spectral s = spectral_support(rho);
  const int d = rho.dim();
  const int r = static_cast<int>(s.lambda.size());
  int m = config.ensemble_size > 0 ? config.ensemble_size : std::min(r * r, d * r);
  if (m < r) {
    throw Error("BadParams: ensemble size " + std::to_string(m) + " < rank " +
                std::to_string(r));
  }

  Matrix phi0 = Matrix::Zero(d, m);
  phi0.leftCols(r) =
      s.vectors * s.lambda.cwiseSqrt().asDiagonal().toDenseMatrix().cast<Complex>();

  RoofResult best;
  switch (objective) {
    case RoofObjective::CoherenceConcurrence:
      best = run_restarts(phi0, CoherenceConcurrenceObjective{}, config);
      break;
    case RoofObjective::IntrinsicRandomness:
      best = run_restarts(phi0, IntrinsicRandomnessObjective{}, config);
      break;
    case RoofObjective::EntanglementConcurrence:
      best = run_restarts(phi0, checked_ce_objective(split, d), config);
      break;
  }
  best.value = ensemble_objective(best.ensemble, objective, split);
  return best;
}

RoofResult coherence_concurrence(const DensityMatrix& rho, const RoofConfig& config) {
  RoofResult res = convex_roof_minimize(rho, RoofObjective::CoherenceConcurrence, config);
  if (rho.dim() == 2) {
    const double exact = qubit_coherence_concurrence(rho);
    res.diagnostics = "qubit closed form " + std::to_string(exact) + ", gap " +
                      std::to_string(res.value - exact);
  }
  return res;
}

RoofResult intrinsic_randomness(const DensityMatrix& rho, const RoofConfig& config) {
  RoofResult res = convex_roof_minimize(rho, RoofObjective::IntrinsicRandomness, config);
  if (rho.dim() == 2) {
    const double exact = qubit_intrinsic_randomness(rho);
    res.diagnostics = "qubit closed form " + std::to_string(exact) + ", gap " +
                      std::to_string(res.value - exact);
  }
  return res;
}

RoofResult mixed_concurrence_upper(const DensityMatrix& rho, const BipartiteSplit& split,
                                   const RoofConfig& config) {
  RoofResult res =
      convex_roof_minimize(rho, RoofObjective::EntanglementConcurrence, config, split);
  if (split.dimS == 2 && split.dimA == 2) {
    const double exact = wootters_concurrence(rho);
    res.diagnostics = "wootters " + std::to_string(exact);
    if (res.value > exact + std::max(config.tolerance, 1e-3)) {
      res.diagnostics += " EXCEEDED by " + std::to_string(res.value - exact);
    }
  }
  return res;
}

}  // namespace qcoh
