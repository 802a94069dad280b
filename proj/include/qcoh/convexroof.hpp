#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "qcoh/measures.hpp"
#include "qcoh/statespace.hpp"

namespace qcoh {

enum class RoofObjective {
  CoherenceConcurrence,
  IntrinsicRandomness,
  EntanglementConcurrence,
};

struct RoofConfig {
  int ensemble_size = 0;  // 0 = auto, min(r^2, d*r)
  int restarts = 10;
  int max_iterations = 200;  // full sweeps per restart
  double tolerance = 1e-10;  // stop when a sweep improves by less than this
  std::uint64_t seed = 0;
};

/// Certified upper bound on a convex roof: the returned ensemble realizes the
/// target state and achieves exactly `value` as its weighted average.
struct RoofResult {
  double value;
  Ensemble ensemble;
  Certification certification = Certification::UpperBound;
  int iterations_used = 0;
  std::vector<double> restart_values;
  int best_restart = 0;
  std::string diagnostics;
};

/// Ensemble of m members with unnormalized states sum_k conj(V(k,i))
/// sqrt(lambda_k) |e_k> from the spectral eigenpairs of rho. V must have
/// orthonormal rows (r = rank of rho after clipping). Members with
/// probability < 1e-14 are dropped.
Ensemble decomposition_from_isometry(const DensityMatrix& rho, const Matrix& V);

/// Minimizes the weighted average of a pure-state objective over ensemble
/// realizations of rho. Local search: seeded random starts, then sweeps of
/// two-column Givens rotations on the unnormalized-member matrix, each angle
/// optimized by grid scan plus golden-section refinement. Deterministic
/// given config.seed; restart k draws from a stream derived from (seed, k).
RoofResult convex_roof_minimize(const DensityMatrix& rho, RoofObjective objective,
                                const RoofConfig& config,
                                std::optional<BipartiteSplit> split = std::nullopt);

/// Convex roof of the pure-state coherence concurrence (the mixed-state
/// measure). For d = 2 the diagnostics carry the 2|rho_12| cross-check.
RoofResult coherence_concurrence(const DensityMatrix& rho, const RoofConfig& config);

/// Convex roof of the dephased-state entropy (coherence of formation).
RoofResult intrinsic_randomness(const DensityMatrix& rho, const RoofConfig& config);

/// Convex-roof upper bound on the entanglement concurrence. For a 2x2 split
/// the diagnostics flag any excess over the exact Wootters value.
RoofResult mixed_concurrence_upper(const DensityMatrix& rho, const BipartiteSplit& split,
                                   const RoofConfig& config);

/// Weighted average of the objective over an explicit ensemble; the basic
/// upper-bound evaluation used by the optimizer and the convexity checks.
double ensemble_objective(const Ensemble& e, RoofObjective objective,
                          std::optional<BipartiteSplit> split = std::nullopt);

}  // namespace qcoh
