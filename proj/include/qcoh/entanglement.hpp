#pragma once

#include <array>

#include "qcoh/statespace.hpp"

namespace qcoh {

/// Square roots of the eigenvalues of rho (sy x sy) rho^* (sy x sy),
/// sorted nonincreasing.
struct SpinFlipSpectrum {
  std::array<double, 4> lambdas;
};

/// C_E(|psi>) = sqrt(2 (1 - tr rho_S^2)) for a bipartite pure state.
double pure_concurrence(const PureState& psi, const BipartiteSplit& split);

/// Equivalent 2x2-minor form 2 sqrt(sum |psi_ik psi_jl - psi_il psi_jk|^2).
double pure_concurrence_determinant_form(const PureState& psi,
                                         const BipartiteSplit& split);

/// Spin-flip spectrum of a two-qubit state, computed through the Hermitian
/// surrogate sqrt(rho) (sy x sy) rho^* (sy x sy) sqrt(rho).
SpinFlipSpectrum spin_flip_spectrum(const DensityMatrix& rho);

/// Wootters formula max(lambda_1 - lambda_2 - lambda_3 - lambda_4, 0).
double wootters_concurrence(const DensityMatrix& rho);

}  // namespace qcoh
