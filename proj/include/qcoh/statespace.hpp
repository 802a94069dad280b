#pragma once

#include <complex>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <Eigen/Dense>

namespace qcoh {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;

// Default tolerance for positivity/trace validation. Loose enough to absorb
// accumulated floating-point error from channel application.
constexpr double kValidationTol = 1e-8;

// All domain errors carry a short tag ("NotPositive: ...") plus the violated
// magnitude in the message.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// d x d complex Hermitian, positive semidefinite, unit-trace state.
/// The reference (incoherent) basis is the standard basis; basis labels are
/// 1..d in all user-facing text, storage is 0-based.
struct DensityMatrix {
  Matrix mat;

  int dim() const { return static_cast<int>(mat.rows()); }
  Complex entry(int j, int k) const { return mat(j, k); }
};

/// Unit-norm amplitude vector in the fixed reference basis.
struct PureState {
  Vector amps;

  int dim() const { return static_cast<int>(amps.size()); }
};

struct EnsembleMember {
  double probability;
  PureState state;
};

/// Probability-weighted list of pure states realizing a density matrix.
struct Ensemble {
  std::vector<EnsembleMember> members;
};

/// Composite index order is S-major: |i>^S |j>^A sits at row i*dimA + j
/// (0-based). Fixed once; the JSON file format uses the same order.
struct BipartiteSplit {
  int dimS;
  int dimA;

  int dim() const { return dimS * dimA; }
};

DensityMatrix validate_density(const Matrix& raw, double tol = kValidationTol);
PureState validate_pure(const Vector& raw, double tol = kValidationTol);

DensityMatrix pure_to_density(const PureState& psi);
DensityMatrix ensemble_to_density(const Ensemble& e);

/// Zeroes the off-diagonal entries (Delta(rho) in the reference basis).
DensityMatrix dephase(const DensityMatrix& rho);

/// Von Neumann entropy in bits. Eigenvalues in [-tol, 0) are clipped to 0.
double von_neumann_entropy(const DensityMatrix& rho);

/// Kronecker product, S-major composite order.
DensityMatrix tensor(const DensityMatrix& a, const DensityMatrix& b);

enum class Subsystem { S, A };

DensityMatrix partial_trace(const DensityMatrix& rho, const BipartiteSplit& split,
                            Subsystem keep);

/// |Psi_d> with all amplitudes 1/sqrt(d).
PureState maximally_coherent_state(int d);

/// Amplitudes e^{i theta_j}/sqrt(d); theta = 0 recovers |Psi_d>.
PureState mcs_with_phases(int d, const std::vector<double>& theta);

PureState random_pure(int d, std::uint64_t seed);

/// Ginibre-induced state G G^dag / tr(G G^dag), G of shape d x r.
DensityMatrix random_density(int d, int rank, std::uint64_t seed);

/// Diagonal state with Dirichlet-uniform weights.
DensityMatrix random_incoherent(int d, std::uint64_t seed);

// Eigendecomposition helpers shared by the measure and roof code.

/// Eigenvalues clipped at -clip (values in [-clip, 0) mapped to 0); throws
/// if an eigenvalue is more negative than that.
Eigen::VectorXd clipped_eigenvalues(const Eigen::SelfAdjointEigenSolver<Matrix>& es,
                                    double clip = 1e-10);

/// Principal square root of a PSD Hermitian matrix, with clipping.
Matrix psd_sqrt(const Matrix& hermitian_psd);

/// Deterministic per-restart stream derived from (seed, k).
std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t k);

}  // namespace qcoh
