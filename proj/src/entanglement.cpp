#include "qcoh/entanglement.hpp"

#include <algorithm>
#include <cmath>

namespace qcoh {

namespace {

Matrix sigma_y_pair() {
  Matrix sy(2, 2);
  sy << Complex(0, 0), Complex(0, -1), Complex(0, 1), Complex(0, 0);
  Matrix yy(4, 4);
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) yy.block(i * 2, j * 2, 2, 2) = sy(i, j) * sy;
  return yy;
}

void check_split(const PureState& psi, const BipartiteSplit& split) {
  if (psi.dim() != split.dim()) {
    throw Error("DimMismatch: state dim " + std::to_string(psi.dim()) +
                " != " + std::to_string(split.dimS) + "*" + std::to_string(split.dimA));
  }
}

}  // namespace

double pure_concurrence(const PureState& psi, const BipartiteSplit& split) {
  check_split(psi, split);
  // psi reshaped S-major into a dimS x dimA matrix; rho_S = A A^dag.
  Eigen::Map<const Eigen::Matrix<Complex, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>>
      a(psi.amps.data(), split.dimS, split.dimA);
  Matrix rho_s = a * a.adjoint();
  const double purity = rho_s.cwiseAbs2().sum();
  const double cmax2 = 2.0 * (1.0 - 1.0 / double(std::min(split.dimS, split.dimA)));
  const double c2 = std::clamp(2.0 * (1.0 - purity), 0.0, cmax2);
  return std::sqrt(c2);
}

double pure_concurrence_determinant_form(const PureState& psi,
                                         const BipartiteSplit& split) {
  check_split(psi, split);
  const int dS = split.dimS;
  const int dA = split.dimA;
  auto amp = [&](int i, int k) { return psi.amps(i * dA + k); };
  double sum = 0.0;
  for (int i = 0; i < dS; ++i)
    for (int j = i + 1; j < dS; ++j)
      for (int k = 0; k < dA; ++k)
        for (int l = k + 1; l < dA; ++l)
          sum += std::norm(amp(i, k) * amp(j, l) - amp(i, l) * amp(j, k));
  return 2.0 * std::sqrt(sum);
}

SpinFlipSpectrum spin_flip_spectrum(const DensityMatrix& rho) {
  if (rho.dim() != 4) throw Error("DimMismatch: spin flip needs d=4");
  // The lambdas are the singular values of the complex symmetric matrix
  // N = D^{1/2} U^T (sy x sy) U D^{1/2} with rho = U D U^dag: N^* N is
  // similar to rho (sy x sy) rho^* (sy x sy) on the support of rho.
  // Restricting to the support keeps rank-deficient states exact instead of
  // picking up sqrt(eps) noise from squared near-zero eigenvalues.
  const Matrix yy = sigma_y_pair();
  Eigen::SelfAdjointEigenSolver<Matrix> es(rho.mat);
  const Eigen::VectorXd lam = clipped_eigenvalues(es);
  std::vector<int> keep;
  for (int i = 0; i < 4; ++i)
    if (lam(i) > 1e-13) keep.push_back(i);
  const int r = static_cast<int>(keep.size());
  Matrix scaled(4, r);
  for (int i = 0; i < r; ++i)
    scaled.col(i) = std::sqrt(lam(keep[i])) * es.eigenvectors().col(keep[i]);
  const Matrix n = scaled.transpose() * yy * scaled;
  Eigen::JacobiSVD<Matrix> svd(n);
  std::array<double, 4> out{0.0, 0.0, 0.0, 0.0};
  for (int i = 0; i < r; ++i) out[i] = svd.singularValues()(i);
  return SpinFlipSpectrum{out};
}

double wootters_concurrence(const DensityMatrix& rho) {
  const auto [l] = spin_flip_spectrum(rho);
  return std::max(0.0, l[0] - l[1] - l[2] - l[3]);
}

}  // namespace qcoh
