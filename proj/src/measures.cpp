#include "qcoh/measures.hpp"

#include <algorithm>
#include <cmath>

namespace qcoh {

std::string certification_name(Certification c) {
  switch (c) {
    case Certification::Exact: return "exact";
    case Certification::UpperBound: return "upper-bound";
    case Certification::LowerBound: return "lower-bound";
  }
  return "?";
}

MeasureReport measure_report(const std::string& name, double value, Certification cert) {
  return MeasureReport{name, value, cert, ""};
}

double l1_coherence(const DensityMatrix& rho) {
  const int d = rho.dim();
  double s = 0.0;
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j)
      if (i != j) s += std::abs(rho.mat(i, j));
  return s;
}

double l1_coherence_via_ggm(const DensityMatrix& rho) {
  const int d = rho.dim();
  Eigen::SelfAdjointEigenSolver<Matrix> es(rho.mat);
  const Eigen::VectorXd lam = clipped_eigenvalues(es);
  std::vector<int> keep;
  for (int i = 0; i < d; ++i)
    if (lam(i) > 1e-13) keep.push_back(i);
  const int r = static_cast<int>(keep.size());
  Matrix scaled(d, r);
  for (int i = 0; i < r; ++i)
    scaled.col(i) = std::sqrt(lam(keep[i])) * es.eigenvectors().col(keep[i]);
  // With rho = U D U^dag, the nonzero eigenvalues of rho Lambda rho^* Lambda
  // for the symmetric pair generator Lambda^{j,k} are the squared singular
  // values of a b^T + b a^T, where a and b are rows j and k of U D^{1/2}
  // restricted to the support. Working on the support keeps rank-deficient
  // states exact.
  double total = 0.0;
  Matrix n(r, r);
  for (int j = 0; j < d; ++j) {
    for (int k = j + 1; k < d; ++k) {
      n.noalias() = scaled.row(j).transpose() * scaled.row(k) +
                    scaled.row(k).transpose() * scaled.row(j);
      Eigen::JacobiSVD<Matrix> svd(n);
      const double s1 = r > 0 ? svd.singularValues()(0) : 0.0;
      const double s2 = r > 1 ? svd.singularValues()(1) : 0.0;
      total += s1 - s2;
    }
  }
  return total;
}

double relative_entropy_coherence(const DensityMatrix& rho) {
  return von_neumann_entropy(dephase(rho)) - von_neumann_entropy(rho);
}

double pure_coherence_concurrence(const PureState& psi) {
  // <psi| Lambda_s^{j,k} |psi^*> = 2 conj(a_j) conj(a_k)
  const int d = psi.dim();
  double s = 0.0;
  for (int j = 0; j < d; ++j)
    for (int k = j + 1; k < d; ++k)
      s += 2.0 * std::abs(psi.amps(j)) * std::abs(psi.amps(k));
  return s;
}

double pure_intrinsic_randomness(const PureState& psi) {
  double s = 0.0;
  for (int i = 0; i < psi.dim(); ++i) {
    const double p = std::norm(psi.amps(i));
    if (p > 0.0) s -= p * std::log2(p);
  }
  return s;
}

double binary_entropy_of_concurrence(double c) {
  if (c < 0.0 || c > 1.0) {
    throw Error("OutOfRange: concurrence " + std::to_string(c) + " not in [0,1]");
  }
  const double x = (1.0 + std::sqrt(std::max(0.0, 1.0 - c * c))) / 2.0;
  double h = 0.0;
  if (x > 0.0) h -= x * std::log2(x);
  if (x < 1.0) h -= (1.0 - x) * std::log2(1.0 - x);
  return h;
}

double qubit_coherence_concurrence(const DensityMatrix& rho) {
  if (rho.dim() != 2) throw Error("DimMismatch: qubit formula needs d=2");
  return 2.0 * std::abs(rho.mat(0, 1));
}

double qubit_intrinsic_randomness(const DensityMatrix& rho) {
  return binary_entropy_of_concurrence(
      std::min(1.0, qubit_coherence_concurrence(rho)));
}

bool is_incoherent(const DensityMatrix& rho, double tol) {
  const int d = rho.dim();
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j)
      if (i != j && std::abs(rho.mat(i, j)) > tol) return false;
  return true;
}

bool is_mcs(const PureState& psi, double tol) {
  const double target = 1.0 / std::sqrt(double(psi.dim()));
  for (int i = 0; i < psi.dim(); ++i)
    if (std::abs(std::abs(psi.amps(i)) - target) > tol) return false;
  return true;
}

}  // namespace qcoh
