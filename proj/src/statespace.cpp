#include "qcoh/statespace.hpp"

#include <algorithm>
#include <cmath>
#include <random>

namespace qcoh {

namespace {

std::mt19937_64 make_rng(std::uint64_t seed) { return std::mt19937_64(seed); }

Complex gaussian(std::mt19937_64& rng) {
  std::normal_distribution<double> n(0.0, 1.0);
  const double re = n(rng);
  const double im = n(rng);
  return {re, im};
}

}  // namespace

std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t k) {
  // splitmix64 on the pair; restart streams are independent of each other.
  std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (k + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

DensityMatrix validate_density(const Matrix& raw, double tol) {
  if (raw.rows() != raw.cols()) {
    throw Error("ShapeMismatch: matrix is " + std::to_string(raw.rows()) + "x" +
                std::to_string(raw.cols()));
  }
  const double asym = (raw - raw.adjoint()).cwiseAbs().maxCoeff();
  if (asym >= tol) {
    throw Error("NotHermitian: asymmetry " + std::to_string(asym));
  }
  Matrix m = 0.5 * (raw + raw.adjoint());

  const double trace_err = std::abs(m.trace().real() - 1.0) + std::abs(m.trace().imag());
  if (trace_err > tol) {
    throw Error("TraceNotOne: |trace - 1| = " + std::to_string(trace_err));
  }

  Eigen::SelfAdjointEigenSolver<Matrix> es(m, Eigen::EigenvaluesOnly);
  const double min_eig = es.eigenvalues().minCoeff();
  if (min_eig < -tol) {
    throw Error("NotPositive: min eigenvalue " + std::to_string(min_eig));
  }
  return DensityMatrix{std::move(m)};
}

PureState validate_pure(const Vector& raw, double tol) {
  const double norm_err = std::abs(raw.squaredNorm() - 1.0);
  if (norm_err > tol) {
    throw Error("NotNormalized: |norm^2 - 1| = " + std::to_string(norm_err));
  }
  return PureState{raw};
}

DensityMatrix pure_to_density(const PureState& psi) {
  return DensityMatrix{psi.amps * psi.amps.adjoint()};
}

DensityMatrix ensemble_to_density(const Ensemble& e) {
  if (e.members.empty()) throw Error("EmptyEnsemble");
  const int d = e.members.front().state.dim();
  Matrix m = Matrix::Zero(d, d);
  for (const auto& [p, psi] : e.members) {
    if (psi.dim() != d) throw Error("DimMismatch: ensemble members differ in dim");
    m += p * (psi.amps * psi.amps.adjoint());
  }
  return DensityMatrix{std::move(m)};
}

DensityMatrix dephase(const DensityMatrix& rho) {
  Matrix m = Matrix::Zero(rho.dim(), rho.dim());
  m.diagonal() = rho.mat.diagonal();
  return DensityMatrix{std::move(m)};
}

double von_neumann_entropy(const DensityMatrix& rho) {
  Eigen::SelfAdjointEigenSolver<Matrix> es(rho.mat, Eigen::EigenvaluesOnly);
  const Eigen::VectorXd lam = clipped_eigenvalues(es);
  double s = 0.0;
  for (int i = 0; i < lam.size(); ++i) {
    if (lam(i) > 0.0) s -= lam(i) * std::log2(lam(i));
  }
  return s;
}

DensityMatrix tensor(const DensityMatrix& a, const DensityMatrix& b) {
  const int da = a.dim();
  const int db = b.dim();
  Matrix m(da * db, da * db);
  for (int i = 0; i < da; ++i)
    for (int j = 0; j < da; ++j)
      m.block(i * db, j * db, db, db) = a.mat(i, j) * b.mat;
  return DensityMatrix{std::move(m)};
}

DensityMatrix partial_trace(const DensityMatrix& rho, const BipartiteSplit& split,
                            Subsystem keep) {
  if (rho.dim() != split.dim()) {
    throw Error("DimMismatch: state dim " + std::to_string(rho.dim()) +
                " != " + std::to_string(split.dimS) + "*" + std::to_string(split.dimA));
  }
  const int dS = split.dimS;
  const int dA = split.dimA;
  if (keep == Subsystem::S) {
    Matrix m = Matrix::Zero(dS, dS);
    for (int i = 0; i < dS; ++i)
      for (int j = 0; j < dS; ++j)
        for (int k = 0; k < dA; ++k) m(i, j) += rho.mat(i * dA + k, j * dA + k);
    return DensityMatrix{std::move(m)};
  }
  Matrix m = Matrix::Zero(dA, dA);
  for (int i = 0; i < dA; ++i)
    for (int j = 0; j < dA; ++j)
      for (int k = 0; k < dS; ++k) m(i, j) += rho.mat(k * dA + i, k * dA + j);
  return DensityMatrix{std::move(m)};
}

PureState maximally_coherent_state(int d) {
  if (d < 1) throw Error("BadDim: d must be >= 1");
  Vector v = Vector::Constant(d, Complex(1.0 / std::sqrt(double(d)), 0.0));
  return PureState{std::move(v)};
}

PureState mcs_with_phases(int d, const std::vector<double>& theta) {
  if (d < 1) throw Error("BadDim: d must be >= 1");
  if (static_cast<int>(theta.size()) != d) {
    throw Error("BadParams: theta must have length d");
  }
  Vector v(d);
  const double inv = 1.0 / std::sqrt(double(d));
  for (int j = 0; j < d; ++j) v(j) = std::polar(inv, theta[j]);
  return PureState{std::move(v)};
}

PureState random_pure(int d, std::uint64_t seed) {
  if (d < 1) throw Error("BadDim: d must be >= 1");
  auto rng = make_rng(seed);
  Vector v(d);
  for (int i = 0; i < d; ++i) v(i) = gaussian(rng);
  v.normalize();
  return PureState{std::move(v)};
}

DensityMatrix random_density(int d, int rank, std::uint64_t seed) {
  if (rank < 1 || rank > d) {
    throw Error("RankOutOfRange: rank " + std::to_string(rank) + " for d=" +
                std::to_string(d));
  }
  auto rng = make_rng(seed);
  Matrix g(d, rank);
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < rank; ++j) g(i, j) = gaussian(rng);
  Matrix m = g * g.adjoint();
  m /= m.trace().real();
  return DensityMatrix{std::move(m)};
}

DensityMatrix random_incoherent(int d, std::uint64_t seed) {
  if (d < 1) throw Error("BadDim: d must be >= 1");
  auto rng = make_rng(seed);
  std::exponential_distribution<double> ex(1.0);
  Eigen::VectorXd w(d);
  for (int i = 0; i < d; ++i) w(i) = ex(rng);
  w /= w.sum();
  Matrix m = Matrix::Zero(d, d);
  m.diagonal() = w.cast<Complex>();
  return DensityMatrix{std::move(m)};
}

Eigen::VectorXd clipped_eigenvalues(const Eigen::SelfAdjointEigenSolver<Matrix>& es,
                                    double clip) {
  Eigen::VectorXd lam = es.eigenvalues();
  for (int i = 0; i < lam.size(); ++i) {
    if (lam(i) < 0.0) {
      if (lam(i) < -clip) {
        throw Error("NotPositive: eigenvalue " + std::to_string(lam(i)));
      }
      lam(i) = 0.0;
    }
  }
  return lam;
}

Matrix psd_sqrt(const Matrix& hermitian_psd) {
  Eigen::SelfAdjointEigenSolver<Matrix> es(hermitian_psd);
  Eigen::VectorXd lam = clipped_eigenvalues(es);
  return es.eigenvectors() * lam.cwiseSqrt().asDiagonal().toDenseMatrix().cast<Complex>() *
         es.eigenvectors().adjoint();
}

}  // namespace qcoh
