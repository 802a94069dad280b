#include "qcoh/channels.hpp"

#include <algorithm>
#include <cmath>
#include <random>

namespace qcoh {

namespace {

bool one_nonzero_per_column(const Matrix& k, double tol) {
  for (int c = 0; c < k.cols(); ++c) {
    int nonzero = 0;
    for (int r = 0; r < k.rows(); ++r)
      if (std::abs(k(r, c)) > tol) ++nonzero;
    if (nonzero > 1) return false;
  }
  return true;
}

}  // namespace

KrausChannel validate_icptp(const std::vector<Matrix>& kraus, double tol) {
  if (kraus.empty()) throw Error("ShapeMismatch: empty Kraus list");
  const auto rows = kraus.front().rows();
  const auto cols = kraus.front().cols();
  for (const auto& k : kraus) {
    if (k.rows() != rows || k.cols() != cols) {
      throw Error("ShapeMismatch: Kraus operators differ in shape");
    }
  }
  Matrix sum = Matrix::Zero(cols, cols);
  for (const auto& k : kraus) sum += k.adjoint() * k;
  const double err = (sum - Matrix::Identity(cols, cols)).cwiseAbs().maxCoeff();
  if (err > tol) {
    throw Error("NotComplete: |sum K^dag K - I| = " + std::to_string(err));
  }
  bool incoherent = true;
  for (const auto& k : kraus) {
    if (!one_nonzero_per_column(k, tol)) {
      incoherent = false;
      break;
    }
  }
  return KrausChannel{static_cast<int>(cols), static_cast<int>(rows), kraus, incoherent};
}

DensityMatrix apply_channel(const KrausChannel& ch, const DensityMatrix& rho) {
  if (rho.dim() != ch.dim_in) {
    throw Error("DimMismatch: channel expects dim " + std::to_string(ch.dim_in));
  }
  Matrix out = Matrix::Zero(ch.dim_out, ch.dim_out);
  for (const auto& k : ch.kraus) out += k * rho.mat * k.adjoint();
  return validate_density(out, kValidationTol);
}

OutcomeList selective_outcomes(const KrausChannel& ch, const DensityMatrix& rho) {
  if (rho.dim() != ch.dim_in) {
    throw Error("DimMismatch: channel expects dim " + std::to_string(ch.dim_in));
  }
  OutcomeList list;
  for (const auto& k : ch.kraus) {
    Matrix m = k * rho.mat * k.adjoint();
    const double p = m.trace().real();
    if (p < 1e-14) continue;
    list.outcomes.push_back({p, validate_density(m / p, kValidationTol)});
  }
  return list;
}

KrausChannel generalized_cnot(int d, int dA) {
  if (d < 1) throw Error("BadDim: d must be >= 1");
  if (dA < d) {
    throw Error("AncillaTooSmall: dA=" + std::to_string(dA) + " < d=" + std::to_string(d));
  }
  const int n = d * dA;
  Matrix u = Matrix::Zero(n, n);
  for (int i = 0; i < d; ++i) {
    for (int j = 0; j < d; ++j) u(i * dA + (i + j) % d, i * dA + j) = 1.0;
    for (int j = d; j < dA; ++j) u(i * dA + j, i * dA + j) = 1.0;
  }
  return KrausChannel{n, n, {std::move(u)}, true};
}

KrausChannel cnot_gate() { return generalized_cnot(2, 2); }

DensityMatrix attach_ancilla(const DensityMatrix& rho, int dA) {
  if (dA < 1) throw Error("BadDim: dA must be >= 1");
  Matrix ref = Matrix::Zero(dA, dA);
  ref(0, 0) = 1.0;
  return tensor(rho, DensityMatrix{std::move(ref)});
}

KrausChannel random_incoherent_channel(int d, int n_kraus, std::uint64_t seed) {
  if (n_kraus < 1) throw Error("BadParams: n_kraus must be >= 1");
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> phase(0.0, 2.0 * M_PI);
  std::normal_distribution<double> normal(0.0, 1.0);

  // Column maps are sampled as permutations: within one Kraus operator no
  // two columns share a target row, so sum_n K^dag K is exactly diagonal and
  // per-column normalization makes it the identity. Arbitrary column maps
  // would leave stray off-diagonal completeness terms.
  std::vector<std::vector<int>> perm(n_kraus);
  for (int n = 0; n < n_kraus; ++n) {
    perm[n].resize(d);
    for (int c = 0; c < d; ++c) perm[n][c] = c;
    std::shuffle(perm[n].begin(), perm[n].end(), rng);
  }

  std::vector<Matrix> kraus(n_kraus, Matrix::Zero(d, d));
  for (int c = 0; c < d; ++c) {
    std::vector<double> mag(n_kraus);
    double norm2 = 0.0;
    for (int n = 0; n < n_kraus; ++n) {
      mag[n] = std::abs(normal(rng)) + 1e-3;
      norm2 += mag[n] * mag[n];
    }
    const double scale = 1.0 / std::sqrt(norm2);
    for (int n = 0; n < n_kraus; ++n) {
      kraus[n](perm[n][c], c) = std::polar(mag[n] * scale, phase(rng));
    }
  }
  return validate_icptp(kraus);
}

}  // namespace qcoh
