#include "qcoh/gellmann.hpp"

#include <cmath>

namespace qcoh {

namespace {

void check_pair(int d, int j, int k) {
  if (j < 1 || j >= k || k > d) {
    throw Error("IndexOrder: need 1 <= j < k <= d, got j=" + std::to_string(j) +
                " k=" + std::to_string(k) + " d=" + std::to_string(d));
  }
}

}  // namespace

GellMannOperator symmetric_ggm(int d, int j, int k) {
  check_pair(d, j, k);
  Matrix m = Matrix::Zero(d, d);
  m(j - 1, k - 1) = 1.0;
  m(k - 1, j - 1) = 1.0;
  return {d, GgmKind::Symmetric, j, k, std::move(m)};
}

GellMannOperator antisymmetric_ggm(int d, int j, int k) {
  check_pair(d, j, k);
  Matrix m = Matrix::Zero(d, d);
  m(j - 1, k - 1) = Complex(0.0, -1.0);
  m(k - 1, j - 1) = Complex(0.0, 1.0);
  return {d, GgmKind::Antisymmetric, j, k, std::move(m)};
}

GellMannOperator diagonal_ggm(int d, int l) {
  if (l < 1 || l > d - 1) {
    throw Error("IndexOutOfRange: need 1 <= l <= d-1, got l=" + std::to_string(l));
  }
  Matrix m = Matrix::Zero(d, d);
  const double c = std::sqrt(2.0 / (double(l) * (l + 1)));
  for (int i = 0; i < l; ++i) m(i, i) = c;
  m(l, l) = -c * l;
  return {d, GgmKind::Diagonal, l, 0, std::move(m)};
}

std::vector<GellMannOperator> ggm_basis(int d) {
  if (d < 2) throw Error("BadDim: d must be >= 2");
  std::vector<GellMannOperator> out;
  out.reserve(d * d - 1);
  for (int j = 1; j <= d; ++j)
    for (int k = j + 1; k <= d; ++k) out.push_back(symmetric_ggm(d, j, k));
  for (int j = 1; j <= d; ++j)
    for (int k = j + 1; k <= d; ++k) out.push_back(antisymmetric_ggm(d, j, k));
  for (int l = 1; l <= d - 1; ++l) out.push_back(diagonal_ggm(d, l));
  return out;
}

}  // namespace qcoh
