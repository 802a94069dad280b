#pragma once

#include <vector>

#include "qcoh/statespace.hpp"

namespace qcoh {

enum class GgmKind { Symmetric, Antisymmetric, Diagonal };

/// One generator of SU(d). Indices are the paper-style 1-based labels:
/// (j,k) with 1 <= j < k <= d for the off-diagonal kinds, l with
/// 1 <= l <= d-1 for the diagonal kind.
struct GellMannOperator {
  int dim;
  GgmKind kind;
  int j;  // pair index, or l for the diagonal kind
  int k;  // unused for the diagonal kind
  Matrix matrix;
};

/// |j><k| + |k><j|
GellMannOperator symmetric_ggm(int d, int j, int k);

/// -i|j><k| + i|k><j|
GellMannOperator antisymmetric_ggm(int d, int j, int k);

/// sqrt(2/(l(l+1))) (sum_{j<=l} |j><j| - l |l+1><l+1|)
GellMannOperator diagonal_ggm(int d, int l);

/// All d^2-1 generators: symmetric pairs in lexicographic (j,k) order, then
/// antisymmetric, then diagonal by l.
std::vector<GellMannOperator> ggm_basis(int d);

}  // namespace qcoh
