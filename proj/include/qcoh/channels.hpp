#pragma once

#include <vector>

#include "qcoh/statespace.hpp"

namespace qcoh {

/// A CPTP map in Kraus form. The incoherent flag certifies that every Kraus
/// operator has at most one nonzero entry per column, which is equivalent to
/// mapping diagonal states to diagonal states.
struct KrausChannel {
  int dim_in;
  int dim_out;
  std::vector<Matrix> kraus;
  bool incoherent;
};

struct Outcome {
  double probability;
  DensityMatrix state;
};

struct OutcomeList {
  std::vector<Outcome> outcomes;
};

/// Verifies completeness sum K^dag K = I and classifies incoherence.
KrausChannel validate_icptp(const std::vector<Matrix>& kraus, double tol = 1e-10);

DensityMatrix apply_channel(const KrausChannel& ch, const DensityMatrix& rho);

/// Post-selected outcomes (p_n, K_n rho K_n^dag / p_n); outcomes with
/// p_n < 1e-14 are omitted.
OutcomeList selective_outcomes(const KrausChannel& ch, const DensityMatrix& rho);

/// Two-qubit CNOT as a single-Kraus unitary channel (S controls, A target).
KrausChannel cnot_gate();

/// The modular-addition unitary on S (dim d) and ancilla A (dim dA >= d):
/// U = sum_{i,j<=d} |i><i| x |i (+) (j-1)><j| + identity on the remaining
/// ancilla levels, with 1-based labels and (+) addition modulo d.
/// Reduces to CNOT at d = dA = 2.
KrausChannel generalized_cnot(int d, int dA);

/// rho x |1><1| on a dA-level ancilla, S-major order.
DensityMatrix attach_ancilla(const DensityMatrix& rho, int dA);

/// Random incoherent channel: per Kraus n and column c one target row f_n(c)
/// and amplitude a_{n,c}, columns rescaled so sum_n |a_{n,c}|^2 = 1.
KrausChannel random_incoherent_channel(int d, int n_kraus, std::uint64_t seed);

}  // namespace qcoh
