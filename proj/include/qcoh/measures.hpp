#pragma once

#include <string>

#include "qcoh/statespace.hpp"

namespace qcoh {

enum class Certification { Exact, UpperBound, LowerBound };

std::string certification_name(Certification c);

struct MeasureReport {
  std::string measure;
  double value;
  Certification certification;
  std::string detail;
};

/// l1-norm of coherence: sum of |rho_ij| over i != j.
double l1_coherence(const DensityMatrix& rho);

/// Same quantity through the symmetric-GGM pair spectra: for each j < k the
/// matrix rho Lambda_s rho^* Lambda_s has two nonzero eigenvalues eta_1,
/// eta_2; the sum of |sqrt(eta_1) - sqrt(eta_2)| over pairs equals C_l1.
/// Spectra are taken from the similar Hermitian PSD matrix
/// sqrt(rho) (Lambda rho^* Lambda) sqrt(rho).
double l1_coherence_via_ggm(const DensityMatrix& rho);

/// S(dephase(rho)) - S(rho), in bits.
double relative_entropy_coherence(const DensityMatrix& rho);

/// Pure-state coherence concurrence sum_{j<k} |<psi| Lambda_s^{j,k} |psi^*>|,
/// which reduces to 2 sum_{j<k} |a_j a_k| and equals C_l1 of the projector.
double pure_coherence_concurrence(const PureState& psi);

/// Shannon entropy (bits) of the amplitude distribution |a_i|^2.
double pure_intrinsic_randomness(const PureState& psi);

/// H((1 + sqrt(1 - c^2)) / 2) in bits, for c in [0, 1].
double binary_entropy_of_concurrence(double c);

/// Qubit closed form 2|rho_12|, exact for both pure and mixed states.
double qubit_coherence_concurrence(const DensityMatrix& rho);

/// Qubit closed form H(C) with C = 2|rho_12|.
double qubit_intrinsic_randomness(const DensityMatrix& rho);

bool is_incoherent(const DensityMatrix& rho, double tol = 1e-9);

/// True iff every amplitude magnitude is within tol of 1/sqrt(d).
bool is_mcs(const PureState& psi, double tol = 1e-9);

MeasureReport measure_report(const std::string& name, double value,
                             Certification cert = Certification::Exact);

}  // namespace qcoh
