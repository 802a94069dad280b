#pragma once

#include <string>
#include <vector>

#include "qcoh/channels.hpp"
#include "qcoh/convexroof.hpp"
#include "qcoh/statespace.hpp"

namespace qcoh {

/// One numerical check: `passed` iff `lhs relation rhs` holds within `slack`.
/// Self-describing for CSV export; the digest records seed and parameters.
struct CheckRecord {
  std::string check_name;
  std::string inputs_digest;
  double lhs;
  double rhs;
  std::string relation;  // "<=", ">=", "=="
  double slack;
  bool passed;
};

CheckRecord make_check(const std::string& name, const std::string& digest, double lhs,
                       const std::string& relation, double rhs, double slack);

/// C_l1 computed directly vs through the symmetric-GGM pair spectra.
CheckRecord verify_proposition(const DensityMatrix& rho, const std::string& digest = "");

/// C_E of the modular-addition-unitary output vs C of the input pure state,
/// both exact closed forms.
CheckRecord verify_theorem2_pure(const PureState& psi, int dA,
                                 const std::string& digest = "");

/// C_E(ch[rho x |1><1|]) <= C(rho) with an incoherent channel on S x A.
/// Each side uses the exact closed form when one exists (Wootters for a 2x2
/// output, 2|rho_12| or the pure formula for the input) and a roof upper
/// bound otherwise; the certifications of both sides land in the digest.
CheckRecord verify_theorem2_channelled(const DensityMatrix& rho, const KrausChannel& ch,
                                       const RoofConfig& config,
                                       const std::string& digest = "");

/// Wootters concurrence of CNOT(rho x |1><1|) equals 2|rho_12|.
CheckRecord verify_corollary2(const DensityMatrix& rho, const std::string& digest = "");

/// C_E >= sqrt(2/(d(d-1))) C after the modular-addition unitary, exact forms.
CheckRecord verify_theorem3_pure(const PureState& psi, int dA,
                                 const std::string& digest = "");

/// Roof value >= C_l1; with expect_equality (pure plus white noise) also
/// checks equality within 1e-4.
std::vector<CheckRecord> verify_corollary1(const DensityMatrix& rho,
                                           const RoofConfig& config,
                                           bool expect_equality = false,
                                           const std::string& digest = "");

/// Sampled (C1)-(C4) checks at dimension d over `samples` seeds.
std::vector<CheckRecord> verify_requirements_suite(int d, int samples,
                                                   std::uint64_t seed,
                                                   const RoofConfig& config);

/// The four measures of rho with the identities of its regime (qubit/qudit x
/// pure/mixed) asserted.
std::vector<CheckRecord> table1_report(const DensityMatrix& rho, const RoofConfig& config,
                                       const std::string& digest = "");

std::string check_csv_header();
std::string check_csv_row(const CheckRecord& r);

}  // namespace qcoh
