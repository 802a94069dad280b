#pragma once

#include <string>
#include <variant>

#include "qcoh/channels.hpp"
#include "qcoh/statespace.hpp"

namespace qcoh {

// State files: {"kind":"density"|"pure","dim":d,"data":[[re,im],...]} with
// density data row-major (d^2 pairs) and pure data d pairs. Channel files:
// {"dim_in":d,"dim_out":d,"kraus":[[[re,im],...],...]}. Parsers reject
// NaN/Inf; writers emit 17 significant digits so round-trips are lossless.

using StateFile = std::variant<DensityMatrix, PureState>;

StateFile parse_state(const std::string& json_text);
StateFile load_state(const std::string& path);

std::string serialize_state(const DensityMatrix& rho);
std::string serialize_state(const PureState& psi);
void save_state(const StateFile& state, const std::string& path);

KrausChannel parse_channel(const std::string& json_text);
KrausChannel load_channel(const std::string& path);
std::string serialize_channel(const KrausChannel& ch);

/// Any state file as a density matrix (pure states are projected).
DensityMatrix as_density(const StateFile& state);

/// 17-significant-digit decimal rendering used for all numeric output.
std::string format_number(double x);

std::string serialize_matrix(const Matrix& m);

}  // namespace qcoh
