#include "qcoh/io.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include <json.hpp>

namespace qcoh {

namespace {

using nlohmann::json;

double finite_number(const json& j, const char* what) {
  if (!j.is_number()) throw Error(std::string("ParseError: ") + what + " is not a number");
  const double x = j.get<double>();
  if (!std::isfinite(x)) throw Error(std::string("ParseError: ") + what + " is not finite");
  return x;
}

Complex parse_pair(const json& j) {
  if (!j.is_array() || j.size() != 2) throw Error("ParseError: expected [re,im] pair");
  return {finite_number(j[0], "re"), finite_number(j[1], "im")};
}

Matrix parse_matrix(const json& data, int rows, int cols) {
  if (!data.is_array() || static_cast<int>(data.size()) != rows * cols) {
    throw Error("ParseError: expected " + std::to_string(rows * cols) + " entries");
  }
  Matrix m(rows, cols);
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j) m(i, j) = parse_pair(data[i * cols + j]);
  return m;
}

void append_pairs(std::string& out, const Matrix& m) {
  out += '[';
  for (int i = 0; i < m.rows(); ++i) {
    for (int j = 0; j < m.cols(); ++j) {
      if (i != 0 || j != 0) out += ',';
      out += '[';
      out += format_number(m(i, j).real());
      out += ',';
      out += format_number(m(i, j).imag());
      out += ']';
    }
  }
  out += ']';
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("IoError: cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

std::string format_number(double x) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", x);
  return buf;
}

StateFile parse_state(const std::string& json_text) {
  try {
    json j = json::parse(json_text);
    const std::string kind = j.at("kind").get<std::string>();
    const int d = j.at("dim").get<int>();
    if (d < 1) throw Error("ParseError: dim must be >= 1");
    if (kind == "density") {
      return validate_density(parse_matrix(j.at("data"), d, d));
    }
    if (kind == "pure") {
      const Matrix col = parse_matrix(j.at("data"), d, 1);
      return validate_pure(col.col(0));
    }
    throw Error("ParseError: unknown kind '" + kind + "'");
  } catch (const json::exception& e) {
    throw Error(std::string("ParseError: ") + e.what());
  }
}

StateFile load_state(const std::string& path) {
  return parse_state(read_file(path));
}

std::string serialize_matrix(const Matrix& m) {
  std::string out;
  append_pairs(out, m);
  return out;
}

std::string serialize_state(const DensityMatrix& rho) {
  std::string out = "{\"kind\":\"density\",\"dim\":" + std::to_string(rho.dim()) +
                    ",\"data\":";
  append_pairs(out, rho.mat);
  out += "}\n";
  return out;
}

std::string serialize_state(const PureState& psi) {
  std::string out = "{\"kind\":\"pure\",\"dim\":" + std::to_string(psi.dim()) +
                    ",\"data\":";
  append_pairs(out, psi.amps);
  out += "}\n";
  return out;
}

void save_state(const StateFile& state, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("IoError: cannot write " + path);
  std::visit([&](const auto& s) { out << serialize_state(s); }, state);
}

KrausChannel parse_channel(const std::string& json_text) {
  try {
    json j = json::parse(json_text);
    const int din = j.at("dim_in").get<int>();
    const int dout = j.at("dim_out").get<int>();
    if (din < 1 || dout < 1) throw Error("ParseError: bad channel dims");
    const json& ks = j.at("kraus");
    if (!ks.is_array() || ks.empty()) throw Error("ParseError: empty kraus list");
    std::vector<Matrix> kraus;
    kraus.reserve(ks.size());
    for (const auto& k : ks) kraus.push_back(parse_matrix(k, dout, din));
    return validate_icptp(kraus);
  } catch (const json::exception& e) {
    throw Error(std::string("ParseError: ") + e.what());
  }
}

KrausChannel load_channel(const std::string& path) {
  return parse_channel(read_file(path));
}

std::string serialize_channel(const KrausChannel& ch) {
  std::string out = "{\"dim_in\":" + std::to_string(ch.dim_in) +
                    ",\"dim_out\":" + std::to_string(ch.dim_out) + ",\"kraus\":[";
  for (size_t i = 0; i < ch.kraus.size(); ++i) {
    if (i) out += ',';
    append_pairs(out, ch.kraus[i]);
  }
  out += "]}\n";
  return out;
}

DensityMatrix as_density(const StateFile& state) {
  if (std::holds_alternative<DensityMatrix>(state)) {
    return std::get<DensityMatrix>(state);
  }
  return pure_to_density(std::get<PureState>(state));
}

}  // namespace qcoh
