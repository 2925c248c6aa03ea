// Copyright 2026 The thermowork Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "thermowork/io.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

namespace thermowork::io {

using nlohmann::json;

namespace {

const char* kind_name(StateKind kind) {
  switch (kind) {
    case StateKind::Density: return "density";
    case StateKind::Bipartite: return "bipartite";
    case StateKind::Pure: return "pure";
  }
  return "density";
}

StateKind kind_from_name(const std::string& name) {
  if (name == "density") return StateKind::Density;
  if (name == "bipartite") return StateKind::Bipartite;
  if (name == "pure") return StateKind::Pure;
  throw ParseError("unknown state kind '" + name + "'");
}

json complex_to_json(Complex z) { return json::array({z.real(), z.imag()}); }

Complex complex_from_json(const json& j) {
  if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number()) {
    throw ParseError("complex entries must be [re, im] pairs of numbers");
  }
  return {j[0].get<double>(), j[1].get<double>()};
}

json parse_document(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("malformed JSON: ") + e.what());
  }
  if (!doc.is_object()) throw ParseError("top-level JSON value must be an object");
  if (!doc.contains("schema_version") || doc["schema_version"] != kSchemaVersion) {
    throw ParseError("schema_version must be \"1\"");
  }
  return doc;
}

std::vector<Index> dims_from_json(const json& doc) {
  if (!doc.contains("dims") || !doc["dims"].is_array() || doc["dims"].empty()) {
    throw ParseError("dims must be a non-empty array of positive integers");
  }
  std::vector<Index> dims;
  for (const auto& d : doc["dims"]) {
    if (!d.is_number_integer() || d.get<long long>() < 1) {
      throw ParseError("dims must be a non-empty array of positive integers");
    }
    dims.push_back(static_cast<Index>(d.get<long long>()));
  }
  return dims;
}

Index product(const std::vector<Index>& dims) {
  Index total = 1;
  for (Index d : dims) total *= d;
  return total;
}

}  // namespace

json matrix_to_json(const CMatrix& m) {
  json rows = json::array();
  for (Index i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (Index j = 0; j < m.cols(); ++j) row.push_back(complex_to_json(m(i, j)));
    rows.push_back(std::move(row));
  }
  return rows;
}

CMatrix matrix_from_json(const json& j) {
  if (!j.is_array() || j.empty()) throw ParseError("matrix must be a non-empty array of rows");
  const Index rows = static_cast<Index>(j.size());
  if (!j[0].is_array()) throw ParseError("matrix rows must be arrays");
  const Index cols = static_cast<Index>(j[0].size());
  CMatrix m(rows, cols);
  for (Index r = 0; r < rows; ++r) {
    const auto& row = j[static_cast<std::size_t>(r)];
    if (!row.is_array() || static_cast<Index>(row.size()) != cols) {
      throw ParseError("matrix rows differ in length");
    }
    for (Index c = 0; c < cols; ++c) m(r, c) = complex_from_json(row[static_cast<std::size_t>(c)]);
  }
  return m;
}

Index StateFile::total_dim() const { return product(dims); }

DensityMatrix StateFile::density() const {
  if (kind == StateKind::Pure) return DensityMatrix::pure(amplitudes);
  return DensityMatrix(matrix);
}

BipartiteState StateFile::bipartite() const {
  const Index da = dims.front();
  const Index db = dims.size() > 1 ? dims[1] : 1;
  return BipartiteState(density(), da, db);
}

StateFile StateFile::from_density(const DensityMatrix& rho) {
  return {StateKind::Density, {rho.dim()}, rho.matrix(), CVector()};
}

StateFile StateFile::from_bipartite(const BipartiteState& rho_ab) {
  return {StateKind::Bipartite, {rho_ab.dim_a(), rho_ab.dim_b()}, rho_ab.matrix(), CVector()};
}

StateFile StateFile::from_pure(const CVector& psi, std::vector<Index> dims) {
  return {StateKind::Pure, std::move(dims), CMatrix(), psi};
}

StateFile parse_state(const std::string& text) {
  const json doc = parse_document(text);
  if (!doc.contains("kind") || !doc["kind"].is_string()) throw ParseError("missing kind");
  StateFile file;
  file.kind = kind_from_name(doc["kind"].get<std::string>());
  file.dims = dims_from_json(doc);
  const Index total = product(file.dims);

  if (file.kind == StateKind::Bipartite && file.dims.size() != 2) {
    throw ParseError("bipartite states need exactly two dims");
  }
  if (file.kind == StateKind::Density && file.dims.size() != 1) {
    throw ParseError("density states need exactly one dim");
  }
  if (file.kind == StateKind::Pure) {
    if (file.dims.size() > 2) throw ParseError("pure states need one or two dims");
    if (!doc.contains("amplitudes") || !doc["amplitudes"].is_array()) {
      throw ParseError("pure states need an amplitudes array");
    }
    const auto& amps = doc["amplitudes"];
    if (static_cast<Index>(amps.size()) != total) {
      throw ParseError("amplitude count does not match dims");
    }
    file.amplitudes.resize(total);
    for (Index i = 0; i < total; ++i) {
      file.amplitudes(i) = complex_from_json(amps[static_cast<std::size_t>(i)]);
    }
    const double norm = file.amplitudes.norm();
    if (std::abs(norm - 1.0) > 1e-10) {
      throw InvalidState("unit norm violated: |psi| = " + std::to_string(norm));
    }
    return file;
  }

  if (!doc.contains("matrix")) throw ParseError("missing matrix");
  file.matrix = matrix_from_json(doc["matrix"]);
  if (file.matrix.rows() != total || file.matrix.cols() != total) {
    throw ParseError("matrix shape does not match dims");
  }
  (void)file.density();  // validates the state invariants
  return file;
}

std::string dump_state(const StateFile& file) {
  json doc;
  doc["schema_version"] = kSchemaVersion;
  doc["kind"] = kind_name(file.kind);
  doc["dims"] = file.dims;
  if (file.kind == StateKind::Pure) {
    json amps = json::array();
    for (Index i = 0; i < file.amplitudes.size(); ++i) amps.push_back(complex_to_json(file.amplitudes(i)));
    doc["amplitudes"] = std::move(amps);
  } else {
    doc["matrix"] = matrix_to_json(file.matrix);
  }
  return doc.dump(2) + "\n";
}

std::string read_text(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open " + path.string());
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

void write_text(const std::filesystem::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  out << text;
}

StateFile load_state_file(const std::filesystem::path& path) { return parse_state(read_text(path)); }

void save_state_file(const std::filesystem::path& path, const StateFile& file) {
  write_text(path, dump_state(file));
}

CMatrix parse_hamiltonian(const std::string& text) {
  const json doc = parse_document(text);
  if (!doc.contains("kind") || doc["kind"] != "hamiltonian") {
    throw ParseError("hamiltonian files need kind \"hamiltonian\"");
  }
  const auto dims = dims_from_json(doc);
  if (!doc.contains("matrix")) throw ParseError("missing matrix");
  CMatrix h = matrix_from_json(doc["matrix"]);
  const Index total = product(dims);
  if (h.rows() != total || h.cols() != total) throw ParseError("matrix shape does not match dims");
  require_hermitian(h, "Hamiltonian");
  return h;
}

std::string dump_hamiltonian(const CMatrix& h) {
  json doc;
  doc["schema_version"] = kSchemaVersion;
  doc["kind"] = "hamiltonian";
  doc["dims"] = json::array({h.rows()});
  doc["matrix"] = matrix_to_json(h);
  return doc.dump(2) + "\n";
}

CMatrix load_hamiltonian_file(const std::filesystem::path& path) {
  return parse_hamiltonian(read_text(path));
}

void save_hamiltonian_file(const std::filesystem::path& path, const CMatrix& h) {
  write_text(path, dump_hamiltonian(h));
}

json to_json(const OptConfig& config) {
  return json{{"restarts", config.restarts},         {"seed", config.seed},
              {"tol", config.tol},                   {"max_iter", config.max_iter},
              {"min_outcomes", config.min_outcomes}, {"max_outcomes", config.max_outcomes}};
}

OptConfig opt_config_from_json(const json& j) {
  OptConfig config;
  try {
    config.restarts = j.value("restarts", config.restarts);
    config.seed = j.value("seed", config.seed);
    config.tol = j.value("tol", config.tol);
    config.max_iter = j.value("max_iter", config.max_iter);
    config.min_outcomes = j.value("min_outcomes", config.min_outcomes);
    config.max_outcomes = j.value("max_outcomes", config.max_outcomes);
  } catch (const json::exception& e) {
    throw ParseError(std::string("bad optimizer config: ") + e.what());
  }
  return config;
}

json report_to_json(const WorkReport& report, const OptConfig& config) {
  json effects = json::array();
  for (const auto& e : report.w_assistance_povm.effects()) effects.push_back(matrix_to_json(e));
  return json{{"schema_version", kSchemaVersion},
              {"beta", report.beta},
              {"w_unassisted", report.w_unassisted.value},
              {"w_assistance", report.w_assistance.value},
              {"w_assistance_povm", std::move(effects)},
              {"w_collaboration_upper", report.w_collaboration_upper.value},
              {"discord_gap", report.discord_gap.value},
              {"mutual_info", report.mutual_info.value},
              {"j_arrow", report.j_arrow.value},
              {"regularized_interval",
               json::array({report.regularized.lo.value, report.regularized.hi.value})},
              {"notes", report.notes},
              {"config", to_json(config)}};
}

std::string format_double(double x) {
  char buffer[40];
  std::snprintf(buffer, sizeof buffer, "%.17g", x);
  return buffer;
}

}  // namespace thermowork::io
