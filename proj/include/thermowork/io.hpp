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

#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "json.hpp"
#include "thermowork/errors.hpp"
#include "thermowork/workmeasures.hpp"

namespace thermowork::io {

/// Malformed JSON or a document that does not follow the schema.
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline constexpr const char* kSchemaVersion = "1";

enum class StateKind { Density, Bipartite, Pure };

/// On-disk state. Density and bipartite files carry a row-major matrix of
/// [re, im] pairs; pure files carry amplitudes.
struct StateFile {
  StateKind kind = StateKind::Density;
  std::vector<Index> dims;
  CMatrix matrix;      // density, bipartite
  CVector amplitudes;  // pure

  Index total_dim() const;
  DensityMatrix density() const;
  /// Requires two dims; a single-dim file is treated as d x 1.
  BipartiteState bipartite() const;

  static StateFile from_density(const DensityMatrix& rho);
  static StateFile from_bipartite(const BipartiteState& rho_ab);
  static StateFile from_pure(const CVector& psi, std::vector<Index> dims);
};

/// Throws ParseError on schema problems and thermowork::Error when the parsed
/// object breaks a state invariant.
StateFile parse_state(const std::string& text);
std::string dump_state(const StateFile& file);
StateFile load_state_file(const std::filesystem::path& path);
void save_state_file(const std::filesystem::path& path, const StateFile& file);

CMatrix parse_hamiltonian(const std::string& text);
std::string dump_hamiltonian(const CMatrix& h);
CMatrix load_hamiltonian_file(const std::filesystem::path& path);
void save_hamiltonian_file(const std::filesystem::path& path, const CMatrix& h);

nlohmann::json matrix_to_json(const CMatrix& m);
CMatrix matrix_from_json(const nlohmann::json& j);

nlohmann::json to_json(const OptConfig& config);
OptConfig opt_config_from_json(const nlohmann::json& j);

/// ReportFile body for a full hierarchy report (without wall_time_ms).
nlohmann::json report_to_json(const WorkReport& report, const OptConfig& config);

std::string read_text(const std::filesystem::path& path);
void write_text(const std::filesystem::path& path, const std::string& text);

/// Fixed 17-significant-digit rendering used in CSV output.
std::string format_double(double x);

}  // namespace thermowork::io
