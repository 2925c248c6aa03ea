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

// thermowork: command-line front end for the work-distillation quantities.
//
// Exit codes: 0 success, 2 parse error, 3 state invariant violated,
// 4 usage error, 5 property violation in a sweep.

#include <chrono>
#include <cstdlib>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "thermowork/infotheory.hpp"
#include "thermowork/io.hpp"
#include "thermowork/parallel.hpp"
#include "thermowork/random.hpp"
#include "thermowork/workmeasures.hpp"

namespace tw = thermowork;
using nlohmann::json;

namespace {

enum ExitCode : int {
  kOk = 0,
  kParse = 2,
  kInvariant = 3,
  kUsage = 4,
  kProperty = 5,
};

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct PropertyViolation : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct CommonOptions {
  double beta = 1.0;
  std::string out;
  tw::OptConfig config;
};

void add_optimizer_options(CLI::App* cmd, CommonOptions& opts) {
  cmd->add_option("--restarts", opts.config.restarts, "Optimizer restarts")->check(CLI::PositiveNumber);
  cmd->add_option("--seed", opts.config.seed, "Optimizer seed");
  cmd->add_option("--tol", opts.config.tol, "Optimizer tolerance")->check(CLI::PositiveNumber);
  cmd->add_option("--max-iter", opts.config.max_iter, "Iterations per restart")
      ->check(CLI::PositiveNumber);
  cmd->add_option("--min-outcomes", opts.config.min_outcomes, "Fewest POVM outcomes (0 = d_A)");
  cmd->add_option("--max-outcomes", opts.config.max_outcomes, "Most POVM outcomes (0 = d_A^2)");
}

class Stopwatch {
 public:
  double elapsed_ms() const {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start_)
        .count();
  }

 private:
  std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

void emit(const std::string& text, const std::string& out) {
  if (out.empty()) {
    std::cout << text;
  } else {
    tw::io::write_text(out, text);
  }
}

json povm_json(const tw::Povm& povm) {
  json effects = json::array();
  for (const auto& e : povm.effects()) effects.push_back(tw::io::matrix_to_json(e));
  return effects;
}

int cmd_work(const std::string& state_path, const std::string& h_path, const CommonOptions& opts) {
  Stopwatch clock;
  const auto state = tw::io::load_state_file(state_path).density();
  const auto ctx = tw::gibbs_state(tw::io::load_hamiltonian_file(h_path), opts.beta);
  const double work = tw::distillable_work(state, ctx);
  std::cout << "w_unassisted " << tw::io::format_double(work) << "\n";
  const json report{{"schema_version", tw::io::kSchemaVersion},
                    {"command", "work"},
                    {"beta", opts.beta},
                    {"w_unassisted", work},
                    {"notes", json::array({"energy units; free-energy difference to Gibbs"})},
                    {"wall_time_ms", clock.elapsed_ms()}};
  emit(report.dump(2) + "\n", opts.out);
  return kOk;
}

int cmd_assist(const std::string& state_path, const std::string& h_path, bool oracle,
               const CommonOptions& opts) {
  Stopwatch clock;
  const auto state = tw::io::load_state_file(state_path).bipartite();
  if (oracle && state.dim_a() != 2) throw UsageError("oracle requires qubit A");
  const auto ctx = tw::gibbs_state(tw::io::load_hamiltonian_file(h_path), opts.beta);

  const auto assistance = tw::work_of_assistance(state, ctx, opts.config);
  const double unassisted = tw::distillable_work(state.reduced_b(), ctx);
  std::cout << "w_assistance " << tw::io::format_double(assistance.value) << "\n"
            << "j_arrow " << tw::io::format_double(assistance.j_arrow) << "\n";

  json report{{"schema_version", tw::io::kSchemaVersion},
              {"command", "assist"},
              {"beta", opts.beta},
              {"w_unassisted", unassisted},
              {"w_assistance", assistance.value},
              {"j_arrow", assistance.j_arrow},
              {"w_assistance_povm", povm_json(assistance.povm)},
              {"converged", assistance.converged},
              {"config", tw::io::to_json(opts.config)}};
  json notes = json::array({"w_assistance is an optimizer lower bound"});
  if (oracle) {
    const double oracle_j = tw::brute_force_qubit_J(state, 60);
    std::cout << "oracle_j_arrow " << tw::io::format_double(oracle_j) << "\n";
    report["oracle_j_arrow"] = oracle_j;
    report["oracle_gap"] = assistance.j_arrow - oracle_j;
    notes.push_back("oracle: projective qubit grid 60x60 with compass refinement");
  }
  report["notes"] = std::move(notes);
  report["wall_time_ms"] = clock.elapsed_ms();
  emit(report.dump(2) + "\n", opts.out);
  return kOk;
}

int cmd_hierarchy(const std::string& state_path, const std::string& h_path,
                  const CommonOptions& opts) {
  Stopwatch clock;
  const auto state = tw::io::load_state_file(state_path).bipartite();
  const auto ctx = tw::gibbs_state(tw::io::load_hamiltonian_file(h_path), opts.beta);
  const auto report = tw::hierarchy_report(state, ctx, opts.config);

  auto row = [](const char* name, double value, const char* unit) {
    std::cout << std::left << std::setw(24) << name << std::right << std::setw(26)
              << tw::io::format_double(value) << "  " << unit << "\n";
  };
  row("w_unassisted", report.w_unassisted.value, "energy");
  row("w_assistance", report.w_assistance.value, "energy");
  row("w_collaboration_upper", report.w_collaboration_upper.value, "energy");
  row("discord_gap", report.discord_gap.value, "energy");
  row("mutual_info", report.mutual_info.value, "nats");
  row("j_arrow", report.j_arrow.value, "nats");
  for (const auto& note : report.notes) std::cout << "note: " << note << "\n";

  json doc = tw::io::report_to_json(report, opts.config);
  doc["command"] = "hierarchy";
  doc["wall_time_ms"] = clock.elapsed_ms();
  if (opts.out.empty()) {
    std::cout << doc.dump(2) << "\n";
  } else {
    tw::io::write_text(opts.out, doc.dump(2) + "\n");
  }
  if (auto violated = tw::check_invariants(report)) {
    std::cerr << "invariant violated: " << *violated << "\n";
    return kProperty;
  }
  return kOk;
}

std::vector<double> parse_grid(const std::string& text) {
  std::vector<double> values;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      values.push_back(std::stod(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw UsageError("bad lambda grid entry '" + item + "'");
    }
  }
  if (values.empty()) throw UsageError("empty lambda grid");
  return values;
}

int cmd_isotropic(int d, const std::string& grid_text, const std::string& h_path,
                  const CommonOptions& opts) {
  if (d < 2) throw UsageError("--d must be at least 2");
  const auto grid = parse_grid(grid_text);
  const auto ctx = tw::gibbs_state(tw::io::load_hamiltonian_file(h_path), opts.beta);
  if (ctx.dim() != d) throw tw::DimensionMismatch("Hamiltonian must have dimension d");

  std::ostringstream csv;
  csv << "lambda,W_a_closed_form,W_a_optimizer,gap,W_r,discord_gap\n";
  for (double lambda : grid) {
    const tw::IsotropicSpec spec{d, lambda};
    try {
      tw::validate(spec);
    } catch (const tw::LambdaOutOfRange& e) {
      std::cerr << "warning: skipping lambda " << lambda << ": " << e.what() << "\n";
      continue;
    }
    const auto state = tw::isotropic_state(spec);
    const auto closed = tw::isotropic_work_of_assistance(spec, ctx);
    const auto optimized = tw::work_of_assistance(state, ctx, opts.config);
    const double w_r = tw::relative_entropy_of_collaboration(state, ctx);
    if (!closed.ensemble_established) {
      std::cerr << "warning: lambda " << lambda
                << " < 0: closed form not established for negative lambda\n";
    }
    csv << tw::io::format_double(lambda) << ',' << tw::io::format_double(closed.value) << ','
        << tw::io::format_double(optimized.value) << ','
        << tw::io::format_double(closed.value - optimized.value) << ','
        << tw::io::format_double(w_r) << ',' << tw::io::format_double(w_r - optimized.value)
        << '\n';
  }
  emit(csv.str(), opts.out);
  return kOk;
}

struct SweepRow {
  bool quantum_thermal = false;
  tw::WorkReport report;
  std::optional<tw::KoashiWinterCheck> koashi_winter;
  std::optional<std::string> violation;
};

constexpr double kKoashiWinterTolerance = 2e-3;
constexpr double kQuantumThermalTolerance = 1e-6;

int cmd_sweep(int dim_a, int dim_b, int count, std::uint64_t seed, int qt_every,
              const std::string& h_path, const CommonOptions& opts) {
  if (dim_a < 1 || dim_b < 1 || dim_a > 8 || dim_b > 8) {
    throw UsageError("sweep dimensions must lie in [1, 8]");
  }
  if (count < 0) throw UsageError("--count must be non-negative");
  const auto ctx = tw::gibbs_state(tw::io::load_hamiltonian_file(h_path), opts.beta);
  if (ctx.dim() != dim_b) throw tw::DimensionMismatch("Hamiltonian must act on B");
  const bool check_kw = dim_a == 2 && dim_b == 2;
  const tw::Index total = static_cast<tw::Index>(dim_a) * dim_b;

  std::vector<std::optional<SweepRow>> rows(static_cast<std::size_t>(count));
  tw::parallel_for(rows.size(), [&](std::size_t i) {
    const std::uint64_t row_seed = tw::mix_seed(seed, i);
    const bool qt = qt_every > 0 && (i + 1) % static_cast<std::size_t>(qt_every) == 0;
    std::optional<tw::BipartiteState> state;
    if (qt) {
      state = tw::product_state(tw::random_density(dim_a, dim_a, row_seed), ctx.gibbs());
    } else {
      const tw::Index rank = 1 + static_cast<tw::Index>(tw::mix_seed(row_seed, 1) % total);
      state.emplace(tw::random_density(total, rank, row_seed), dim_a, dim_b);
    }
    tw::OptConfig config = opts.config;
    config.seed = tw::mix_seed(opts.config.seed, i);
    SweepRow row{qt, tw::hierarchy_report(*state, ctx, config), std::nullopt, std::nullopt};
    row.violation = tw::check_invariants(row.report);
    if (check_kw) {
      row.koashi_winter = tw::koashi_winter_check(*state, config);
      if (!row.violation && std::abs(row.koashi_winter->residual) > kKoashiWinterTolerance) {
        row.violation = "|E_f(complement) + J - S(rho_B)| <= 2e-3";
      }
    }
    if (!row.violation && qt) {
      const auto& r = row.report;
      const double worst = std::max({std::abs(r.w_unassisted.value), std::abs(r.w_assistance.value),
                                     std::abs(r.w_collaboration_upper.value),
                                     std::abs(r.discord_gap.value), std::abs(r.mutual_info.value),
                                     std::abs(r.j_arrow.value)});
      if (worst > kQuantumThermalTolerance) row.violation = "quantum-thermal row is all zero";
    }
    rows[i] = std::move(row);
  });

  std::ostringstream csv;
  csv << "index,kind,w_unassisted,w_assistance,w_collaboration_upper,discord_gap,mutual_info,"
         "j_arrow,kw_residual\n";
  std::optional<std::string> first_violation;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    const auto& row = *rows[i];
    const auto& r = row.report;
    csv << i << ',' << (row.quantum_thermal ? "qt" : "random") << ','
        << tw::io::format_double(r.w_unassisted.value) << ','
        << tw::io::format_double(r.w_assistance.value) << ','
        << tw::io::format_double(r.w_collaboration_upper.value) << ','
        << tw::io::format_double(r.discord_gap.value) << ','
        << tw::io::format_double(r.mutual_info.value) << ','
        << tw::io::format_double(r.j_arrow.value) << ','
        << (row.koashi_winter ? tw::io::format_double(row.koashi_winter->residual) : "") << '\n';
    if (row.violation && !first_violation) {
      first_violation = "row " + std::to_string(i) + ": " + *row.violation;
    }
  }
  emit(csv.str(), opts.out);
  if (first_violation) throw PropertyViolation(*first_violation);
  std::cerr << "sweep: " << rows.size() << " rows, all invariants hold\n";
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Work-distillation quantities for finite-dimensional bipartite states"};
  app.require_subcommand(1);

  CommonOptions opts;
  std::string state_path;
  std::string h_path;

  auto* work = app.add_subcommand("work", "Distillable work (1/beta) S(rho || gamma)");
  work->add_option("state", state_path, "State file")->required();
  work->add_option("hamiltonian", h_path, "Hamiltonian file")->required();
  work->add_option("--beta", opts.beta, "Inverse temperature");
  work->add_option("--out", opts.out, "Write the JSON report here");

  bool oracle = false;
  auto* assist = app.add_subcommand("assist", "Work of assistance with the optimal POVM");
  assist->add_option("state", state_path, "Bipartite state file")->required();
  assist->add_option("hamiltonian", h_path, "Hamiltonian file for B")->required();
  assist->add_option("--beta", opts.beta, "Inverse temperature");
  assist->add_option("--out", opts.out, "Write the JSON report here");
  assist->add_flag("--oracle", oracle, "Cross-check against the qubit grid oracle");
  add_optimizer_options(assist, opts);

  auto* hierarchy = app.add_subcommand("hierarchy", "Full work report with bounds");
  hierarchy->add_option("state", state_path, "Bipartite state file")->required();
  hierarchy->add_option("hamiltonian", h_path, "Hamiltonian file for B")->required();
  hierarchy->add_option("--beta", opts.beta, "Inverse temperature");
  hierarchy->add_option("--out", opts.out, "Write the JSON report here");
  add_optimizer_options(hierarchy, opts);

  int iso_d = 2;
  std::string grid = "0,0.5,1";
  auto* isotropic = app.add_subcommand("isotropic", "Isotropic-state table (CSV)");
  isotropic->add_option("hamiltonian", h_path, "Hamiltonian file for B")->required();
  isotropic->add_option("--d", iso_d, "Local dimension");
  isotropic->add_option("--lambda-grid", grid, "Comma-separated lambda values");
  isotropic->add_option("--beta", opts.beta, "Inverse temperature");
  isotropic->add_option("--out", opts.out, "Write the CSV here");
  add_optimizer_options(isotropic, opts);

  int dim_a = 2;
  int dim_b = 2;
  int count = 100;
  std::uint64_t sweep_seed = 0;
  int qt_every = 0;
  auto* sweep = app.add_subcommand("sweep", "Random-state sweep with invariant checks (CSV)");
  sweep->add_option("hamiltonian", h_path, "Hamiltonian file for B")->required();
  sweep->add_option("--dim-a", dim_a, "d_A");
  sweep->add_option("--dim-b", dim_b, "d_B");
  sweep->add_option("--count", count, "Number of states");
  sweep->add_option("--seed", sweep_seed, "State-sampling seed");
  sweep->add_option("--qt-every", qt_every, "Replace every k-th state by a quantum-thermal state");
  sweep->add_option("--beta", opts.beta, "Inverse temperature");
  sweep->add_option("--out", opts.out, "Write the CSV here");
  sweep->add_option("--restarts", opts.config.restarts, "Optimizer restarts")
      ->check(CLI::PositiveNumber);
  sweep->add_option("--max-iter", opts.config.max_iter, "Iterations per restart")
      ->check(CLI::PositiveNumber);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  try {
    if (*work) return cmd_work(state_path, h_path, opts);
    if (*assist) return cmd_assist(state_path, h_path, oracle, opts);
    if (*hierarchy) return cmd_hierarchy(state_path, h_path, opts);
    if (*isotropic) return cmd_isotropic(iso_d, grid, h_path, opts);
    if (*sweep) return cmd_sweep(dim_a, dim_b, count, sweep_seed, qt_every, h_path, opts);
  } catch (const tw::io::ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kParse;
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return kUsage;
  } catch (const PropertyViolation& e) {
    std::cerr << "property violated: " << e.what() << "\n";
    return kProperty;
  } catch (const tw::InvalidBeta& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return kUsage;
  } catch (const tw::Error& e) {
    std::cerr << "invariant violated: " << e.what() << "\n";
    return kInvariant;
  }
  return kUsage;
}
