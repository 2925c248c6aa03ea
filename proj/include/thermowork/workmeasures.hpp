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

#include <optional>
#include <string>
#include <vector>

#include "thermowork/measurement.hpp"
#include "thermowork/states.hpp"

namespace thermowork {

/// Work in energy units (already divided by beta).
struct Energy {
  double value = 0.0;
};

/// Correlation measure in nats.
struct Nats {
  double value = 0.0;
};

struct EnergyInterval {
  Energy lo;
  Energy hi;
};

/// (1/beta) S(rho || gamma): the free-energy difference F(rho) - F(gamma).
double distillable_work(const DensityMatrix& rho, const GibbsContext& ctx);

/// Direct average (1/beta) sum_i p_i S(rho_B|i || gamma_B) at a fixed POVM on A.
double assisted_work_at(const BipartiteState& rho_ab, const GibbsContext& ctx, const Povm& povm);

struct AssistanceResult {
  double value = 0.0;    // energy units
  double j_arrow = 0.0;  // nats
  Povm povm;
  bool converged = false;
};

/// (1/beta)[S(rho_B || gamma_B) + J(rho_AB)] with J from the POVM optimizer.
AssistanceResult work_of_assistance(const BipartiteState& rho_ab, const GibbsContext& ctx,
                                    const OptConfig& config);

/// (1/beta) S(rho_AB || rho_A (x) gamma_B).
double relative_entropy_of_collaboration(const BipartiteState& rho_ab, const GibbsContext& ctx);

/// I(rho_AB) - J(rho_AB), in nats.
double quantum_discord(const BipartiteState& rho_ab, const OptConfig& config);

/// Collaboration upper bound minus work of assistance.
double discord_gap(const BipartiteState& rho_ab, const GibbsContext& ctx, const OptConfig& config);

/// Closed forms for pure states. Throw NotPure if Tr rho^2 < 1 - 1e-8.
double pure_state_assistance(const BipartiteState& phi_ab, const GibbsContext& ctx);
double pure_state_collaboration(const BipartiteState& phi_ab, const GibbsContext& ctx);

/// lambda Phi_d + (1 - lambda)/d^2 1, valid for -1/(d^2-1) <= lambda <= 1.
struct IsotropicSpec {
  Index d = 2;
  double lambda = 0.0;
};

void validate(const IsotropicSpec& spec);
BipartiteState isotropic_state(const IsotropicSpec& spec);

/// Closed-form J for isotropic states: ln d - H((1-l)/d, ..., 1-(d-1)(1-l)/d).
double isotropic_classical_correlations(const IsotropicSpec& spec);

struct IsotropicAssistance {
  double value = 0.0;    // energy units
  double j_arrow = 0.0;  // nats
  std::vector<double> probs;
  std::vector<DensityMatrix> states;
  /// False for lambda < 0, where the optimal-ensemble construction is not
  /// established; the value is still the rank-one closed form.
  bool ensemble_established = true;
};

IsotropicAssistance isotropic_work_of_assistance(const IsotropicSpec& spec,
                                                 const GibbsContext& ctx);

struct EfResult {
  double value = 0.0;  // nats
  /// A finite search over decompositions can only overestimate the minimum.
  bool upper_bound = true;
  bool converged = false;
  int members = 0;
};

inline constexpr Index kMaxEfDimension = 16;

/// Entanglement of formation by search over pure-state decompositions with
/// at most rank^2 members, parameterized by isometries acting on the
/// spectral decomposition. Requires d_A d_B <= 16.
EfResult entanglement_of_formation_small(const BipartiteState& rho_ab, const OptConfig& config);

struct KoashiWinterCheck {
  double e_f_complement = 0.0;  // E_f of the A-complement
  double j_arrow = 0.0;
  double entropy_b = 0.0;
  double residual = 0.0;  // e_f + j - S(rho_B)
};

/// Evaluates E_f(rho_A'B) + J(rho_AB) - S(rho_B) with two independent searches.
KoashiWinterCheck koashi_winter_check(const BipartiteState& rho_ab, const OptConfig& config);

struct WorkReport {
  Energy w_unassisted;
  Energy w_assistance;
  Povm w_assistance_povm;
  Energy w_collaboration_upper;
  Energy discord_gap;
  Nats mutual_info;
  Nats j_arrow;
  double beta = 1.0;
  /// Regularized assistance and collaboration work lie in here.
  EnergyInterval regularized;
  std::vector<std::string> notes;
};

WorkReport hierarchy_report(const BipartiteState& rho_ab, const GibbsContext& ctx,
                            const OptConfig& config);

/// First violated report invariant, if any.
std::optional<std::string> check_invariants(const WorkReport& report);

}  // namespace thermowork
