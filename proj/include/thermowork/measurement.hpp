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

#include <cstdint>
#include <vector>

#include "thermowork/states.hpp"

namespace thermowork {

/// Positive effects on A summing to the identity.
class Povm {
 public:
  static constexpr double kCompletenessTolerance = 1e-9;

  explicit Povm(std::vector<CMatrix> effects);

  /// Projectors onto the columns of a unitary.
  static Povm projective(const CMatrix& basis);
  /// Rank-one effects r_i^dagger r_i built from the rows r_i of an isometry
  /// (iso^dagger iso = 1).
  static Povm from_isometry(const CMatrix& iso);
  /// Two-outcome projective measurement along a Bloch direction.
  static Povm qubit_projective(double theta, double phi);

  const std::vector<CMatrix>& effects() const { return effects_; }
  std::size_t size() const { return effects_.size(); }
  Index dim_a() const { return effects_.front().rows(); }

 private:
  std::vector<CMatrix> effects_;
};

/// Outcomes with probability at or below this are treated as never occurring.
inline constexpr double kNegligibleProbability = 1e-12;

struct ConditionalEnsemble {
  std::vector<double> probs;
  /// Conditional B states; negligible outcomes hold the maximally mixed state
  /// as a placeholder.
  std::vector<DensityMatrix> states;
  std::vector<bool> negligible;
  DensityMatrix average;
};

ConditionalEnsemble condition_on_outcome(const BipartiteState& rho_ab, const Povm& povm);

/// S(rho_B) - sum_i p_i S(rho_B|i) at a fixed measurement on A.
double classical_correlations_at(const BipartiteState& rho_ab, const Povm& povm);

struct OptConfig {
  int restarts = 64;
  std::uint64_t seed = 0;
  double tol = 1e-6;
  int max_iter = 2000;
  /// Outcome-count range; 0 means d_A (min) and d_A^2 (max).
  int min_outcomes = 0;
  int max_outcomes = 0;
};

struct OptResult {
  double value = 0.0;
  Povm povm;
  int restarts_used = 0;
  bool converged = false;
  /// Best value reached by each restart, in restart order.
  std::vector<double> trace;
  int best_restart = 0;
};

/// Multi-start hill climb over rank-one POVMs on A. Restarts cycle through
/// the outcome-count range; each one owns a sub-seed of config.seed, so the
/// result is independent of how restarts are scheduled.
OptResult optimize_classical_correlations(const BipartiteState& rho_ab, const OptConfig& config);

/// Grid search over projective qubit measurements on a grid x grid lattice of
/// Bloch angles, then one compass-search refinement. Requires d_A = 2.
double brute_force_qubit_J(const BipartiteState& rho_ab, int grid);

}  // namespace thermowork
