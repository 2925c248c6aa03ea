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

#include <limits>
#include <span>

#include "thermowork/states.hpp"

namespace thermowork {

/// Relative entropy in nats, or +infinity when supp(rho) is not inside supp(sigma).
struct RelEntropyResult {
  double value = 0.0;
  bool support_violation = false;

  bool is_infinite() const { return support_violation; }
  static RelEntropyResult infinite() {
    return {std::numeric_limits<double>::infinity(), true};
  }
};

/// -sum p log p in nats. Accepts entries >= -1e-12 and renormalizes.
double shannon_entropy(std::span<const double> p);

/// Entropy of a spectrum, clipped at the support threshold. No validation.
double spectral_entropy(const RVector& eigenvalues);

/// Von Neumann entropy of a Hermitian PSD matrix with trace one. No validation.
double entropy_of(const CMatrix& rho);

double von_neumann_entropy(const DensityMatrix& rho);

RelEntropyResult relative_entropy(const DensityMatrix& rho, const DensityMatrix& sigma);

/// S(rho || sigma) given log(sigma) on its support and the support projector.
RelEntropyResult relative_entropy_with_log(const DensityMatrix& rho, const CMatrix& log_sigma,
                                           const CMatrix& support);

/// S(rho || gamma) using the exact log of the Gibbs state.
double relative_entropy_to_gibbs(const DensityMatrix& rho, const GibbsContext& ctx);

/// Tr(rho H) - S(rho)/beta.
double free_energy(const DensityMatrix& rho, const GibbsContext& ctx);

double mutual_information(const BipartiteState& rho_ab);

}  // namespace thermowork
