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

#include "thermowork/infotheory.hpp"

#include <cmath>
#include <numeric>
#include <string>

namespace thermowork {

double shannon_entropy(std::span<const double> p) {
  if (p.empty()) throw InvalidDistribution("empty distribution");
  double total = 0.0;
  for (double x : p) {
    if (!(x >= -1e-12)) throw InvalidDistribution("negative entry " + std::to_string(x));
    total += std::max(x, 0.0);
  }
  if (std::abs(total - 1.0) > 1e-9) {
    throw InvalidDistribution("entries sum to " + std::to_string(total));
  }
  double h = 0.0;
  for (double x : p) {
    const double q = std::max(x, 0.0) / total;
    if (q > 0.0) h -= q * std::log(q);
  }
  return h;
}

double spectral_entropy(const RVector& eigenvalues) {
  if (eigenvalues.size() == 0) return 0.0;
  const double cut = support_threshold(eigenvalues.maxCoeff());
  double h = 0.0;
  for (Index k = 0; k < eigenvalues.size(); ++k) {
    const double x = eigenvalues(k);
    if (x > cut) h -= x * std::log(x);
  }
  return std::max(h, 0.0);
}

double entropy_of(const CMatrix& rho) { return spectral_entropy(eigvalsh_unchecked(rho)); }

double von_neumann_entropy(const DensityMatrix& rho) { return entropy_of(rho.matrix()); }

RelEntropyResult relative_entropy_with_log(const DensityMatrix& rho, const CMatrix& log_sigma,
                                           const CMatrix& support) {
  if (log_sigma.rows() != rho.dim() || support.rows() != rho.dim()) {
    throw DimensionMismatch("relative entropy operands differ in dimension");
  }
  const double kept = (support * rho.matrix()).trace().real();
  if (rho.matrix().trace().real() - kept > 1e-12) return RelEntropyResult::infinite();
  const double cross = (rho.matrix() * log_sigma).trace().real();
  const double value = -von_neumann_entropy(rho) - cross;
  return {std::max(value, 0.0), false};
}

RelEntropyResult relative_entropy(const DensityMatrix& rho, const DensityMatrix& sigma) {
  if (rho.dim() != sigma.dim()) {
    throw DimensionMismatch("relative entropy operands differ in dimension");
  }
  const auto log_sigma = matrix_log_psd(sigma.matrix());
  return relative_entropy_with_log(rho, log_sigma.log, log_sigma.support);
}

double relative_entropy_to_gibbs(const DensityMatrix& rho, const GibbsContext& ctx) {
  if (rho.dim() != ctx.dim()) {
    throw DimensionMismatch("state dimension " + std::to_string(rho.dim()) +
                            " does not match Hamiltonian dimension " + std::to_string(ctx.dim()));
  }
  const double cross = (rho.matrix() * ctx.log_gibbs()).trace().real();
  return std::max(-von_neumann_entropy(rho) - cross, 0.0);
}

double free_energy(const DensityMatrix& rho, const GibbsContext& ctx) {
  if (rho.dim() != ctx.dim()) throw DimensionMismatch("state and Hamiltonian dimensions differ");
  const double energy = (rho.matrix() * ctx.hamiltonian()).trace().real();
  return energy - von_neumann_entropy(rho) / ctx.beta();
}

double mutual_information(const BipartiteState& rho_ab) {
  const double value = von_neumann_entropy(rho_ab.reduced_a()) +
                       von_neumann_entropy(rho_ab.reduced_b()) -
                       von_neumann_entropy(rho_ab.state());
  return std::max(value, 0.0);
}

}  // namespace thermowork
