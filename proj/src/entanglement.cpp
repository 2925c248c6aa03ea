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

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>
#include <vector>

#include "thermowork/infotheory.hpp"
#include "thermowork/parallel.hpp"
#include "thermowork/random.hpp"
#include "thermowork/workmeasures.hpp"

namespace thermowork {
namespace {

using RowMajor = Eigen::Matrix<Complex, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;

// Entanglement entropy of an unnormalized pure state on d_A x d_B, from its
// Schmidt coefficients. `norm2` is its squared norm.
double schmidt_entropy(const CVector& psi, double norm2, Dims dims) {
  const Eigen::Map<const RowMajor> m(psi.data(), dims.a, dims.b);
  const RVector s = m.jacobiSvd().singularValues();
  RVector weights = s.cwiseAbs2() / norm2;
  return spectral_entropy(weights);
}

// Average entanglement of the decomposition psi_k = sum_j U_kj w_j, where w_j
// are the columns of `weighted` (sqrt(lambda_j) e_j).
double decomposition_entanglement(const CMatrix& weighted, const CMatrix& u, Dims dims) {
  const CMatrix members = weighted * u.transpose();
  double total = 0.0;
  for (Index k = 0; k < members.cols(); ++k) {
    const CVector psi = members.col(k);
    const double q = psi.squaredNorm();
    if (q <= kNegligibleProbability) continue;
    total += q * schmidt_entropy(psi, q, dims);
  }
  return total;
}

struct EfRestart {
  double value = std::numeric_limits<double>::infinity();
  bool converged = false;
  int members = 0;
};

EfRestart descend(const CMatrix& weighted, Index members, Dims dims, std::uint64_t seed,
                  const OptConfig& config) {
  const Index rank = weighted.cols();
  Rng rng(seed);
  CMatrix w = rng.haar_unitary(members);
  EfRestart out;
  out.members = static_cast<int>(members);
  out.value = decomposition_entanglement(weighted, w.leftCols(rank), dims);

  const double scale = 1.0 / std::sqrt(static_cast<double>(members));
  const double stop_step = 0.1 * std::sqrt(config.tol);
  double step = 0.3;
  for (int it = 0; it < config.max_iter; ++it) {
    const CMatrix proposal = w * unitary_from_hermitian(rng.gue(members), step * scale);
    const double value = decomposition_entanglement(weighted, proposal.leftCols(rank), dims);
    if (value < out.value) {
      out.value = value;
      w = proposal;
      step = std::min(step * 1.5, 1.0);
      continue;
    }
    step *= 0.904;
    if (step < stop_step) {
      out.converged = true;
      break;
    }
  }
  return out;
}

}  // namespace

EfResult entanglement_of_formation_small(const BipartiteState& rho_ab, const OptConfig& config) {
  const Dims dims = rho_ab.dims();
  if (dims.total() > kMaxEfDimension) {
    throw DimensionTooLarge("d_A * d_B = " + std::to_string(dims.total()) + " exceeds " +
                            std::to_string(kMaxEfDimension));
  }
  const auto eig = eigh(rho_ab.matrix());
  const Index n = eig.eigenvalues.size();
  const double cut = support_threshold(eig.eigenvalues(n - 1));
  std::vector<Index> kept;
  for (Index k = n - 1; k >= 0; --k) {
    if (eig.eigenvalues(k) > cut) kept.push_back(k);
  }
  const Index rank = static_cast<Index>(kept.size());
  CMatrix weighted(n, rank);
  for (Index j = 0; j < rank; ++j) {
    weighted.col(j) = std::sqrt(eig.eigenvalues(kept[j])) * eig.eigenvectors.col(kept[j]);
  }

  if (rank == 1) {
    const CVector psi = weighted.col(0);
    return {schmidt_entropy(psi, psi.squaredNorm(), dims), true, true, 1};
  }

  const Index lo = rank;
  const Index hi = rank * rank;
  const int restarts = std::max(config.restarts, 1);
  std::vector<EfRestart> results(static_cast<std::size_t>(restarts));
  parallel_for(results.size(), [&](std::size_t r) {
    const Index members = lo + static_cast<Index>(r) % (hi - lo + 1);
    results[r] = descend(weighted, members, dims, mix_seed(config.seed, r), config);
  });

  std::size_t best = 0;
  for (std::size_t r = 1; r < results.size(); ++r) {
    if (results[r].value < results[best].value) best = r;
  }
  return {std::max(results[best].value, 0.0), true, results[best].converged,
          results[best].members};
}

KoashiWinterCheck koashi_winter_check(const BipartiteState& rho_ab, const OptConfig& config) {
  // Fixed call-site tags keep the two searches on unrelated streams.
  constexpr std::uint64_t kTagFormation = 0x45465f636f6d706cULL;
  constexpr std::uint64_t kTagCorrelations = 0x4a5f6172726f7721ULL;

  OptConfig ef_config = config;
  ef_config.seed = mix_seed(config.seed, kTagFormation);
  OptConfig j_config = config;
  j_config.seed = mix_seed(config.seed, kTagCorrelations);

  KoashiWinterCheck out;
  out.e_f_complement = entanglement_of_formation_small(a_complement(rho_ab), ef_config).value;
  out.j_arrow = optimize_classical_correlations(rho_ab, j_config).value;
  out.entropy_b = von_neumann_entropy(rho_ab.reduced_b());
  out.residual = out.e_f_complement + out.j_arrow - out.entropy_b;
  return out;
}

}  // namespace thermowork
