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

#include "thermowork/states.hpp"

#include <cmath>
#include <string>
#include <vector>

#include "thermowork/random.hpp"

namespace thermowork {

DensityMatrix::DensityMatrix(CMatrix mat) : mat_(std::move(mat)) {
  if (mat_.size() == 0) throw InvalidState("density matrix is empty");
  require_hermitian(mat_, "density matrix");
  const double trace = mat_.trace().real();
  if (std::abs(trace - 1.0) > kTraceTolerance) {
    throw InvalidState("unit trace violated: Tr = " + std::to_string(trace));
  }
  const double min_eig = eigvalsh_unchecked(mat_)(0);
  if (min_eig < -tolerance::kNegativeEigenvalue) {
    throw InvalidState("positivity violated: min eigenvalue = " + std::to_string(min_eig));
  }
}

DensityMatrix DensityMatrix::maximally_mixed(Index dim) {
  return DensityMatrix(CMatrix::Identity(dim, dim) / static_cast<double>(dim));
}

DensityMatrix DensityMatrix::pure(const CVector& psi) {
  const double norm2 = psi.squaredNorm();
  if (!(norm2 > 0.0)) throw InvalidState("pure state vector has zero norm");
  CMatrix proj = psi * psi.adjoint() / norm2;
  // Exact Hermitian symmetry; the outer product can differ from its adjoint
  // in the last bit.
  proj = (proj + proj.adjoint()).eval() / 2.0;
  return DensityMatrix(std::move(proj));
}

double DensityMatrix::purity() const { return (mat_ * mat_).trace().real(); }

RVector DensityMatrix::spectrum() const { return eigvalsh_unchecked(mat_); }

GibbsContext gibbs_state(const CMatrix& hamiltonian, double beta) {
  if (!std::isfinite(beta) || beta <= 0.0) {
    throw InvalidBeta("beta must be positive and finite, got " + std::to_string(beta));
  }
  const auto eig = eigh(hamiltonian);
  const Index n = eig.eigenvalues.size();
  const double ground = eig.eigenvalues(0);
  RVector weights(n);
  for (Index k = 0; k < n; ++k) weights(k) = std::exp(-beta * (eig.eigenvalues(k) - ground));
  const double shifted_z = weights.sum();
  const double log_z = -beta * ground + std::log(shifted_z);

  const CMatrix& v = eig.eigenvectors;
  CMatrix gamma = v * (weights / shifted_z).cast<Complex>().asDiagonal() * v.adjoint();
  gamma = (gamma + gamma.adjoint()).eval() / 2.0;
  RVector log_weights = -beta * eig.eigenvalues.array() - log_z;
  CMatrix log_gamma = v * log_weights.cast<Complex>().asDiagonal() * v.adjoint();
  log_gamma = (log_gamma + log_gamma.adjoint()).eval() / 2.0;

  CMatrix h = (hamiltonian + hamiltonian.adjoint()) / 2.0;
  return GibbsContext(std::move(h), beta, DensityMatrix(std::move(gamma)), log_z,
                      std::move(log_gamma));
}

BipartiteState::BipartiteState(DensityMatrix state, Index dim_a, Index dim_b)
    : state_(std::move(state)), dims_{dim_a, dim_b} {
  if (dim_a < 1 || dim_b < 1 || state_.dim() != dim_a * dim_b) {
    throw DimensionMismatch("state of dimension " + std::to_string(state_.dim()) +
                            " cannot split as " + std::to_string(dim_a) + "x" +
                            std::to_string(dim_b));
  }
}

DensityMatrix BipartiteState::reduced_a() const {
  CMatrix m = partial_trace(matrix(), dims_, Subsystem::A);
  return DensityMatrix((m + m.adjoint()) / 2.0);
}

DensityMatrix BipartiteState::reduced_b() const {
  CMatrix m = partial_trace(matrix(), dims_, Subsystem::B);
  return DensityMatrix((m + m.adjoint()) / 2.0);
}

BipartiteState product_state(const DensityMatrix& rho_a, const DensityMatrix& rho_b) {
  return BipartiteState(DensityMatrix(kron(rho_a.matrix(), rho_b.matrix())), rho_a.dim(),
                        rho_b.dim());
}

CMatrix Purification::system_marginal() const {
  // Reshape into system x ancilla; the marginal is M M^dagger.
  const Eigen::Map<const Eigen::Matrix<Complex, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>>
      m(vector.data(), system_dim, ancilla_dim);
  return m * m.adjoint();
}

Purification purify(const DensityMatrix& rho) {
  const auto eig = eigh(rho.matrix());
  const Index n = eig.eigenvalues.size();
  const double cut = support_threshold(eig.eigenvalues(n - 1));
  std::vector<Index> kept;
  for (Index k = n - 1; k >= 0; --k) {
    if (eig.eigenvalues(k) > cut) kept.push_back(k);
  }
  const Index rank = static_cast<Index>(kept.size());
  Purification out{CVector::Zero(n * rank), n, rank};
  for (Index j = 0; j < rank; ++j) {
    const double weight = std::sqrt(eig.eigenvalues(kept[j]));
    const auto v = eig.eigenvectors.col(kept[j]);
    for (Index s = 0; s < n; ++s) out.vector(s * rank + j) = weight * v(s);
  }
  out.vector.normalize();
  return out;
}

CMatrix AComplement::trace_out_ancilla() const {
  CMatrix out = CMatrix::Zero(dim_a * dim_b, dim_a * dim_b);
  for (Index k = 0; k < dim_ancilla; ++k) {
    CVector v(dim_a * dim_b);
    for (Index a = 0; a < dim_a; ++a) {
      for (Index b = 0; b < dim_b; ++b) v(a * dim_b + b) = global((a * dim_ancilla + k) * dim_b + b);
    }
    out += v * v.adjoint();
  }
  return out;
}

CMatrix AComplement::trace_out_a() const {
  const Index block = dim_ancilla * dim_b;
  CMatrix out = CMatrix::Zero(block, block);
  for (Index a = 0; a < dim_a; ++a) {
    const auto v = global.segment(a * block, block);
    out += v * v.adjoint();
  }
  return out;
}

AComplement a_complement_extension(const BipartiteState& rho_ab) {
  const Purification pur = purify(rho_ab.state());
  const Index da = rho_ab.dim_a();
  const Index db = rho_ab.dim_b();
  const Index r = pur.ancilla_dim;

  // Regroup (A B) (x) A' into A (x) A' (x) B.
  CVector global(da * r * db);
  for (Index a = 0; a < da; ++a) {
    for (Index b = 0; b < db; ++b) {
      for (Index k = 0; k < r; ++k) {
        global((a * r + k) * db + b) = pur.vector((a * db + b) * r + k);
      }
    }
  }

  AComplement tmp{BipartiteState(DensityMatrix::maximally_mixed(r * db), r, db), global, da, r,
                  db};
  CMatrix complement = tmp.trace_out_a();
  complement = (complement + complement.adjoint()).eval() / 2.0;
  tmp.state = BipartiteState(DensityMatrix(std::move(complement)), r, db);

  const double err = (tmp.trace_out_ancilla() - rho_ab.matrix()).cwiseAbs().maxCoeff();
  if (err > 1e-9) {
    throw InvalidState("A-complement extension does not reproduce the source state (error " +
                       std::to_string(err) + ")");
  }
  return tmp;
}

BipartiteState a_complement(const BipartiteState& rho_ab) {
  return a_complement_extension(rho_ab).state;
}

namespace {

// Positive rank-one effects spanning all operators on A: |i><i| and the
// projectors onto (|i> + |j>)/sqrt2 and (|i> + i|j>)/sqrt2.
std::vector<CMatrix> spanning_effects(Index d) {
  std::vector<CMatrix> effects;
  auto push = [&](const CVector& v) { effects.push_back(v * v.adjoint()); };
  for (Index i = 0; i < d; ++i) push(CVector::Unit(d, i));
  for (Index i = 0; i < d; ++i) {
    for (Index j = i + 1; j < d; ++j) {
      CVector v = (CVector::Unit(d, i) + CVector::Unit(d, j)) * M_SQRT1_2;
      push(v);
      v(j) = Complex(0.0, M_SQRT1_2);
      push(v);
    }
  }
  return effects;
}

}  // namespace

ProductTest is_product_state(const BipartiteState& rho_ab, double tol) {
  const DensityMatrix rho_a = rho_ab.reduced_a();
  const DensityMatrix rho_b = rho_ab.reduced_b();
  ProductTest out;
  out.distance = trace_distance(rho_ab.matrix(), kron(rho_a.matrix(), rho_b.matrix()));
  out.is_product = out.distance <= tol;
  if (out.is_product) return out;

  struct Candidate {
    CMatrix effect;
    CMatrix conditional;
  };
  std::vector<Candidate> candidates;
  for (auto& effect : spanning_effects(rho_ab.dim_a())) {
    CMatrix unnormalized = contract_a(rho_ab.matrix(), rho_ab.dims(), effect);
    const double p = unnormalized.trace().real();
    if (p <= 1e-12) continue;
    CMatrix conditional = unnormalized / p;
    conditional = (conditional + conditional.adjoint()).eval() / 2.0;
    candidates.push_back({std::move(effect), std::move(conditional)});
  }

  double best = -1.0;
  std::size_t best_i = 0;
  std::size_t best_j = 0;
  for (std::size_t i = 0; i < candidates.size(); ++i) {
    for (std::size_t j = i + 1; j < candidates.size(); ++j) {
      const double sep = trace_distance(candidates[i].conditional, candidates[j].conditional);
      if (sep > best) {
        best = sep;
        best_i = i;
        best_j = j;
      }
    }
  }
  if (best >= 0.0) {
    // Halving keeps effect_1 + effect_2 <= 1, so both fit in one POVM.
    out.witness = ProductWitness{candidates[best_i].effect / 2.0, candidates[best_j].effect / 2.0,
                                 DensityMatrix(candidates[best_i].conditional),
                                 DensityMatrix(candidates[best_j].conditional), best};
  }
  return out;
}

DensityMatrix random_density(Index dim, Index rank, std::uint64_t seed) {
  if (dim < 1 || rank < 1 || rank > dim) {
    throw InvalidRank("rank " + std::to_string(rank) + " not in [1, " + std::to_string(dim) + "]");
  }
  Rng rng(seed);
  const CMatrix g = rng.ginibre(dim, rank);
  CMatrix rho = g * g.adjoint();
  rho /= rho.trace().real();
  rho = (rho + rho.adjoint()).eval() / 2.0;
  return DensityMatrix(std::move(rho));
}

CVector random_pure_vector(Index dim, std::uint64_t seed) {
  Rng rng(seed);
  CVector v = rng.ginibre(dim, 1).col(0);
  return v.normalized();
}

CMatrix random_unitary(Index dim, std::uint64_t seed) {
  Rng rng(seed);
  return rng.haar_unitary(dim);
}

CMatrix random_hamiltonian(Index dim, double scale, std::uint64_t seed) {
  Rng rng(seed);
  return rng.gue(dim) * scale;
}

CVector maximally_entangled(Index d) {
  CVector v = CVector::Zero(d * d);
  for (Index i = 0; i < d; ++i) v(i * d + i) = 1.0 / std::sqrt(static_cast<double>(d));
  return v;
}

}  // namespace thermowork
