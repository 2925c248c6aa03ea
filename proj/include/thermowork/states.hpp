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
#include <optional>

#include "thermowork/qmat.hpp"

namespace thermowork {

/// Positive unit-trace Hermitian operator. Construction validates; the stored
/// matrix is never modified afterwards.
class DensityMatrix {
 public:
  static constexpr double kTraceTolerance = 1e-10;

  explicit DensityMatrix(CMatrix mat);

  static DensityMatrix maximally_mixed(Index dim);
  /// |psi><psi| / <psi|psi>.
  static DensityMatrix pure(const CVector& psi);

  const CMatrix& matrix() const { return mat_; }
  Index dim() const { return mat_.rows(); }
  double purity() const;
  /// Ascending spectrum.
  RVector spectrum() const;

 private:
  CMatrix mat_;
};

/// Gibbs state e^{-beta H}/Z of a Hamiltonian at inverse temperature beta.
class GibbsContext {
 public:
  const CMatrix& hamiltonian() const { return hamiltonian_; }
  double beta() const { return beta_; }
  const DensityMatrix& gibbs() const { return gibbs_; }
  double log_z() const { return log_z_; }
  /// Exact log gamma = -beta H - ln Z, free of any clipping.
  const CMatrix& log_gibbs() const { return log_gibbs_; }
  Index dim() const { return hamiltonian_.rows(); }

 private:
  friend GibbsContext gibbs_state(const CMatrix& hamiltonian, double beta);
  GibbsContext(CMatrix h, double beta, DensityMatrix gibbs, double log_z, CMatrix log_gibbs)
      : hamiltonian_(std::move(h)),
        beta_(beta),
        gibbs_(std::move(gibbs)),
        log_z_(log_z),
        log_gibbs_(std::move(log_gibbs)) {}

  CMatrix hamiltonian_;
  double beta_;
  DensityMatrix gibbs_;
  double log_z_;
  CMatrix log_gibbs_;
};

GibbsContext gibbs_state(const CMatrix& hamiltonian, double beta);

/// A density matrix with a d_A x d_B tensor split (A is the slow index).
class BipartiteState {
 public:
  BipartiteState(DensityMatrix state, Index dim_a, Index dim_b);

  const DensityMatrix& state() const { return state_; }
  const CMatrix& matrix() const { return state_.matrix(); }
  Index dim_a() const { return dims_.a; }
  Index dim_b() const { return dims_.b; }
  Dims dims() const { return dims_; }

  DensityMatrix reduced_a() const;
  DensityMatrix reduced_b() const;

 private:
  DensityMatrix state_;
  Dims dims_;
};

BipartiteState product_state(const DensityMatrix& rho_a, const DensityMatrix& rho_b);

/// Pure state on system (x) ancilla whose system marginal is the source.
struct Purification {
  CVector vector;  // index = s * ancilla_dim + k
  Index system_dim = 0;
  Index ancilla_dim = 0;

  /// Tr_ancilla |psi><psi|.
  CMatrix system_marginal() const;
};

/// Spectral purification; ancilla dimension equals the rank, ancilla basis
/// ordered by descending eigenvalue.
Purification purify(const DensityMatrix& rho);

/// A-complement together with the global pure state on A (x) A' (x) B.
struct AComplement {
  BipartiteState state;  // on (A', B)
  CVector global;        // index = (a * d_A' + k) * d_B + b
  Index dim_a = 0;
  Index dim_ancilla = 0;
  Index dim_b = 0;

  /// Tr_{A'} of the global pure state, on (A, B).
  CMatrix trace_out_ancilla() const;
  /// Tr_A of the global pure state, on (A', B).
  CMatrix trace_out_a() const;
};

AComplement a_complement_extension(const BipartiteState& rho_ab);
BipartiteState a_complement(const BipartiteState& rho_ab);

/// Two A effects whose conditional B states differ.
struct ProductWitness {
  CMatrix effect_1;
  CMatrix effect_2;
  DensityMatrix conditional_1;
  DensityMatrix conditional_2;
  double separation = 0.0;  // one-norm distance of the conditionals
};

struct ProductTest {
  bool is_product = false;
  double distance = 0.0;  // ||rho - rho_A (x) rho_B||_1
  std::optional<ProductWitness> witness;
};

inline constexpr double kProductTolerance = 1e-8;

ProductTest is_product_state(const BipartiteState& rho_ab, double tol = kProductTolerance);

/// Ginibre-induced random state G G^dagger / Tr, G of size dim x rank.
DensityMatrix random_density(Index dim, Index rank, std::uint64_t seed);
/// Haar-random unit vector.
CVector random_pure_vector(Index dim, std::uint64_t seed);
CMatrix random_unitary(Index dim, std::uint64_t seed);
/// Random Hermitian matrix with entries of order `scale`.
CMatrix random_hamiltonian(Index dim, double scale, std::uint64_t seed);

/// Maximally entangled |Phi_d> = sum_i |ii> / sqrt(d).
CVector maximally_entangled(Index d);

}  // namespace thermowork
