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

// Shared fixtures and independent reference computations for the tests.

#include <cmath>
#include <cstdint>
#include <numeric>
#include <vector>

#include "thermowork/states.hpp"

namespace thermowork::testing {

inline BipartiteState bell_state() {
  return BipartiteState(DensityMatrix::pure(maximally_entangled(2)), 2, 2);
}

/// (|00><00| + |11><11|) / 2
inline BipartiteState classically_correlated() {
  CMatrix m = CMatrix::Zero(4, 4);
  m(0, 0) = 0.5;
  m(3, 3) = 0.5;
  return BipartiteState(DensityMatrix(m), 2, 2);
}

inline CMatrix diag(std::initializer_list<double> values) {
  RVector v(static_cast<Index>(values.size()));
  Index i = 0;
  for (double x : values) v(i++) = x;
  return v.cast<Complex>().asDiagonal();
}

inline CMatrix pauli_x() {
  CMatrix m(2, 2);
  m << 0.0, 1.0, 1.0, 0.0;
  return m;
}

inline CMatrix zero_hamiltonian(Index d) { return CMatrix::Zero(d, d); }

inline BipartiteState random_bipartite(Index da, Index db, std::uint64_t seed, Index rank = 0) {
  const Index total = da * db;
  return BipartiteState(random_density(total, rank > 0 ? rank : total, seed), da, db);
}

inline BipartiteState random_pure_bipartite(Index da, Index db, std::uint64_t seed) {
  return BipartiteState(DensityMatrix::pure(random_pure_vector(da * db, seed)), da, db);
}

/// -sum p ln p over a plain list, written out independently of the library.
inline double reference_entropy(const std::vector<double>& p) {
  double h = 0.0;
  for (double x : p) {
    if (x > 0.0) h -= x * std::log(x);
  }
  return h;
}

/// Reorders tensor factors: out factor k is input factor perm[k].
inline CMatrix permute_factors(const CMatrix& m, const std::vector<Index>& dims,
                               const std::vector<std::size_t>& perm) {
  const std::size_t n = dims.size();
  std::vector<Index> out_dims(n);
  for (std::size_t k = 0; k < n; ++k) out_dims[k] = dims[perm[k]];
  const Index total = m.rows();
  auto to_digits = [](Index idx, const std::vector<Index>& ds) {
    std::vector<Index> digits(ds.size());
    for (std::size_t k = ds.size(); k-- > 0;) {
      digits[k] = idx % ds[k];
      idx /= ds[k];
    }
    return digits;
  };
  auto from_digits = [](const std::vector<Index>& digits, const std::vector<Index>& ds) {
    Index idx = 0;
    for (std::size_t k = 0; k < ds.size(); ++k) idx = idx * ds[k] + digits[k];
    return idx;
  };
  std::vector<Index> map(static_cast<std::size_t>(total));
  for (Index i = 0; i < total; ++i) {
    const auto digits = to_digits(i, dims);
    std::vector<Index> permuted(n);
    for (std::size_t k = 0; k < n; ++k) permuted[k] = digits[perm[k]];
    map[static_cast<std::size_t>(i)] = from_digits(permuted, out_dims);
  }
  CMatrix out(total, total);
  for (Index i = 0; i < total; ++i) {
    for (Index j = 0; j < total; ++j) {
      out(map[static_cast<std::size_t>(i)], map[static_cast<std::size_t>(j)]) = m(i, j);
    }
  }
  return out;
}

/// x (x) y regrouped as (A_x A_y) (B_x B_y).
inline BipartiteState joint_copies(const BipartiteState& x, const BipartiteState& y) {
  const CMatrix raw = kron(x.matrix(), y.matrix());
  const CMatrix m =
      permute_factors(raw, {x.dim_a(), x.dim_b(), y.dim_a(), y.dim_b()}, {0, 2, 1, 3});
  return BipartiteState(DensityMatrix((m + m.adjoint()) / 2.0), x.dim_a() * y.dim_a(),
                        x.dim_b() * y.dim_b());
}

}  // namespace thermowork::testing
