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
#include <random>

#include "thermowork/qmat.hpp"

namespace thermowork {

/// SplitMix64 finalizer over (seed, tag). Used to derive independent sub-seeds.
std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t tag);

/// Seeded source of the Gaussian ensembles used for sampling and search.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  double normal() { return normal_(engine_); }
  double uniform() { return uniform_(engine_); }
  /// Standard complex normal: E|z|^2 = 1.
  Complex complex_normal();
  /// Matrix of i.i.d. standard complex normal entries.
  CMatrix ginibre(Index rows, Index cols);
  /// Gaussian unitary ensemble sample, normalized so E|K_jk|^2 = 1.
  CMatrix gue(Index n);
  /// Haar-random unitary (QR of a Ginibre matrix with phase fix).
  CMatrix haar_unitary(Index n);

  std::mt19937_64& engine() { return engine_; }

 private:
  std::mt19937_64 engine_;
  std::normal_distribution<double> normal_{0.0, 1.0};
  std::uniform_real_distribution<double> uniform_{0.0, 1.0};
};

}  // namespace thermowork
