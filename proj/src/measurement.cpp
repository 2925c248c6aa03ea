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

#include "thermowork/measurement.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <optional>
#include <string>

#include "thermowork/infotheory.hpp"
#include "thermowork/parallel.hpp"
#include "thermowork/random.hpp"

namespace thermowork {

Povm::Povm(std::vector<CMatrix> effects) : effects_(std::move(effects)) {
  if (effects_.empty()) throw InvalidPovm("a POVM needs at least one effect");
  const Index d = effects_.front().rows();
  CMatrix total = CMatrix::Zero(d, d);
  for (const auto& e : effects_) {
    if (e.rows() != d || e.cols() != d) throw DimensionMismatch("POVM effects differ in shape");
    require_hermitian(e, "POVM effect");
    const double min_eig = eigvalsh_unchecked(e)(0);
    if (min_eig < -tolerance::kNegativeEigenvalue) {
      throw InvalidPovm("effect has eigenvalue " + std::to_string(min_eig));
    }
    total += e;
  }
  const double defect = (total - CMatrix::Identity(d, d)).cwiseAbs().maxCoeff();
  if (defect > kCompletenessTolerance) {
    throw InvalidPovm("effects sum to identity only within " + std::to_string(defect));
  }
}

Povm Povm::projective(const CMatrix& basis) {
  std::vector<CMatrix> effects;
  for (Index k = 0; k < basis.cols(); ++k) {
    const auto v = basis.col(k);
    CMatrix e = v * v.adjoint();
    effects.push_back((e + e.adjoint()) / 2.0);
  }
  return Povm(std::move(effects));
}

Povm Povm::from_isometry(const CMatrix& iso) {
  std::vector<CMatrix> effects;
  for (Index i = 0; i < iso.rows(); ++i) {
    const auto row = iso.row(i);
    CMatrix e = row.adjoint() * row;
    effects.push_back((e + e.adjoint()) / 2.0);
  }
  return Povm(std::move(effects));
}

Povm Povm::qubit_projective(double theta, double phi) {
  CMatrix basis(2, 2);
  const double c = std::cos(theta / 2.0);
  const double s = std::sin(theta / 2.0);
  const Complex phase = std::polar(1.0, phi);
  basis << c, -s * std::conj(phase), s * phase, c;
  return projective(basis);
}

ConditionalEnsemble condition_on_outcome(const BipartiteState& rho_ab, const Povm& povm) {
  if (povm.dim_a() != rho_ab.dim_a()) {
    throw DimensionMismatch("POVM acts on dimension " + std::to_string(povm.dim_a()) +
                            " but d_A = " + std::to_string(rho_ab.dim_a()));
  }
  const Index db = rho_ab.dim_b();
  std::vector<double> probs;
  std::vector<DensityMatrix> states;
  std::vector<bool> negligible;
  CMatrix average = CMatrix::Zero(db, db);
  for (const auto& effect : povm.effects()) {
    CMatrix unnormalized = contract_a(rho_ab.matrix(), rho_ab.dims(), effect);
    unnormalized = (unnormalized + unnormalized.adjoint()).eval() / 2.0;
    const double p = std::max(unnormalized.trace().real(), 0.0);
    probs.push_back(p);
    if (p <= kNegligibleProbability) {
      negligible.push_back(true);
      states.push_back(DensityMatrix::maximally_mixed(db));
      continue;
    }
    negligible.push_back(false);
    average += unnormalized;
    states.emplace_back(unnormalized / p);
  }
  average /= average.trace().real();
  return {std::move(probs), std::move(states), std::move(negligible),
          DensityMatrix(std::move(average))};
}

double classical_correlations_at(const BipartiteState& rho_ab, const Povm& povm) {
  const auto ensemble = condition_on_outcome(rho_ab, povm);
  double conditional = 0.0;
  for (std::size_t i = 0; i < ensemble.probs.size(); ++i) {
    if (ensemble.negligible[i]) continue;
    conditional += ensemble.probs[i] * von_neumann_entropy(ensemble.states[i]);
  }
  return von_neumann_entropy(rho_ab.reduced_b()) - conditional;
}

namespace {

// Evaluates J at rank-one effects without building validated objects.
class CorrelationObjective {
 public:
  explicit CorrelationObjective(const BipartiteState& rho_ab)
      : dims_(rho_ab.dims()), entropy_b_(von_neumann_entropy(rho_ab.reduced_b())) {
    blocks_.reserve(dims_.a * dims_.a);
    for (Index x = 0; x < dims_.a; ++x) {
      for (Index y = 0; y < dims_.a; ++y) {
        blocks_.push_back(rho_ab.matrix().block(x * dims_.b, y * dims_.b, dims_.b, dims_.b));
      }
    }
    sigma_.resize(dims_.b, dims_.b);
    partial_.resize(dims_.b, dims_.b);
  }

  double operator()(const CMatrix& iso) {
    double conditional = 0.0;
    for (Index i = 0; i < iso.rows(); ++i) {
      // sigma = sum_{a,a'} conj(r_a) r_a' R_{a',a}
      sigma_.setZero();
      for (Index ap = 0; ap < dims_.a; ++ap) {
        partial_.setZero();
        for (Index a = 0; a < dims_.a; ++a) {
          partial_ += std::conj(iso(i, a)) * blocks_[ap * dims_.a + a];
        }
        sigma_ += iso(i, ap) * partial_;
      }
      const double p = sigma_.trace().real();
      if (p <= kNegligibleProbability) continue;
      conditional += p * entropy(sigma_ / p);
    }
    return entropy_b_ - conditional;
  }

 private:
  double entropy(const CMatrix& rho) const {
    if (rho.rows() == 1) return 0.0;
    if (rho.rows() == 2) {
      const double mean = 0.5 * (rho(0, 0).real() + rho(1, 1).real());
      const double half_gap = 0.5 * (rho(0, 0).real() - rho(1, 1).real());
      const double radius = std::sqrt(half_gap * half_gap + std::norm(rho(0, 1)));
      RVector values(2);
      values << mean - radius, mean + radius;
      return spectral_entropy(values);
    }
    return entropy_of(rho);
  }

  Dims dims_;
  double entropy_b_;
  std::vector<CMatrix> blocks_;
  CMatrix sigma_;
  CMatrix partial_;
};

// X (X^dagger X)^{-1/2}; empty when X is numerically rank deficient.
std::optional<CMatrix> orthonormalize(const CMatrix& x) {
  const CMatrix gram = x.adjoint() * x;
  Eigen::SelfAdjointEigenSolver<CMatrix> solver((gram + gram.adjoint()) / 2.0);
  const RVector& values = solver.eigenvalues();
  if (!(values(0) > 1e-12 * values(values.size() - 1))) return std::nullopt;
  const RVector inv_sqrt = values.cwiseSqrt().cwiseInverse();
  const CMatrix& v = solver.eigenvectors();
  return x * (v * inv_sqrt.cast<Complex>().asDiagonal() * v.adjoint());
}

struct RestartOutcome {
  double value = -std::numeric_limits<double>::infinity();
  CMatrix iso;
  bool converged = false;
};

constexpr double kInitialStep = 0.3;
constexpr double kGrow = 1.5;
constexpr double kShrink = 0.904;  // keeps the step stationary near 1/5 acceptance

RestartOutcome hill_climb(const BipartiteState& rho_ab, Index outcomes, std::uint64_t seed,
                          const OptConfig& config) {
  const Index da = rho_ab.dim_a();
  CorrelationObjective objective(rho_ab);
  Rng rng(seed);

  RestartOutcome out;
  std::optional<CMatrix> start;
  while (!start) start = orthonormalize(rng.ginibre(outcomes, da));
  out.iso = *start;
  out.value = objective(out.iso);

  // Objective error scales like the step squared near a maximum.
  const double stop_step = 0.1 * std::sqrt(config.tol);
  double step = kInitialStep;
  for (int it = 0; it < config.max_iter; ++it) {
    const auto proposal = orthonormalize(out.iso + step * rng.ginibre(outcomes, da));
    if (proposal) {
      const double value = objective(*proposal);
      if (value > out.value) {
        out.value = value;
        out.iso = *proposal;
        step = std::min(step * kGrow, 1.0);
        continue;
      }
    }
    step *= kShrink;
    if (step < stop_step) {
      out.converged = true;
      break;
    }
  }
  return out;
}

}  // namespace

OptResult optimize_classical_correlations(const BipartiteState& rho_ab, const OptConfig& config) {
  const int da = static_cast<int>(rho_ab.dim_a());
  const int lo = config.min_outcomes > 0 ? config.min_outcomes : da;
  const int hi = std::max(lo, config.max_outcomes > 0 ? config.max_outcomes : da * da);
  const int restarts = std::max(config.restarts, 1);

  std::vector<RestartOutcome> outcomes(static_cast<std::size_t>(restarts));
  parallel_for(outcomes.size(), [&](std::size_t r) {
    const Index n_out = lo + static_cast<int>(r) % (hi - lo + 1);
    outcomes[r] = hill_climb(rho_ab, n_out, mix_seed(config.seed, r), config);
  });

  std::size_t best = 0;
  std::vector<double> trace;
  for (std::size_t r = 0; r < outcomes.size(); ++r) {
    trace.push_back(outcomes[r].value);
    if (outcomes[r].value > outcomes[best].value) best = r;
  }
  Povm povm = Povm::from_isometry(outcomes[best].iso);
  const double value = classical_correlations_at(rho_ab, povm);
  return {value,         std::move(povm), restarts, outcomes[best].converged, std::move(trace),
          static_cast<int>(best)};
}

double brute_force_qubit_J(const BipartiteState& rho_ab, int grid) {
  if (rho_ab.dim_a() != 2) {
    throw WrongDimension("qubit oracle needs d_A = 2, got " + std::to_string(rho_ab.dim_a()));
  }
  grid = std::max(grid, 2);
  auto eval = [&](double theta, double phi) {
    return classical_correlations_at(rho_ab, Povm::qubit_projective(theta, phi));
  };

  const double d_theta = M_PI / (grid - 1);
  const double d_phi = 2.0 * M_PI / grid;
  double best = -std::numeric_limits<double>::infinity();
  double best_theta = 0.0;
  double best_phi = 0.0;
  for (int i = 0; i < grid; ++i) {
    for (int j = 0; j < grid; ++j) {
      const double value = eval(i * d_theta, j * d_phi);
      if (value > best) {
        best = value;
        best_theta = i * d_theta;
        best_phi = j * d_phi;
      }
    }
  }

  // Compass search around the best lattice point.
  double step = d_theta;
  for (int iter = 0; step > 1e-9 && iter < 10000; ++iter) {
    bool moved = false;
    const double candidates[4][2] = {{step, 0.0}, {-step, 0.0}, {0.0, step}, {0.0, -step}};
    for (const auto& delta : candidates) {
      const double value = eval(best_theta + delta[0], best_phi + delta[1]);
      if (value > best) {
        best = value;
        best_theta += delta[0];
        best_phi += delta[1];
        moved = true;
        break;
      }
    }
    if (!moved) step /= 2.0;
  }
  return best;
}

}  // namespace thermowork
