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

#include <catch2/catch_amalgamated.hpp>

#include <cmath>

#include "test_support.hpp"
#include "thermowork/errors.hpp"
#include "thermowork/infotheory.hpp"
#include "thermowork/states.hpp"

using namespace thermowork;
using testing::diag;

namespace {

double max_abs(const CMatrix& m) { return m.cwiseAbs().maxCoeff(); }

}  // namespace

TEST_CASE("DensityMatrix validates on construction", "[states]") {
  CHECK_NOTHROW(DensityMatrix(diag({0.25, 0.75})));
  CHECK_THROWS_AS(DensityMatrix(diag({0.5, 0.6})), InvalidState);
  CHECK_THROWS_AS(DensityMatrix(diag({1.2, -0.2})), InvalidState);
  CMatrix skew = diag({0.5, 0.5});
  skew(0, 1) = 0.1;
  CHECK_THROWS_AS(DensityMatrix(skew), NonHermitian);
  CHECK_THROWS_AS(DensityMatrix(CMatrix::Zero(2, 3)), NonSquare);
}

TEST_CASE("Gibbs states", "[states]") {
  SECTION("zero Hamiltonian is maximally mixed") {
    for (double beta : {0.1, 1.0, 7.5}) {
      const auto ctx = gibbs_state(testing::zero_hamiltonian(3), beta);
      CHECK(max_abs(ctx.gibbs().matrix() - CMatrix::Identity(3, 3) / 3.0) < 1e-15);
      CHECK(std::abs(ctx.log_z() - std::log(3.0)) < 1e-15);
    }
  }
  SECTION("qubit battery") {
    const double energy = 1.3;
    const double beta = 0.8;
    const auto ctx = gibbs_state(diag({0.0, energy}), beta);
    const double w = std::exp(-beta * energy);
    CHECK(max_abs(ctx.gibbs().matrix() - diag({1.0 / (1.0 + w), w / (1.0 + w)})) <= 1e-12);
  }
  SECTION("large gap pushes the excited weight to e^-50") {
    const double beta = 2.0;
    const auto ctx = gibbs_state(diag({0.0, 50.0 / beta}), beta);
    CHECK(max_abs(ctx.gibbs().matrix() - diag({1.0, 0.0})) <= 1e-9);
    // the log is exact even where the weight is tiny
    CHECK(std::abs(ctx.log_gibbs()(1, 1).real() - (-50.0 - std::log1p(std::exp(-50.0)))) < 1e-12);
  }
  SECTION("bad beta") {
    CHECK_THROWS_AS(gibbs_state(diag({0.0, 1.0}), 0.0), InvalidBeta);
    CHECK_THROWS_AS(gibbs_state(diag({0.0, 1.0}), -1.0), InvalidBeta);
    CHECK_THROWS_AS(gibbs_state(diag({0.0, 1.0}), INFINITY), InvalidBeta);
    CHECK_THROWS_AS(gibbs_state(diag({0.0, 1.0}), NAN), InvalidBeta);
  }
  SECTION("non-Hermitian Hamiltonian") {
    CMatrix h = diag({0.0, 1.0});
    h(0, 1) = 1.0;
    CHECK_THROWS_AS(gibbs_state(h, 1.0), NonHermitian);
  }
}

TEST_CASE("Gibbs state invariants on random Hamiltonians", "[states][property]") {
  for (std::uint64_t s = 0; s < 40; ++s) {
    const Index d = 1 + static_cast<Index>(s % 6);
    const CMatrix h = random_hamiltonian(d, 3.0, s);
    const double beta = 0.1 + 0.2 * static_cast<double>(s % 10);
    const auto ctx = gibbs_state(h, beta);
    const CMatrix& g = ctx.gibbs().matrix();
    CHECK(std::abs(g.trace().real() - 1.0) <= 1e-12);
    CHECK(max_abs(g * h - h * g) <= 1e-10);
    CHECK(ctx.log_gibbs().allFinite());
    CHECK(max_abs(exp_hermitian(ctx.log_gibbs()) - g) <= 1e-12);
  }
}

TEST_CASE("purification", "[states]") {
  SECTION("pure input needs a one-dimensional ancilla") {
    const auto p = purify(DensityMatrix(diag({1.0, 0.0})));
    CHECK(p.ancilla_dim == 1);
    CHECK(max_abs(p.system_marginal() - diag({1.0, 0.0})) < 1e-15);
  }
  SECTION("maximally mixed qubit gives a maximally entangled pair") {
    const auto p = purify(DensityMatrix::maximally_mixed(2));
    CHECK(p.ancilla_dim == 2);
    CHECK(std::abs(p.vector.norm() - 1.0) < 1e-12);
    CHECK(max_abs(p.system_marginal() - CMatrix::Identity(2, 2) / 2.0) < 1e-12);
    // Schmidt coefficients all 1/sqrt 2
    Eigen::Map<const CMatrix> coeffs(p.vector.data(), 2, 2);
    const auto sv = Eigen::JacobiSVD<CMatrix>(coeffs).singularValues();
    CHECK(std::abs(sv(0) - std::sqrt(0.5)) < 1e-12);
    CHECK(std::abs(sv(1) - std::sqrt(0.5)) < 1e-12);
  }
  SECTION("diag(0.7, 0.3)") {
    const auto p = purify(DensityMatrix(diag({0.7, 0.3})));
    REQUIRE(p.ancilla_dim == 2);
    // descending ancilla order: sqrt(.7)|00> + sqrt(.3)|11>
    CHECK(std::abs(std::abs(p.vector(0)) - std::sqrt(0.7)) < 1e-12);
    CHECK(std::abs(std::abs(p.vector(3)) - std::sqrt(0.3)) < 1e-12);
    CHECK(std::abs(p.vector(1)) < 1e-12);
    CHECK(std::abs(p.vector(2)) < 1e-12);
    CHECK(max_abs(p.system_marginal() - diag({0.7, 0.3})) < 1e-12);
  }
  SECTION("roundtrip on random states") {
    for (std::uint64_t s = 0; s < 30; ++s) {
      const Index d = 1 + static_cast<Index>(s % 6);
      const Index rank = 1 + static_cast<Index>(s % d);
      const auto rho = random_density(d, rank, s);
      const auto p = purify(rho);
      CHECK(p.ancilla_dim == rank);
      CHECK(std::abs(p.vector.norm() - 1.0) <= 1e-10);
      CHECK(max_abs(p.system_marginal() - rho.matrix()) <= 1e-9);
    }
  }
}

TEST_CASE("A-complement", "[states]") {
  SECTION("product pure state") {
    CMatrix zero = diag({1.0, 0.0});
    const auto rho = product_state(DensityMatrix(zero), DensityMatrix(zero));
    const auto comp = a_complement(rho);
    CHECK(max_abs(comp.reduced_b().matrix() - zero) < 1e-12);
    CHECK(is_product_state(comp).is_product);
  }
  SECTION("pure entangled state has a trivial ancilla") {
    const auto phi = testing::random_pure_bipartite(2, 3, 4);
    const auto comp = a_complement(phi);
    CHECK(comp.dim_a() == 1);
    CHECK(max_abs(comp.matrix() - phi.reduced_b().matrix()) < 1e-9);
  }
  SECTION("Bell-diagonal rank 2") {
    const CVector phi_plus = maximally_entangled(2);
    CVector psi_plus = CVector::Zero(4);
    psi_plus(1) = psi_plus(2) = std::sqrt(0.5);
    const CMatrix m = 0.6 * phi_plus * phi_plus.adjoint() + 0.4 * psi_plus * psi_plus.adjoint();
    const BipartiteState rho(DensityMatrix(m), 2, 2);
    const auto ext = a_complement_extension(rho);
    CHECK(ext.dim_ancilla == 2);
    CHECK(std::abs(ext.global.norm() - 1.0) < 1e-10);
    CHECK(max_abs(ext.trace_out_ancilla() - m) <= 1e-9);
    CHECK(max_abs(ext.trace_out_a() - ext.state.matrix()) <= 1e-9);
  }
  SECTION("consistency on random states") {
    for (std::uint64_t s = 0; s < 20; ++s) {
      const Index da = 2 + static_cast<Index>(s % 2);
      const Index db = 2 + static_cast<Index>((s / 2) % 2);
      const auto rho = testing::random_bipartite(da, db, 50 + s, 1 + static_cast<Index>(s % (da * db)));
      const auto ext = a_complement_extension(rho);
      CHECK(ext.dim_ancilla <= da * db);
      CHECK(max_abs(ext.trace_out_ancilla() - rho.matrix()) <= 1e-9);
      CHECK(max_abs(ext.trace_out_a() - ext.state.matrix()) <= 1e-9);
      // B marginals agree: both are marginals of the same global pure state
      CHECK(max_abs(ext.state.reduced_b().matrix() - rho.reduced_b().matrix()) <= 1e-9);
    }
  }
}

TEST_CASE("product test", "[states]") {
  SECTION("quantum-thermal state") {
    const auto ctx = gibbs_state(diag({0.0, 0.4, 1.1}), 1.5);
    const auto rho = product_state(random_density(2, 2, 3), ctx.gibbs());
    const auto test = is_product_state(rho);
    CHECK(test.is_product);
    CHECK_FALSE(test.witness.has_value());
  }
  SECTION("Bell state with a Z-basis witness") {
    const auto test = is_product_state(testing::bell_state());
    REQUIRE_FALSE(test.is_product);
    REQUIRE(test.witness.has_value());
    const auto& w = *test.witness;
    // the conditionals are orthogonal pure states
    CHECK(std::abs(w.separation - 2.0) < 1e-9);
    CHECK(std::abs(w.conditional_1.purity() - 1.0) < 1e-9);
    CHECK(std::abs(w.conditional_2.purity() - 1.0) < 1e-9);
    CHECK(w.effect_1.selfadjointView<Eigen::Lower>().eigenvalues().minCoeff() >= -1e-12);
    CHECK(w.effect_2.selfadjointView<Eigen::Lower>().eigenvalues().minCoeff() >= -1e-12);
  }
  SECTION("classically correlated state") {
    const auto test = is_product_state(testing::classically_correlated());
    CHECK_FALSE(test.is_product);
    // rho - I/4 = diag(1/4, -1/4, -1/4, 1/4)
    CHECK(std::abs(test.distance - 1.0) < 1e-12);
  }
  SECTION("random products and correlated states") {
    for (std::uint64_t s = 0; s < 30; ++s) {
      const Index da = 2 + static_cast<Index>(s % 3);
      const Index db = 2 + static_cast<Index>((s / 3) % 2);
      const auto prod = product_state(random_density(da, 1 + static_cast<Index>(s % da), s),
                                      random_density(db, db, 100 + s));
      CHECK(is_product_state(prod).is_product);

      const auto rho = testing::random_bipartite(da, db, 200 + s);
      if (mutual_information(rho) > 1e-6) {
        const auto test = is_product_state(rho);
        CHECK_FALSE(test.is_product);
        REQUIRE(test.witness.has_value());
        CHECK(test.witness->separation > 0.0);
      }
    }
  }
}

TEST_CASE("random_density", "[states]") {
  const auto pure = random_density(2, 1, 42);
  CHECK(std::abs(pure.purity() - 1.0) <= 1e-10);
  CHECK(random_density(4, 4, 42).spectrum().minCoeff() > 0.0);
  CHECK((random_density(3, 2, 9).matrix().array() == random_density(3, 2, 9).matrix().array()).all());
  CHECK_FALSE((random_density(3, 2, 9).matrix().array() == random_density(3, 2, 10).matrix().array()).all());
  CHECK_THROWS_AS(random_density(3, 0, 1), InvalidRank);
  CHECK_THROWS_AS(random_density(3, 4, 1), InvalidRank);
  for (Index rank = 1; rank <= 4; ++rank) {
    const RVector spectrum = random_density(4, rank, 77).spectrum();
    Index positive = 0;
    for (Index k = 0; k < 4; ++k) positive += spectrum(k) > 1e-12 ? 1 : 0;
    CHECK(positive == rank);
  }
}

TEST_CASE("BipartiteState checks its split", "[states]") {
  CHECK_THROWS_AS(BipartiteState(DensityMatrix::maximally_mixed(6), 2, 2), DimensionMismatch);
  const auto rho = testing::random_bipartite(2, 3, 8);
  CHECK(std::abs(rho.reduced_a().matrix().trace().real() - 1.0) < 1e-12);
  CHECK(rho.reduced_b().dim() == 3);
}
