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

// Acceptance suite: one PASS/FAIL line per criterion, each with its pinned
// tolerance and runtime budget. Exits non-zero if any criterion fails.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "test_support.hpp"
#include "thermowork/infotheory.hpp"
#include "thermowork/io.hpp"
#include "thermowork/measurement.hpp"
#include "thermowork/random.hpp"
#include "thermowork/workmeasures.hpp"

#ifndef THERMOWORK_CLI_PATH
#error "THERMOWORK_CLI_PATH must point at the thermowork executable"
#endif

namespace tw = thermowork;
namespace twt = thermowork::testing;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;
};

struct Criterion {
  int id;
  std::string name;
  double budget_seconds;
  std::function<Outcome()> run;
};

std::string fmt(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3e", x);
  return buf;
}

double uniform_in(tw::Rng& rng, double lo, double hi) { return lo + (hi - lo) * rng.uniform(); }

tw::OptConfig default_config(std::uint64_t seed) {
  tw::OptConfig config;
  config.seed = seed;
  return config;
}

// 1. Battery Gibbs state, 20 (E, beta) pairs, entrywise 1e-12.
Outcome battery_gibbs() {
  tw::Rng rng(1);
  double worst = 0.0;
  for (int k = 0; k < 20; ++k) {
    const double energy = uniform_in(rng, 0.1, 5.0);
    const double beta = uniform_in(rng, 0.1, 5.0);
    const auto ctx = tw::gibbs_state(twt::diag({0.0, energy}), beta);
    const double boltzmann = std::exp(-beta * energy);
    const tw::CMatrix expected = twt::diag({1.0, boltzmann}) / (1.0 + boltzmann);
    worst = std::max(worst, (ctx.gibbs().matrix() - expected).cwiseAbs().maxCoeff());
  }
  return {worst <= 1e-12, "max entry error " + fmt(worst) + " (tol 1e-12)"};
}

// 2. Free-energy identity on 500 states, d <= 6, 1e-8.
Outcome free_energy_identity() {
  tw::Rng rng(2);
  double worst = 0.0;
  for (int k = 0; k < 500; ++k) {
    const tw::Index d = 1 + static_cast<tw::Index>(k % 6);
    const tw::Index rank = 1 + static_cast<tw::Index>(tw::mix_seed(2, k) % d);
    const auto rho = tw::random_density(d, rank, tw::mix_seed(20, k));
    const double beta = uniform_in(rng, 0.2, 3.0);
    const auto ctx = tw::gibbs_state(tw::random_hamiltonian(d, 1.5, tw::mix_seed(21, k)), beta);
    const auto rel = tw::relative_entropy_to_gibbs(rho, ctx);
    const double lhs = rel / beta;
    const double rhs = tw::free_energy(rho, ctx) - tw::free_energy(ctx.gibbs(), ctx);
    worst = std::max(worst, std::abs(lhs - rhs));
  }
  return {worst <= 1e-8, "max |(1/b)S(r||g) - dF| = " + fmt(worst) + " (tol 1e-8)"};
}

// 3. Pure-state closed forms, 50 two-qubit + 50 qubit-qutrit states.
Outcome pure_state_closed_forms() {
  tw::Rng rng(3);
  double worst_a = 0.0;
  double worst_r = 0.0;
  for (int k = 0; k < 100; ++k) {
    const tw::Index db = k < 50 ? 2 : 3;
    const auto phi = twt::random_pure_bipartite(2, db, tw::mix_seed(30, k));
    const double beta = uniform_in(rng, 0.5, 2.0);
    const auto ctx = tw::gibbs_state(tw::random_hamiltonian(db, 1.0, tw::mix_seed(31, k)), beta);
    const auto assistance = tw::work_of_assistance(phi, ctx, default_config(tw::mix_seed(32, k)));
    worst_a = std::max(worst_a, beta * std::abs(assistance.value - tw::pure_state_assistance(phi, ctx)));
    worst_r = std::max(worst_r, beta * std::abs(tw::relative_entropy_of_collaboration(phi, ctx) -
                                                tw::pure_state_collaboration(phi, ctx)));
  }
  return {worst_a <= 1e-4 && worst_r <= 1e-9,
          "W_a err " + fmt(worst_a) + " (tol 1e-4), W_r err " + fmt(worst_r) + " (tol 1e-9)"};
}

// 4. Isotropic closed form: d in {2, 3}, 11 lambdas in [0, 1].
Outcome isotropic_closed_form() {
  double worst_j = 0.0;
  double worst_spectrum = 0.0;
  double worst_average = 0.0;
  for (tw::Index d : {2, 3}) {
    for (int k = 0; k <= 10; ++k) {
      const tw::IsotropicSpec spec{d, k / 10.0};
      const auto state = tw::isotropic_state(spec);
      const auto opt = tw::optimize_classical_correlations(state, default_config(40 + k + 100 * d));
      worst_j = std::max(worst_j, std::abs(opt.value - tw::isotropic_classical_correlations(spec)));

      const auto ctx = tw::gibbs_state(twt::zero_hamiltonian(d), 1.0);
      const auto closed = tw::isotropic_work_of_assistance(spec, ctx);
      const tw::RVector expected = closed.states.front().spectrum();
      const auto ensemble = tw::condition_on_outcome(state, opt.povm);
      tw::CMatrix average = tw::CMatrix::Zero(d, d);
      for (std::size_t i = 0; i < ensemble.probs.size(); ++i) {
        if (ensemble.negligible[i]) continue;
        average += ensemble.probs[i] * ensemble.states[i].matrix();
        const tw::RVector spectrum = ensemble.states[i].spectrum();
        for (tw::Index j = 0; j < d; ++j) {
          worst_spectrum = std::max(worst_spectrum, std::abs(spectrum(j) - expected(j)));
        }
      }
      const tw::CMatrix mixed = tw::CMatrix::Identity(d, d) / static_cast<double>(d);
      worst_average = std::max(worst_average, (average - mixed).cwiseAbs().maxCoeff());
    }
  }
  return {worst_j <= 1e-4 && worst_spectrum <= 1e-8 && worst_average <= 1e-8,
          "J err " + fmt(worst_j) + " (tol 1e-4), ensemble spectrum err " + fmt(worst_spectrum) +
              " (tol 1e-8), ensemble average err " + fmt(worst_average)};
}

// 5. Discord consistency on 200 two-qubit states.
Outcome discord_consistency() {
  tw::Rng rng(5);
  double worst = 0.0;
  double most_negative = INFINITY;
  for (int k = 0; k < 200; ++k) {
    const auto state = twt::random_bipartite(2, 2, tw::mix_seed(50, k),
                                             1 + static_cast<tw::Index>(k % 4));
    const double beta = uniform_in(rng, 0.5, 2.0);
    const auto ctx = tw::gibbs_state(tw::random_hamiltonian(2, 1.0, tw::mix_seed(51, k)), beta);
    const auto report = tw::hierarchy_report(state, ctx, default_config(tw::mix_seed(52, k)));
    const double lhs = report.w_collaboration_upper.value - report.w_assistance.value;
    const double rhs = (report.mutual_info.value - report.j_arrow.value) / beta;
    worst = std::max(worst, std::abs(lhs - rhs));
    most_negative = std::min(most_negative, beta * report.discord_gap.value);
  }
  return {worst <= 1e-8 && most_negative >= -1e-6,
          "max identity err " + fmt(worst) + " (tol 1e-8), min beta*gap " + fmt(most_negative) +
              " (tol -1e-6)"};
}

// 6. Assistance strictly helps on correlated states and not at all on products.
Outcome assistance_strictness() {
  tw::Rng rng(6);
  double min_gain = INFINITY;
  int correlated = 0;
  for (int k = 0; correlated < 100; ++k) {
    const tw::Index db = (k % 2 == 0) ? 2 : 3;
    const auto state = twt::random_bipartite(2, db, tw::mix_seed(60, k),
                                             1 + static_cast<tw::Index>(k % (2 * db)));
    const double distance = tw::is_product_state(state).distance;
    if (distance <= 0.05) continue;
    ++correlated;
    const double beta = uniform_in(rng, 0.5, 2.0);
    const auto ctx = tw::gibbs_state(tw::random_hamiltonian(db, 1.0, tw::mix_seed(61, k)), beta);
    const double gain = tw::work_of_assistance(state, ctx, default_config(tw::mix_seed(62, k))).value -
                        tw::distillable_work(state.reduced_b(), ctx);
    min_gain = std::min(min_gain, beta * gain);
  }
  double worst_product = 0.0;
  for (int k = 0; k < 50; ++k) {
    const tw::Index da = 2 + k % 2;
    const auto state = tw::product_state(tw::random_density(da, 1 + k % da, tw::mix_seed(63, k)),
                                         tw::random_density(2, 1 + k % 2, tw::mix_seed(64, k)));
    const double beta = uniform_in(rng, 0.5, 2.0);
    const auto ctx = tw::gibbs_state(tw::random_hamiltonian(2, 1.0, tw::mix_seed(65, k)), beta);
    const double gain = tw::work_of_assistance(state, ctx, default_config(tw::mix_seed(66, k))).value -
                        tw::distillable_work(state.reduced_b(), ctx);
    worst_product = std::max(worst_product, beta * std::abs(gain));
  }
  return {min_gain > 1e-5 && worst_product <= 1e-5,
          "min beta*(W_a - W) on correlated " + fmt(min_gain) + " (> 1e-5), max on products " +
              fmt(worst_product) + " (<= 1e-5)"};
}

// 7. E_f(complement) + J = S(rho_B) on 50 two-qubit states, 2e-3 nats.
Outcome koashi_winter() {
  double worst = 0.0;
  for (int k = 0; k < 50; ++k) {
    const auto state = twt::random_bipartite(2, 2, tw::mix_seed(70, k),
                                             1 + static_cast<tw::Index>(k % 4));
    const auto check = tw::koashi_winter_check(state, default_config(tw::mix_seed(71, k)));
    worst = std::max(worst, std::abs(check.residual));
  }
  return {worst <= 2e-3, "max |E_f + J - S(rho_B)| = " + fmt(worst) + " nats (tol 2e-3)"};
}

// 8. No sigma_A beats rho_A in the collaboration minimization.
Outcome collaboration_minimization() {
  tw::Rng rng(8);
  double worst_probe = INFINITY;
  double worst_attain = 0.0;
  for (int k = 0; k < 100; ++k) {
    const tw::Index da = 2 + k % 2;
    const tw::Index db = 2 + (k / 2) % 2;
    const auto state = twt::random_bipartite(da, db, tw::mix_seed(80, k),
                                             1 + static_cast<tw::Index>(k % (da * db)));
    const double beta = uniform_in(rng, 0.5, 2.0);
    const auto ctx = tw::gibbs_state(tw::random_hamiltonian(db, 1.0, tw::mix_seed(81, k)), beta);
    const double w_r = tw::relative_entropy_of_collaboration(state, ctx);
    auto probe_value = [&](const tw::DensityMatrix& sigma_a) {
      const tw::DensityMatrix qt(tw::kron(sigma_a.matrix(), ctx.gibbs().matrix()));
      return tw::relative_entropy(state.state(), qt).value / beta;
    };
    for (int p = 0; p < 200; ++p) {
      const tw::Index rank = 1 + static_cast<tw::Index>(p % da);
      const auto sigma = tw::random_density(da, rank, tw::mix_seed(82, 1000 * k + p));
      worst_probe = std::min(worst_probe, probe_value(sigma) - w_r);
    }
    worst_attain = std::max(worst_attain, std::abs(probe_value(state.reduced_a()) - w_r));
  }
  return {worst_probe >= -1e-9 && worst_attain <= 1e-9,
          "min probe - W_r " + fmt(worst_probe) + " (>= -1e-9), |W(rho_A) - W_r| " +
              fmt(worst_attain) + " (<= 1e-9)"};
}

// 9. Optimizer never loses to the qubit grid oracle by more than 1e-4.
Outcome optimizer_vs_oracle() {
  double worst = INFINITY;
  for (int k = 0; k < 100; ++k) {
    const tw::Index db = 2 + k % 2;
    const auto state = twt::random_bipartite(2, db, tw::mix_seed(90, k),
                                             1 + static_cast<tw::Index>(k % (2 * db)));
    const double opt = tw::optimize_classical_correlations(state, default_config(tw::mix_seed(91, k))).value;
    worst = std::min(worst, opt - tw::brute_force_qubit_J(state, 60));
  }
  return {worst >= -1e-4, "min (optimizer - oracle) " + fmt(worst) + " (>= -1e-4)"};
}

// 10. Sweep CSV is byte-identical across reruns and thread counts.
Outcome sweep_determinism() {
  namespace fs = std::filesystem;
  const fs::path dir = fs::temp_directory_path() / "thermowork_acceptance";
  fs::create_directories(dir);
  const fs::path h = dir / "h.json";
  tw::io::save_hamiltonian_file(h, twt::diag({0.0, 0.7}));

  std::vector<std::string> outputs;
  for (const char* threads : {"1", "1", "4"}) {
    const fs::path out = dir / ("sweep_" + std::to_string(outputs.size()) + ".csv");
    const std::string cmd = std::string("THERMOWORK_THREADS=") + threads + " \"" +
                            THERMOWORK_CLI_PATH + "\" sweep \"" + h.string() +
                            "\" --dim-a 2 --dim-b 2 --count 24 --seed 17 --qt-every 6 --out \"" +
                            out.string() + "\" 2>/dev/null";
    const int status = std::system(cmd.c_str());
    if (status != 0) return {false, "sweep exited with status " + std::to_string(status)};
    outputs.push_back(tw::io::read_text(out));
  }
  const bool same = outputs[0] == outputs[1] && outputs[0] == outputs[2];
  return {same && !outputs[0].empty(),
          same ? "3 runs (threads 1, 1, 4) byte-identical, " + std::to_string(outputs[0].size()) +
                     " bytes"
               : "CSV differs between runs"};
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria{
      {1, "battery Gibbs state", 1.0, battery_gibbs},
      {2, "free-energy identity", 10.0, free_energy_identity},
      {3, "pure-state closed forms", 300.0, pure_state_closed_forms},
      {4, "isotropic closed form", 600.0, isotropic_closed_form},
      {5, "discord gap consistency", 900.0, discord_consistency},
      {6, "assistance strictly helps iff correlated", 600.0, assistance_strictness},
      {7, "Koashi-Winter identity", 1200.0, koashi_winter},
      {8, "collaboration minimization attained", 120.0, collaboration_minimization},
      {9, "optimizer vs qubit oracle", 900.0, optimizer_vs_oracle},
      {10, "sweep determinism", 300.0, sweep_determinism},
  };

  int failures = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome outcome;
    try {
      outcome = c.run();
    } catch (const std::exception& e) {
      outcome = {false, std::string("exception: ") + e.what()};
    }
    const double seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    const bool in_budget = seconds < c.budget_seconds;
    const bool pass = outcome.pass && in_budget;
    if (!pass) ++failures;
    std::printf("[%s] %2d %-42s %s; %.2fs (budget %.0fs)\n", pass ? "PASS" : "FAIL", c.id,
                c.name.c_str(), outcome.detail.c_str(), seconds, c.budget_seconds);
    std::fflush(stdout);
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failures,
              criteria.size());
  return failures == 0 ? 0 : 1;
}
