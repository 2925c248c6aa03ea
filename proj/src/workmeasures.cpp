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

#include "thermowork/workmeasures.hpp"

#include <cmath>
#include <string>

#include "thermowork/infotheory.hpp"

namespace thermowork {
namespace {

void require_b_context(const BipartiteState& rho_ab, const GibbsContext& ctx) {
  if (ctx.dim() != rho_ab.dim_b()) {
    throw DimensionMismatch("Hamiltonian dimension " + std::to_string(ctx.dim()) +
                            " does not match d_B = " + std::to_string(rho_ab.dim_b()));
  }
}

void require_pure(const BipartiteState& phi_ab) {
  const double purity = phi_ab.state().purity();
  if (purity < 1.0 - 1e-8) throw NotPure("purity " + std::to_string(purity));
}

}  // namespace

double distillable_work(const DensityMatrix& rho, const GibbsContext& ctx) {
  return relative_entropy_to_gibbs(rho, ctx) / ctx.beta();
}

double assisted_work_at(const BipartiteState& rho_ab, const GibbsContext& ctx, const Povm& povm) {
  require_b_context(rho_ab, ctx);
  const auto ensemble = condition_on_outcome(rho_ab, povm);
  double total = 0.0;
  for (std::size_t i = 0; i < ensemble.probs.size(); ++i) {
    if (ensemble.negligible[i]) continue;
    total += ensemble.probs[i] * relative_entropy_to_gibbs(ensemble.states[i], ctx);
  }
  return total / ctx.beta();
}

AssistanceResult work_of_assistance(const BipartiteState& rho_ab, const GibbsContext& ctx,
                                    const OptConfig& config) {
  require_b_context(rho_ab, ctx);
  OptResult opt = optimize_classical_correlations(rho_ab, config);
  const double value = (relative_entropy_to_gibbs(rho_ab.reduced_b(), ctx) + opt.value) /
                       ctx.beta();
  return {value, opt.value, std::move(opt.povm), opt.converged};
}

double relative_entropy_of_collaboration(const BipartiteState& rho_ab, const GibbsContext& ctx) {
  require_b_context(rho_ab, ctx);
  // log(rho_A (x) gamma) = log rho_A (x) 1 + P_A (x) log gamma on supp(rho_A) (x) H_B.
  const auto log_a = matrix_log_psd(rho_ab.reduced_a().matrix());
  const CMatrix id_b = CMatrix::Identity(rho_ab.dim_b(), rho_ab.dim_b());
  const CMatrix log_sigma = kron(log_a.log, id_b) + kron(log_a.support, ctx.log_gibbs());
  const CMatrix support = kron(log_a.support, id_b);
  const auto result = relative_entropy_with_log(rho_ab.state(), log_sigma, support);
  return result.value / ctx.beta();
}

double quantum_discord(const BipartiteState& rho_ab, const OptConfig& config) {
  return mutual_information(rho_ab) - optimize_classical_correlations(rho_ab, config).value;
}

double discord_gap(const BipartiteState& rho_ab, const GibbsContext& ctx, const OptConfig& config) {
  return relative_entropy_of_collaboration(rho_ab, ctx) -
         work_of_assistance(rho_ab, ctx, config).value;
}

double pure_state_assistance(const BipartiteState& phi_ab, const GibbsContext& ctx) {
  require_b_context(phi_ab, ctx);
  require_pure(phi_ab);
  const DensityMatrix rho_b = phi_ab.reduced_b();
  return (relative_entropy_to_gibbs(rho_b, ctx) + von_neumann_entropy(rho_b)) / ctx.beta();
}

double pure_state_collaboration(const BipartiteState& phi_ab, const GibbsContext& ctx) {
  require_b_context(phi_ab, ctx);
  require_pure(phi_ab);
  const DensityMatrix rho_b = phi_ab.reduced_b();
  return (relative_entropy_to_gibbs(rho_b, ctx) + 2.0 * von_neumann_entropy(rho_b)) / ctx.beta();
}

void validate(const IsotropicSpec& spec) {
  if (spec.d < 2) throw LambdaOutOfRange("isotropic states need d >= 2");
  const double d2 = static_cast<double>(spec.d * spec.d);
  const double lower = -1.0 / (d2 - 1.0);
  if (!(spec.lambda >= lower - 1e-12 && spec.lambda <= 1.0 + 1e-12)) {
    throw LambdaOutOfRange("lambda = " + std::to_string(spec.lambda) + " outside [" +
                           std::to_string(lower) + ", 1] for d = " + std::to_string(spec.d));
  }
}

BipartiteState isotropic_state(const IsotropicSpec& spec) {
  validate(spec);
  const Index d = spec.d;
  const CVector phi = maximally_entangled(d);
  CMatrix rho = spec.lambda * (phi * phi.adjoint()) +
                ((1.0 - spec.lambda) / static_cast<double>(d * d)) * CMatrix::Identity(d * d, d * d);
  rho = (rho + rho.adjoint()).eval() / 2.0;
  return BipartiteState(DensityMatrix(std::move(rho)), d, d);
}

namespace {

std::vector<double> isotropic_conditional_spectrum(const IsotropicSpec& spec) {
  const double d = static_cast<double>(spec.d);
  const double low = (1.0 - spec.lambda) / d;
  std::vector<double> p(static_cast<std::size_t>(spec.d - 1), low);
  p.push_back(1.0 - (d - 1.0) * low);
  return p;
}

}  // namespace

double isotropic_classical_correlations(const IsotropicSpec& spec) {
  validate(spec);
  return std::log(static_cast<double>(spec.d)) - shannon_entropy(isotropic_conditional_spectrum(spec));
}

IsotropicAssistance isotropic_work_of_assistance(const IsotropicSpec& spec,
                                                 const GibbsContext& ctx) {
  validate(spec);
  const Index d = spec.d;
  if (ctx.dim() != d) throw DimensionMismatch("Hamiltonian must act on the d-dimensional B");

  IsotropicAssistance out;
  const double cross = ctx.log_gibbs().trace().real() / static_cast<double>(d);
  out.value = -(cross + shannon_entropy(isotropic_conditional_spectrum(spec))) / ctx.beta();
  out.j_arrow = isotropic_classical_correlations(spec);
  out.ensemble_established = spec.lambda >= 0.0;
  const double low = (1.0 - spec.lambda) / static_cast<double>(d);
  for (Index i = 0; i < d; ++i) {
    out.probs.push_back(1.0 / static_cast<double>(d));
    CMatrix state = low * CMatrix::Identity(d, d);
    state(i, i) += spec.lambda;
    out.states.emplace_back(std::move(state));
  }
  return out;
}

WorkReport hierarchy_report(const BipartiteState& rho_ab, const GibbsContext& ctx,
                            const OptConfig& config) {
  require_b_context(rho_ab, ctx);
  const double beta = ctx.beta();
  const DensityMatrix rho_b = rho_ab.reduced_b();
  const double unassisted = distillable_work(rho_b, ctx);
  AssistanceResult assistance = work_of_assistance(rho_ab, ctx, config);
  const double collaboration = relative_entropy_of_collaboration(rho_ab, ctx);

  std::vector<std::string> notes{
      "w_assistance is an optimizer lower bound",
      "regularized assistance and collaboration work lie in [w_assistance, "
      "w_collaboration_upper]; not computed"};
  if (!assistance.converged) notes.emplace_back("optimizer did not converge within max_iter");

  return WorkReport{Energy{unassisted},
                    Energy{assistance.value},
                    std::move(assistance.povm),
                    Energy{collaboration},
                    Energy{collaboration - assistance.value},
                    Nats{mutual_information(rho_ab)},
                    Nats{assistance.j_arrow},
                    beta,
                    EnergyInterval{Energy{assistance.value}, Energy{collaboration}},
                    std::move(notes)};
}

std::optional<std::string> check_invariants(const WorkReport& report) {
  const double slack = 1e-6 / report.beta;
  if (!(report.w_unassisted.value <= report.w_assistance.value + slack)) {
    return "w_unassisted <= w_assistance";
  }
  if (!(report.w_assistance.value <= report.w_collaboration_upper.value + slack)) {
    return "w_assistance <= w_collaboration_upper";
  }
  const double gap = report.w_collaboration_upper.value - report.w_assistance.value;
  if (!(std::abs(report.discord_gap.value - gap) <= 1e-9)) {
    return "discord_gap = w_collaboration_upper - w_assistance";
  }
  if (!(report.discord_gap.value >= -slack)) return "discord_gap >= 0";
  return std::nullopt;
}

}  // namespace thermowork
