// Copyright 2026 The HetDP Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
//
// Weight selection for the weighted-release mechanisms. Each rule picks a
// point on the simplex trading data error (distance from uniform weights)
// against noise (the largest weight-to-privacy ratio, which fixes the
// Laplace scale).

#ifndef HETDP_WEIGHTS_HPP_
#define HETDP_WEIGHTS_HPP_

#include "hetdp/core.hpp"

namespace hetdp {

// Parameters of the error objectives. log_term() is the factor multiplying
// the noise scale: log(k_eff/beta), clamped at zero from below.
struct ObjectiveParams {
  double k_eff;  // >= 1; number of coordinates the noise max runs over
  double beta;   // in (0, 1]

  double log_term() const;
};

// Mapping from (task, metric, beta) to objective parameters:
//   frequency PAC: k_eff = bins, beta       frequency MSE: k_eff = bins, beta = 1
//   mean PAC:      k_eff = 1,    beta       mean MSE:      k_eff = e,    beta = 1
ObjectiveParams objective_params_for(const Task& task, Metric metric,
                                     double beta);

// ||w/eps||_inf. Users with infinite epsilon contribute zero.
double max_privacy_ratio(const WeightVector& w, const PrivacyDemand& eps);

// Error objectives (square roots of the bound expressions):
//   correlated:    sqrt(||w - 1/n||_1^2 + log_term^2 * ||w/eps||_inf^2)
//   uncorrelated:  sqrt(min(||w - 1/n||_1^2, log_term * ||w||_2^2)
//                       + log_term^2 * ||w/eps||_inf^2)
double correlated_objective(const WeightVector& w, const PrivacyDemand& eps,
                            const ObjectiveParams& params);
double uncorrelated_objective(const WeightVector& w, const PrivacyDemand& eps,
                              const ObjectiveParams& params);
double objective_value(Setting setting, const WeightVector& w,
                       const PrivacyDemand& eps, const ObjectiveParams& params);

struct SolverReport {
  WeightVector weights;
  double objective_value;  // solver's own objective evaluated at weights
  int iterations;
  bool converged;
};

// Exact minimizer of the correlated / uncorrelated objective over the
// simplex. Deterministic, O(n log n): the problem is reduced to a univariate
// piecewise-quadratic minimization over s = ||w/eps||_inf (see weights.cpp).
SolverReport solve_weights_exact(Setting setting, const PrivacyDemand& eps,
                                 const ObjectiveParams& params);

// Exact minimizer of ||w||_2^2 + c * ||w/eps||_inf^2 over the simplex in
// O(n log n) via a capped-sequence recursion on sorted epsilon. c >= 0.
// All epsilon infinite (the ratio term vanishes for every w) yields uniform
// weights.
SolverReport solve_weights_turbo(const PrivacyDemand& eps, double c);

// l2 surrogates of the two objectives, solved through solve_weights_turbo:
//   correlated:    n*||w - 1/n||_2^2 + log_term^2 * ||w/eps||_inf^2
//   uncorrelated:  min(n*||w - 1/n||_2^2, log_term * ||w||_2^2)
//                  + log_term^2 * ||w/eps||_inf^2
// objective_value is the achieved surrogate value.
SolverReport turbo_objective_weights(Setting setting, const PrivacyDemand& eps,
                                     const ObjectiveParams& params);
double turbo_surrogate_value(Setting setting, const WeightVector& w,
                             const PrivacyDemand& eps,
                             const ObjectiveParams& params);

// Closed-form weights w_i proportional to 1 - exp(-eps_i); infinite epsilon
// contributes weight proportional to 1.
WeightVector hpfa_weights(const PrivacyDemand& eps);

// Weights proportional to epsilon. Throws if any epsilon is infinite.
WeightVector prop_weights(const PrivacyDemand& eps);

// Weights for the local-randomizer baselines. The frequency task minimizes
// an l2 surrogate with per-user noise-variance coefficients
// coth(eps_i/4)/eps_i (0 in the eps -> inf limit); diagonal quadratics on
// the simplex, solved in closed form. The mean task reuses
// solve_weights_exact with k_eff = 1. objective_value is the square root of
// the achieved surrogate.
SolverReport ldp_weights(Setting setting, const PrivacyDemand& eps,
                         const ObjectiveParams& params, const Task& task);
double ldp_surrogate_value(Setting setting, const WeightVector& w,
                           const PrivacyDemand& eps,
                           const ObjectiveParams& params, const Task& task);

namespace detail {
// Raw capped sequence r of the quadratic recursion, in sorted-demand order,
// exposed so tests can check its structure (non-decreasing, r_i <= eps_(i)).
// Requires c > 0 and at least one finite demand.
std::vector<double> turbo_r_sequence(const PrivacyDemand& eps, double c);
}  // namespace detail

}  // namespace hetdp

#endif  // HETDP_WEIGHTS_HPP_
