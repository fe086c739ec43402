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

#ifndef HETDP_MECHANISMS_HPP_
#define HETDP_MECHANISMS_HPP_

#include <vector>

#include "hetdp/core.hpp"
#include "hetdp/random.hpp"
#include "hetdp/weights.hpp"

namespace hetdp {

struct MechanismOutput {
  EmpiricalStatistic estimate;  // clamped to [0,1] per coordinate
  double noise_scale;
  WeightVector weights;
};

// Weighted frequency release: adds i.i.d. Laplace(2*||w/eps||_inf) noise to
// each coordinate of the weighted histogram sum_i w_i * onehot(X_i), then
// clamps each coordinate to [0,1]. No renormalization across bins. Satisfies
// the per-user guarantee eps_i for every user.
MechanismOutput hpf(const Dataset& data, const WeightVector& w,
                    const PrivacyDemand& eps, Rng& rng);

// Weighted mean release: adds one Laplace(||w/eps||_inf) draw to
// sum_i w_i * X_i and clamps to [0,1].
MechanismOutput hpm(const Dataset& data, const WeightVector& w,
                    const PrivacyDemand& eps, Rng& rng);

namespace detail {
// Pre-clamp estimates, exposed for distributional tests only.
EmpiricalStatistic hpf_preclamp(const Dataset& data, const WeightVector& w,
                                const PrivacyDemand& eps, Rng& rng);
EmpiricalStatistic hpm_preclamp(const Dataset& data, const WeightVector& w,
                                const PrivacyDemand& eps, Rng& rng);
// Noise-free weighted statistic sum_i w_i * stat(X_i).
EmpiricalStatistic weighted_statistic(const Dataset& data,
                                      const WeightVector& w);
}  // namespace detail

// Per-user worst-case log density ratio of the weighted release under a
// change of user i's record: sensitivity_i / noise_scale, with
// sensitivity_i = 2*w_i (frequency) or w_i (mean). Equals w_i/||w/eps||_inf
// for both tasks; a valid certificate means bound_i <= eps_i for all i.
// When ||w/eps||_inf == 0, users with w_i == 0 report 0 and users with
// w_i > 0 report +infinity (only reachable when their own epsilon is
// infinite).
std::vector<double> dp_ratio_audit(const WeightVector& w,
                                   const PrivacyDemand& eps, TaskKind task);

// Effective privacy levels actually granted by the mechanism and the
// per-user slack against the demands.
struct FreePrivacyReport {
  std::vector<double> effective;  // w_i / ||w/eps||_inf
  std::vector<double> slack;      // eps_i - effective_i, >= 0; inf demand
                                  // with finite effective gives inf slack
};

// If ||w/eps||_inf == 0 (all mass on infinite-epsilon users) every effective
// level is reported as 0.
FreePrivacyReport free_privacy_audit(const WeightVector& w,
                                     const PrivacyDemand& eps);

}  // namespace hetdp

#endif  // HETDP_MECHANISMS_HPP_
