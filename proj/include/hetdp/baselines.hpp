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
// Reference estimators the weighted mechanisms are benchmarked against:
// uniform enforcement of the strictest demand, subsample-then-aggregate,
// and per-user local randomizers.

#ifndef HETDP_BASELINES_HPP_
#define HETDP_BASELINES_HPP_

#include <cstdint>
#include <vector>

#include "hetdp/core.hpp"
#include "hetdp/mechanisms.hpp"
#include "hetdp/random.hpp"

namespace hetdp {

// Uniform weights with every user held to the strictest demand min_i eps_i:
// the homogeneous release at that level (frequency noise 2/(n*min_eps),
// mean noise 1/(n*min_eps)).
MechanismOutput uni_estimate(const Dataset& data, const PrivacyDemand& eps,
                             Rng& rng);

// Subsample-then-release at the laxest demand t = max_i eps_i: user i is
// included with probability (e^{eps_i}-1)/(e^t-1), then the homogeneous
// t-level release runs on the realized subsample of size m (noise 2/(m*t)
// per bin, 1/(m*t) for means). With t infinite the inclusion probability
// degenerates to 1 for infinite-eps users and 0 otherwise. An empty
// subsample releases 1/2 per coordinate.
MechanismOutput sm_estimate(const Dataset& data, const PrivacyDemand& eps,
                            Rng& rng);

// Inclusion probability of the subsampling baseline; eps_i <= t, t = max eps.
double sm_inclusion_probability(double eps_i, double t);

// Local frequency randomizer: the one-hot encoding of record (1-indexed,
// in {1..bins}) with each bit flipped independently with probability
// 1/(1 + e^{eps/2}). eps infinite reports the exact one-hot.
std::vector<std::uint8_t> ldp_freq_client(int record, int bins, double eps,
                                          Rng& rng);

// Debiased weighted aggregation of local frequency reports:
// sum_i w_i * coth(eps_i/4) * (x_i - 1/(1+e^{eps_i/2})), clamped to [0,1]
// per coordinate.
EmpiricalStatistic ldp_freq_aggregate(
    const std::vector<std::vector<std::uint8_t>>& reports,
    const WeightVector& w, const PrivacyDemand& eps, int bins);

// Local mean randomizer: value + Laplace(1/eps).
double ldp_mean_client(double value, double eps, Rng& rng);

// clamp(sum_i w_i * y_i, 0, 1).
EmpiricalStatistic ldp_mean_aggregate(const std::vector<double>& reports,
                                      const WeightVector& w);

// End-to-end local-randomizer estimate with caller-supplied weights
// (normally from ldp_weights). noise_scale is 0: all noise is client-side.
MechanismOutput ldp_estimate(const Dataset& data, const WeightVector& w,
                             const PrivacyDemand& eps, Rng& rng);

namespace detail {
// Pre-clamp aggregates, for distributional tests.
std::vector<double> ldp_freq_aggregate_preclamp(
    const std::vector<std::vector<std::uint8_t>>& reports,
    const WeightVector& w, const PrivacyDemand& eps, int bins);
double ldp_mean_aggregate_preclamp(const std::vector<double>& reports,
                                   const WeightVector& w);
}  // namespace detail

}  // namespace hetdp

#endif  // HETDP_BASELINES_HPP_
