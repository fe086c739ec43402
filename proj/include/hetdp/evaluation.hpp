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
// Monte-Carlo benchmark protocol: synthetic instance generation, the trial
// loop, and the error summaries.

#ifndef HETDP_EVALUATION_HPP_
#define HETDP_EVALUATION_HPP_

#include <optional>
#include <string>
#include <vector>

#include "hetdp/core.hpp"
#include "hetdp/random.hpp"
#include "hetdp/weights.hpp"

namespace hetdp {

// Synthetic instance description. The correlated generator ties each user's
// demand to their record's bin b: log eps = -|b - (bins+1)/2| + U[-hw, hw].
// The uncorrelated generator draws log eps ~ U[lo, hi] independently of the
// data. Categorical records follow a near-uniform law with one heavy bin
// (the central bin (bins+1)/2 carries heavy_bin_weight times the mass of
// each other bin, so under the correlated law the mode of the data sits
// where privacy demands are laxest, as in unimodal empirical data); scalar
// records are uniform on [0,1] and the correlated demand law runs over
// virtual_bins equal slices of [0,1].
struct SyntheticSpec {
  std::size_t n = 0;
  Task task = Task::frequency(12);
  Setting setting = Setting::kCorrelated;
  double law_halfwidth = 3.0;  // correlated: U[-hw, hw] around the bin center
  double log_eps_lo = -5.0;    // uncorrelated range
  double log_eps_hi = 5.0;
  double heavy_bin_weight = 2.0;
  int virtual_bins = 12;
};

struct SyntheticInstance {
  Dataset data;
  PrivacyDemand eps;
};

SyntheticInstance gen_correlated(const SyntheticSpec& spec, Rng& rng);
SyntheticInstance gen_uncorrelated(const SyntheticSpec& spec, Rng& rng);
SyntheticInstance gen_instance(const SyntheticSpec& spec, Rng& rng);

// Estimator with its weights resolved once per benchmark. UNI and SM carry
// no precomputed weights; LDP noise is client-side so noise_scale is 0.
struct ResolvedEstimator {
  EstimatorSpec spec;
  std::string name;
  std::optional<SolverReport> solver;
  std::optional<WeightVector> weights;
  std::optional<double> noise_scale;
};

ResolvedEstimator resolve_estimator(const EstimatorSpec& spec,
                                    const PrivacyDemand& eps);

// Registered estimator names: hpf-opt/hpf-a/hpf-turbo (hpm-* for the mean
// task), uni, prop, sm, ldp.
std::string estimator_name(EstimatorKind kind, TaskKind task);
std::optional<EstimatorKind> parse_estimator(const std::string& name,
                                             TaskKind task);
std::vector<std::string> registered_estimators(TaskKind task);

struct TrialReport {
  std::vector<double> errors;  // one linf error per trial, trial order
  double pac_quantile;         // at the spec's beta
  double mse;
  std::uint64_t seed;
  std::size_t trials;
};

// ceil((1-beta)*T)-th smallest error (1-indexed). beta in (0,1).
double pac_quantile(std::vector<double> errors, double beta);
double mean_squared_error(const std::vector<double>& errors);

// Default trial counts: 10^4 when the instance is fixed across trials
// (correlated), ceil(10 * n * ln n) when each trial re-permutes the data.
std::size_t default_trials(Setting setting, std::size_t n);

// Runs the benchmark loop. The dataset is re-permuted every trial in the
// uncorrelated setting and left fixed otherwise; errors are measured in
// l-infinity against the exact statistic of the unpermuted data. Trial t
// draws only from source.stream(t), so results are bit-identical for any
// thread count and any execution order.
TrialReport run_trials(const Dataset& data, const PrivacyDemand& eps,
                       const ResolvedEstimator& est, std::size_t trials,
                       const RandomSource& source, int threads = 1);
TrialReport run_trials(const Dataset& data, const PrivacyDemand& eps,
                       const EstimatorSpec& spec, std::size_t trials,
                       const RandomSource& source, int threads = 1);

}  // namespace hetdp

#endif  // HETDP_EVALUATION_HPP_
