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

#include "hetdp/evaluation.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <thread>

#include "hetdp/baselines.hpp"
#include "hetdp/mechanisms.hpp"

namespace hetdp {

namespace {

int draw_heavy_bin_record(int bins, double heavy_weight, Rng& rng) {
  // The central bin carries heavy_weight times the mass of each other bin,
  // mirroring unimodal empirical data whose mode falls where the correlated
  // privacy law is laxest.
  const int heavy = (bins + 1) / 2;
  const double total = heavy_weight + static_cast<double>(bins - 1);
  double u = rng.uniform01() * total;
  if (u < heavy_weight) return heavy;
  u -= heavy_weight;
  const int b = 1 + static_cast<int>(u);  // u in [0, bins-1)
  const int other = std::min(b, bins - 1);
  return other < heavy ? other : other + 1;
}

int bin_of_scalar(double v, int virtual_bins) {
  const int b = 1 + static_cast<int>(v * static_cast<double>(virtual_bins));
  return std::min(b, virtual_bins);
}

double bin_center_log_eps(int bin, int bins) {
  return -std::abs(static_cast<double>(bin) -
                   (static_cast<double>(bins) + 1.0) / 2.0);
}

void check_spec(const SyntheticSpec& spec) {
  if (spec.n == 0) throw std::invalid_argument("synthetic n must be >= 1");
  if (spec.task.kind == TaskKind::kFrequency && spec.task.bins < 1) {
    throw std::invalid_argument("bin count must be at least 1");
  }
  if (spec.law_halfwidth < 0.0) {
    throw std::invalid_argument("law halfwidth must be >= 0");
  }
  if (spec.log_eps_lo > spec.log_eps_hi) {
    throw std::invalid_argument("log-eps range is inverted");
  }
  if (spec.heavy_bin_weight <= 0.0) {
    throw std::invalid_argument("heavy bin weight must be positive");
  }
  if (spec.virtual_bins < 1) {
    throw std::invalid_argument("virtual bin count must be at least 1");
  }
}

}  // namespace

SyntheticInstance gen_correlated(const SyntheticSpec& spec, Rng& rng) {
  check_spec(spec);
  const bool freq = spec.task.kind == TaskKind::kFrequency;
  const int law_bins = freq ? spec.task.bins : spec.virtual_bins;
  std::vector<int> cat;
  std::vector<double> real;
  std::vector<double> eps(spec.n);
  if (freq) cat.resize(spec.n); else real.resize(spec.n);
  for (std::size_t i = 0; i < spec.n; ++i) {
    int bin;
    if (freq) {
      cat[i] = draw_heavy_bin_record(spec.task.bins, spec.heavy_bin_weight, rng);
      bin = cat[i];
    } else {
      real[i] = rng.uniform01();
      bin = bin_of_scalar(real[i], spec.virtual_bins);
    }
    const double jitter =
        (2.0 * rng.uniform01() - 1.0) * spec.law_halfwidth;
    eps[i] = std::exp(bin_center_log_eps(bin, law_bins) + jitter);
  }
  Dataset data = freq ? Dataset::categorical(std::move(cat), spec.task.bins)
                      : Dataset::scalar(std::move(real));
  return SyntheticInstance{std::move(data), PrivacyDemand(std::move(eps))};
}

SyntheticInstance gen_uncorrelated(const SyntheticSpec& spec, Rng& rng) {
  check_spec(spec);
  const bool freq = spec.task.kind == TaskKind::kFrequency;
  std::vector<int> cat;
  std::vector<double> real;
  std::vector<double> eps(spec.n);
  if (freq) cat.resize(spec.n); else real.resize(spec.n);
  for (std::size_t i = 0; i < spec.n; ++i) {
    if (freq) {
      cat[i] = draw_heavy_bin_record(spec.task.bins, spec.heavy_bin_weight, rng);
    } else {
      real[i] = rng.uniform01();
    }
    eps[i] = std::exp(spec.log_eps_lo +
                      rng.uniform01() * (spec.log_eps_hi - spec.log_eps_lo));
  }
  Dataset data = freq ? Dataset::categorical(std::move(cat), spec.task.bins)
                      : Dataset::scalar(std::move(real));
  return SyntheticInstance{std::move(data), PrivacyDemand(std::move(eps))};
}

SyntheticInstance gen_instance(const SyntheticSpec& spec, Rng& rng) {
  return spec.setting == Setting::kCorrelated ? gen_correlated(spec, rng)
                                              : gen_uncorrelated(spec, rng);
}

std::string estimator_name(EstimatorKind kind, TaskKind task) {
  const std::string prefix = task == TaskKind::kFrequency ? "hpf" : "hpm";
  switch (kind) {
    case EstimatorKind::kOpt:      return prefix + "-opt";
    case EstimatorKind::kAnalytic: return prefix + "-a";
    case EstimatorKind::kTurbo:    return prefix + "-turbo";
    case EstimatorKind::kUni:      return "uni";
    case EstimatorKind::kProp:     return "prop";
    case EstimatorKind::kSm:       return "sm";
    case EstimatorKind::kLdp:      return "ldp";
  }
  throw std::invalid_argument("unknown estimator kind");
}

std::optional<EstimatorKind> parse_estimator(const std::string& name,
                                             TaskKind task) {
  static constexpr EstimatorKind kAll[] = {
      EstimatorKind::kOpt, EstimatorKind::kAnalytic, EstimatorKind::kTurbo,
      EstimatorKind::kUni, EstimatorKind::kProp,     EstimatorKind::kSm,
      EstimatorKind::kLdp};
  for (EstimatorKind k : kAll) {
    if (estimator_name(k, task) == name) return k;
  }
  return std::nullopt;
}

std::vector<std::string> registered_estimators(TaskKind task) {
  std::vector<std::string> out;
  for (EstimatorKind k :
       {EstimatorKind::kOpt, EstimatorKind::kAnalytic, EstimatorKind::kTurbo,
        EstimatorKind::kUni, EstimatorKind::kProp, EstimatorKind::kSm,
        EstimatorKind::kLdp}) {
    out.push_back(estimator_name(k, task));
  }
  return out;
}

ResolvedEstimator resolve_estimator(const EstimatorSpec& spec,
                                    const PrivacyDemand& eps) {
  ResolvedEstimator out;
  out.spec = spec;
  out.name = estimator_name(spec.kind, spec.task.kind);
  const bool freq = spec.task.kind == TaskKind::kFrequency;
  const double scale_mult = freq ? 2.0 : 1.0;
  const ObjectiveParams params =
      objective_params_for(spec.task, spec.metric, spec.beta);
  switch (spec.kind) {
    case EstimatorKind::kOpt:
      out.solver = solve_weights_exact(spec.setting, eps, params);
      break;
    case EstimatorKind::kTurbo:
      out.solver = turbo_objective_weights(spec.setting, eps, params);
      break;
    case EstimatorKind::kAnalytic:
      out.weights = hpfa_weights(eps);
      break;
    case EstimatorKind::kProp:
      out.weights = prop_weights(eps);
      break;
    case EstimatorKind::kUni:
      out.weights = WeightVector::uniform(eps.size());
      out.noise_scale =
          scale_mult / (static_cast<double>(eps.size()) * eps.min());
      return out;
    case EstimatorKind::kSm:
      return out;  // per-trial subsample; nothing to precompute
    case EstimatorKind::kLdp:
      out.solver = ldp_weights(spec.setting, eps, params, spec.task);
      out.weights = out.solver->weights;
      out.noise_scale = 0.0;
      return out;
  }
  if (out.solver) out.weights = out.solver->weights;
  out.noise_scale = scale_mult * max_privacy_ratio(*out.weights, eps);
  return out;
}

double pac_quantile(std::vector<double> errors, double beta) {
  if (errors.empty()) throw std::invalid_argument("no errors to summarize");
  if (std::isnan(beta) || beta <= 0.0 || beta >= 1.0) {
    throw std::invalid_argument("beta must lie in (0, 1)");
  }
  const double td = static_cast<double>(errors.size());
  std::size_t rank = static_cast<std::size_t>(std::ceil((1.0 - beta) * td));
  rank = std::min(std::max<std::size_t>(rank, 1), errors.size());
  std::nth_element(errors.begin(), errors.begin() + (rank - 1), errors.end());
  return errors[rank - 1];
}

double mean_squared_error(const std::vector<double>& errors) {
  if (errors.empty()) throw std::invalid_argument("no errors to summarize");
  double s = 0.0;
  for (double e : errors) s += e * e;
  return s / static_cast<double>(errors.size());
}

std::size_t default_trials(Setting setting, std::size_t n) {
  if (setting == Setting::kCorrelated) return 10000;
  const double nd = static_cast<double>(n);
  const double t = std::ceil(10.0 * nd * std::log(nd));
  return std::max<std::size_t>(1, static_cast<std::size_t>(t));
}

TrialReport run_trials(const Dataset& data, const PrivacyDemand& eps,
                       const ResolvedEstimator& est, std::size_t trials,
                       const RandomSource& source, int threads) {
  const std::size_t n = data.size();
  if (n != eps.size()) {
    throw std::invalid_argument("dataset and demands differ in length");
  }
  if (n == 0) throw std::invalid_argument("dataset must not be empty");
  if (trials == 0) throw std::invalid_argument("trial count must be >= 1");
  if (data.kind() != est.spec.task.kind ||
      (data.kind() == TaskKind::kFrequency &&
       data.bins() != est.spec.task.bins)) {
    throw std::invalid_argument("dataset does not match the estimator task");
  }

  const EmpiricalStatistic truth = exact_statistic(data);
  const bool permute = est.spec.setting == Setting::kUncorrelated;
  const bool freq = data.kind() == TaskKind::kFrequency;
  const EstimatorKind kind = est.spec.kind;

  const bool weighted_family =
      kind == EstimatorKind::kOpt || kind == EstimatorKind::kAnalytic ||
      kind == EstimatorKind::kTurbo || kind == EstimatorKind::kProp ||
      kind == EstimatorKind::kUni;

  // With a fixed dataset the weighted release only redraws noise, so the
  // weighted statistic is computed once up front. The per-trial draw
  // sequence is identical to the uncached path.
  const PrivacyDemand noise_eps =
      kind == EstimatorKind::kUni
          ? PrivacyDemand(std::vector<double>(n, eps.min()))
          : eps;
  EmpiricalStatistic cached;
  double cached_scale = 0.0;
  const bool use_cache = weighted_family && !permute;
  if (use_cache) {
    cached = detail::weighted_statistic(data, *est.weights);
    cached_scale =
        (freq ? 2.0 : 1.0) * max_privacy_ratio(*est.weights, noise_eps);
  }

  auto one_trial = [&](std::size_t t) -> double {
    Rng rng = source.stream(t);
    EmpiricalStatistic out;
    if (use_cache) {
      out = cached;
      for (double& v : out.value) {
        v = clamp01(v + laplace_sample(cached_scale, rng));
      }
    } else {
      Dataset view = permute ? permute_uniform(data, rng) : data;
      switch (kind) {
        case EstimatorKind::kUni:
          out = uni_estimate(view, eps, rng).estimate;
          break;
        case EstimatorKind::kSm:
          out = sm_estimate(view, eps, rng).estimate;
          break;
        case EstimatorKind::kLdp:
          out = ldp_estimate(view, *est.weights, eps, rng).estimate;
          break;
        default:
          out = freq ? hpf(view, *est.weights, eps, rng).estimate
                     : hpm(view, *est.weights, eps, rng).estimate;
          break;
      }
    }
    return linf_error(out, truth);
  };

  std::vector<double> errors(trials);
  const std::size_t nthreads = std::max<std::size_t>(
      1, std::min<std::size_t>(static_cast<std::size_t>(std::max(1, threads)),
                               trials));
  if (nthreads == 1) {
    for (std::size_t t = 0; t < trials; ++t) errors[t] = one_trial(t);
  } else {
    std::vector<std::thread> pool;
    pool.reserve(nthreads);
    const std::size_t chunk = (trials + nthreads - 1) / nthreads;
    for (std::size_t w = 0; w < nthreads; ++w) {
      const std::size_t lo = w * chunk;
      const std::size_t hi = std::min(trials, lo + chunk);
      pool.emplace_back([&, lo, hi]() {
        for (std::size_t t = lo; t < hi; ++t) errors[t] = one_trial(t);
      });
    }
    for (auto& th : pool) th.join();
  }

  TrialReport rep;
  // beta outside (0,1) can only happen under the MSE metric, where the
  // quantile column is not reported.
  rep.pac_quantile = est.spec.beta > 0.0 && est.spec.beta < 1.0
                         ? pac_quantile(errors, est.spec.beta)
                         : std::numeric_limits<double>::quiet_NaN();
  rep.mse = mean_squared_error(errors);
  rep.errors = std::move(errors);
  rep.seed = source.seed();
  rep.trials = trials;
  return rep;
}

TrialReport run_trials(const Dataset& data, const PrivacyDemand& eps,
                       const EstimatorSpec& spec, std::size_t trials,
                       const RandomSource& source, int threads) {
  return run_trials(data, eps, resolve_estimator(spec, eps), trials, source,
                    threads);
}

}  // namespace hetdp
