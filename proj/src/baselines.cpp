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

#include "hetdp/baselines.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace hetdp {

MechanismOutput uni_estimate(const Dataset& data, const PrivacyDemand& eps,
                             Rng& rng) {
  if (data.size() != eps.size()) {
    throw std::invalid_argument("dataset and demands differ in length");
  }
  const PrivacyDemand floor_eps(std::vector<double>(eps.size(), eps.min()));
  const WeightVector w = WeightVector::uniform(eps.size());
  return data.kind() == TaskKind::kFrequency ? hpf(data, w, floor_eps, rng)
                                             : hpm(data, w, floor_eps, rng);
}

double sm_inclusion_probability(double eps_i, double t) {
  if (std::isnan(eps_i) || std::isnan(t) || eps_i <= 0.0 || eps_i > t) {
    throw std::invalid_argument("inclusion needs 0 < eps_i <= t");
  }
  if (std::isinf(t)) return std::isinf(eps_i) ? 1.0 : 0.0;
  if (eps_i == t) return 1.0;
  // (e^eps - 1)/(e^t - 1) without overflow for large t.
  return std::exp(eps_i - t) * std::expm1(-eps_i) / std::expm1(-t);
}

MechanismOutput sm_estimate(const Dataset& data, const PrivacyDemand& eps,
                            Rng& rng) {
  const std::size_t n = data.size();
  if (n != eps.size()) {
    throw std::invalid_argument("dataset and demands differ in length");
  }
  const double t = eps.max();
  std::vector<std::size_t> included;
  included.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (rng.bernoulli(sm_inclusion_probability(eps[i], t))) {
      included.push_back(i);
    }
  }
  const std::size_t m = included.size();
  const bool freq = data.kind() == TaskKind::kFrequency;

  if (m == 0) {
    // Unreachable through this API (the max-demand user is kept with
    // probability exactly 1) but kept as a defined fallback.
    EmpiricalStatistic est;
    est.kind = data.kind();
    est.value.assign(freq ? static_cast<std::size_t>(data.bins()) : 1, 0.5);
    return MechanismOutput{std::move(est), 0.0, WeightVector::uniform(n)};
  }

  // Homogeneous t-level release on the realized subsample.
  const double md = static_cast<double>(m);
  const double scale = std::isinf(t) ? 0.0 : (freq ? 2.0 : 1.0) / (md * t);
  EmpiricalStatistic est;
  est.kind = data.kind();
  if (freq) {
    est.value.assign(static_cast<std::size_t>(data.bins()), 0.0);
    const auto& rec = data.categorical_records();
    for (std::size_t i : included) {
      est.value[static_cast<std::size_t>(rec[i] - 1)] += 1.0 / md;
    }
    for (double& v : est.value) v = clamp01(v + laplace_sample(scale, rng));
  } else {
    double s = 0.0;
    const auto& rec = data.scalar_records();
    for (std::size_t i : included) s += rec[i] / md;
    est.value.assign(1, clamp01(s + laplace_sample(scale, rng)));
  }
  std::vector<double> w(n, 0.0);
  for (std::size_t i : included) w[i] = 1.0 / md;
  return MechanismOutput{std::move(est), scale, WeightVector(std::move(w))};
}

std::vector<std::uint8_t> ldp_freq_client(int record, int bins, double eps,
                                          Rng& rng) {
  if (bins < 1 || record < 1 || record > bins) {
    throw std::invalid_argument("record must be a 1-indexed bin label");
  }
  if (std::isnan(eps) || eps <= 0.0) {
    throw std::invalid_argument("epsilon must be positive");
  }
  // Flip probability 1/(1 + e^{eps/2}); 0 in the eps -> inf limit.
  const double q = 1.0 / (1.0 + std::exp(eps / 2.0));
  std::vector<std::uint8_t> bits(static_cast<std::size_t>(bins));
  for (int j = 1; j <= bins; ++j) {
    const bool one = (j == record);
    const bool flip = rng.bernoulli(q);
    bits[static_cast<std::size_t>(j - 1)] =
        static_cast<std::uint8_t>(one != flip);
  }
  return bits;
}

namespace detail {

std::vector<double> ldp_freq_aggregate_preclamp(
    const std::vector<std::vector<std::uint8_t>>& reports,
    const WeightVector& w, const PrivacyDemand& eps, int bins) {
  const std::size_t n = reports.size();
  if (n != w.size() || n != eps.size()) {
    throw std::invalid_argument("reports, weights and demands differ in length");
  }
  std::vector<double> agg(static_cast<std::size_t>(bins), 0.0);
  for (std::size_t i = 0; i < n; ++i) {
    if (reports[i].size() != static_cast<std::size_t>(bins)) {
      throw std::invalid_argument("report width does not match bin count");
    }
    // Debiasing: E[coth(eps/4) * (x_j - q)] = onehot_j for the flip noise.
    const double q = 1.0 / (1.0 + std::exp(eps[i] / 2.0));
    const double coth = 1.0 / std::tanh(eps[i] / 4.0);
    const double wc = w[i] * coth;
    for (int j = 0; j < bins; ++j) {
      agg[static_cast<std::size_t>(j)] +=
          wc * (static_cast<double>(reports[i][static_cast<std::size_t>(j)]) -
                q);
    }
  }
  return agg;
}

double ldp_mean_aggregate_preclamp(const std::vector<double>& reports,
                                   const WeightVector& w) {
  if (reports.size() != w.size()) {
    throw std::invalid_argument("reports and weights differ in length");
  }
  double s = 0.0;
  for (std::size_t i = 0; i < reports.size(); ++i) s += w[i] * reports[i];
  return s;
}

}  // namespace detail

EmpiricalStatistic ldp_freq_aggregate(
    const std::vector<std::vector<std::uint8_t>>& reports,
    const WeightVector& w, const PrivacyDemand& eps, int bins) {
  EmpiricalStatistic est;
  est.kind = TaskKind::kFrequency;
  est.value = detail::ldp_freq_aggregate_preclamp(reports, w, eps, bins);
  for (double& v : est.value) v = clamp01(v);
  return est;
}

double ldp_mean_client(double value, double eps, Rng& rng) {
  if (std::isnan(value) || value < 0.0 || value > 1.0) {
    throw std::invalid_argument("value must lie in [0,1]");
  }
  if (std::isnan(eps) || eps <= 0.0) {
    throw std::invalid_argument("epsilon must be positive");
  }
  const double scale = std::isinf(eps) ? 0.0 : 1.0 / eps;
  return value + laplace_sample(scale, rng);
}

EmpiricalStatistic ldp_mean_aggregate(const std::vector<double>& reports,
                                      const WeightVector& w) {
  EmpiricalStatistic est;
  est.kind = TaskKind::kMean;
  est.value.assign(1, clamp01(detail::ldp_mean_aggregate_preclamp(reports, w)));
  return est;
}

MechanismOutput ldp_estimate(const Dataset& data, const WeightVector& w,
                             const PrivacyDemand& eps, Rng& rng) {
  const std::size_t n = data.size();
  if (n != w.size() || n != eps.size()) {
    throw std::invalid_argument("dataset, weights and demands differ in length");
  }
  EmpiricalStatistic est;
  if (data.kind() == TaskKind::kFrequency) {
    std::vector<std::vector<std::uint8_t>> reports(n);
    const auto& rec = data.categorical_records();
    for (std::size_t i = 0; i < n; ++i) {
      reports[i] = ldp_freq_client(rec[i], data.bins(), eps[i], rng);
    }
    est = ldp_freq_aggregate(reports, w, eps, data.bins());
  } else {
    std::vector<double> reports(n);
    const auto& rec = data.scalar_records();
    for (std::size_t i = 0; i < n; ++i) {
      reports[i] = ldp_mean_client(rec[i], eps[i], rng);
    }
    est = ldp_mean_aggregate(reports, w);
  }
  return MechanismOutput{std::move(est), 0.0, w};
}

}  // namespace hetdp
