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

#include "hetdp/mechanisms.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace hetdp {

namespace detail {

EmpiricalStatistic weighted_statistic(const Dataset& data,
                                      const WeightVector& w) {
  if (data.size() != w.size()) {
    throw std::invalid_argument("dataset and weights differ in length");
  }
  EmpiricalStatistic out;
  out.kind = data.kind();
  if (data.kind() == TaskKind::kFrequency) {
    out.value.assign(static_cast<std::size_t>(data.bins()), 0.0);
    const auto& rec = data.categorical_records();
    for (std::size_t i = 0; i < rec.size(); ++i) {
      out.value[static_cast<std::size_t>(rec[i] - 1)] += w[i];
    }
  } else {
    double s = 0.0;
    const auto& rec = data.scalar_records();
    for (std::size_t i = 0; i < rec.size(); ++i) s += w[i] * rec[i];
    out.value.assign(1, s);
  }
  return out;
}

EmpiricalStatistic hpf_preclamp(const Dataset& data, const WeightVector& w,
                                const PrivacyDemand& eps, Rng& rng) {
  if (data.kind() != TaskKind::kFrequency) {
    throw std::invalid_argument("frequency release needs categorical data");
  }
  if (data.size() != eps.size()) {
    throw std::invalid_argument("dataset and demands differ in length");
  }
  const double scale = 2.0 * max_privacy_ratio(w, eps);
  EmpiricalStatistic est = weighted_statistic(data, w);
  for (double& v : est.value) v += laplace_sample(scale, rng);
  return est;
}

EmpiricalStatistic hpm_preclamp(const Dataset& data, const WeightVector& w,
                                const PrivacyDemand& eps, Rng& rng) {
  if (data.kind() != TaskKind::kMean) {
    throw std::invalid_argument("mean release needs scalar data");
  }
  if (data.size() != eps.size()) {
    throw std::invalid_argument("dataset and demands differ in length");
  }
  const double scale = max_privacy_ratio(w, eps);
  EmpiricalStatistic est = weighted_statistic(data, w);
  est.value[0] += laplace_sample(scale, rng);
  return est;
}

}  // namespace detail

MechanismOutput hpf(const Dataset& data, const WeightVector& w,
                    const PrivacyDemand& eps, Rng& rng) {
  EmpiricalStatistic est = detail::hpf_preclamp(data, w, eps, rng);
  for (double& v : est.value) v = clamp01(v);
  return MechanismOutput{std::move(est), 2.0 * max_privacy_ratio(w, eps), w};
}

MechanismOutput hpm(const Dataset& data, const WeightVector& w,
                    const PrivacyDemand& eps, Rng& rng) {
  EmpiricalStatistic est = detail::hpm_preclamp(data, w, eps, rng);
  est.value[0] = clamp01(est.value[0]);
  return MechanismOutput{std::move(est), max_privacy_ratio(w, eps), w};
}

std::vector<double> dp_ratio_audit(const WeightVector& w,
                                   const PrivacyDemand& eps, TaskKind task) {
  (void)task;  // sensitivity and scale both halve from frequency to mean
  if (w.size() != eps.size()) {
    throw std::invalid_argument("weights and demands differ in length");
  }
  const double s = max_privacy_ratio(w, eps);
  std::vector<double> bound(w.size());
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (s == 0.0) {
      bound[i] = w[i] == 0.0 ? 0.0 : std::numeric_limits<double>::infinity();
    } else {
      bound[i] = w[i] / s;
    }
  }
  return bound;
}

FreePrivacyReport free_privacy_audit(const WeightVector& w,
                                     const PrivacyDemand& eps) {
  if (w.size() != eps.size()) {
    throw std::invalid_argument("weights and demands differ in length");
  }
  const double s = max_privacy_ratio(w, eps);
  FreePrivacyReport rep;
  rep.effective.resize(w.size());
  rep.slack.resize(w.size());
  for (std::size_t i = 0; i < w.size(); ++i) {
    rep.effective[i] = s == 0.0 ? 0.0 : w[i] / s;
    // Non-negative by construction of s; guard division roundoff.
    rep.slack[i] = std::max(0.0, eps[i] - rep.effective[i]);
  }
  return rep;
}

}  // namespace hetdp
