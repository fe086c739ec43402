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

#include "hetdp/core.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <string>

namespace hetdp {

PrivacyDemand::PrivacyDemand(std::vector<double> eps) : eps_(std::move(eps)) {
  if (eps_.empty()) {
    throw std::invalid_argument("privacy demand must not be empty");
  }
  for (std::size_t i = 0; i < eps_.size(); ++i) {
    if (std::isnan(eps_[i]) || eps_[i] <= 0.0) {
      throw std::invalid_argument("epsilon must be positive (user " +
                                  std::to_string(i) + ")");
    }
  }
}

double PrivacyDemand::min() const {
  return *std::min_element(eps_.begin(), eps_.end());
}

double PrivacyDemand::max() const {
  return *std::max_element(eps_.begin(), eps_.end());
}

bool PrivacyDemand::all_infinite() const {
  return std::all_of(eps_.begin(), eps_.end(),
                     [](double e) { return std::isinf(e); });
}

std::vector<std::size_t> PrivacyDemand::ascending_order() const {
  std::vector<std::size_t> idx(eps_.size());
  std::iota(idx.begin(), idx.end(), std::size_t{0});
  std::stable_sort(idx.begin(), idx.end(), [this](std::size_t a, std::size_t b) {
    return eps_[a] < eps_[b];
  });
  return idx;
}

WeightVector::WeightVector(std::vector<double> w) : w_(std::move(w)) {
  if (w_.empty()) {
    throw std::invalid_argument("weight vector must not be empty");
  }
  double sum = 0.0;
  for (std::size_t i = 0; i < w_.size(); ++i) {
    if (std::isnan(w_[i]) || w_[i] < -kSumTol) {
      throw std::invalid_argument("weight must be non-negative (entry " +
                                  std::to_string(i) + ")");
    }
    if (w_[i] < 0.0) w_[i] = 0.0;  // roundoff only, bounded by kSumTol
    sum += w_[i];
  }
  if (std::abs(sum - 1.0) > kSumTol) {
    throw std::invalid_argument("weights must sum to 1 (got " +
                                std::to_string(sum) + ")");
  }
}

WeightVector WeightVector::uniform(std::size_t n) {
  if (n == 0) throw std::invalid_argument("weight vector must not be empty");
  return WeightVector(std::vector<double>(n, 1.0 / static_cast<double>(n)));
}

Task Task::frequency(int k) {
  if (k < 1) throw std::invalid_argument("bin count must be at least 1");
  return Task{TaskKind::kFrequency, k};
}

Dataset Dataset::categorical(std::vector<int> records, int bins) {
  if (bins < 1) throw std::invalid_argument("bin count must be at least 1");
  for (std::size_t i = 0; i < records.size(); ++i) {
    if (records[i] < 1 || records[i] > bins) {
      throw std::invalid_argument(
          "record " + std::to_string(i) + " out of range: bins are 1-indexed "
          "labels in {1.." + std::to_string(bins) + "}, got " +
          std::to_string(records[i]));
    }
  }
  Dataset d;
  d.kind_ = TaskKind::kFrequency;
  d.bins_ = bins;
  d.cat_ = std::move(records);
  return d;
}

Dataset Dataset::scalar(std::vector<double> records) {
  for (std::size_t i = 0; i < records.size(); ++i) {
    if (std::isnan(records[i]) || records[i] < 0.0 || records[i] > 1.0) {
      throw std::invalid_argument("record " + std::to_string(i) +
                                  " out of range: scalar records lie in [0,1]");
    }
  }
  Dataset d;
  d.kind_ = TaskKind::kMean;
  d.bins_ = 1;
  d.real_ = std::move(records);
  return d;
}

std::size_t Dataset::size() const {
  return kind_ == TaskKind::kFrequency ? cat_.size() : real_.size();
}

Task Dataset::task() const {
  return kind_ == TaskKind::kFrequency ? Task::frequency(bins_) : Task::mean();
}

Dataset Dataset::permuted(const std::vector<std::size_t>& perm) const {
  if (perm.size() != size()) {
    throw std::invalid_argument("permutation size mismatch");
  }
  Dataset d;
  d.kind_ = kind_;
  d.bins_ = bins_;
  if (kind_ == TaskKind::kFrequency) {
    d.cat_.resize(cat_.size());
    for (std::size_t i = 0; i < perm.size(); ++i) d.cat_[i] = cat_[perm[i]];
  } else {
    d.real_.resize(real_.size());
    for (std::size_t i = 0; i < perm.size(); ++i) d.real_[i] = real_[perm[i]];
  }
  return d;
}

EmpiricalStatistic exact_statistic(const Dataset& data) {
  const std::size_t n = data.size();
  if (n == 0) throw std::invalid_argument("dataset must not be empty");
  EmpiricalStatistic out;
  out.kind = data.kind();
  if (data.kind() == TaskKind::kFrequency) {
    out.value.assign(static_cast<std::size_t>(data.bins()), 0.0);
    for (int r : data.categorical_records()) {
      out.value[static_cast<std::size_t>(r - 1)] += 1.0;
    }
    for (double& v : out.value) v /= static_cast<double>(n);
  } else {
    double sum = 0.0;
    for (double x : data.scalar_records()) sum += x;
    out.value.assign(1, sum / static_cast<double>(n));
  }
  return out;
}

double linf_error(const EmpiricalStatistic& a, const EmpiricalStatistic& b) {
  if (a.kind != b.kind || a.value.size() != b.value.size()) {
    throw std::invalid_argument("statistic shapes do not match");
  }
  double m = 0.0;
  for (std::size_t j = 0; j < a.value.size(); ++j) {
    m = std::max(m, std::abs(a.value[j] - b.value[j]));
  }
  return m;
}

}  // namespace hetdp
