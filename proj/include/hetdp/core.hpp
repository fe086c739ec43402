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

#ifndef HETDP_CORE_HPP_
#define HETDP_CORE_HPP_

#include <cstddef>
#include <cstdint>
#include <vector>

namespace hetdp {

// Per-user privacy demands epsilon_i. Entries are strictly positive;
// +infinity marks a user with no privacy requirement. Order is user order
// and is preserved; solvers that need a sorted view sort internally.
class PrivacyDemand {
 public:
  explicit PrivacyDemand(std::vector<double> eps);

  std::size_t size() const { return eps_.size(); }
  double operator[](std::size_t i) const { return eps_[i]; }
  const std::vector<double>& values() const { return eps_; }

  double min() const;
  double max() const;
  bool all_infinite() const;

  // Stable argsort by ascending epsilon (ties keep user order).
  std::vector<std::size_t> ascending_order() const;

 private:
  std::vector<double> eps_;
};

// Point on the probability simplex. Entries are non-negative and sum to 1
// within kSumTol; negative roundoff down to -kSumTol is clamped to zero.
class WeightVector {
 public:
  static constexpr double kSumTol = 1e-9;

  explicit WeightVector(std::vector<double> w);
  static WeightVector uniform(std::size_t n);

  std::size_t size() const { return w_.size(); }
  double operator[](std::size_t i) const { return w_[i]; }
  const std::vector<double>& values() const { return w_; }

 private:
  std::vector<double> w_;
};

enum class TaskKind { kFrequency, kMean };

// Estimation task: empirical frequencies over bins {1..k}, or the empirical
// mean of values in [0,1].
struct Task {
  TaskKind kind;
  int bins;  // >= 1; meaningful only for kFrequency

  static Task frequency(int k);
  static Task mean() { return Task{TaskKind::kMean, 1}; }
};

// Records of one dataset. Categorical records are 1-indexed bin labels in
// {1..bins}; scalar records lie in [0,1].
class Dataset {
 public:
  static Dataset categorical(std::vector<int> records, int bins);
  static Dataset scalar(std::vector<double> records);

  TaskKind kind() const { return kind_; }
  int bins() const { return bins_; }
  std::size_t size() const;
  Task task() const;

  const std::vector<int>& categorical_records() const { return cat_; }
  const std::vector<double>& scalar_records() const { return real_; }

  Dataset permuted(const std::vector<std::size_t>& perm) const;

 private:
  Dataset() = default;
  TaskKind kind_ = TaskKind::kFrequency;
  int bins_ = 0;
  std::vector<int> cat_;
  std::vector<double> real_;
};

// Frequency vector over bins (size == bins) or a single mean (size == 1).
// Every entry lies in [0,1].
struct EmpiricalStatistic {
  TaskKind kind;
  std::vector<double> value;
};

// True (non-private) statistic of the dataset. Throws on empty data.
EmpiricalStatistic exact_statistic(const Dataset& data);

// Componentwise max absolute deviation. Shapes must match.
double linf_error(const EmpiricalStatistic& a, const EmpiricalStatistic& b);

inline double clamp01(double x) { return x < 0.0 ? 0.0 : (x > 1.0 ? 1.0 : x); }

enum class Setting { kCorrelated, kUncorrelated };
enum class Metric { kPac, kMse };

// Registered estimator families. kOpt/kTurbo/kAnalytic/kProp run the
// weighted-release mechanism under different weight rules; kUni, kSm and
// kLdp are the baselines.
enum class EstimatorKind { kOpt, kAnalytic, kTurbo, kUni, kProp, kSm, kLdp };

struct EstimatorSpec {
  EstimatorKind kind;
  Setting setting;
  Metric metric;
  double beta;  // PAC failure level; also used when reporting quantiles
  Task task;
};

}  // namespace hetdp

#endif  // HETDP_CORE_HPP_
