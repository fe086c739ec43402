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

#ifndef HETDP_CLI_HPP_
#define HETDP_CLI_HPP_

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"

#include "hetdp/core.hpp"
#include "hetdp/evaluation.hpp"

namespace hetdp {

inline constexpr int kReportSchemaVersion = 1;

// Reads a `value,epsilon` CSV (header required). Categorical values are
// 1-indexed bin labels in {1..task.bins}; scalar values lie in [0,1];
// epsilon is positive, `inf` allowed. Errors name the offending file line.
std::pair<Dataset, PrivacyDemand> ingest_csv(const std::string& path,
                                             const Task& task);

// Writes a dataset in the same CSV format.
void write_dataset_csv(const std::string& path, const Dataset& data,
                       const PrivacyDemand& eps);

struct WeightsCommandConfig {
  Task task = Task::frequency(12);
  Setting setting = Setting::kCorrelated;
  Metric metric = Metric::kPac;
  double beta = 0.05;
  std::string estimator;  // any registered name except uni/sm
  std::string data_path;  // empty -> synthetic
  SyntheticSpec synthetic;
  std::uint64_t seed = 0;
  std::string out_path;  // empty -> stdout only
};

struct BenchmarkConfig {
  Task task = Task::frequency(12);
  Setting setting = Setting::kCorrelated;
  Metric metric = Metric::kPac;
  double beta = 0.05;
  std::vector<std::string> estimators;  // empty -> all registered
  std::string data_path;                // empty -> synthetic
  SyntheticSpec synthetic;
  std::size_t trials = 0;  // 0 -> default_trials(setting, n)
  std::uint64_t seed = 0;
  int threads = 1;
  std::string out_path = "report.json";
  std::string trials_csv;  // empty -> out_path with a _trials.csv suffix
};

struct GenCommandConfig {
  SyntheticSpec spec;
  std::uint64_t seed = 0;
  std::string out_path;
};

// Pure report builders (no file output); cmd_* wrap them with I/O and map
// the result to an exit code. A failing estimator becomes a row with
// status "error" and does not abort the others; cmd_bench exits 0 only if
// every row is ok.
nlohmann::ordered_json run_weights(const WeightsCommandConfig& cfg);
nlohmann::ordered_json run_bench(
    const BenchmarkConfig& cfg,
    std::vector<std::pair<std::string, TrialReport>>* trial_out = nullptr);

int cmd_weights(const WeightsCommandConfig& cfg);
int cmd_bench(const BenchmarkConfig& cfg);
int cmd_gen(const GenCommandConfig& cfg);

// Derived default path for the per-trial error CSV.
std::string default_trials_csv_path(const std::string& out_path);

}  // namespace hetdp

#endif  // HETDP_CLI_HPP_
