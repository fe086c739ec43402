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

#include "hetdp/cli.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <stdexcept>

#include "hetdp/baselines.hpp"
#include "hetdp/mechanisms.hpp"
#include "hetdp/weights.hpp"

namespace hetdp {

namespace {

constexpr std::uint64_t kGenSalt = 0x67656e2d64617461ULL;  // data generation

std::uint64_t fnv1a64(const std::string& s) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : s) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

[[noreturn]] void csv_error(const std::string& path, std::size_t line,
                            const std::string& msg) {
  throw std::invalid_argument(path + ":" + std::to_string(line) + ": " + msg);
}

std::string trim(std::string s) {
  const char* ws = " \t\r\n";
  const auto b = s.find_first_not_of(ws);
  if (b == std::string::npos) return "";
  const auto e = s.find_last_not_of(ws);
  return s.substr(b, e - b + 1);
}

double parse_double(const std::string& s, bool* ok) {
  char* end = nullptr;
  const std::string t = trim(s);
  const double v = std::strtod(t.c_str(), &end);
  *ok = !t.empty() && end == t.c_str() + t.size();
  return v;
}

long parse_long(const std::string& s, bool* ok) {
  char* end = nullptr;
  const std::string t = trim(s);
  const long v = std::strtol(t.c_str(), &end, 10);
  *ok = !t.empty() && end == t.c_str() + t.size();
  return v;
}

std::string format_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

const char* setting_name(Setting s) {
  return s == Setting::kCorrelated ? "correlated" : "uncorrelated";
}
const char* metric_name(Metric m) { return m == Metric::kPac ? "pac" : "mse"; }
const char* task_name(TaskKind t) {
  return t == TaskKind::kFrequency ? "frequency" : "mean";
}

nlohmann::ordered_json synthetic_json(const SyntheticSpec& s) {
  nlohmann::ordered_json j;
  j["n"] = s.n;
  if (s.setting == Setting::kCorrelated) {
    j["law"] = "bin-centered";
    j["law_halfwidth"] = s.law_halfwidth;
    if (s.task.kind == TaskKind::kMean) j["virtual_bins"] = s.virtual_bins;
  } else {
    j["law"] = "log-uniform";
    j["log_eps_lo"] = s.log_eps_lo;
    j["log_eps_hi"] = s.log_eps_hi;
  }
  if (s.task.kind == TaskKind::kFrequency) {
    j["heavy_bin_weight"] = s.heavy_bin_weight;
  }
  return j;
}

struct LoadedInstance {
  Dataset data;
  PrivacyDemand eps;
  nlohmann::ordered_json source;
};

LoadedInstance load_instance(const Task& task, Setting setting,
                             const std::string& data_path,
                             SyntheticSpec synthetic, std::uint64_t seed) {
  if (!data_path.empty()) {
    auto [data, eps] = ingest_csv(data_path, task);
    nlohmann::ordered_json src;
    src["path"] = data_path;
    return LoadedInstance{std::move(data), std::move(eps), std::move(src)};
  }
  synthetic.task = task;
  synthetic.setting = setting;
  Rng rng = RandomSource(mix_seed(seed, kGenSalt)).stream(0);
  SyntheticInstance inst = gen_instance(synthetic, rng);
  nlohmann::ordered_json src;
  src["synthetic"] = synthetic_json(synthetic);
  return LoadedInstance{std::move(inst.data), std::move(inst.eps),
                        std::move(src)};
}

nlohmann::ordered_json weights_json(const WeightVector& w) {
  return nlohmann::ordered_json(w.values());
}

}  // namespace

std::pair<Dataset, PrivacyDemand> ingest_csv(const std::string& path,
                                             const Task& task) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open " + path);
  std::string line;
  std::size_t lineno = 0;
  if (!std::getline(in, line)) csv_error(path, 1, "empty file");
  ++lineno;
  if (trim(line) != "value,epsilon") {
    csv_error(path, lineno, "expected header 'value,epsilon'");
  }
  std::vector<int> cat;
  std::vector<double> real;
  std::vector<double> eps;
  while (std::getline(in, line)) {
    ++lineno;
    if (trim(line).empty()) continue;
    const auto comma = line.find(',');
    if (comma == std::string::npos) {
      csv_error(path, lineno, "expected two comma-separated fields");
    }
    const std::string vs = line.substr(0, comma);
    const std::string es = line.substr(comma + 1);
    if (es.find(',') != std::string::npos) {
      csv_error(path, lineno, "expected two comma-separated fields");
    }
    bool ok = false;
    if (task.kind == TaskKind::kFrequency) {
      const long v = parse_long(vs, &ok);
      if (!ok) csv_error(path, lineno, "value is not an integer bin label");
      if (v < 1 || v > task.bins) {
        csv_error(path, lineno,
                  "bin label out of range: bins are 1-indexed labels in {1.." +
                      std::to_string(task.bins) + "}, got " +
                      std::to_string(v));
      }
      cat.push_back(static_cast<int>(v));
    } else {
      const double v = parse_double(vs, &ok);
      if (!ok || std::isnan(v)) csv_error(path, lineno, "value is not a number");
      if (v < 0.0 || v > 1.0) {
        csv_error(path, lineno, "scalar values must lie in [0,1]");
      }
      real.push_back(v);
    }
    const double e = parse_double(es, &ok);
    if (!ok || std::isnan(e)) {
      csv_error(path, lineno, "epsilon is not a number ('inf' is allowed)");
    }
    if (e <= 0.0) csv_error(path, lineno, "epsilon must be positive");
    eps.push_back(e);
  }
  if (eps.empty()) csv_error(path, lineno, "no data rows");
  Dataset data = task.kind == TaskKind::kFrequency
                     ? Dataset::categorical(std::move(cat), task.bins)
                     : Dataset::scalar(std::move(real));
  return {std::move(data), PrivacyDemand(std::move(eps))};
}

void write_dataset_csv(const std::string& path, const Dataset& data,
                       const PrivacyDemand& eps) {
  if (data.size() != eps.size()) {
    throw std::invalid_argument("dataset and demands differ in length");
  }
  std::ofstream out(path);
  if (!out) throw std::invalid_argument("cannot write " + path);
  out << "value,epsilon\n";
  for (std::size_t i = 0; i < data.size(); ++i) {
    if (data.kind() == TaskKind::kFrequency) {
      out << data.categorical_records()[i];
    } else {
      out << format_double(data.scalar_records()[i]);
    }
    out << ',';
    if (std::isinf(eps[i])) {
      out << "inf";
    } else {
      out << format_double(eps[i]);
    }
    out << '\n';
  }
  if (!out.good()) throw std::runtime_error("write failed: " + path);
}

nlohmann::ordered_json run_weights(const WeightsCommandConfig& cfg) {
  LoadedInstance inst = load_instance(cfg.task, cfg.setting, cfg.data_path,
                                      cfg.synthetic, cfg.seed);
  const auto kind = parse_estimator(cfg.estimator, cfg.task.kind);
  if (!kind) {
    throw std::invalid_argument("unknown estimator '" + cfg.estimator + "'");
  }
  if (*kind == EstimatorKind::kUni || *kind == EstimatorKind::kSm) {
    throw std::invalid_argument(cfg.estimator +
                                " has no precomputable weight vector");
  }
  const EstimatorSpec spec{*kind, cfg.setting, cfg.metric, cfg.beta, cfg.task};
  const ResolvedEstimator est = resolve_estimator(spec, inst.eps);

  nlohmann::ordered_json j;
  j["schema_version"] = kReportSchemaVersion;
  j["config"] = {{"task", task_name(cfg.task.kind)},
                 {"bins", cfg.task.bins},
                 {"setting", setting_name(cfg.setting)},
                 {"metric", metric_name(cfg.metric)},
                 {"beta", cfg.beta},
                 {"estimator", cfg.estimator},
                 {"n", inst.eps.size()},
                 {"seed", cfg.seed},
                 {"data", inst.source}};
  j["weights"] = weights_json(*est.weights);
  if (est.solver) {
    j["objective_value"] = est.solver->objective_value;
    j["iterations"] = est.solver->iterations;
    j["converged"] = est.solver->converged;
  }
  j["noise_scale"] = *est.noise_scale;
  const FreePrivacyReport fp = free_privacy_audit(*est.weights, inst.eps);
  auto finite_or_null = [](double v) {
    return std::isinf(v) ? nlohmann::ordered_json()
                         : nlohmann::ordered_json(v);
  };
  nlohmann::ordered_json eff = nlohmann::ordered_json::array();
  nlohmann::ordered_json slack = nlohmann::ordered_json::array();
  for (std::size_t i = 0; i < fp.effective.size(); ++i) {
    eff.push_back(finite_or_null(fp.effective[i]));
    slack.push_back(finite_or_null(fp.slack[i]));
  }
  j["free_privacy"] = {{"effective", eff}, {"slack", slack}};
  return j;
}

nlohmann::ordered_json run_bench(
    const BenchmarkConfig& cfg,
    std::vector<std::pair<std::string, TrialReport>>* trial_out) {
  LoadedInstance inst = load_instance(cfg.task, cfg.setting, cfg.data_path,
                                      cfg.synthetic, cfg.seed);
  const std::size_t n = inst.eps.size();
  const std::size_t trials =
      cfg.trials > 0 ? cfg.trials : default_trials(cfg.setting, n);
  std::vector<std::string> names = cfg.estimators;
  if (names.empty()) names = registered_estimators(cfg.task.kind);

  nlohmann::ordered_json j;
  j["schema_version"] = kReportSchemaVersion;
  // No thread-count echo: the report must be byte-identical for any
  // parallelism degree.
  j["config"] = {{"task", task_name(cfg.task.kind)},
                 {"bins", cfg.task.bins},
                 {"setting", setting_name(cfg.setting)},
                 {"metric", metric_name(cfg.metric)},
                 {"beta", cfg.beta},
                 {"n", n},
                 {"trials", trials},
                 {"seed", cfg.seed},
                 {"data", inst.source}};
  nlohmann::ordered_json rows = nlohmann::ordered_json::object();
  for (const std::string& name : names) {
    nlohmann::ordered_json row;
    try {
      const auto kind = parse_estimator(name, cfg.task.kind);
      if (!kind) throw std::invalid_argument("unknown estimator '" + name + "'");
      const EstimatorSpec spec{*kind, cfg.setting, cfg.metric, cfg.beta,
                               cfg.task};
      const ResolvedEstimator est = resolve_estimator(spec, inst.eps);
      const RandomSource source(mix_seed(cfg.seed, fnv1a64(name)));
      TrialReport rep =
          run_trials(inst.data, inst.eps, est, trials, source, cfg.threads);
      row["status"] = "ok";
      row["trials"] = rep.trials;
      row["seed"] = cfg.seed;
      if (est.noise_scale) {
        row["noise_scale"] = *est.noise_scale;
      } else {
        row["noise_scale"] = nullptr;  // SM: scale is trial-dependent
      }
      if (cfg.metric == Metric::kPac) row["pac_quantile"] = rep.pac_quantile;
      row["mse"] = rep.mse;
      if (est.solver) {
        row["objective_value"] = est.solver->objective_value;
        row["converged"] = est.solver->converged;
      }
      if (est.weights && n <= 1000) {
        row["weights"] = weights_json(*est.weights);
      }
      if (trial_out) trial_out->emplace_back(name, std::move(rep));
    } catch (const std::exception& e) {
      row = nlohmann::ordered_json::object();
      row["status"] = "error";
      row["message"] = e.what();
    }
    rows[name] = std::move(row);
  }
  j["estimators"] = std::move(rows);
  return j;
}

std::string default_trials_csv_path(const std::string& out_path) {
  const auto dot = out_path.rfind('.');
  const auto slash = out_path.find_last_of("/\\");
  const bool has_ext =
      dot != std::string::npos && (slash == std::string::npos || dot > slash);
  return (has_ext ? out_path.substr(0, dot) : out_path) + "_trials.csv";
}

namespace {

void write_text_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::invalid_argument("cannot write " + path);
  out << content;
  if (!out.good()) throw std::runtime_error("write failed: " + path);
}

void print_summary_table(const nlohmann::ordered_json& report, Metric metric) {
  const char* col = metric == Metric::kPac ? "pac_quantile" : "mse";
  std::printf("%-12s %14s %14s\n", "estimator", col, "noise_scale");
  for (const auto& [name, row] : report.at("estimators").items()) {
    if (row.at("status") != "ok") {
      std::printf("%-12s %14s %14s  (%s)\n", name.c_str(), "error", "-",
                  row.at("message").get<std::string>().c_str());
      continue;
    }
    const double v = row.at(col).get<double>();
    std::string scale = "-";
    if (!row.at("noise_scale").is_null()) {
      char buf[32];
      std::snprintf(buf, sizeof buf, "%.6g", row.at("noise_scale").get<double>());
      scale = buf;
    }
    std::printf("%-12s %14.6g %14s\n", name.c_str(), v, scale.c_str());
  }
}

}  // namespace

int cmd_weights(const WeightsCommandConfig& cfg) {
  try {
    const nlohmann::ordered_json j = run_weights(cfg);
    const std::string text = j.dump(2) + "\n";
    if (cfg.out_path.empty()) {
      std::cout << text;
    } else {
      write_text_file(cfg.out_path, text);
      std::cout << "wrote " << cfg.out_path << "\n";
    }
    return 0;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}

int cmd_bench(const BenchmarkConfig& cfg) {
  try {
    std::vector<std::pair<std::string, TrialReport>> trials;
    const nlohmann::ordered_json report = run_bench(cfg, &trials);
    write_text_file(cfg.out_path, report.dump(2) + "\n");

    const std::string csv_path = cfg.trials_csv.empty()
                                     ? default_trials_csv_path(cfg.out_path)
                                     : cfg.trials_csv;
    std::ostringstream csv;
    csv << "trial,estimator,linf_error\n";
    for (const auto& [name, rep] : trials) {
      for (std::size_t t = 0; t < rep.errors.size(); ++t) {
        csv << t << ',' << name << ',' << format_double(rep.errors[t]) << '\n';
      }
    }
    write_text_file(csv_path, csv.str());

    print_summary_table(report, cfg.metric);
    std::cout << "wrote " << cfg.out_path << " and " << csv_path << "\n";

    for (const auto& [name, row] : report.at("estimators").items()) {
      if (row.at("status") != "ok") return 1;
    }
    return 0;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}

int cmd_gen(const GenCommandConfig& cfg) {
  try {
    Rng rng = RandomSource(mix_seed(cfg.seed, kGenSalt)).stream(0);
    const SyntheticInstance inst = gen_instance(cfg.spec, rng);
    write_dataset_csv(cfg.out_path, inst.data, inst.eps);
    std::cout << "wrote " << cfg.out_path << " (" << inst.data.size()
              << " rows)\n";
    return 0;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}

}  // namespace hetdp
