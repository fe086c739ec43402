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

#include <map>
#include <string>

#include "CLI11.hpp"

#include "hetdp/cli.hpp"

namespace {

using hetdp::Metric;
using hetdp::Setting;
using hetdp::TaskKind;

const std::map<std::string, TaskKind> kTaskNames{
    {"freq", TaskKind::kFrequency},
    {"frequency", TaskKind::kFrequency},
    {"mean", TaskKind::kMean}};
const std::map<std::string, Setting> kSettingNames{
    {"correlated", Setting::kCorrelated},
    {"uncorrelated", Setting::kUncorrelated}};
const std::map<std::string, Metric> kMetricNames{{"pac", Metric::kPac},
                                                 {"mse", Metric::kMse}};

struct CommonOpts {
  TaskKind task = TaskKind::kFrequency;
  int bins = 12;
  Setting setting = Setting::kCorrelated;
  std::uint64_t seed = 0;
  std::size_t n = 1000;
  hetdp::SyntheticSpec synthetic;
};

void add_task_options(CLI::App* cmd, CommonOpts* o) {
  cmd->add_option("--task", o->task, "Statistic to release: freq or mean")
      ->transform(CLI::CheckedTransformer(kTaskNames, CLI::ignore_case))
      ->capture_default_str();
  cmd->add_option("--bins", o->bins, "Number of bins for the frequency task")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  cmd->add_option("--setting", o->setting,
                  "Whether demands correlate with the data")
      ->transform(CLI::CheckedTransformer(kSettingNames, CLI::ignore_case))
      ->capture_default_str();
  cmd->add_option("--seed", o->seed, "Root RNG seed")
      ->envname("HETDP_SEED")
      ->capture_default_str();
}

void add_synthetic_options(CLI::App* cmd, CommonOpts* o) {
  cmd->add_option("--n", o->n, "Synthetic instance size")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  cmd->add_option("--law-halfwidth", o->synthetic.law_halfwidth,
                  "Half-width of the correlated log-demand jitter")
      ->capture_default_str();
  cmd->add_option("--log-eps-lo", o->synthetic.log_eps_lo,
                  "Lower log-demand bound (uncorrelated law)")
      ->capture_default_str();
  cmd->add_option("--log-eps-hi", o->synthetic.log_eps_hi,
                  "Upper log-demand bound (uncorrelated law)")
      ->capture_default_str();
  cmd->add_option("--heavy-bin-weight", o->synthetic.heavy_bin_weight,
                  "Relative mass of the central bin in the synthetic record "
                  "law")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  cmd->add_option("--virtual-bins", o->synthetic.virtual_bins,
                  "Demand-law slices of [0,1] for the mean task")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
}

hetdp::Task make_task(const CommonOpts& o) {
  return o.task == TaskKind::kFrequency ? hetdp::Task::frequency(o.bins)
                                        : hetdp::Task::mean();
}

hetdp::SyntheticSpec make_synthetic(const CommonOpts& o) {
  hetdp::SyntheticSpec s = o.synthetic;
  s.n = o.n;
  s.task = make_task(o);
  s.setting = o.setting;
  return s;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "hetdp: frequency and mean release under per-user privacy demands"};
  app.require_subcommand(1);
  // Config must live on the root app: this CLI11 release only processes
  // config files there. Subcommand options sit in [weights]/[bench]/[gen]
  // sections; fallthrough lets `hetdp bench --config f` reach the root flag.
  app.set_config("--config", "",
                 "INI config file (flags override it); put subcommand "
                 "options in a [bench], [weights] or [gen] section");

  // ---- weights ----
  auto* weights = app.add_subcommand(
      "weights", "Solve for release weights and audit the guarantee");
  weights->fallthrough();
  CommonOpts wopt;
  hetdp::WeightsCommandConfig wcfg;
  add_task_options(weights, &wopt);
  add_synthetic_options(weights, &wopt);
  weights
      ->add_option("--metric", wcfg.metric, "Error metric the weights target")
      ->transform(CLI::CheckedTransformer(kMetricNames, CLI::ignore_case))
      ->capture_default_str();
  weights->add_option("--beta", wcfg.beta, "PAC failure level")
      ->check(CLI::Range(1e-12, 1.0))
      ->capture_default_str();
  weights
      ->add_option("--estimator", wcfg.estimator,
                   "Weighted estimator name (see bench --help for the list)")
      ->required();
  weights->add_option("--data", wcfg.data_path,
                      "value,epsilon CSV; omit to draw a synthetic instance");
  weights->add_option("--out", wcfg.out_path,
                      "Write the JSON report here instead of stdout");

  // ---- bench ----
  auto* bench = app.add_subcommand(
      "bench", "Run the Monte-Carlo benchmark and write a JSON report");
  bench->fallthrough();
  CommonOpts bopt;
  hetdp::BenchmarkConfig bcfg;
  add_task_options(bench, &bopt);
  add_synthetic_options(bench, &bopt);
  bench->add_option("--metric", bcfg.metric, "Error metric to report")
      ->transform(CLI::CheckedTransformer(kMetricNames, CLI::ignore_case))
      ->capture_default_str();
  bench->add_option("--beta", bcfg.beta, "PAC failure level")
      ->check(CLI::Range(1e-12, 1.0))
      ->capture_default_str();
  bench
      ->add_option("--estimators", bcfg.estimators,
                   "Estimators to run (default: all registered). Weighted: "
                   "hpf-opt/hpf-a/hpf-turbo (hpm-* for mean), prop. "
                   "Baselines: uni, sm, ldp.")
      ->delimiter(',');
  bench->add_option("--data", bcfg.data_path,
                    "value,epsilon CSV; omit to draw a synthetic instance");
  bench->add_option("--trials", bcfg.trials,
                    "Trial count (0 picks the setting's default)");
  bench->add_option("--threads", bcfg.threads, "Worker threads")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  bench->add_option("--out", bcfg.out_path, "JSON report path")
      ->capture_default_str();
  bench->add_option("--trials-csv", bcfg.trials_csv,
                    "Per-trial error CSV path (default: derived from --out)");

  // ---- gen ----
  auto* gen = app.add_subcommand(
      "gen", "Draw a synthetic instance and write it as value,epsilon CSV");
  gen->fallthrough();
  CommonOpts gopt;
  hetdp::GenCommandConfig gcfg;
  add_task_options(gen, &gopt);
  add_synthetic_options(gen, &gopt);
  gen->add_option("--out", gcfg.out_path, "Output CSV path")->required();

  CLI11_PARSE(app, argc, argv);

  try {
    if (weights->parsed()) {
      wcfg.task = make_task(wopt);
      wcfg.setting = wopt.setting;
      wcfg.synthetic = make_synthetic(wopt);
      wcfg.seed = wopt.seed;
      return hetdp::cmd_weights(wcfg);
    }
    if (bench->parsed()) {
      bcfg.task = make_task(bopt);
      bcfg.setting = bopt.setting;
      bcfg.synthetic = make_synthetic(bopt);
      bcfg.seed = bopt.seed;
      return hetdp::cmd_bench(bcfg);
    }
    gcfg.spec = make_synthetic(gopt);
    gcfg.seed = gopt.seed;
    return hetdp::cmd_gen(gcfg);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
