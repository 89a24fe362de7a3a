/*
 * Copyright 2026 The GDOF Authors.
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     https://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include <CLI11.hpp>

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <cstdlib>
#include <filesystem>
#include <iostream>
#include <random>
#include <string>
#include <vector>

#include "gdof/experiment.hpp"
#include "gdof/granulation.hpp"
#include "gdof/metrics.hpp"
#include "gdof/scoring.hpp"
#include "support/reference.hpp"
#include "support/testdata.hpp"

namespace {

// Relative dataset paths fall back to $GDOF_DATA_DIR.
std::string resolve_data_path(const std::string& path) {
  if (path.empty() || std::filesystem::exists(path)) return path;
  if (std::filesystem::path(path).is_absolute()) return path;
  const char* dir = std::getenv("GDOF_DATA_DIR");
  if (dir == nullptr) return path;
  const auto candidate = std::filesystem::path(dir) / path;
  if (std::filesystem::exists(candidate)) return candidate.string();
  return path;
}

struct CommonOpts {
  std::string data;
  std::string schema;
  std::string label_column = "label";
  std::size_t n_negatives = 200;
  double grid_step = 0.01;
  std::uint64_t seed = 0;
  int threads = 0;
};

void add_common(CLI::App* cmd, CommonOpts& opts) {
  cmd->add_option("--data", opts.data, "Dataset CSV (relative paths also "
                  "searched under $GDOF_DATA_DIR)")->required();
  cmd->add_option("--schema", opts.schema,
                  "Optional schema sidecar (name,kind per line)");
  cmd->add_option("--label-column", opts.label_column,
                  "Ground-truth column name");
  cmd->add_option("--n-negatives", opts.n_negatives,
                  "Candidate inliers to sample");
  cmd->add_option("--grid-step", opts.grid_step, "Radius grid step");
  cmd->add_option("--seed", opts.seed, "Base RNG seed");
  cmd->add_option("--threads", opts.threads,
                  "Worker threads (0 = all cores)");
}

gdof::ExperimentConfig to_experiment_config(const CommonOpts& opts) {
  gdof::ExperimentConfig config;
  config.dataset_path = resolve_data_path(opts.data);
  config.schema_path = opts.schema;
  config.label_column = opts.label_column;
  config.n_negatives = opts.n_negatives;
  config.grid_step = opts.grid_step;
  config.base_seed = opts.seed;
  config.threads = opts.threads;
  return config;
}

int run_detect(const CommonOpts& opts, const std::vector<std::size_t>& positives,
               std::size_t n_labeled, const std::string& out,
               const std::string& format) {
  const gdof::ExperimentConfig econfig = to_experiment_config(opts);
  const gdof::Dataset ds = gdof::load_prepared(econfig);

  std::vector<std::size_t> pos = positives;
  if (pos.empty()) {
    if (!ds.ground_truth)
      throw std::runtime_error(
          "no --positives given and the dataset has no label column");
    pos = gdof::draw_labeled_outliers(ds, n_labeled, opts.seed).positives;
  }

  gdof::DetectConfig config;
  config.n_negatives = opts.n_negatives;
  config.grid_step = opts.grid_step;
  config.seed = opts.seed;
  config.threads = opts.threads;
  const gdof::ScoreReport report = gdof::detect(ds, pos, config);

  if (format == "json") {
    if (out.empty())
      std::cout << gdof::score_report_to_json(report);
    else
      gdof::write_score_report_json(report, out);
  } else {
    if (out.empty())
      throw std::runtime_error("--out is required with csv output");
    gdof::write_scores_csv(report, out);
  }
  std::cerr << "flagged " << report.outlier_set.size() << " of "
            << ds.n_objects << " objects (threshold " << report.threshold
            << ")\n";
  return 0;
}

int run_evaluate(const CommonOpts& opts,
                 const std::vector<std::size_t>& counts, std::size_t trials,
                 const std::string& out) {
  gdof::ExperimentConfig config = to_experiment_config(opts);
  config.labeled_outlier_counts = counts;
  config.trials = trials;
  const gdof::ExperimentReport report = gdof::run_experiment(config);
  if (out.empty())
    std::cout << gdof::report_to_json(report);
  else
    gdof::write_report_json(report, out);
  for (const gdof::CountSummary& c : report.counts)
    std::cerr << "labeled=" << c.labeled_outliers << " mean AUC "
              << c.mean_auc << " mean AP " << c.mean_ap << "\n";
  return 0;
}

int run_sweep(const CommonOpts& opts, const std::vector<std::size_t>& sizes,
              std::size_t n_labeled, std::size_t trials,
              const std::string& out) {
  gdof::ExperimentConfig config = to_experiment_config(opts);
  config.labeled_outlier_counts = {n_labeled};
  config.trials = trials;
  const gdof::Dataset ds = gdof::load_prepared(config);
  const auto reports = gdof::run_negative_sweep(ds, config, sizes);

  std::string joined = "[";
  for (std::size_t i = 0; i < reports.size(); ++i) {
    if (i > 0) joined += ",";
    std::string one = gdof::report_to_json(reports[i]);
    while (!one.empty() && one.back() == '\n') one.pop_back();
    joined += one;
    std::cerr << "n_negatives=" << reports[i].config.n_negatives
              << " mean AUC " << reports[i].counts.front().mean_auc << "\n";
  }
  joined += "]\n";
  if (out.empty())
    std::cout << joined;
  else
    gdof::testdata::write_file(out, joined);
  return 0;
}

// Random-instance comparison of the optimized pipeline against the
// brute-force reference in tests/support.
int run_oracle_check(std::size_t instances, std::uint64_t seed) {
  std::mt19937_64 rng(seed == 0 ? 11001 : seed);
  double worst = 0.0;
  std::size_t bad = 0;
  for (std::size_t rep = 0; rep < instances; ++rep) {
    const std::size_t n = 6 + rng() % 15;
    const std::size_t m = 1 + rng() % 3;
    gdof::Dataset ds = gdof::testdata::random_dataset(rng, n, m);
    std::vector<std::size_t> perm(n);
    for (std::size_t i = 0; i < n; ++i) perm[i] = i;
    std::shuffle(perm.begin(), perm.end(), rng);
    std::vector<std::size_t> pos(perm.begin(), perm.begin() + 1 + rng() % 2);
    std::vector<std::size_t> neg(perm.begin() + pos.size(),
                                 perm.begin() + pos.size() + 2 + rng() % 3);
    std::sort(pos.begin(), pos.end());
    std::sort(neg.begin(), neg.end());
    gdof::LabelState labels;
    labels.positives = pos;
    labels.negatives = neg;
    gdof::DetectConfig config;
    config.grid_step = 0.05;
    config.threads = 1;
    const gdof::ScoreReport got = gdof::detect_with_labels(ds, labels, config);
    const gdof::reference::DetectResult want =
        gdof::reference::detect(ds, pos, neg, gdof::radius_grid(0.05));
    for (std::size_t i = 0; i < n; ++i) {
      const double diff = std::fabs(got.scores[i] - want.scores[i]);
      worst = std::max(worst, diff);
      if (diff > 1e-12) ++bad;
    }
  }
  std::cout << "oracle check: " << instances << " instances, max diff "
            << worst << ", " << bad << " mismatches\n";
  return bad == 0 ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Granule density based outlier detection"};
  app.require_subcommand(1);

  CommonOpts detect_opts;
  std::vector<std::size_t> positives;
  std::size_t n_labeled = 5;
  std::string detect_out, detect_format = "csv";
  CLI::App* detect_cmd =
      app.add_subcommand("detect", "Score a dataset and flag outliers");
  add_common(detect_cmd, detect_opts);
  detect_cmd->add_option("--positives", positives,
                         "Known outlier row indices (0-based)");
  detect_cmd->add_option("--n-labeled", n_labeled,
                         "Labeled outliers to draw from the label column "
                         "when --positives is not given");
  detect_cmd->add_option("--out", detect_out, "Output path");
  detect_cmd->add_option("--format", detect_format, "csv or json")
      ->check(CLI::IsMember({"csv", "json"}));

  CommonOpts eval_opts;
  std::vector<std::size_t> counts = {5, 10, 15, 20, 25, 30};
  std::size_t trials = 10;
  std::string eval_out;
  CLI::App* eval_cmd = app.add_subcommand(
      "evaluate", "Repeated-trial evaluation against ground truth");
  add_common(eval_cmd, eval_opts);
  eval_cmd->add_option("--counts", counts, "Labeled-outlier counts to test");
  eval_cmd->add_option("--trials", trials, "Trials per count");
  eval_cmd->add_option("--out", eval_out, "Report JSON path");

  CommonOpts sweep_opts;
  std::vector<std::size_t> sizes = {50, 100, 200, 300, 400, 500};
  std::size_t sweep_labeled = 5;
  std::size_t sweep_trials = 10;
  std::string sweep_out;
  CLI::App* sweep_cmd = app.add_subcommand(
      "sweep-negatives", "Evaluate across candidate-inlier budgets");
  add_common(sweep_cmd, sweep_opts);
  sweep_cmd->add_option("--sizes", sizes, "Candidate-inlier budgets");
  sweep_cmd->add_option("--n-labeled", sweep_labeled, "Labeled outliers");
  sweep_cmd->add_option("--trials", sweep_trials, "Trials per budget");
  sweep_cmd->add_option("--out", sweep_out, "Report JSON path");

  std::size_t oracle_instances = 200;
  std::uint64_t oracle_seed = 0;
  CLI::App* oracle_cmd = app.add_subcommand(
      "oracle-check", "Compare against the brute-force reference");
  oracle_cmd->add_option("--instances", oracle_instances,
                         "Random instances to test");
  oracle_cmd->add_option("--seed", oracle_seed, "RNG seed (0 = default)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (detect_cmd->parsed())
      return run_detect(detect_opts, positives, n_labeled, detect_out,
                        detect_format);
    if (eval_cmd->parsed())
      return run_evaluate(eval_opts, counts, trials, eval_out);
    if (sweep_cmd->parsed())
      return run_sweep(sweep_opts, sizes, sweep_labeled, sweep_trials,
                       sweep_out);
    if (oracle_cmd->parsed())
      return run_oracle_check(oracle_instances, oracle_seed);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
