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

#include "gdof/experiment.hpp"

#include <charconv>
#include <chrono>
#include <cmath>
#include <fstream>
#include <stdexcept>

#include <json.hpp>

#include "gdof/metrics.hpp"

namespace gdof {
namespace {

using nlohmann::json;

std::string shortest_repr(double v) {
  char buf[32];
  const auto res = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, res.ptr);
}

struct MeanStd {
  double mean = 0.0;
  double std = 0.0;
};

MeanStd mean_std(const std::vector<double>& xs) {
  MeanStd out;
  if (xs.empty()) return out;
  for (double x : xs) out.mean += x;
  out.mean /= static_cast<double>(xs.size());
  double var = 0.0;
  for (double x : xs) var += (x - out.mean) * (x - out.mean);
  out.std = std::sqrt(var / static_cast<double>(xs.size()));
  return out;
}

json config_to_json(const ExperimentConfig& c) {
  return json{{"labeled_outlier_counts", c.labeled_outlier_counts},
              {"n_negatives", c.n_negatives},
              {"trials", c.trials},
              {"base_seed", c.base_seed},
              {"grid_step", c.grid_step},
              {"label_column", c.label_column}};
}

}  // namespace

Dataset load_prepared(const ExperimentConfig& config) {
  std::vector<SchemaHint> hints;
  if (!config.schema_path.empty()) hints = load_schema_file(config.schema_path);
  Dataset ds = load_csv(config.dataset_path, hints);
  use_label_column(ds, config.label_column);
  return normalize(impute_missing(ds));
}

ExperimentReport run_experiment(const ExperimentConfig& config) {
  return run_experiment_on(load_prepared(config), config);
}

ExperimentReport run_experiment_on(const Dataset& dataset,
                                   const ExperimentConfig& config) {
  if (!dataset.ground_truth)
    throw std::runtime_error("run_experiment: ground truth required");
  if (config.trials < 1)
    throw std::invalid_argument("run_experiment: trials must be >= 1");

  ExperimentReport report;
  report.dataset = config.dataset_path;
  report.config = config;

  for (std::size_t count : config.labeled_outlier_counts) {
    CountSummary summary;
    summary.labeled_outliers = count;
    std::vector<double> aucs, aps, aucs_all, aps_all;
    for (std::size_t t = 0; t < config.trials; ++t) {
      const std::uint64_t seed = config.base_seed + t;
      const auto start = std::chrono::steady_clock::now();

      const LabelState drawn = draw_labeled_outliers(dataset, count, seed);
      DetectConfig dc;
      dc.n_negatives = config.n_negatives;
      dc.grid_step = config.grid_step;
      dc.seed = seed;
      dc.threads = config.threads;
      const ScoreReport result = detect(dataset, drawn.positives, dc);

      // Test set: everything outside the training selections.
      std::vector<std::uint8_t> in_pos(dataset.n_objects, 0);
      std::vector<std::uint8_t> in_neg(dataset.n_objects, 0);
      for (std::size_t i : result.labels.positives) in_pos[i] = 1;
      for (std::size_t i : result.labels.negatives) in_neg[i] = 1;
      std::vector<double> s_test, s_all;
      std::vector<std::uint8_t> y_test, y_all;
      for (std::size_t i = 0; i < dataset.n_objects; ++i) {
        if (in_pos[i]) continue;
        s_all.push_back(result.scores[i]);
        y_all.push_back((*dataset.ground_truth)[i]);
        if (in_neg[i]) continue;
        s_test.push_back(result.scores[i]);
        y_test.push_back((*dataset.ground_truth)[i]);
      }

      TrialResult trial;
      trial.seed = seed;
      trial.auc = auc(s_test, y_test);
      trial.ap = average_precision(s_test, y_test);
      trial.auc_all_unlabeled = auc(s_all, y_all);
      trial.ap_all_unlabeled = average_precision(s_all, y_all);
      trial.threshold = result.threshold;
      trial.n_flagged = result.outlier_set.size();
      trial.wall_seconds =
          std::chrono::duration<double>(std::chrono::steady_clock::now() -
                                        start)
              .count();
      aucs.push_back(trial.auc);
      aps.push_back(trial.ap);
      aucs_all.push_back(trial.auc_all_unlabeled);
      aps_all.push_back(trial.ap_all_unlabeled);
      summary.trials.push_back(trial);
    }
    const MeanStd a = mean_std(aucs);
    const MeanStd p = mean_std(aps);
    summary.mean_auc = a.mean;
    summary.std_auc = a.std;
    summary.mean_ap = p.mean;
    summary.std_ap = p.std;
    summary.mean_auc_all_unlabeled = mean_std(aucs_all).mean;
    summary.mean_ap_all_unlabeled = mean_std(aps_all).mean;
    report.counts.push_back(std::move(summary));
  }
  return report;
}

std::vector<ExperimentReport> run_negative_sweep(
    const Dataset& dataset, const ExperimentConfig& config,
    const std::vector<std::size_t>& negative_sizes) {
  std::vector<ExperimentReport> reports;
  for (std::size_t n_neg : negative_sizes) {
    ExperimentConfig c = config;
    c.n_negatives = n_neg;
    reports.push_back(run_experiment_on(dataset, c));
  }
  return reports;
}

std::string report_to_json(const ExperimentReport& report) {
  json j;
  j["schema_version"] = 1;
  j["dataset"] = report.dataset;
  j["config"] = config_to_json(report.config);
  json counts = json::array();
  for (const auto& summary : report.counts) {
    json per_trial = json::array();
    for (const auto& t : summary.trials) {
      per_trial.push_back(json{{"seed", t.seed},
                               {"auc", t.auc},
                               {"ap", t.ap},
                               {"auc_all_unlabeled", t.auc_all_unlabeled},
                               {"ap_all_unlabeled", t.ap_all_unlabeled},
                               {"threshold", t.threshold},
                               {"n_flagged", t.n_flagged}});
    }
    counts.push_back(
        json{{"labeled_outliers", summary.labeled_outliers},
             {"per_trial", per_trial},
             {"mean_auc", summary.mean_auc},
             {"std_auc", summary.std_auc},
             {"mean_ap", summary.mean_ap},
             {"std_ap", summary.std_ap},
             {"mean_auc_all_unlabeled", summary.mean_auc_all_unlabeled},
             {"mean_ap_all_unlabeled", summary.mean_ap_all_unlabeled}});
  }
  j["counts"] = counts;
  if (report.counts.size() == 1) {
    j["mean_auc"] = report.counts[0].mean_auc;
    j["std_auc"] = report.counts[0].std_auc;
    j["mean_ap"] = report.counts[0].mean_ap;
    j["std_ap"] = report.counts[0].std_ap;
  }
  return j.dump(2) + "\n";
}

void write_report_json(const ExperimentReport& report,
                       const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << report_to_json(report);
}

void write_scores_csv(const ScoreReport& report, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << "index,score,predicted_outlier\n";
  std::size_t next_flagged = 0;
  for (std::size_t i = 0; i < report.scores.size(); ++i) {
    const bool flagged = next_flagged < report.outlier_set.size() &&
                         report.outlier_set[next_flagged] == i;
    if (flagged) ++next_flagged;
    out << i << ',' << shortest_repr(report.scores[i]) << ','
        << (flagged ? 1 : 0) << '\n';
  }
}

std::string score_report_to_json(const ScoreReport& report) {
  json j;
  j["schema_version"] = 1;
  j["scores"] = report.scores;
  j["threshold"] = report.threshold;
  j["outlier_set"] = report.outlier_set;
  j["labels"] =
      json{{"positives", report.labels.positives},
           {"negatives", report.labels.negatives},
           {"rng_seed", report.labels.rng_seed}};
  j["radii"] = report.radii.lambda_per_attribute;
  j["config"] = json{{"seed", report.config.seed},
                     {"n_negatives", report.config.n_negatives},
                     {"grid_step", report.config.grid_step},
                     {"labeled_outliers", report.labeled_outlier_count}};
  return j.dump(2) + "\n";
}

void write_score_report_json(const ScoreReport& report,
                             const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << score_report_to_json(report);
}

}  // namespace gdof
