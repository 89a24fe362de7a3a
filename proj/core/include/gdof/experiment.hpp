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

#ifndef GDOF_EXPERIMENT_HPP_
#define GDOF_EXPERIMENT_HPP_

#include <cstdint>
#include <string>
#include <vector>

#include "gdof/dataset.hpp"
#include "gdof/scoring.hpp"

namespace gdof {

struct ExperimentConfig {
  std::vector<std::size_t> labeled_outlier_counts{5, 10, 15, 20, 25, 30};
  std::size_t n_negatives = 200;
  std::size_t trials = 10;
  std::uint64_t base_seed = 0;
  double grid_step = 0.01;
  int threads = 0;
  std::string dataset_path;
  std::string schema_path;  // optional sidecar
  std::string label_column = "label";
};

struct TrialResult {
  std::uint64_t seed = 0;
  // Primary metrics: evaluated on objects outside X+ and X-.
  double auc = 0.0;
  double ap = 0.0;
  // Variant: evaluated on all objects outside X+ only.
  double auc_all_unlabeled = 0.0;
  double ap_all_unlabeled = 0.0;
  double threshold = 0.0;
  std::size_t n_flagged = 0;
  double wall_seconds = 0.0;  // informational; not written to reports
};

struct CountSummary {
  std::size_t labeled_outliers = 0;
  std::vector<TrialResult> trials;
  double mean_auc = 0.0, std_auc = 0.0;
  double mean_ap = 0.0, std_ap = 0.0;
  double mean_auc_all_unlabeled = 0.0;
  double mean_ap_all_unlabeled = 0.0;
};

struct ExperimentReport {
  std::string dataset;
  ExperimentConfig config;
  std::vector<CountSummary> counts;
};

// Loads, extracts labels, imputes and normalizes in one step.
Dataset load_prepared(const ExperimentConfig& config);

// The repeated-trial protocol: for each labeled count c and trial t,
// seed = base_seed + t, draw X+ of size c, run detect, evaluate.
ExperimentReport run_experiment(const ExperimentConfig& config);

// Same protocol on an already-prepared dataset.
ExperimentReport run_experiment_on(const Dataset& dataset,
                                   const ExperimentConfig& config);

// One summary per candidate-inlier budget, at a fixed labeled count.
std::vector<ExperimentReport> run_negative_sweep(
    const Dataset& dataset, const ExperimentConfig& config,
    const std::vector<std::size_t>& negative_sizes);

std::string report_to_json(const ExperimentReport& report);
void write_report_json(const ExperimentReport& report, const std::string& path);

// Per-object scores: header `index,score,predicted_outlier`.
void write_scores_csv(const ScoreReport& report, const std::string& path);
std::string score_report_to_json(const ScoreReport& report);
void write_score_report_json(const ScoreReport& report,
                             const std::string& path);

}  // namespace gdof

#endif  // GDOF_EXPERIMENT_HPP_
