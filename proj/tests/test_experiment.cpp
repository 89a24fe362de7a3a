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

#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>

#include "gdof/experiment.hpp"
#include "support/testdata.hpp"

using namespace gdof;

namespace {

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

std::string temp_path(const std::string& name) {
  return (std::filesystem::temp_directory_path() / name).string();
}

ExperimentConfig toy_config(const std::string& csv_path) {
  ExperimentConfig config;
  config.dataset_path = csv_path;
  config.labeled_outlier_counts = {3};
  config.n_negatives = 15;
  config.trials = 2;
  config.base_seed = 5;
  config.grid_step = 0.1;
  config.threads = 1;
  return config;
}

}  // namespace

TEST_CASE("run_experiment on a separable planted dataset") {
  std::mt19937_64 rng(109);
  Dataset ds = testdata::planted_outliers(rng, 60, 8, 2);
  const std::string csv = temp_path("gdof_exp.csv");
  testdata::write_labeled_csv(ds, csv);

  ExperimentConfig config = toy_config(csv);
  const ExperimentReport report = run_experiment(config);
  REQUIRE(report.counts.size() == 1);
  const CountSummary& summary = report.counts[0];
  REQUIRE(summary.trials.size() == 2);
  for (const TrialResult& t : summary.trials) {
    CHECK(t.auc >= 0.0);
    CHECK(t.auc <= 1.0);
    CHECK(t.ap >= 0.0);
    CHECK(t.ap <= 1.0);
  }
  // Planted instance is trivially separable.
  CHECK(summary.mean_auc > 0.95);
  std::remove(csv.c_str());
}

TEST_CASE("single trial aggregates equal the trial") {
  std::mt19937_64 rng(113);
  Dataset ds = testdata::planted_outliers(rng, 40, 6, 1);
  const std::string csv = temp_path("gdof_exp1.csv");
  testdata::write_labeled_csv(ds, csv);

  ExperimentConfig config = toy_config(csv);
  config.trials = 1;
  const ExperimentReport report = run_experiment(config);
  const CountSummary& summary = report.counts[0];
  CHECK(summary.mean_auc == summary.trials[0].auc);
  CHECK(summary.std_auc == 0.0);
  CHECK(summary.mean_ap == summary.trials[0].ap);
  std::remove(csv.c_str());
}

TEST_CASE("identical configs produce byte-identical report files") {
  std::mt19937_64 rng(127);
  Dataset ds = testdata::planted_outliers(rng, 50, 7, 2);
  const std::string csv = temp_path("gdof_exp2.csv");
  testdata::write_labeled_csv(ds, csv);

  ExperimentConfig config = toy_config(csv);
  const std::string out1 = temp_path("gdof_report1.json");
  const std::string out2 = temp_path("gdof_report2.json");
  write_report_json(run_experiment(config), out1);
  write_report_json(run_experiment(config), out2);
  CHECK(slurp(out1) == slurp(out2));
  CHECK(!slurp(out1).empty());
  std::remove(csv.c_str());
  std::remove(out1.c_str());
  std::remove(out2.c_str());
}

TEST_CASE("scores CSV format") {
  std::mt19937_64 rng(131);
  Dataset ds = testdata::planted_outliers(rng, 20, 3, 1);
  DetectConfig config;
  config.n_negatives = 8;
  config.threads = 1;
  const ScoreReport report = detect(ds, {20, 21, 22}, config);
  const std::string path = temp_path("gdof_scores.csv");
  write_scores_csv(report, path);

  std::ifstream in(path);
  std::string line;
  REQUIRE(std::getline(in, line));
  CHECK(line == "index,score,predicted_outlier");
  std::size_t rows = 0, flagged = 0;
  while (std::getline(in, line)) {
    ++rows;
    if (line.size() >= 2 && line.substr(line.size() - 2) == ",1") ++flagged;
  }
  CHECK(rows == ds.n_objects);
  CHECK(flagged == report.outlier_set.size());
  std::remove(path.c_str());
}

TEST_CASE("score report JSON carries scores, threshold and outlier set") {
  std::mt19937_64 rng(137);
  Dataset ds = testdata::planted_outliers(rng, 15, 3, 1);
  DetectConfig config;
  config.n_negatives = 5;
  config.threads = 1;
  const ScoreReport report = detect(ds, {15}, config);
  const std::string j = score_report_to_json(report);
  CHECK(j.find("\"scores\"") != std::string::npos);
  CHECK(j.find("\"threshold\"") != std::string::npos);
  CHECK(j.find("\"outlier_set\"") != std::string::npos);
  CHECK(j.find("\"radii\"") != std::string::npos);
}

TEST_CASE("negative sweep returns one summary per budget") {
  std::mt19937_64 rng(139);
  Dataset ds = testdata::planted_outliers(rng, 45, 6, 1);
  ExperimentConfig config;
  config.labeled_outlier_counts = {3};
  config.trials = 2;
  config.grid_step = 0.2;
  config.threads = 1;
  const auto reports = run_negative_sweep(ds, config, {10, 20});
  REQUIRE(reports.size() == 2);
  CHECK(reports[0].config.n_negatives == 10);
  CHECK(reports[1].config.n_negatives == 20);
}
