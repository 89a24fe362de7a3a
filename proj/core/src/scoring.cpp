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

#include "gdof/scoring.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>

#include "gdof/parallel.hpp"
#include "gdof/sampling.hpp"

namespace gdof {

double attribute_relevance(const DensityMatrix& densities,
                           const std::vector<std::size_t>& positives,
                           const std::vector<std::size_t>& negatives,
                           std::size_t k) {
  if (positives.empty() || negatives.empty())
    throw std::invalid_argument("attribute_relevance: empty label set");
  double neg_sum = 0.0;
  for (std::size_t i : negatives) neg_sum += densities.at(i, k);
  double pos_sum = 0.0;
  for (std::size_t i : positives) pos_sum += densities.at(i, k);
  return neg_sum / static_cast<double>(negatives.size()) -
         pos_sum / static_cast<double>(positives.size());
}

RelevanceVector attribute_relevances(
    const DensityMatrix& densities, const std::vector<std::size_t>& positives,
    const std::vector<std::size_t>& negatives) {
  RelevanceVector gamma(densities.m);
  for (std::size_t k = 0; k < densities.m; ++k)
    gamma[k] = attribute_relevance(densities, positives, negatives, k);
  return gamma;
}

double gdof_score(const DensityMatrix& densities,
                  const RelevanceVector& relevances, std::size_t i) {
  double sum = 0.0;
  for (std::size_t k = 0; k < densities.m; ++k)
    sum += relevances[k] * densities.at(i, k);
  return 1.0 - sum / static_cast<double>(densities.m);
}

double compute_threshold(const std::vector<double>& scores,
                         const std::vector<std::size_t>& positives,
                         const std::vector<std::size_t>& negatives) {
  if (positives.empty() || negatives.empty())
    throw std::invalid_argument("compute_threshold: empty label set");
  double pos_min = std::numeric_limits<double>::infinity();
  for (std::size_t i : positives) pos_min = std::min(pos_min, scores[i]);
  double neg_max = -std::numeric_limits<double>::infinity();
  for (std::size_t j : negatives) neg_max = std::max(neg_max, scores[j]);
  return 0.5 * (pos_min + neg_max);
}

ScoreReport detect_with_labels(const Dataset& dataset, const LabelState& labels,
                               const DetectConfig& config) {
  if (!dataset.normalized)
    throw std::invalid_argument("detect: dataset must be normalized");
  if (labels.positives.empty())
    throw std::invalid_argument("detect: at least one labeled outlier");

  const std::vector<double> grid = radius_grid(config.grid_step);
  const RadiusVector radii = optimize_radii(
      dataset, labels.positives, labels.negatives, grid, config.threads);
  const DensityMatrix densities =
      density_matrix(dataset, radii, config.threads);
  const RelevanceVector gamma =
      attribute_relevances(densities, labels.positives, labels.negatives);

  ScoreReport report;
  report.scores.resize(dataset.n_objects);
  parallel_for(dataset.n_objects, config.threads, [&](std::size_t i) {
    report.scores[i] = gdof_score(densities, gamma, i);
  });
  report.threshold =
      compute_threshold(report.scores, labels.positives, labels.negatives);
  for (std::size_t i = 0; i < dataset.n_objects; ++i)
    if (report.scores[i] > report.threshold) report.outlier_set.push_back(i);
  report.labels = labels;
  report.radii = radii;
  report.config = config;
  report.labeled_outlier_count = labels.positives.size();
  return report;
}

ScoreReport detect(const Dataset& dataset,
                   const std::vector<std::size_t>& positives,
                   const DetectConfig& config) {
  LabelState labels;
  labels.positives = positives;
  std::sort(labels.positives.begin(), labels.positives.end());
  labels.rng_seed = config.seed;
  const SamplingDistribution dist = sampling_distribution(dataset, positives);
  labels.negatives = sample_negatives(dist, config.n_negatives, config.seed);
  return detect_with_labels(dataset, labels, config);
}

}  // namespace gdof
