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

#ifndef GDOF_SCORING_HPP_
#define GDOF_SCORING_HPP_

#include <cstddef>
#include <cstdint>
#include <vector>

#include "gdof/dataset.hpp"
#include "gdof/density.hpp"
#include "gdof/granulation.hpp"

namespace gdof {

// Per-attribute discriminativeness weights; may be negative.
using RelevanceVector = std::vector<double>;

struct DetectConfig {
  std::size_t n_negatives = 200;
  double grid_step = 0.01;
  std::uint64_t seed = 0;
  int threads = 0;  // 0 = hardware concurrency
};

struct ScoreReport {
  std::vector<double> scores;
  double threshold = 0.0;
  std::vector<std::size_t> outlier_set;  // { i : scores[i] > threshold }
  LabelState labels;
  RadiusVector radii;
  DetectConfig config;
  std::size_t labeled_outlier_count = 0;
};

// Mean granule density of labeled inliers minus labeled outliers on
// attribute k.
double attribute_relevance(const DensityMatrix& densities,
                           const std::vector<std::size_t>& positives,
                           const std::vector<std::size_t>& negatives,
                           std::size_t k);

RelevanceVector attribute_relevances(const DensityMatrix& densities,
                                     const std::vector<std::size_t>& positives,
                                     const std::vector<std::size_t>& negatives);

// 1 - mean_k relevance[k] * GD_k(x_i).
double gdof_score(const DensityMatrix& densities,
                  const RelevanceVector& relevances, std::size_t i);

// Midpoint of the smallest labeled-outlier score and the largest
// sampled-inlier score.
double compute_threshold(const std::vector<double>& scores,
                         const std::vector<std::size_t>& positives,
                         const std::vector<std::size_t>& negatives);

// Full pipeline with the label state already fixed: radii, densities,
// relevances, scores, threshold, outlier set.
ScoreReport detect_with_labels(const Dataset& dataset, const LabelState& labels,
                               const DetectConfig& config);

// Full pipeline: negative sampling first, then detect_with_labels.
ScoreReport detect(const Dataset& dataset,
                   const std::vector<std::size_t>& positives,
                   const DetectConfig& config);

}  // namespace gdof

#endif  // GDOF_SCORING_HPP_
