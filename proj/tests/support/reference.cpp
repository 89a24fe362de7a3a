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

#include "reference.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

namespace gdof::reference {

std::vector<std::vector<double>> relation_matrix(const Column& attr,
                                                 double lambda) {
  const std::size_t n = attr.size();
  std::vector<std::vector<double>> rel(n, std::vector<double>(n, 0.0));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (attr.kind == AttributeKind::kCategorical) {
        rel[i][j] = attr.codes[i] == attr.codes[j] ? 1.0 : 0.0;
      } else {
        const double d = std::fabs(attr.num[i] - attr.num[j]);
        rel[i][j] = d <= lambda ? 1.0 - d : 0.0;
      }
    }
  }
  return rel;
}

double radius_objective(const Column& attr,
                        const std::vector<std::size_t>& positives,
                        const std::vector<std::size_t>& negatives,
                        double lambda) {
  const auto rel = relation_matrix(attr, lambda);
  const double n = static_cast<double>(attr.size());
  double neg_sum = 0.0;
  for (std::size_t i : negatives)
    for (std::size_t j = 0; j < attr.size(); ++j) neg_sum += rel[i][j];
  double pos_sum = 0.0;
  for (std::size_t i : positives)
    for (std::size_t j = 0; j < attr.size(); ++j) pos_sum += rel[i][j];
  return neg_sum / (static_cast<double>(negatives.size()) * n) -
         pos_sum / (static_cast<double>(positives.size()) * n);
}

double optimize_radius(const Column& attr,
                       const std::vector<std::size_t>& positives,
                       const std::vector<std::size_t>& negatives,
                       const std::vector<double>& grid) {
  double best_lambda = grid.front();
  double best = -std::numeric_limits<double>::infinity();
  for (double lambda : grid) {
    const double objective =
        radius_objective(attr, positives, negatives, lambda);
    if (objective > best) {
      best = objective;
      best_lambda = lambda;
    }
  }
  return best_lambda;
}

std::vector<double> granule_densities(const Column& attr, double lambda) {
  const std::size_t n = attr.size();
  const auto rel = relation_matrix(attr, lambda);
  std::vector<double> card(n, 0.0);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) card[i] += rel[i][j];

  std::vector<double> gd(n, 0.0);
  for (std::size_t i = 0; i < n; ++i) {
    double neighbor_sum = 0.0;
    double neighbor_count = 0.0;
    for (std::size_t j = 0; j < n; ++j) {
      if (rel[i][j] > 0.0) {
        neighbor_sum += card[j];
        neighbor_count += 1.0;
      }
    }
    const double lgd = card[i] / (neighbor_sum / neighbor_count);
    gd[i] = card[i] / static_cast<double>(n) * lgd;
  }
  return gd;
}

DetectResult detect(const Dataset& dataset,
                    const std::vector<std::size_t>& positives,
                    const std::vector<std::size_t>& negatives,
                    const std::vector<double>& grid) {
  const std::size_t n = dataset.n_objects;
  const std::size_t m = dataset.n_attributes();
  DetectResult result;
  result.radii.assign(m, 0.0);
  std::vector<std::vector<double>> gd(m);
  for (std::size_t k = 0; k < m; ++k) {
    const Column& col = dataset.columns[k];
    if (col.kind == AttributeKind::kNumerical)
      result.radii[k] = optimize_radius(col, positives, negatives, grid);
    gd[k] = granule_densities(col, result.radii[k]);
  }

  std::vector<double> gamma(m, 0.0);
  for (std::size_t k = 0; k < m; ++k) {
    double neg_mean = 0.0;
    for (std::size_t i : negatives) neg_mean += gd[k][i];
    neg_mean /= static_cast<double>(negatives.size());
    double pos_mean = 0.0;
    for (std::size_t i : positives) pos_mean += gd[k][i];
    pos_mean /= static_cast<double>(positives.size());
    gamma[k] = neg_mean - pos_mean;
  }

  result.scores.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    double sum = 0.0;
    for (std::size_t k = 0; k < m; ++k) sum += gamma[k] * gd[k][i];
    result.scores[i] = 1.0 - sum / static_cast<double>(m);
  }

  double pos_min = std::numeric_limits<double>::infinity();
  for (std::size_t i : positives) pos_min = std::min(pos_min, result.scores[i]);
  double neg_max = -std::numeric_limits<double>::infinity();
  for (std::size_t j : negatives) neg_max = std::max(neg_max, result.scores[j]);
  result.threshold = 0.5 * (pos_min + neg_max);
  for (std::size_t i = 0; i < n; ++i)
    if (result.scores[i] > result.threshold) result.outlier_set.push_back(i);
  return result;
}

double auc_pairwise(const std::vector<double>& scores,
                    const std::vector<std::uint8_t>& labels) {
  double wins = 0.0;
  double pairs = 0.0;
  for (std::size_t i = 0; i < scores.size(); ++i) {
    if (!labels[i]) continue;
    for (std::size_t j = 0; j < scores.size(); ++j) {
      if (labels[j]) continue;
      pairs += 1.0;
      if (scores[i] > scores[j]) wins += 1.0;
      else if (scores[i] == scores[j]) wins += 0.5;
    }
  }
  return wins / pairs;
}

double ap_sweep(const std::vector<double>& scores,
                const std::vector<std::uint8_t>& labels) {
  const std::size_t n = scores.size();
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    if (scores[a] != scores[b]) return scores[a] > scores[b];
    return a < b;
  });
  double n_pos = 0.0;
  for (auto l : labels) n_pos += l != 0;
  double ap = 0.0;
  double hits = 0.0;
  double prev_recall = 0.0;
  for (std::size_t rank = 0; rank < n; ++rank) {
    if (labels[order[rank]]) hits += 1.0;
    const double recall = hits / n_pos;
    const double precision = hits / static_cast<double>(rank + 1);
    ap += (recall - prev_recall) * precision;
    prev_recall = recall;
  }
  return ap;
}

}  // namespace gdof::reference
