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

#include "gdof/metrics.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace gdof {
namespace {

void check_input(const std::vector<double>& scores,
                 const std::vector<std::uint8_t>& labels) {
  if (scores.size() != labels.size())
    throw std::invalid_argument("metrics: scores/labels length mismatch");
  std::size_t pos = 0;
  for (auto l : labels) pos += l != 0;
  if (pos == 0 || pos == labels.size())
    throw std::invalid_argument("metrics: both classes must be present");
}

}  // namespace

double auc(const std::vector<double>& scores,
           const std::vector<std::uint8_t>& labels) {
  check_input(scores, labels);
  const std::size_t n = scores.size();
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return scores[a] < scores[b];
  });
  // Rank-sum with midranks for ties.
  double pos_rank_sum = 0.0;
  std::size_t n_pos = 0;
  std::size_t r = 0;
  while (r < n) {
    std::size_t r2 = r;
    while (r2 + 1 < n && scores[order[r2 + 1]] == scores[order[r]]) ++r2;
    const double midrank = 0.5 * static_cast<double>(r + r2) + 1.0;
    for (std::size_t t = r; t <= r2; ++t) {
      if (labels[order[t]]) {
        pos_rank_sum += midrank;
        ++n_pos;
      }
    }
    r = r2 + 1;
  }
  const double p = static_cast<double>(n_pos);
  const double q = static_cast<double>(n - n_pos);
  return (pos_rank_sum - p * (p + 1.0) / 2.0) / (p * q);
}

double average_precision(const std::vector<double>& scores,
                         const std::vector<std::uint8_t>& labels) {
  check_input(scores, labels);
  const std::size_t n = scores.size();
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  // Descending score; ties by ascending original index.
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    if (scores[a] != scores[b]) return scores[a] > scores[b];
    return a < b;
  });
  std::size_t n_pos = 0;
  for (auto l : labels) n_pos += l != 0;
  double ap = 0.0;
  std::size_t hits = 0;
  for (std::size_t rank = 0; rank < n; ++rank) {
    if (labels[order[rank]]) {
      ++hits;
      // Recall increment 1/P times precision at this rank.
      ap += static_cast<double>(hits) / static_cast<double>(rank + 1) /
            static_cast<double>(n_pos);
    }
  }
  return ap;
}

}  // namespace gdof
