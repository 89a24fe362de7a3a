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

#include "gdof/sampling.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

#include "gdof/rng.hpp"

namespace gdof {

double average_distance(const Dataset& dataset, std::size_t i, std::size_t k) {
  if (k >= dataset.n_attributes())
    throw std::out_of_range("average_distance: attribute index out of range");
  const Column& col = dataset.columns[k];
  const std::size_t n = col.size();
  if (i >= n)
    throw std::out_of_range("average_distance: object index out of range");
  double sum = 0.0;
  if (col.kind == AttributeKind::kNumerical) {
    const double fi = col.num[i];
    for (std::size_t j = 0; j < n; ++j) sum += std::fabs(fi - col.num[j]);
  } else {
    const std::int32_t ci = col.codes[i];
    for (std::size_t j = 0; j < n; ++j) sum += ci == col.codes[j] ? 0.0 : 1.0;
  }
  return sum / static_cast<double>(n);
}

std::vector<double> average_distances(const Column& attr) {
  const std::size_t n = attr.size();
  std::vector<double> out(n);
  if (attr.kind == AttributeKind::kCategorical) {
    std::int32_t max_code = -1;
    for (auto c : attr.codes) max_code = std::max(max_code, c);
    std::vector<double> count(static_cast<std::size_t>(max_code) + 1, 0.0);
    for (auto c : attr.codes) count[static_cast<std::size_t>(c)] += 1.0;
    for (std::size_t i = 0; i < n; ++i)
      out[i] = (static_cast<double>(n) -
                count[static_cast<std::size_t>(attr.codes[i])]) /
               static_cast<double>(n);
    return out;
  }
  // sum_j |f_i - f_j| via rank + prefix sums over the sorted column.
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return attr.num[a] < attr.num[b];
  });
  std::vector<double> prefix(n + 1, 0.0);
  for (std::size_t r = 0; r < n; ++r)
    prefix[r + 1] = prefix[r] + attr.num[order[r]];
  const double total = prefix[n];
  for (std::size_t r = 0; r < n; ++r) {
    const double v = attr.num[order[r]];
    const double below = static_cast<double>(r) * v - prefix[r];
    const double above =
        (total - prefix[r + 1]) - static_cast<double>(n - r - 1) * v;
    out[order[r]] = (below + above) / static_cast<double>(n);
  }
  return out;
}

SamplingDistribution sampling_distribution(
    const Dataset& dataset, const std::vector<std::size_t>& positives) {
  const std::size_t n = dataset.n_objects;
  const std::size_t m = dataset.n_attributes();
  std::vector<std::uint8_t> is_positive(n, 0);
  for (std::size_t i : positives) {
    if (i >= n)
      throw std::out_of_range("sampling_distribution: index out of range");
    is_positive[i] = 1;
  }

  std::vector<double> mean_distance(n, 0.0);
  for (std::size_t k = 0; k < m; ++k) {
    const std::vector<double> dk = average_distances(dataset.columns[k]);
    for (std::size_t i = 0; i < n; ++i) mean_distance[i] += dk[i];
  }

  SamplingDistribution dist;
  std::vector<double> scores;
  for (std::size_t i = 0; i < n; ++i) {
    if (is_positive[i]) continue;
    dist.candidate_indices.push_back(i);
    scores.push_back(1.0 - mean_distance[i] / static_cast<double>(m));
  }
  if (dist.candidate_indices.empty())
    throw std::runtime_error("sampling_distribution: empty candidate pool");

  // Softmax with max-subtraction.
  const double peak = *std::max_element(scores.begin(), scores.end());
  double z = 0.0;
  for (double& s : scores) {
    s = std::exp(s - peak);
    z += s;
  }
  dist.probabilities.resize(scores.size());
  for (std::size_t c = 0; c < scores.size(); ++c)
    dist.probabilities[c] = scores[c] / z;
  return dist;
}

std::vector<std::size_t> sample_negatives(const SamplingDistribution& dist,
                                          std::size_t count,
                                          std::uint64_t seed) {
  const std::size_t pool = dist.candidate_indices.size();
  if (pool == 0)
    throw std::runtime_error("sample_negatives: empty distribution");
  if (count >= pool) {
    std::vector<std::size_t> all = dist.candidate_indices;
    std::sort(all.begin(), all.end());
    return all;
  }

  // Sequential weighted draws without replacement: spent candidates get
  // weight zero and the remaining mass renormalizes implicitly.
  std::vector<double> weight = dist.probabilities;
  double remaining = 0.0;
  for (double w : weight) remaining += w;
  Rng rng(seed);
  std::vector<std::size_t> picked;
  picked.reserve(count);
  for (std::size_t draw = 0; draw < count; ++draw) {
    const double u = rng.uniform() * remaining;
    double acc = 0.0;
    std::size_t chosen = pool;
    for (std::size_t c = 0; c < pool; ++c) {
      if (weight[c] <= 0.0) continue;
      acc += weight[c];
      if (u < acc) {
        chosen = c;
        break;
      }
    }
    if (chosen == pool) {
      // Rounding pushed u past the final partial sum; take the last
      // live candidate.
      for (std::size_t c = pool; c-- > 0;) {
        if (weight[c] > 0.0) {
          chosen = c;
          break;
        }
      }
    }
    picked.push_back(dist.candidate_indices[chosen]);
    remaining -= weight[chosen];
    weight[chosen] = 0.0;
  }
  std::sort(picked.begin(), picked.end());
  return picked;
}

}  // namespace gdof
