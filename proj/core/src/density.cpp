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

#include "gdof/density.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <stdexcept>

#include "gdof/parallel.hpp"

namespace gdof {
namespace {

double gd_from_pass2(double card_i, double neighbor_sum,
                     std::size_t neighbor_count, std::size_t n) {
  // Formula order is fixed so that all computation paths agree bitwise.
  const double mean = neighbor_sum / static_cast<double>(neighbor_count);
  const double lgd = card_i / mean;
  return card_i / static_cast<double>(n) * lgd;
}

}  // namespace

CardinalityVector cardinalities(const Column& attr, double lambda) {
  const std::size_t n = attr.size();
  CardinalityVector card(n);
  for (std::size_t i = 0; i < n; ++i) {
    double sum = 0.0;
    for (std::size_t j = 0; j < n; ++j)
      sum += relation_value(attr, i, j, lambda);
    card[i] = sum;
  }
  return card;
}

double local_granule_density(const Column& attr, double lambda,
                             const CardinalityVector& card, std::size_t i) {
  const std::size_t n = attr.size();
  double neighbor_sum = 0.0;
  std::size_t neighbor_count = 0;
  for (std::size_t j = 0; j < n; ++j) {
    if (relation_value(attr, i, j, lambda) > 0.0) {
      neighbor_sum += card[j];
      ++neighbor_count;
    }
  }
  return card[i] / (neighbor_sum / static_cast<double>(neighbor_count));
}

double granule_density(const Column& attr, double lambda,
                       const CardinalityVector& card, std::size_t i) {
  const std::size_t n = attr.size();
  double neighbor_sum = 0.0;
  std::size_t neighbor_count = 0;
  for (std::size_t j = 0; j < n; ++j) {
    if (relation_value(attr, i, j, lambda) > 0.0) {
      neighbor_sum += card[j];
      ++neighbor_count;
    }
  }
  return gd_from_pass2(card[i], neighbor_sum, neighbor_count, n);
}

namespace detail {

void density_column_streaming(const Column& attr, double lambda,
                              std::size_t k, int threads,
                              DensityMatrix& out) {
  const std::size_t n = attr.size();
  CardinalityVector card(n);
  if (attr.kind == AttributeKind::kCategorical) {
    // Relation is an exact-match indicator, so cardinality is the
    // category count and every neighbor shares it (LGD = 1).
    std::int32_t max_code = -1;
    for (auto c : attr.codes) max_code = std::max(max_code, c);
    std::vector<double> count(static_cast<std::size_t>(max_code) + 1, 0.0);
    for (auto c : attr.codes) count[static_cast<std::size_t>(c)] += 1.0;
    for (std::size_t i = 0; i < n; ++i) {
      const double ci = count[static_cast<std::size_t>(attr.codes[i])];
      out.at(i, k) = gd_from_pass2(
          ci, ci * ci, static_cast<std::size_t>(ci), n);
    }
    return;
  }
  // Pass 1: cardinalities, ascending index order.
  parallel_for(n, threads, [&](std::size_t i) {
    const double fi = attr.num[i];
    double sum = 0.0;
    for (std::size_t j = 0; j < n; ++j) {
      const double d = std::fabs(fi - attr.num[j]);
      sum += d <= lambda ? 1.0 - d : 0.0;
    }
    card[i] = sum;
  });
  // Pass 2: regenerate each row, mean neighbor cardinality.
  parallel_for(n, threads, [&](std::size_t i) {
    const double fi = attr.num[i];
    double neighbor_sum = 0.0;
    std::size_t neighbor_count = 0;
    for (std::size_t j = 0; j < n; ++j) {
      const double d = std::fabs(fi - attr.num[j]);
      if (d <= lambda && 1.0 - d > 0.0) {
        neighbor_sum += card[j];
        ++neighbor_count;
      }
    }
    out.at(i, k) = gd_from_pass2(card[i], neighbor_sum, neighbor_count, n);
  });
}

void density_column_window(const Column& attr, double lambda, std::size_t k,
                           int threads, DensityMatrix& out) {
  if (attr.kind == AttributeKind::kCategorical) {
    density_column_streaming(attr, lambda, k, threads, out);
    return;
  }
  const std::size_t n = attr.size();
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) {
                     return attr.num[a] < attr.num[b];
                   });
  std::vector<double> sorted_values(n);
  for (std::size_t r = 0; r < n; ++r) sorted_values[r] = attr.num[order[r]];

  // The bounds are widened by a few ulps and each candidate re-checked
  // with the exact predicate, so the window never drops a boundary
  // point that |f_i - f_j| <= lambda would admit.
  auto window = [&](double fi) {
    double lo = fi - lambda;
    double hi = fi + lambda;
    for (int ulp = 0; ulp < 4; ++ulp) {
      lo = std::nextafter(lo, -std::numeric_limits<double>::infinity());
      hi = std::nextafter(hi, std::numeric_limits<double>::infinity());
    }
    const auto begin =
        std::lower_bound(sorted_values.begin(), sorted_values.end(), lo);
    const auto end =
        std::upper_bound(sorted_values.begin(), sorted_values.end(), hi);
    return std::pair<std::size_t, std::size_t>(
        static_cast<std::size_t>(begin - sorted_values.begin()),
        static_cast<std::size_t>(end - sorted_values.begin()));
  };

  CardinalityVector card(n);
  // Candidate original indices are re-sorted ascending before each sum;
  // dropped zero terms leave the nonnegative partial sums bitwise
  // unchanged relative to the full streaming loop.
  parallel_for(n, threads, [&](std::size_t i) {
    const double fi = attr.num[i];
    const auto [wb, we] = window(fi);
    std::vector<std::size_t> members;
    members.reserve(we - wb);
    for (std::size_t r = wb; r < we; ++r) members.push_back(order[r]);
    std::sort(members.begin(), members.end());
    double sum = 0.0;
    for (std::size_t j : members) {
      const double d = std::fabs(fi - attr.num[j]);
      if (d <= lambda) sum += 1.0 - d;
    }
    card[i] = sum;
  });
  parallel_for(n, threads, [&](std::size_t i) {
    const double fi = attr.num[i];
    const auto [wb, we] = window(fi);
    std::vector<std::size_t> members;
    members.reserve(we - wb);
    for (std::size_t r = wb; r < we; ++r) members.push_back(order[r]);
    std::sort(members.begin(), members.end());
    double neighbor_sum = 0.0;
    std::size_t neighbor_count = 0;
    for (std::size_t j : members) {
      const double d = std::fabs(fi - attr.num[j]);
      if (d <= lambda && 1.0 - d > 0.0) {
        neighbor_sum += card[j];
        ++neighbor_count;
      }
    }
    out.at(i, k) = gd_from_pass2(card[i], neighbor_sum, neighbor_count, n);
  });
}

}  // namespace detail

DensityMatrix density_matrix(const Dataset& dataset, const RadiusVector& radii,
                             int threads) {
  const std::size_t n = dataset.n_objects;
  const std::size_t m = dataset.n_attributes();
  if (radii.lambda_per_attribute.size() != m)
    throw std::invalid_argument("density_matrix: radius count mismatch");
  DensityMatrix out;
  out.n = n;
  out.m = m;
  out.radii = radii;
  out.values.resize(n * m);
  for (std::size_t k = 0; k < m; ++k) {
    const Column& col = dataset.columns[k];
    const double lambda = radii.lambda_per_attribute[k];
    // Small radii make narrow windows; wide radii revert to streaming.
    if (col.kind == AttributeKind::kNumerical && lambda <= 0.25 && n > 512) {
      detail::density_column_window(col, lambda, k, threads, out);
    } else {
      detail::density_column_streaming(col, lambda, k, threads, out);
    }
  }
  return out;
}

}  // namespace gdof
