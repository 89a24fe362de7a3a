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

#include "gdof/granulation.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "gdof/parallel.hpp"

namespace gdof {

double relation_value(const Column& attr, std::size_t i, std::size_t j,
                      double lambda) {
  const std::size_t n = attr.size();
  if (i >= n || j >= n)
    throw std::out_of_range("relation_value: object index out of range");
  if (lambda < 0.0 || lambda > 1.0)
    throw std::invalid_argument("relation_value: lambda outside [0,1]");
  if (attr.kind == AttributeKind::kCategorical)
    return attr.codes[i] == attr.codes[j] ? 1.0 : 0.0;
  const double d = std::fabs(attr.num[i] - attr.num[j]);
  return d <= lambda ? 1.0 - d : 0.0;
}

GranuleRow relation_row(const Column& attr, std::size_t i, double lambda) {
  const std::size_t n = attr.size();
  GranuleRow row;
  row.center = i;
  row.memberships.resize(n);
  for (std::size_t j = 0; j < n; ++j)
    row.memberships[j] = relation_value(attr, i, j, lambda);
  return row;
}

GranuleRow conjunction_row(std::span<const GranuleRow> rows) {
  if (rows.empty())
    throw std::invalid_argument("conjunction_row: no rows");
  GranuleRow out = rows.front();
  for (std::size_t r = 1; r < rows.size(); ++r) {
    const GranuleRow& row = rows[r];
    if (row.center != out.center ||
        row.memberships.size() != out.memberships.size())
      throw std::invalid_argument("conjunction_row: mismatched rows");
    for (std::size_t j = 0; j < out.memberships.size(); ++j)
      out.memberships[j] = std::min(out.memberships[j], row.memberships[j]);
  }
  return out;
}

double granule_cardinality(const GranuleRow& row) {
  double sum = 0.0;
  for (double v : row.memberships) sum += v;
  return sum;
}

std::vector<double> radius_grid(double step) {
  if (!(step > 0.0) || step > 1.0)
    throw std::invalid_argument("radius grid step must lie in (0,1]");
  std::vector<double> grid;
  for (std::size_t g = 1;; ++g) {
    const double lambda = static_cast<double>(g) * step;
    if (lambda >= 1.0) break;
    grid.push_back(lambda);
  }
  grid.push_back(1.0);
  return grid;
}

namespace {

// Accumulates, for every grid radius at once, the total similarity of
// each labeled object to all of X. A pair at distance d contributes
// 1 - d to every radius >= d, so it is bucketed at the first grid
// value >= d and prefix-summed across the grid.
std::vector<double> similarity_totals(const Column& attr,
                                      const std::vector<std::size_t>& labeled,
                                      std::span<const double> grid) {
  const std::size_t n = attr.size();
  std::vector<double> buckets(grid.size(), 0.0);
  for (std::size_t i : labeled) {
    const double fi = attr.num[i];
    for (std::size_t j = 0; j < n; ++j) {
      const double d = std::fabs(fi - attr.num[j]);
      const auto it = std::lower_bound(grid.begin(), grid.end(), d);
      if (it != grid.end())
        buckets[static_cast<std::size_t>(it - grid.begin())] += 1.0 - d;
    }
  }
  for (std::size_t g = 1; g < buckets.size(); ++g)
    buckets[g] += buckets[g - 1];
  return buckets;
}

// Direct evaluation of the radius objective at one grid value, summing
// in the defining order. Used to settle near-ties: cross pairs between
// the two label sets cancel exactly when the sets have equal size, so
// mathematically tied plateaus are common and the bucketed totals round
// them differently.
double direct_objective(const Column& attr,
                        const std::vector<std::size_t>& positives,
                        const std::vector<std::size_t>& negatives,
                        double lambda) {
  const std::size_t n = attr.size();
  double neg_sum = 0.0;
  for (std::size_t i : negatives) {
    const double fi = attr.num[i];
    for (std::size_t j = 0; j < n; ++j) {
      const double d = std::fabs(fi - attr.num[j]);
      neg_sum += d <= lambda ? 1.0 - d : 0.0;
    }
  }
  double pos_sum = 0.0;
  for (std::size_t i : positives) {
    const double fi = attr.num[i];
    for (std::size_t j = 0; j < n; ++j) {
      const double d = std::fabs(fi - attr.num[j]);
      pos_sum += d <= lambda ? 1.0 - d : 0.0;
    }
  }
  const double dn = static_cast<double>(n);
  return neg_sum / (static_cast<double>(negatives.size()) * dn) -
         pos_sum / (static_cast<double>(positives.size()) * dn);
}

}  // namespace

double optimize_radius(const Column& attr,
                       const std::vector<std::size_t>& positives,
                       const std::vector<std::size_t>& negatives,
                       std::span<const double> grid) {
  if (attr.kind != AttributeKind::kNumerical)
    throw std::invalid_argument("optimize_radius: attribute not numerical");
  if (positives.empty() || negatives.empty())
    throw std::invalid_argument("optimize_radius: empty label set");
  if (grid.empty()) throw std::invalid_argument("optimize_radius: empty grid");
  if (!std::is_sorted(grid.begin(), grid.end()) || grid.front() < 0.0 ||
      grid.back() > 1.0)
    throw std::invalid_argument(
        "optimize_radius: grid must be ascending within [0,1]");

  const double n = static_cast<double>(attr.size());
  const std::vector<double> neg_tot = similarity_totals(attr, negatives, grid);
  const std::vector<double> pos_tot = similarity_totals(attr, positives, grid);

  std::vector<double> objective(grid.size());
  double max_objective = -std::numeric_limits<double>::infinity();
  for (std::size_t g = 0; g < grid.size(); ++g) {
    objective[g] = neg_tot[g] / (static_cast<double>(negatives.size()) * n) -
                   pos_tot[g] / (static_cast<double>(positives.size()) * n);
    max_objective = std::max(max_objective, objective[g]);
  }

  // The bucketed totals are accurate to rounding only, so grid values
  // near the maximum are re-evaluated directly; ties break to the
  // smallest radius.
  const double tol = 1e-9 * std::max(1.0, std::fabs(max_objective));
  std::size_t best = 0;
  double best_objective = -std::numeric_limits<double>::infinity();
  for (std::size_t g = 0; g < grid.size(); ++g) {
    if (objective[g] < max_objective - tol) continue;
    const double exact = direct_objective(attr, positives, negatives, grid[g]);
    if (exact > best_objective) {
      best_objective = exact;
      best = g;
    }
  }
  return grid[best];
}

RadiusVector optimize_radii(const Dataset& dataset,
                            const std::vector<std::size_t>& positives,
                            const std::vector<std::size_t>& negatives,
                            std::span<const double> grid, int threads) {
  RadiusVector radii;
  radii.lambda_per_attribute.assign(dataset.n_attributes(), 0.0);
  parallel_for(dataset.n_attributes(), threads, [&](std::size_t k) {
    const Column& col = dataset.columns[k];
    if (col.kind == AttributeKind::kNumerical)
      radii.lambda_per_attribute[k] =
          optimize_radius(col, positives, negatives, grid);
  });
  return radii;
}

}  // namespace gdof
