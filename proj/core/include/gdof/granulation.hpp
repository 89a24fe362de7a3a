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

#ifndef GDOF_GRANULATION_HPP_
#define GDOF_GRANULATION_HPP_

#include <cstddef>
#include <span>
#include <vector>

#include "gdof/dataset.hpp"

namespace gdof {

// Per-attribute granule radius. Entries for categorical attributes are
// unused and held at 0.
struct RadiusVector {
  std::vector<double> lambda_per_attribute;
};

// One row of a fuzzy similarity relation: the granule centered at
// `center`, with memberships[j] = similarity of object j to the center.
struct GranuleRow {
  std::size_t center = 0;
  std::vector<double> memberships;
};

// Single-attribute fuzzy similarity. Categorical: exact-match
// indicator. Numerical: 1 - |f_i - f_j| inside the radius, 0 outside.
// Reflexive and symmetric.
double relation_value(const Column& attr, std::size_t i, std::size_t j,
                      double lambda);

GranuleRow relation_row(const Column& attr, std::size_t i, double lambda);

// Min-conjunction of relation rows sharing a center.
GranuleRow conjunction_row(std::span<const GranuleRow> rows);

// Sum of memberships, accumulated in ascending index order.
double granule_cardinality(const GranuleRow& row);

// Label-informed radius selection for a numerical attribute: picks the
// grid value maximizing the mean similarity of labeled inliers to all
// objects minus the mean similarity of labeled outliers to all
// objects. Ties break to the smallest radius.
double optimize_radius(const Column& attr,
                       const std::vector<std::size_t>& positives,
                       const std::vector<std::size_t>& negatives,
                       std::span<const double> grid);

// {step, 2*step, ..., 1.0}; step must lie in (0, 1].
std::vector<double> radius_grid(double step);

// Radii for every attribute of a dataset (categorical entries 0).
RadiusVector optimize_radii(const Dataset& dataset,
                            const std::vector<std::size_t>& positives,
                            const std::vector<std::size_t>& negatives,
                            std::span<const double> grid, int threads = 1);

}  // namespace gdof

#endif  // GDOF_GRANULATION_HPP_
