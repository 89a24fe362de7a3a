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

#ifndef GDOF_DENSITY_HPP_
#define GDOF_DENSITY_HPP_

#include <cstddef>
#include <vector>

#include "gdof/dataset.hpp"
#include "gdof/granulation.hpp"

namespace gdof {

// Granule cardinalities |[x_i]| for one attribute; entries in [1, n].
using CardinalityVector = std::vector<double>;

// n x m granule densities, row-major per object.
struct DensityMatrix {
  std::size_t n = 0;
  std::size_t m = 0;
  std::vector<double> values;
  RadiusVector radii;

  double at(std::size_t i, std::size_t k) const { return values[i * m + k]; }
  double& at(std::size_t i, std::size_t k) { return values[i * m + k]; }
};

// Pass 1: card[i] = sum_j relation(i, j), ascending j.
CardinalityVector cardinalities(const Column& attr, double lambda);

// Pass 2 helpers. N_i is the strictly-positive-membership neighborhood
// of i (always contains i); the relation row is regenerated on the fly.
double local_granule_density(const Column& attr, double lambda,
                             const CardinalityVector& card, std::size_t i);

double granule_density(const Column& attr, double lambda,
                       const CardinalityVector& card, std::size_t i);

// Two-pass streaming computation of per-attribute granule densities for
// every object; memory O(n) per attribute, never an n x n matrix.
// For numerical columns a sorted-window variant is used when the radius
// is small; it is bit-identical to the streaming path.
DensityMatrix density_matrix(const Dataset& dataset, const RadiusVector& radii,
                             int threads = 1);

namespace detail {
// Both paths exposed for the bit-identity test.
void density_column_streaming(const Column& attr, double lambda,
                              std::size_t k, int threads, DensityMatrix& out);
void density_column_window(const Column& attr, double lambda, std::size_t k,
                           int threads, DensityMatrix& out);
}  // namespace detail

}  // namespace gdof

#endif  // GDOF_DENSITY_HPP_
