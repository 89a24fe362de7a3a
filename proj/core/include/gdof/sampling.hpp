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

#ifndef GDOF_SAMPLING_HPP_
#define GDOF_SAMPLING_HPP_

#include <cstddef>
#include <cstdint>
#include <vector>

#include "gdof/dataset.hpp"

namespace gdof {

// Softmax distribution over the unlabeled pool X - X+, favoring
// centrally located objects.
struct SamplingDistribution {
  std::vector<std::size_t> candidate_indices;
  std::vector<double> probabilities;
};

// Mean distance of object i to all objects on attribute k:
// |f_i - f_j| for numerical, 0/1 mismatch for categorical.
double average_distance(const Dataset& dataset, std::size_t i, std::size_t k);

// Batched average_distance for every object on one attribute.
// Numerical columns use a sort + prefix-sum pass (O(n log n)).
std::vector<double> average_distances(const Column& attr);

SamplingDistribution sampling_distribution(
    const Dataset& dataset, const std::vector<std::size_t>& positives);

// Weighted sampling without replacement of min(count, |candidates|)
// indices; sequential seeded draws with renormalization. Returns a
// sorted index set.
std::vector<std::size_t> sample_negatives(const SamplingDistribution& dist,
                                          std::size_t count,
                                          std::uint64_t seed);

}  // namespace gdof

#endif  // GDOF_SAMPLING_HPP_
