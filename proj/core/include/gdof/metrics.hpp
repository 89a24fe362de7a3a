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

#ifndef GDOF_METRICS_HPP_
#define GDOF_METRICS_HPP_

#include <cstdint>
#include <vector>

namespace gdof {

// Mann-Whitney AUC: probability that a random positive outscores a
// random negative, ties counted 1/2. Throws if only one class present.
double auc(const std::vector<double>& scores,
           const std::vector<std::uint8_t>& labels);

// Average precision over the descending-score sweep; score ties break
// by ascending original index.
double average_precision(const std::vector<double>& scores,
                         const std::vector<std::uint8_t>& labels);

}  // namespace gdof

#endif  // GDOF_METRICS_HPP_
