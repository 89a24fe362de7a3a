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

#ifndef GDOF_DATASET_HPP_
#define GDOF_DATASET_HPP_

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace gdof {

enum class AttributeKind { kNumerical, kCategorical };

struct AttributeSchema {
  std::string name;
  AttributeKind kind = AttributeKind::kNumerical;
  // Pre-normalization range; only meaningful for numerical attributes
  // after normalize() has run.
  double original_min = 0.0;
  double original_max = 0.0;
};

// One typed column. Numerical columns use `num` (missing = NaN until
// imputation); categorical columns use `codes` (missing = -1 until
// imputation) with `categories` holding the original cell strings in
// first-appearance order, so codes are dense in [0, categories.size()).
struct Column {
  AttributeKind kind = AttributeKind::kNumerical;
  std::vector<double> num;
  std::vector<std::int32_t> codes;
  std::vector<std::string> categories;

  std::size_t size() const {
    return kind == AttributeKind::kNumerical ? num.size() : codes.size();
  }
};

struct Dataset {
  std::vector<AttributeSchema> schema;
  std::vector<Column> columns;
  std::size_t n_objects = 0;
  // Per object, 1 = outlier, 0 = inlier. Present only when a label
  // column was extracted.
  std::optional<std::vector<std::uint8_t>> ground_truth;
  bool normalized = false;

  std::size_t n_attributes() const { return columns.size(); }
  std::size_t count_outliers() const;
};

// Labeled index sets for the semi-supervised protocol. `positives` are
// known outliers, `negatives` are sampled candidate inliers. Both are
// kept sorted ascending.
struct LabelState {
  std::vector<std::size_t> positives;
  std::vector<std::size_t> negatives;
  std::uint64_t rng_seed = 0;
};

// Optional per-column kind override for load_csv. An empty list means
// "infer": a column is numerical iff every non-missing cell parses as a
// finite real.
struct SchemaHint {
  std::string name;
  AttributeKind kind;
};

Dataset load_csv(const std::string& path,
                 const std::vector<SchemaHint>& hints = {});

// Sidecar schema file, one `name,kind` line per column.
std::vector<SchemaHint> load_schema_file(const std::string& path);

// Moves the named column out of the dataset into ground_truth.
// Accepted label values are 0 (inlier) and 1 (outlier).
void use_label_column(Dataset& dataset, const std::string& name);

// Numerical missing -> column median (lower median on even counts);
// categorical missing -> a dedicated extra category code.
Dataset impute_missing(const Dataset& dataset);

// Min-max normalization of numerical columns into [0,1]; constant
// columns map to all-zeros. Records original_min/original_max in the
// schema. Idempotent.
Dataset normalize(const Dataset& dataset);

// Samples `count` ground-truth outlier indices uniformly without
// replacement. X- is left empty; it is filled later by negative
// sampling. Deterministic for a fixed seed.
LabelState draw_labeled_outliers(const Dataset& dataset, std::size_t count,
                                 std::uint64_t seed);

}  // namespace gdof

#endif  // GDOF_DATASET_HPP_
