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

#include "gdof/dataset.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <limits>
#include <sstream>
#include <stdexcept>
#include <unordered_map>

#include "gdof/rng.hpp"

namespace gdof {
namespace {

constexpr std::int32_t kMissingCode = -1;

std::string trim(const std::string& s) {
  std::size_t b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return "";
  std::size_t e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

bool is_missing_cell(const std::string& cell) {
  return cell.empty() || cell == "?";
}

bool parse_real(const std::string& cell, double& out) {
  const char* begin = cell.c_str();
  char* end = nullptr;
  out = std::strtod(begin, &end);
  return end == begin + cell.size() && cell.size() > 0 && std::isfinite(out);
}

// Splits one CSV record; double quotes guard embedded commas.
std::vector<std::string> split_csv_line(const std::string& line) {
  std::vector<std::string> cells;
  std::string cur;
  bool quoted = false;
  for (std::size_t p = 0; p < line.size(); ++p) {
    const char c = line[p];
    if (quoted) {
      if (c == '"') {
        if (p + 1 < line.size() && line[p + 1] == '"') {
          cur.push_back('"');
          ++p;
        } else {
          quoted = false;
        }
      } else {
        cur.push_back(c);
      }
    } else if (c == '"') {
      quoted = true;
    } else if (c == ',') {
      cells.push_back(trim(cur));
      cur.clear();
    } else {
      cur.push_back(c);
    }
  }
  cells.push_back(trim(cur));
  return cells;
}

}  // namespace

std::size_t Dataset::count_outliers() const {
  if (!ground_truth) return 0;
  std::size_t c = 0;
  for (auto v : *ground_truth) c += v != 0;
  return c;
}

std::vector<SchemaHint> load_schema_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open schema file: " + path);
  std::vector<SchemaHint> hints;
  std::string line;
  while (std::getline(in, line)) {
    line = trim(line);
    if (line.empty() || line[0] == '#') continue;
    const auto comma = line.find(',');
    if (comma == std::string::npos)
      throw std::runtime_error("malformed schema line: " + line);
    SchemaHint hint;
    hint.name = trim(line.substr(0, comma));
    const std::string kind = trim(line.substr(comma + 1));
    if (kind == "numerical") {
      hint.kind = AttributeKind::kNumerical;
    } else if (kind == "categorical") {
      hint.kind = AttributeKind::kCategorical;
    } else {
      throw std::runtime_error("unknown attribute kind: " + kind);
    }
    hints.push_back(std::move(hint));
  }
  return hints;
}

Dataset load_csv(const std::string& path,
                 const std::vector<SchemaHint>& hints) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open file: " + path);

  std::string line;
  if (!std::getline(in, line))
    throw std::runtime_error("empty file: " + path);
  const std::vector<std::string> header = split_csv_line(line);
  const std::size_t m = header.size();

  std::vector<std::vector<std::string>> cells(m);
  while (std::getline(in, line)) {
    if (trim(line).empty()) continue;
    std::vector<std::string> row = split_csv_line(line);
    if (row.size() != m) {
      std::ostringstream msg;
      msg << "ragged row in " << path << ": expected " << m << " cells, got "
          << row.size();
      throw std::runtime_error(msg.str());
    }
    for (std::size_t k = 0; k < m; ++k) cells[k].push_back(std::move(row[k]));
  }
  const std::size_t n = cells.empty() ? 0 : cells[0].size();
  if (n < 1) throw std::runtime_error("no data rows in " + path);

  // Resolve column kinds: explicit hints by name, otherwise inference.
  std::unordered_map<std::string, AttributeKind> hinted;
  if (!hints.empty()) {
    if (hints.size() != m)
      throw std::runtime_error("schema/header column count mismatch");
    for (const auto& h : hints) hinted[h.name] = h.kind;
    for (const auto& name : header)
      if (!hinted.count(name))
        throw std::runtime_error("schema has no entry for column: " + name);
  }

  Dataset ds;
  ds.n_objects = n;
  ds.schema.reserve(m);
  ds.columns.reserve(m);
  for (std::size_t k = 0; k < m; ++k) {
    AttributeKind kind;
    std::size_t n_present = 0;
    bool all_numeric = true;
    double parsed;
    for (const auto& cell : cells[k]) {
      if (is_missing_cell(cell)) continue;
      ++n_present;
      if (all_numeric && !parse_real(cell, parsed)) all_numeric = false;
    }
    if (n_present == 0)
      throw std::runtime_error("empty column: " + header[k]);
    if (!hints.empty()) {
      kind = hinted.at(header[k]);
    } else {
      kind = all_numeric ? AttributeKind::kNumerical
                         : AttributeKind::kCategorical;
    }

    Column col;
    col.kind = kind;
    if (kind == AttributeKind::kNumerical) {
      col.num.reserve(n);
      for (const auto& cell : cells[k]) {
        if (is_missing_cell(cell)) {
          col.num.push_back(std::numeric_limits<double>::quiet_NaN());
        } else if (parse_real(cell, parsed)) {
          col.num.push_back(parsed);
        } else {
          throw std::runtime_error("non-numeric cell '" + cell +
                                   "' in numerical column " + header[k]);
        }
      }
    } else {
      col.codes.reserve(n);
      std::unordered_map<std::string, std::int32_t> code_of;
      for (const auto& cell : cells[k]) {
        if (is_missing_cell(cell)) {
          col.codes.push_back(kMissingCode);
          continue;
        }
        auto it = code_of.find(cell);
        if (it == code_of.end()) {
          const auto code = static_cast<std::int32_t>(col.categories.size());
          code_of.emplace(cell, code);
          col.categories.push_back(cell);
          col.codes.push_back(code);
        } else {
          col.codes.push_back(it->second);
        }
      }
    }
    AttributeSchema attr;
    attr.name = header[k];
    attr.kind = kind;
    for (std::size_t k2 = 0; k2 < ds.schema.size(); ++k2)
      if (ds.schema[k2].name == attr.name)
        throw std::runtime_error("duplicate column name: " + attr.name);
    ds.schema.push_back(std::move(attr));
    ds.columns.push_back(std::move(col));
  }
  return ds;
}

void use_label_column(Dataset& dataset, const std::string& name) {
  std::size_t k = dataset.schema.size();
  for (std::size_t i = 0; i < dataset.schema.size(); ++i)
    if (dataset.schema[i].name == name) k = i;
  if (k == dataset.schema.size())
    throw std::runtime_error("label column not found: " + name);

  const Column& col = dataset.columns[k];
  std::vector<std::uint8_t> labels(dataset.n_objects);
  for (std::size_t i = 0; i < dataset.n_objects; ++i) {
    int v = -1;
    if (col.kind == AttributeKind::kNumerical) {
      if (col.num[i] == 0.0) v = 0;
      if (col.num[i] == 1.0) v = 1;
    } else {
      if (col.codes[i] >= 0) {
        const std::string& cat = col.categories[col.codes[i]];
        if (cat == "0") v = 0;
        if (cat == "1") v = 1;
      }
    }
    if (v < 0)
      throw std::runtime_error("label column must contain only 0/1 values");
    labels[i] = static_cast<std::uint8_t>(v);
  }
  dataset.ground_truth = std::move(labels);
  dataset.columns.erase(dataset.columns.begin() + k);
  dataset.schema.erase(dataset.schema.begin() + k);
}

Dataset impute_missing(const Dataset& dataset) {
  Dataset out = dataset;
  for (std::size_t k = 0; k < out.columns.size(); ++k) {
    Column& col = out.columns[k];
    if (col.kind == AttributeKind::kNumerical) {
      std::vector<double> present;
      present.reserve(col.num.size());
      for (double v : col.num)
        if (!std::isnan(v)) present.push_back(v);
      if (present.empty())
        throw std::runtime_error("column entirely missing: " +
                                 out.schema[k].name);
      if (present.size() == col.num.size()) continue;
      // Lower median for even counts.
      std::sort(present.begin(), present.end());
      const double median = present[(present.size() - 1) / 2];
      for (double& v : col.num)
        if (std::isnan(v)) v = median;
    } else {
      bool any_missing = false;
      for (auto c : col.codes) any_missing |= c == kMissingCode;
      if (!any_missing) continue;
      if (col.categories.empty())
        throw std::runtime_error("column entirely missing: " +
                                 out.schema[k].name);
      const auto missing_code =
          static_cast<std::int32_t>(col.categories.size());
      col.categories.push_back("?");
      for (auto& c : col.codes)
        if (c == kMissingCode) c = missing_code;
    }
  }
  return out;
}

Dataset normalize(const Dataset& dataset) {
  Dataset out = dataset;
  for (std::size_t k = 0; k < out.columns.size(); ++k) {
    Column& col = out.columns[k];
    if (col.kind != AttributeKind::kNumerical) continue;
    double lo = std::numeric_limits<double>::infinity();
    double hi = -std::numeric_limits<double>::infinity();
    for (double v : col.num) {
      if (!std::isfinite(v))
        throw std::runtime_error("non-finite value in column " +
                                 out.schema[k].name);
      lo = std::min(lo, v);
      hi = std::max(hi, v);
    }
    out.schema[k].original_min = lo;
    out.schema[k].original_max = hi;
    if (lo == hi) {
      std::fill(col.num.begin(), col.num.end(), 0.0);
    } else {
      const double range = hi - lo;
      for (double& v : col.num) v = (v - lo) / range;
    }
  }
  out.normalized = true;
  return out;
}

LabelState draw_labeled_outliers(const Dataset& dataset, std::size_t count,
                                 std::uint64_t seed) {
  if (!dataset.ground_truth)
    throw std::runtime_error("draw_labeled_outliers: no ground truth");
  std::vector<std::size_t> outliers;
  for (std::size_t i = 0; i < dataset.n_objects; ++i)
    if ((*dataset.ground_truth)[i]) outliers.push_back(i);
  if (count > outliers.size()) {
    std::ostringstream msg;
    msg << "requested " << count << " labeled outliers but dataset has only "
        << outliers.size();
    throw std::runtime_error(msg.str());
  }
  // Partial Fisher-Yates over the true-outlier index list.
  Rng rng(seed);
  for (std::size_t i = 0; i < count; ++i) {
    const std::size_t j =
        i + static_cast<std::size_t>(rng.uniform_index(outliers.size() - i));
    std::swap(outliers[i], outliers[j]);
  }
  LabelState state;
  state.rng_seed = seed;
  state.positives.assign(outliers.begin(), outliers.begin() + count);
  std::sort(state.positives.begin(), state.positives.end());
  return state;
}

}  // namespace gdof
