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

#include <doctest.h>

#include <random>
#include <vector>

#include "gdof/granulation.hpp"
#include "support/reference.hpp"
#include "support/testdata.hpp"

using namespace gdof;
using testdata::categorical_column;
using testdata::numeric_column;

TEST_CASE("relation_value: numerical branch") {
  const Column col = numeric_column({0.2, 0.5, 0.9});
  CHECK(relation_value(col, 0, 1, 0.4) == doctest::Approx(0.7).epsilon(1e-12));
  CHECK(relation_value(col, 0, 2, 0.4) == 0.0);  // distance 0.7 > radius
}

TEST_CASE("relation_value: categorical branch") {
  const Column col = categorical_column({2, 2, 3});
  CHECK(relation_value(col, 0, 1, 0.0) == 1.0);
  CHECK(relation_value(col, 0, 2, 0.0) == 0.0);
}

TEST_CASE("relation_value error paths") {
  const Column col = numeric_column({0.1, 0.2});
  CHECK_THROWS(relation_value(col, 0, 5, 0.5));
  CHECK_THROWS(relation_value(col, 0, 1, -0.1));
  CHECK_THROWS(relation_value(col, 0, 1, 1.5));
}

TEST_CASE("relation_row matches per-pair evaluation") {
  const Column col = numeric_column({0.0, 0.1, 0.9});
  const GranuleRow r0 = relation_row(col, 0, 0.2);
  CHECK(r0.memberships[0] == 1.0);
  CHECK(r0.memberships[1] == doctest::Approx(0.9).epsilon(1e-12));
  CHECK(r0.memberships[2] == 0.0);

  const GranuleRow r2 = relation_row(col, 2, 0.2);
  CHECK(r2.memberships == std::vector<double>{0.0, 0.0, 1.0});

  const Column single = numeric_column({0.42});
  CHECK(relation_row(single, 0, 0.0).memberships == std::vector<double>{1.0});
}

TEST_CASE("conjunction_row is the elementwise min") {
  GranuleRow a{0, {1.0, 0.9, 0.0}};
  GranuleRow b{0, {1.0, 0.5, 0.3}};
  std::vector<GranuleRow> rows{a, b};
  const GranuleRow c = conjunction_row(rows);
  CHECK(c.memberships == std::vector<double>{1.0, 0.5, 0.0});

  std::vector<GranuleRow> one{a};
  CHECK(conjunction_row(one).memberships == a.memberships);

  GranuleRow other_center{1, {1.0, 1.0, 1.0}};
  std::vector<GranuleRow> bad{a, other_center};
  CHECK_THROWS(conjunction_row(bad));
}

TEST_CASE("granule_cardinality") {
  CHECK(granule_cardinality({0, {1.0, 0.9, 0.0}}) ==
        doctest::Approx(1.9).epsilon(1e-12));
  CHECK(granule_cardinality({0, {1.0, 1.0, 1.0, 1.0}}) == 4.0);
  CHECK(granule_cardinality({0, {1.0, 0.0, 0.0}}) == 1.0);
}

TEST_CASE("relation properties: reflexivity, symmetry, radius monotonicity") {
  std::mt19937_64 rng(17);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  for (int rep = 0; rep < 50; ++rep) {
    const std::size_t n = 2 + rng() % 10;
    Dataset ds = testdata::random_dataset(rng, n, 1);
    const Column& col = ds.columns[0];
    const double l1 = unit(rng);
    const double l2 = l1 + (1.0 - l1) * unit(rng);
    for (std::size_t i = 0; i < n; ++i) {
      CHECK(relation_value(col, i, i, l1) == 1.0);
      for (std::size_t j = 0; j < n; ++j) {
        CHECK(relation_value(col, i, j, l1) == relation_value(col, j, i, l1));
        CHECK(relation_value(col, i, j, l1) <= relation_value(col, i, j, l2));
        CHECK(relation_value(col, i, j, l1) >= 0.0);
        CHECK(relation_value(col, i, j, l1) <= 1.0);
      }
    }
  }
}

TEST_CASE("conjunction over more attributes is pointwise smaller") {
  std::mt19937_64 rng(23);
  for (int rep = 0; rep < 100; ++rep) {
    const std::size_t n = 2 + rng() % 8;
    const std::size_t m = 2 + rng() % 4;
    Dataset ds = testdata::random_dataset(rng, n, m);
    const double lambda = 0.5;
    // C = a random strict prefix of the attribute list, B = all of it.
    const std::size_t c_size = 1 + rng() % (m - 1);
    for (std::size_t i = 0; i < n; ++i) {
      std::vector<GranuleRow> rows;
      for (std::size_t k = 0; k < m; ++k)
        rows.push_back(relation_row(ds.columns[k], i, lambda));
      const GranuleRow full = conjunction_row(rows);
      const GranuleRow sub =
          conjunction_row(std::span(rows.data(), c_size));
      for (std::size_t j = 0; j < n; ++j)
        CHECK(full.memberships[j] <= sub.memberships[j]);
    }
  }
}

TEST_CASE("granule cardinality stays within [1, n]") {
  std::mt19937_64 rng(29);
  for (int rep = 0; rep < 50; ++rep) {
    const std::size_t n = 1 + rng() % 12;
    Dataset ds = testdata::random_dataset(rng, n, 1);
    const double lambda = static_cast<double>(rng() % 101) / 100.0;
    for (std::size_t i = 0; i < n; ++i) {
      const double card =
          granule_cardinality(relation_row(ds.columns[0], i, lambda));
      CHECK(card >= 1.0);
      CHECK(card <= static_cast<double>(n) + 1e-12);
    }
  }
}

TEST_CASE("optimize_radius picks the brute-force argmax, ties to smallest") {
  const Column col = numeric_column({0.0, 0.05, 0.1, 0.9});
  const std::vector<std::size_t> neg{0, 1, 2};
  const std::vector<std::size_t> pos{3};
  const std::vector<double> grid{0.1, 0.5, 1.0};

  // Independent evaluation of the objective at each grid point.
  const double expected = reference::optimize_radius(col, pos, neg, grid);
  CHECK(expected == 0.1);
  CHECK(optimize_radius(col, pos, neg, grid) == expected);
}

TEST_CASE("optimize_radius: identical objects give the smallest grid value") {
  const Column col = numeric_column({0.3, 0.3, 0.3, 0.3});
  CHECK(optimize_radius(col, {3}, {0, 1}, std::vector<double>{0.2, 0.7}) ==
        0.2);
}

TEST_CASE("optimize_radius: singleton grid returns that element") {
  const Column col = numeric_column({0.1, 0.9});
  CHECK(optimize_radius(col, {1}, {0}, std::vector<double>{0.55}) == 0.55);
}

TEST_CASE("optimize_radius error paths") {
  const Column col = numeric_column({0.1, 0.9});
  CHECK_THROWS(optimize_radius(col, {}, {0}, std::vector<double>{0.5}));
  CHECK_THROWS(optimize_radius(col, {1}, {}, std::vector<double>{0.5}));
  CHECK_THROWS(optimize_radius(col, {1}, {0}, std::vector<double>{}));
  const Column cat = categorical_column({0, 1});
  CHECK_THROWS(optimize_radius(cat, {1}, {0}, std::vector<double>{0.5}));
}

TEST_CASE("optimize_radius agrees with the brute-force objective on random "
          "instances") {
  std::mt19937_64 rng(31);
  for (int rep = 0; rep < 40; ++rep) {
    const std::size_t n = 4 + rng() % 12;
    Dataset ds = testdata::random_dataset(rng, n, 1, false);
    const Column& col = ds.columns[0];
    std::vector<std::size_t> pos{rng() % n};
    std::vector<std::size_t> neg;
    for (std::size_t i = 0; i < n; ++i)
      if (i != pos[0]) neg.push_back(i);
    const std::vector<double> grid = radius_grid(0.1);
    CHECK(optimize_radius(col, pos, neg, grid) ==
          reference::optimize_radius(col, pos, neg, grid));
  }
}

TEST_CASE("radius_grid covers (0, 1] and ends at 1") {
  const auto grid = radius_grid(0.01);
  CHECK(grid.size() == 100);
  CHECK(grid.front() == 0.01);
  CHECK(grid.back() == 1.0);
  CHECK_THROWS(radius_grid(0.0));
  CHECK_THROWS(radius_grid(1.5));
}
