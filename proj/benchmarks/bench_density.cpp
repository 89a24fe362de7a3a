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

#include <benchmark/benchmark.h>

#include <random>

#include "gdof/density.hpp"
#include "gdof/scoring.hpp"

namespace {

gdof::Dataset make_dataset(std::size_t n, std::size_t m, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  gdof::Dataset ds;
  ds.n_objects = n;
  for (std::size_t k = 0; k < m; ++k) {
    gdof::Column col;
    col.kind = gdof::AttributeKind::kNumerical;
    col.num.resize(n);
    for (auto& v : col.num) v = unit(rng);
    ds.columns.push_back(std::move(col));
    gdof::AttributeSchema attr;
    attr.name = "a" + std::to_string(k);
    ds.schema.push_back(attr);
  }
  ds.normalized = true;
  return ds;
}

void BM_DensityMatrix(benchmark::State& state) {
  const std::size_t n = static_cast<std::size_t>(state.range(0));
  const std::size_t m = 4;
  const gdof::Dataset ds = make_dataset(n, m, 42);
  gdof::RadiusVector radii;
  radii.lambda_per_attribute.assign(m, 0.15);
  for (auto _ : state) {
    benchmark::DoNotOptimize(gdof::density_matrix(ds, radii, 1));
  }
  state.SetComplexityN(static_cast<std::int64_t>(n));
}
BENCHMARK(BM_DensityMatrix)
    ->RangeMultiplier(2)
    ->Range(256, 4096)
    ->Complexity(benchmark::oNSquared);

void BM_Detect(benchmark::State& state) {
  const std::size_t n = static_cast<std::size_t>(state.range(0));
  const gdof::Dataset ds = make_dataset(n, 4, 7);
  gdof::DetectConfig config;
  config.n_negatives = 50;
  config.grid_step = 0.05;
  config.threads = 0;
  const std::vector<std::size_t> positives = {0, 1, 2};
  for (auto _ : state) {
    benchmark::DoNotOptimize(gdof::detect(ds, positives, config));
  }
}
BENCHMARK(BM_Detect)->Arg(512)->Arg(2048);

}  // namespace

BENCHMARK_MAIN();
