// Copyright 2026 The anticode Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <benchmark/benchmark.h>

#include "anticode/catalog.hpp"
#include "anticode/constructions.hpp"
#include "anticode/swrg.hpp"

using namespace anticode;

static void BM_WeightDistributionBinary(benchmark::State& state) {
  const LinearCode c = complement(dual_bch_code(5), static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(weight_distribution(c));
  state.SetItemsProcessed(state.iterations() * (std::int64_t{1} << c.k()));
}
BENCHMARK(BM_WeightDistributionBinary)->Arg(10)->Arg(12)->Arg(14)->Unit(benchmark::kMillisecond);

static void BM_WeightDistributionStrategy(benchmark::State& state) {
  const LinearCode c = complement(ovoid_code(4), 5);
  const auto strategy = state.range(0) ? Enumeration::kScalarClasses : Enumeration::kFullMessages;
  for (auto _ : state) benchmark::DoNotOptimize(weight_distribution(c, strategy));
}
BENCHMARK(BM_WeightDistributionStrategy)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

static void BM_Complement(benchmark::State& state) {
  const LinearCode base = kasami_code(2);
  const auto K = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(complement(base, K));
}
BENCHMARK(BM_Complement)->DenseRange(6, 12, 2)->Unit(benchmark::kMicrosecond);

static void BM_TransformWd(benchmark::State& state) {
  const WeightDistribution base = weight_distribution(kasami_code(3));
  for (auto _ : state) benchmark::DoNotOptimize(transform_wd(base, 14));
}
BENCHMARK(BM_TransformWd);

static void BM_MinimalityExact(benchmark::State& state) {
  const LinearCode c = complementary_rs(4, 3, static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(is_minimal_exact(c));
}
BENCHMARK(BM_MinimalityExact)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

static void BM_WalkCounts(benchmark::State& state) {
  const CosetGraph g = coset_graph(complement(dual_bch_code(3), 6));
  const auto l = static_cast<unsigned>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(walk_counts(g, l));
}
BENCHMARK(BM_WalkCounts)->Arg(3)->Arg(5)->Arg(7);

static void BM_WalkCountsDense(benchmark::State& state) {
  const CosetGraph g = coset_graph(complement(dual_bch_code(3), 6));
  for (auto _ : state) benchmark::DoNotOptimize(walk_counts(g.graph, 3));
}
BENCHMARK(BM_WalkCountsDense)->Unit(benchmark::kMillisecond);

static void BM_SwrgCertificate(benchmark::State& state) {
  const LinearCode c = complement(dual_bch_code(3), 6);
  for (auto _ : state) benchmark::DoNotOptimize(verify_swrg(c, 3));
}
BENCHMARK(BM_SwrgCertificate)->Unit(benchmark::kMillisecond);

static void BM_CatalogVerify(benchmark::State& state) {
  const CatalogManifest& m = CatalogManifest::bundled();
  const auto threads = static_cast<unsigned>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(verify_catalog(m, Caps::defaults(), threads));
}
BENCHMARK(BM_CatalogVerify)->Arg(1)->Arg(4)->Unit(benchmark::kMillisecond)->UseRealTime();

BENCHMARK_MAIN();
