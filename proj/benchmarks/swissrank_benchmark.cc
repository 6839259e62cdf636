// Copyright 2026 The swissrank Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <benchmark/benchmark.h>

#include "support/generators.h"
#include "swissrank/distances.h"
#include "swissrank/evaluation.h"
#include "swissrank/method.h"
#include "swissrank/scoring.h"

namespace swissrank {
namespace {

// 38 teams over 9 rounds, the size of a large continental team event.
TournamentLog large_log() {
  testing::Rng rng(1);
  return testing::random_swiss_log(rng, 38, 9, 2);
}

void BM_LeastSquares(benchmark::State& state) {
  const RankingProblem p = results_matrix(large_log(), 9, 0.25);
  for (auto _ : state) benchmark::DoNotOptimize(least_squares(p));
}
BENCHMARK(BM_LeastSquares);

void BM_GeneralizedRowSum(benchmark::State& state) {
  const RankingProblem p = results_matrix(large_log(), 9, 0.25);
  for (auto _ : state) {
    benchmark::DoNotOptimize(generalized_row_sum(p, kEpsilonSmall));
  }
}
BENCHMARK(BM_GeneralizedRowSum);

void BM_Decomposition(benchmark::State& state) {
  const RankingProblem p = results_matrix(large_log(), 9, 0.25);
  for (auto _ : state) benchmark::DoNotOptimize(ls_decomposition(p));
}
BENCHMARK(BM_Decomposition);

void BM_DefaultBattery(benchmark::State& state) {
  const TournamentLog log = large_log();
  for (auto _ : state) {
    for (const MethodSpec& spec : default_battery()) {
      benchmark::DoNotOptimize(method_ranking(log, 9, spec));
    }
  }
}
BENCHMARK(BM_DefaultBattery);

void BM_WeightedDistance(benchmark::State& state) {
  const auto n = static_cast<int>(state.range(0));
  testing::Rng rng(2);
  const auto labels = testing::make_labels(n);
  const Ranking a = testing::random_strict_ranking(rng, labels);
  const Ranking b = testing::random_strict_ranking(rng, labels);
  const WeightVector w = WeightVector::harmonic(n);
  for (auto _ : state) benchmark::DoNotOptimize(weighted_distance(a, b, w));
}
BENCHMARK(BM_WeightedDistance)->Arg(7)->Arg(38)->Arg(200);

void BM_BruteForceWeighted(benchmark::State& state) {
  testing::Rng rng(3);
  const auto labels = testing::make_labels(7);
  const Ranking a = testing::random_strict_ranking(rng, labels);
  const Ranking b = testing::random_strict_ranking(rng, labels);
  const WeightVector w = WeightVector::harmonic(7);
  for (auto _ : state) benchmark::DoNotOptimize(brute_force_weighted(a, b, w));
}
BENCHMARK(BM_BruteForceWeighted);

void BM_ClassicalMds(benchmark::State& state) {
  testing::Rng rng(4);
  const auto labels = testing::make_labels(38);
  std::vector<NamedRanking> rankings;
  for (int k = 0; k < 14; ++k) {
    rankings.emplace_back(std::to_string(k),
                          testing::random_strict_ranking(rng, labels));
  }
  const Eigen::MatrixXd d =
      distance_matrix(rankings, DistanceMetric::harmonic());
  for (auto _ : state) benchmark::DoNotOptimize(classical_mds(d));
}
BENCHMARK(BM_ClassicalMds);

}  // namespace
}  // namespace swissrank

BENCHMARK_MAIN();
