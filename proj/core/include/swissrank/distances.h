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

// Distances between strict rankings of a common object set.
//
// The weighted distance is the cheapest way to turn one ranking into the
// other by swapping neighbours, where a swap of positions k and k+1 costs
// w_k. For non-increasing weights the cheapest path is the winners'
// decomposition: bring the target's first object to the top, then its
// second object to position two, and so on.

#ifndef SWISSRANK_DISTANCES_H_
#define SWISSRANK_DISTANCES_H_

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <Eigen/Dense>

#include "swissrank/ranking.h"

namespace swissrank {

// w_1..w_{n-1}; w_k is the cost of swapping positions k and k+1.
class WeightVector {
 public:
  // Throws kNonMonotoneWeights unless the weights are positive, finite and
  // non-increasing.
  explicit WeightVector(std::vector<double> weights);

  // w_k = 1/k.
  static WeightVector harmonic(std::size_t objects);
  static WeightVector uniform(std::size_t objects);

  const std::vector<double>& values() const { return weights_; }
  std::size_t size() const { return weights_.size(); }

 private:
  std::vector<double> weights_;
};

std::int64_t kemeny_distance(const Ranking& a, const Ranking& b);

double weighted_distance(const Ranking& a, const Ranking& b,
                         const WeightVector& weights);

// Uniform-cost search over all permutations; only for n <= 7.
double brute_force_weighted(const Ranking& a, const Ranking& b,
                            const WeightVector& weights);

inline constexpr std::size_t kBruteForceMaxObjects = 7;

enum class MetricKind { kKemeny, kWeighted };

struct DistanceMetric {
  MetricKind kind = MetricKind::kKemeny;
  // Weighted metric only; harmonic weights of the right length when unset.
  std::optional<std::vector<double>> weights;

  static DistanceMetric kemeny() { return {}; }
  static DistanceMetric harmonic() { return {MetricKind::kWeighted, {}}; }
};

double distance(const DistanceMetric& metric, const Ranking& a,
                const Ranking& b);

using NamedRanking = std::pair<std::string, Ranking>;

// Pairwise distances; zero diagonal, symmetric. Needs at least two
// rankings.
Eigen::MatrixXd distance_matrix(const std::vector<NamedRanking>& rankings,
                                const DistanceMetric& metric);

}  // namespace swissrank

#endif  // SWISSRANK_DISTANCES_H_
