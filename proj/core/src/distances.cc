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

#include "swissrank/distances.h"

#include <algorithm>
#include <cmath>
#include <functional>
#include <map>
#include <queue>
#include <sstream>
#include <unordered_map>

#include "swissrank/error.h"

namespace swissrank {
namespace {

// Position in b of the object at each position of a. Validates the
// shared preconditions of every metric.
std::vector<int> relative_permutation(const Ranking& a, const Ranking& b) {
  if (!a.is_strict() || !b.is_strict()) {
    throw Error(ErrorCode::kNotStrict,
                "distances are defined on strict rankings only");
  }
  const std::vector<std::string> first = a.flatten();
  const std::vector<std::string> second = b.flatten();
  if (first.size() != second.size()) {
    throw Error(ErrorCode::kObjectSetMismatch,
                "rankings have different numbers of objects");
  }
  std::map<std::string_view, int> position_in_b;
  for (std::size_t i = 0; i < second.size(); ++i) {
    position_in_b.emplace(second[i], static_cast<int>(i));
  }
  std::vector<int> permutation;
  permutation.reserve(first.size());
  for (const std::string& object : first) {
    const auto it = position_in_b.find(object);
    if (it == position_in_b.end()) {
      throw Error(ErrorCode::kObjectSetMismatch,
                  "object " + object + " missing from the second ranking");
    }
    permutation.push_back(it->second);
  }
  return permutation;
}

void check_weight_length(const WeightVector& weights, std::size_t objects) {
  if (objects > 1 && weights.size() < objects - 1) {
    std::ostringstream os;
    os << "need " << objects - 1 << " weights, got " << weights.size();
    throw Error(ErrorCode::kDimensionMismatch, os.str());
  }
}

}  // namespace

WeightVector::WeightVector(std::vector<double> weights)
    : weights_(std::move(weights)) {
  for (std::size_t k = 0; k < weights_.size(); ++k) {
    if (!(weights_[k] > 0.0) || !std::isfinite(weights_[k])) {
      throw Error(ErrorCode::kNonMonotoneWeights,
                  "weights must be positive and finite");
    }
    if (k > 0 && weights_[k] > weights_[k - 1]) {
      throw Error(ErrorCode::kNonMonotoneWeights,
                  "weights must be non-increasing");
    }
  }
}

WeightVector WeightVector::harmonic(std::size_t objects) {
  std::vector<double> weights;
  for (std::size_t k = 1; k < objects; ++k) weights.push_back(1.0 / k);
  return WeightVector(std::move(weights));
}

WeightVector WeightVector::uniform(std::size_t objects) {
  return WeightVector(
      std::vector<double>(objects > 0 ? objects - 1 : 0, 1.0));
}

std::int64_t kemeny_distance(const Ranking& a, const Ranking& b) {
  const std::vector<int> p = relative_permutation(a, b);
  std::int64_t discordant = 0;
  for (std::size_t i = 0; i < p.size(); ++i) {
    for (std::size_t j = i + 1; j < p.size(); ++j) {
      if (p[i] > p[j]) ++discordant;
    }
  }
  return discordant;
}

double weighted_distance(const Ranking& a, const Ranking& b,
                         const WeightVector& weights) {
  std::vector<int> working = relative_permutation(a, b);
  check_weight_length(weights, working.size());
  const std::vector<double>& w = weights.values();
  double total = 0.0;
  // Object i of b sits at position j >= i of the working copy; moving it up
  // swaps positions j-1..i in turn.
  for (std::size_t i = 0; i < working.size(); ++i) {
    const auto found = std::find(working.begin() + i, working.end(),
                                 static_cast<int>(i));
    const auto j = static_cast<std::size_t>(found - working.begin());
    for (std::size_t k = i; k < j; ++k) total += w[k];
    std::rotate(working.begin() + i, found, found + 1);
  }
  return total;
}

double brute_force_weighted(const Ranking& a, const Ranking& b,
                            const WeightVector& weights) {
  const std::vector<int> start = relative_permutation(a, b);
  const std::size_t n = start.size();
  if (n > kBruteForceMaxObjects) {
    throw Error(ErrorCode::kTooLarge,
                "brute-force weighted distance supports at most 7 objects");
  }
  check_weight_length(weights, n);
  const std::vector<double>& w = weights.values();

  // Permutations of n <= 7 indices packed three bits per position.
  auto encode = [n](const std::vector<int>& perm) {
    std::uint32_t code = 0;
    for (std::size_t i = 0; i < n; ++i) code |= perm[i] << (3 * i);
    return code;
  };
  auto decode = [n](std::uint32_t code) {
    std::vector<int> perm(n);
    for (std::size_t i = 0; i < n; ++i) perm[i] = (code >> (3 * i)) & 7;
    return perm;
  };
  std::vector<int> identity(n);
  for (std::size_t i = 0; i < n; ++i) identity[i] = static_cast<int>(i);
  const std::uint32_t goal = encode(identity);

  using Entry = std::pair<double, std::uint32_t>;
  std::priority_queue<Entry, std::vector<Entry>, std::greater<>> frontier;
  std::unordered_map<std::uint32_t, double> best;
  const std::uint32_t source = encode(start);
  best[source] = 0.0;
  frontier.push({0.0, source});
  while (!frontier.empty()) {
    const auto [cost, code] = frontier.top();
    frontier.pop();
    if (code == goal) return cost;
    if (cost > best[code]) continue;
    std::vector<int> perm = decode(code);
    for (std::size_t k = 0; k + 1 < n; ++k) {
      std::swap(perm[k], perm[k + 1]);
      const std::uint32_t next = encode(perm);
      const double next_cost = cost + w[k];
      const auto it = best.find(next);
      if (it == best.end() || next_cost < it->second) {
        best[next] = next_cost;
        frontier.push({next_cost, next});
      }
      std::swap(perm[k], perm[k + 1]);
    }
  }
  return 0.0;  // unreachable: the permutation graph is connected
}

double distance(const DistanceMetric& metric, const Ranking& a,
                const Ranking& b) {
  if (metric.kind == MetricKind::kKemeny) {
    return static_cast<double>(kemeny_distance(a, b));
  }
  if (metric.weights) {
    return weighted_distance(a, b, WeightVector(*metric.weights));
  }
  return weighted_distance(a, b, WeightVector::harmonic(a.size()));
}

Eigen::MatrixXd distance_matrix(const std::vector<NamedRanking>& rankings,
                                const DistanceMetric& metric) {
  if (rankings.size() < 2) {
    throw Error(ErrorCode::kBadArguments,
                "a distance matrix needs at least two rankings");
  }
  const auto count = static_cast<Eigen::Index>(rankings.size());
  Eigen::MatrixXd d = Eigen::MatrixXd::Zero(count, count);
  for (Eigen::Index i = 0; i < count; ++i) {
    for (Eigen::Index j = i + 1; j < count; ++j) {
      d(i, j) = distance(metric, rankings[i].second, rankings[j].second);
      d(j, i) = d(i, j);
    }
  }
  return d;
}

}  // namespace swissrank
