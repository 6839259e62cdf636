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

#include "swissrank/ranking.h"

#include <algorithm>
#include <set>

#include "swissrank/error.h"

namespace swissrank {

Ranking::Ranking(std::vector<TieGroup> groups) : groups_(std::move(groups)) {
  std::set<std::string> seen;
  for (const TieGroup& group : groups_) {
    if (group.empty()) {
      throw Error(ErrorCode::kInvalidRanking, "empty tie-group in ranking");
    }
    for (const std::string& object : group) {
      if (!seen.insert(object).second) {
        throw Error(ErrorCode::kInvalidRanking,
                    "object listed twice in ranking: " + object);
      }
    }
  }
}

Ranking Ranking::strict(const std::vector<std::string>& order) {
  std::vector<TieGroup> groups;
  groups.reserve(order.size());
  for (const std::string& object : order) groups.push_back({object});
  return Ranking(std::move(groups));
}

std::size_t Ranking::size() const {
  std::size_t total = 0;
  for (const TieGroup& group : groups_) total += group.size();
  return total;
}

bool Ranking::is_strict() const {
  return std::all_of(groups_.begin(), groups_.end(),
                     [](const TieGroup& g) { return g.size() == 1; });
}

std::vector<std::string> Ranking::flatten() const {
  std::vector<std::string> order;
  order.reserve(size());
  for (const TieGroup& group : groups_) {
    order.insert(order.end(), group.begin(), group.end());
  }
  return order;
}

Ranking Ranking::reversed() const {
  Ranking result;
  result.groups_.assign(groups_.rbegin(), groups_.rend());
  return result;
}

bool operator==(const Ranking& a, const Ranking& b) {
  if (a.groups_.size() != b.groups_.size()) return false;
  for (std::size_t g = 0; g < a.groups_.size(); ++g) {
    if (a.groups_[g].size() != b.groups_[g].size()) return false;
    Ranking::TieGroup lhs = a.groups_[g];
    Ranking::TieGroup rhs = b.groups_[g];
    std::sort(lhs.begin(), lhs.end());
    std::sort(rhs.begin(), rhs.end());
    if (lhs != rhs) return false;
  }
  return true;
}

}  // namespace swissrank
