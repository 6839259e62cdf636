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

#ifndef SWISSRANK_RANKING_H_
#define SWISSRANK_RANKING_H_

#include <cstddef>
#include <string>
#include <vector>

namespace swissrank {

// A weak order over named objects: tie-groups listed from best to worst.
class Ranking {
 public:
  using TieGroup = std::vector<std::string>;

  Ranking() = default;
  // Throws kInvalidRanking on an empty tie-group or a repeated object.
  explicit Ranking(std::vector<TieGroup> groups);

  static Ranking strict(const std::vector<std::string>& order);

  const std::vector<TieGroup>& groups() const { return groups_; }
  std::size_t size() const;
  bool is_strict() const;

  // All objects, best first; tied objects in stored order.
  std::vector<std::string> flatten() const;

  // Tie-groups in reverse order.
  Ranking reversed() const;

  // Tie-groups compare as sets.
  friend bool operator==(const Ranking& a, const Ranking& b);

 private:
  std::vector<TieGroup> groups_;
};

}  // namespace swissrank

#endif  // SWISSRANK_RANKING_H_
