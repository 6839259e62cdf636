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

// Side-by-side ranking tables, one strict ranking per column.
//
//   position  Official  GRS1(MP)  ...
//   1         GER       GER
//   2         RUS       ARM
//   ...
//   #artificial  0      1
//
// Cells are tab separated. The trailing row marks columns whose ties were
// broken by input order; it may be omitted on input.

#ifndef SWISSRANK_CLI_BUNDLE_H_
#define SWISSRANK_CLI_BUNDLE_H_

#include <string>
#include <string_view>
#include <vector>

#include "swissrank/distances.h"
#include "swissrank/ranking.h"

namespace swissrank::cli {

struct BundleColumn {
  std::string name;
  Ranking ranking;
  bool artificial = false;

  friend bool operator==(const BundleColumn&, const BundleColumn&) = default;
};

using Bundle = std::vector<BundleColumn>;

std::string emit_bundle(const Bundle& bundle);

// Throws kBadFile on malformed tables.
Bundle parse_bundle(std::string_view text);

std::vector<NamedRanking> named_rankings(const Bundle& bundle);

}  // namespace swissrank::cli

#endif  // SWISSRANK_CLI_BUNDLE_H_
