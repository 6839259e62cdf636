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

#include "swissrank/tournament_file.h"

#include <filesystem>

#include <gtest/gtest.h>

#include "support/expect_error.h"
#include "support/generators.h"

namespace swissrank {
namespace {

using testing::code_of;

constexpr const char* kSmall = R"({
  "format_version": 1,
  "teams": ["A", "B", "C", "D"],
  "t": 2,
  "rounds": [[{"home": "A", "away": "B", "bp_home": 2.5},
              {"home": "C", "away": "D", "bp_home": 0}]],
  "exogenous_rankings": {"Start": ["D", "C", "B", "A"], "Seed": ["A", "B", "C", "D"]}
})";

TEST(TournamentFile, ParsesSmallLog) {
  const TournamentLog log = parse_tournament(kSmall);
  EXPECT_EQ(log.size(), 4);
  EXPECT_EQ(log.half_boards(), 2);
  ASSERT_EQ(log.round_count(), 1);
  EXPECT_EQ(log.rounds()[0][0], (MatchResult{"A", "B", 2.5}));
  ASSERT_EQ(log.exogenous_rankings().size(), 2u);
  EXPECT_EQ(log.exogenous_rankings()[0].first, "Start");
  EXPECT_EQ(log.exogenous_rankings()[1].first, "Seed");
}

TEST(TournamentFile, RoundTrip) {
  testing::Rng rng(21);
  const auto dir = std::filesystem::temp_directory_path();
  for (int trial = 0; trial < 20; ++trial) {
    const TournamentLog base = testing::random_swiss_log(
        rng, 8, testing::uniform_int(rng, 1, 5), testing::uniform_int(rng, 1, 4));
    const TournamentLog log(
        base.teams(), base.half_boards(), base.rounds(),
        {{"Start", testing::random_strict_ranking(rng, base.teams()).flatten()}});
    EXPECT_EQ(parse_tournament(emit_tournament(log)), log);
    const auto path = dir / ("swissrank_round_trip_" + std::to_string(trial) +
                             ".json");
    write_tournament_file(log, path);
    EXPECT_EQ(read_tournament_file(path), log);
    std::filesystem::remove(path);
  }
}

TEST(TournamentFile, SchemaErrors) {
  const char* bad[] = {
      "not json",
      "[1, 2]",
      R"({"teams": ["A", "B"], "t": 2, "rounds": []})",
      R"({"format_version": 2, "teams": ["A", "B"], "t": 2, "rounds": []})",
      R"({"format_version": 1, "teams": "AB", "t": 2, "rounds": []})",
      R"({"format_version": 1, "teams": ["A", "B"], "t": 2.5, "rounds": []})",
      R"({"format_version": 1, "teams": ["A", "B"], "t": 2, "rounds": [{}]})",
      R"({"format_version": 1, "teams": ["A", "B"], "t": 2,
          "rounds": [[{"home": "A", "away": "B"}]]})",
      R"({"format_version": 1, "teams": ["A", "B"], "t": 2,
          "rounds": [[{"home": "A", "away": "B", "bp_home": "2"}]]})",
      R"({"format_version": 1, "teams": ["A", "B"], "t": 2, "rounds": [],
          "exogenous_rankings": [["A", "B"]]})",
  };
  for (const char* text : bad) {
    EXPECT_EQ(code_of([&] { parse_tournament(text); }), ErrorCode::kBadFile)
        << text;
  }
  EXPECT_EQ(code_of([] { read_tournament_file("/nonexistent/x.json"); }),
            ErrorCode::kBadFile);
}

TEST(TournamentFile, LogRulesStillApply) {
  EXPECT_EQ(code_of([] {
              parse_tournament(R"({"format_version": 1, "teams": ["A", "B"],
                "t": 2, "rounds": [[{"home": "A", "away": "C", "bp_home": 2}]]})");
            }),
            ErrorCode::kInvalidLog);
}

}  // namespace
}  // namespace swissrank
