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

// JSON tournament files:
//
//   {
//     "format_version": 1,
//     "teams": ["Azerbaijan", "France", ...],
//     "t": 2,
//     "rounds": [
//       [{"home": "Azerbaijan", "away": "France", "bp_home": 2.5}, ...],
//       ...
//     ],
//     "exogenous_rankings": {"Start": [...], "Official": [...]}
//   }
//
// "exogenous_rankings" is optional; its key order is preserved.

#ifndef SWISSRANK_TOURNAMENT_FILE_H_
#define SWISSRANK_TOURNAMENT_FILE_H_

#include <filesystem>
#include <string>
#include <string_view>

#include "swissrank/tournament.h"

namespace swissrank {

inline constexpr int kTournamentFormatVersion = 1;

// Throws kBadFile for malformed documents and kInvalidLog for logs that
// break a tournament invariant.
TournamentLog parse_tournament(std::string_view text);
TournamentLog read_tournament_file(const std::filesystem::path& path);

std::string emit_tournament(const TournamentLog& log);
void write_tournament_file(const TournamentLog& log,
                           const std::filesystem::path& path);

}  // namespace swissrank

#endif  // SWISSRANK_TOURNAMENT_FILE_H_
