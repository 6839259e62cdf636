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

// Swiss-system team tournament logs.
//
// A match is played on 2t boards; each board awards 1, 0.5 or 0 board
// points, so the two teams share 2t board points. The team with at least
// t + 0.5 board points gets 2 match points, a drawn match (t each) gives 1
// match point to both.

#ifndef SWISSRANK_TOURNAMENT_H_
#define SWISSRANK_TOURNAMENT_H_

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "swissrank/problem.h"
#include "swissrank/ranking.h"

namespace swissrank {

struct MatchResult {
  std::string home;
  std::string away;
  double board_points_home = 0.0;

  friend bool operator==(const MatchResult&, const MatchResult&) = default;
};

using TournamentRound = std::vector<MatchResult>;

// Named strict rankings supplied with the log, e.g. "Start" or "Official".
using ExogenousRankings =
    std::vector<std::pair<std::string, std::vector<std::string>>>;

class TournamentLog {
 public:
  // Throws kInvalidLog when team names repeat, the team count is odd, a
  // round is not a perfect matching of the teams (byes are not supported),
  // two teams meet twice, board points are off the half-point grid of
  // [0, 2t], or an exogenous ranking is not a permutation of the teams.
  TournamentLog(std::vector<std::string> teams, int half_boards,
                std::vector<TournamentRound> rounds,
                ExogenousRankings exogenous_rankings = {});

  const std::vector<std::string>& teams() const { return teams_; }
  int size() const { return static_cast<int>(teams_.size()); }
  // t: a match is played on 2t boards.
  int half_boards() const { return half_boards_; }
  const std::vector<TournamentRound>& rounds() const { return rounds_; }
  int round_count() const { return static_cast<int>(rounds_.size()); }
  const ExogenousRankings& exogenous_rankings() const {
    return exogenous_rankings_;
  }

  int team_index(const std::string& team) const;

  friend bool operator==(const TournamentLog&, const TournamentLog&) = default;

 private:
  std::vector<std::string> teams_;
  int half_boards_ = 1;
  std::vector<TournamentRound> rounds_;
  ExogenousRankings exogenous_rankings_;
  std::map<std::string, int> index_;
};

// Match points (2/1/0) the home team earns with the given board points.
int match_points(double board_points_home, int half_boards);

struct PointsTally {
  std::vector<int> mp;
  std::vector<double> bp;
  // Sum of the opponents' board points.
  std::vector<double> buchholz;
};

// Accumulates rounds 1..through_round. Throws kInvalidRound unless
// 1 <= through_round <= round_count().
PointsTally tally(const TournamentLog& log, int through_round);

// m_ij = 1 when i and j met in rounds 1..through_round, and
// r_ij = (1 - lambda)(MP_ij - 1) + lambda (BP_ij - t) / t for those pairs.
// Throws kLambdaOutOfRange unless lambda is in [0, 1].
RankingProblem results_matrix(const TournamentLog& log, int through_round,
                              double lambda);

enum class PointsBasis { kMatchPoints, kBoardPoints };

// Weak order by the chosen points vector, no tie-breaking.
Ranking points_ranking(const TournamentLog& log, int through_round,
                       PointsBasis basis);

// Lexicographic by (mp, bp, buchholz); exhausted ties remain tie-groups.
Ranking official_style_ranking(const TournamentLog& log, int through_round);

struct TieBrokenRanking {
  Ranking ranking;
  // True when some tie could only be broken by team input order.
  bool artificial = false;
};

// Makes a weak ranking strict: inside each tie-group teams are ordered by
// (mp, bp, buchholz) after through_round, then by input order.
TieBrokenRanking break_ties(const Ranking& ranking, const TournamentLog& log,
                            int through_round);

}  // namespace swissrank

#endif  // SWISSRANK_TOURNAMENT_H_
