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

#include "swissrank/tournament.h"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <set>
#include <sstream>
#include <tuple>

#include "swissrank/error.h"

namespace swissrank {
namespace {

[[noreturn]] void invalid_log(const std::string& message) {
  throw Error(ErrorCode::kInvalidLog, message);
}

void check_round(const TournamentLog& log, int through_round) {
  if (through_round < 1 || through_round > log.round_count()) {
    std::ostringstream os;
    os << "round " << through_round << " outside 1.." << log.round_count();
    throw Error(ErrorCode::kInvalidRound, os.str());
  }
}

using SortKey = std::tuple<int, double, double>;

std::vector<SortKey> official_keys(const PointsTally& points) {
  std::vector<SortKey> keys;
  for (std::size_t i = 0; i < points.mp.size(); ++i) {
    keys.emplace_back(points.mp[i], points.bp[i], points.buchholz[i]);
  }
  return keys;
}

// Groups team indices by descending key, ties kept in index order.
template <typename Key>
Ranking rank_by_keys(const std::vector<std::string>& teams,
                     const std::vector<Key>& keys) {
  std::vector<int> order(teams.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](int a, int b) { return keys[a] > keys[b]; });
  std::vector<Ranking::TieGroup> groups;
  for (std::size_t pos = 0; pos < order.size(); ++pos) {
    if (pos > 0 && keys[order[pos]] == keys[order[pos - 1]]) {
      groups.back().push_back(teams[order[pos]]);
    } else {
      groups.push_back({teams[order[pos]]});
    }
  }
  return Ranking(std::move(groups));
}

}  // namespace

TournamentLog::TournamentLog(std::vector<std::string> teams, int half_boards,
                             std::vector<TournamentRound> rounds,
                             ExogenousRankings exogenous_rankings)
    : teams_(std::move(teams)),
      half_boards_(half_boards),
      rounds_(std::move(rounds)),
      exogenous_rankings_(std::move(exogenous_rankings)) {
  if (half_boards_ < 1) invalid_log("t must be a positive integer");
  if (teams_.size() < 2) invalid_log("a tournament needs at least two teams");
  if (teams_.size() % 2 != 0) {
    invalid_log("odd team count: byes are not supported");
  }
  for (int i = 0; i < size(); ++i) {
    if (!index_.emplace(teams_[i], i).second) {
      invalid_log("duplicate team name: " + teams_[i]);
    }
  }

  std::set<std::pair<int, int>> met;
  const int n = size();
  for (std::size_t r = 0; r < rounds_.size(); ++r) {
    const std::string where = "round " + std::to_string(r + 1);
    std::vector<bool> playing(n, false);
    for (const MatchResult& match : rounds_[r]) {
      const auto home = index_.find(match.home);
      const auto away = index_.find(match.away);
      if (home == index_.end() || away == index_.end()) {
        invalid_log(where + ": unknown team in match " + match.home + " - " +
                    match.away);
      }
      if (home->second == away->second) {
        invalid_log(where + ": team plays itself: " + match.home);
      }
      for (int team : {home->second, away->second}) {
        if (playing[team]) {
          invalid_log(where + ": team plays twice: " + teams_[team]);
        }
        playing[team] = true;
      }
      const double bp = match.board_points_home;
      const double doubled = 2.0 * bp;
      if (!(bp >= 0.0 && bp <= 2.0 * half_boards_) ||
          doubled != std::floor(doubled)) {
        invalid_log(where + ": board points off the half-point grid in " +
                    match.home + " - " + match.away);
      }
      const auto pair = std::minmax(home->second, away->second);
      if (!met.insert(pair).second) {
        invalid_log(where + ": rematch " + match.home + " - " + match.away);
      }
    }
    for (int i = 0; i < n; ++i) {
      if (!playing[i]) {
        invalid_log(where + ": team has no match (byes are not supported): " +
                    teams_[i]);
      }
    }
  }

  for (const auto& [name, order] : exogenous_rankings_) {
    std::vector<std::string> sorted_order = order;
    std::vector<std::string> sorted_teams = teams_;
    std::sort(sorted_order.begin(), sorted_order.end());
    std::sort(sorted_teams.begin(), sorted_teams.end());
    if (sorted_order != sorted_teams) {
      invalid_log("exogenous ranking " + name +
                  " is not a permutation of the teams");
    }
  }
}

int TournamentLog::team_index(const std::string& team) const {
  const auto it = index_.find(team);
  if (it == index_.end()) invalid_log("unknown team: " + team);
  return it->second;
}

int match_points(double board_points_home, int half_boards) {
  if (board_points_home > half_boards) return 2;
  if (board_points_home == half_boards) return 1;
  return 0;
}

PointsTally tally(const TournamentLog& log, int through_round) {
  check_round(log, through_round);
  const int n = log.size();
  const int t = log.half_boards();
  PointsTally points{std::vector<int>(n, 0), std::vector<double>(n, 0.0),
                     std::vector<double>(n, 0.0)};
  std::vector<std::vector<int>> opponents(n);
  for (int r = 0; r < through_round; ++r) {
    for (const MatchResult& match : log.rounds()[r]) {
      const int home = log.team_index(match.home);
      const int away = log.team_index(match.away);
      const int mp_home = match_points(match.board_points_home, t);
      points.mp[home] += mp_home;
      points.mp[away] += 2 - mp_home;
      points.bp[home] += match.board_points_home;
      points.bp[away] += 2.0 * t - match.board_points_home;
      opponents[home].push_back(away);
      opponents[away].push_back(home);
    }
  }
  for (int i = 0; i < n; ++i) {
    for (int j : opponents[i]) points.buchholz[i] += points.bp[j];
  }
  return points;
}

RankingProblem results_matrix(const TournamentLog& log, int through_round,
                              double lambda) {
  if (!(lambda >= 0.0 && lambda <= 1.0)) {
    throw Error(ErrorCode::kLambdaOutOfRange, "lambda must lie in [0, 1]");
  }
  check_round(log, through_round);
  const int n = log.size();
  const int t = log.half_boards();
  ResultsMatrix results = ResultsMatrix::Zero(n, n);
  MatchesMatrix matches = MatchesMatrix::Zero(n, n);
  for (int r = 0; r < through_round; ++r) {
    for (const MatchResult& match : log.rounds()[r]) {
      const int home = log.team_index(match.home);
      const int away = log.team_index(match.away);
      const double mp_term = match_points(match.board_points_home, t) - 1;
      const double bp_term = (match.board_points_home - t) / t;
      const double value = (1.0 - lambda) * mp_term + lambda * bp_term;
      results(home, away) = value;
      results(away, home) = -value;
      matches(home, away) = 1;
      matches(away, home) = 1;
    }
  }
  return validate_problem(log.teams(), std::move(results), std::move(matches));
}

Ranking points_ranking(const TournamentLog& log, int through_round,
                       PointsBasis basis) {
  const PointsTally points = tally(log, through_round);
  if (basis == PointsBasis::kMatchPoints) {
    return rank_by_keys(log.teams(), points.mp);
  }
  return rank_by_keys(log.teams(), points.bp);
}

Ranking official_style_ranking(const TournamentLog& log, int through_round) {
  return rank_by_keys(log.teams(), official_keys(tally(log, through_round)));
}

TieBrokenRanking break_ties(const Ranking& ranking, const TournamentLog& log,
                            int through_round) {
  if (ranking.size() != static_cast<std::size_t>(log.size())) {
    throw Error(ErrorCode::kObjectSetMismatch,
                "ranking does not cover the tournament's teams");
  }
  const std::vector<SortKey> keys = official_keys(tally(log, through_round));
  TieBrokenRanking result;
  std::vector<std::string> order;
  for (const Ranking::TieGroup& group : ranking.groups()) {
    std::vector<int> members;
    for (const std::string& team : group) {
      members.push_back(log.team_index(team));
    }
    std::sort(members.begin(), members.end(), [&](int a, int b) {
      if (keys[a] != keys[b]) return keys[a] > keys[b];
      return a < b;
    });
    for (std::size_t k = 1; k < members.size(); ++k) {
      if (keys[members[k]] == keys[members[k - 1]]) result.artificial = true;
    }
    for (int i : members) order.push_back(log.teams()[i]);
  }
  result.ranking = Ranking::strict(order);
  return result;
}

}  // namespace swissrank
