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

#include <gtest/gtest.h>

#include "support/expect_error.h"
#include "support/generators.h"
#include "swissrank/scoring.h"

namespace swissrank {
namespace {

using testing::code_of;

TournamentLog single_match(double bp_home) {
  return TournamentLog({"home", "away"}, 2, {{{"home", "away", bp_home}}});
}

// All four teams finish on 2 match points; board points and then the
// opponents' board points separate them: D, A, C, B.
TournamentLog tie_break_fixture() {
  return TournamentLog({"A", "B", "C", "D"}, 2,
                       {{{"A", "C", 3.0}, {"B", "D", 2.5}},
                        {{"A", "D", 1.0}, {"B", "C", 1.0}}});
}

TEST(MatchPoints, WinDrawLoss) {
  EXPECT_EQ(match_points(2.5, 2), 2);
  EXPECT_EQ(match_points(2.0, 2), 1);
  EXPECT_EQ(match_points(1.5, 2), 0);
  EXPECT_EQ(match_points(0.0, 2), 0);
}

TEST(Tally, SingleMatch) {
  const PointsTally p = tally(single_match(2.5), 1);
  EXPECT_EQ(p.mp, (std::vector<int>{2, 0}));
  EXPECT_EQ(p.bp, (std::vector<double>{2.5, 1.5}));
  EXPECT_EQ(p.buchholz[0], 1.5);
  EXPECT_EQ(p.buchholz[1], 2.5);
}

TEST(Tally, DrawnMatch) {
  EXPECT_EQ(tally(single_match(2.0), 1).mp, (std::vector<int>{1, 1}));
}

TEST(Tally, RoundOutOfRange) {
  EXPECT_EQ(code_of([] { tally(single_match(2.5), 0); }),
            ErrorCode::kInvalidRound);
  EXPECT_EQ(code_of([] { tally(single_match(2.5), 2); }),
            ErrorCode::kInvalidRound);
}

TEST(Tally, ConservationOnRandomLogs) {
  testing::Rng rng(4);
  for (int trial = 0; trial < 30; ++trial) {
    const TournamentLog log = testing::random_swiss_log(rng, 8, 5, 2);
    for (int r = 1; r <= log.round_count(); ++r) {
      const PointsTally p = tally(log, r);
      const int matches = r * log.size() / 2;
      EXPECT_EQ(std::accumulate(p.mp.begin(), p.mp.end(), 0), 2 * matches);
      EXPECT_EQ(std::accumulate(p.bp.begin(), p.bp.end(), 0.0),
                2.0 * log.half_boards() * matches);
    }
  }
}

TEST(ResultsMatrix, LambdaBlendExamples) {
  const TournamentLog log = single_match(2.5);
  EXPECT_EQ(results_matrix(log, 1, 0.0).results()(0, 1), 1.0);
  EXPECT_EQ(results_matrix(log, 1, 1.0).results()(0, 1), 0.25);
  EXPECT_EQ(results_matrix(log, 1, 0.25).results()(0, 1), 0.8125);
  EXPECT_EQ(results_matrix(log, 1, 0.25).results()(1, 0), -0.8125);
  EXPECT_EQ(results_matrix(log, 1, 0.25).matches()(0, 1), 1);
}

TEST(ResultsMatrix, LambdaOutOfRange) {
  EXPECT_EQ(code_of([] { results_matrix(single_match(2.5), 1, -0.1); }),
            ErrorCode::kLambdaOutOfRange);
  EXPECT_EQ(code_of([] { results_matrix(single_match(2.5), 1, 1.5); }),
            ErrorCode::kLambdaOutOfRange);
}

TEST(ResultsMatrix, OnlyPlayedRoundsCount) {
  const TournamentLog log = tie_break_fixture();
  const RankingProblem first = results_matrix(log, 1, 0.0);
  EXPECT_EQ(first.matches().sum(), 4);
  EXPECT_EQ(first.matches()(0, 3), 0);
  EXPECT_EQ(results_matrix(log, 2, 0.0).matches()(0, 3), 1);
}

TEST(ResultsMatrix, EntryGridAndAffinity) {
  testing::Rng rng(9);
  for (int trial = 0; trial < 30; ++trial) {
    const int t = testing::uniform_int(rng, 1, 3);
    const TournamentLog log = testing::random_swiss_log(rng, 8, 4, t);
    const int c = log.round_count();
    const Eigen::MatrixXd mp = results_matrix(log, c, 0.0).results();
    const Eigen::MatrixXd bp = results_matrix(log, c, 1.0).results();
    const Eigen::MatrixXd mid = results_matrix(log, c, 0.5).results();
    for (Eigen::Index i = 0; i < mp.size(); ++i) {
      const double v = mp.data()[i];
      EXPECT_TRUE(v == -1.0 || v == 0.0 || v == 1.0);
      const double steps = bp.data()[i] * 2 * t;
      EXPECT_EQ(steps, std::round(steps));
      EXPECT_GE(bp.data()[i], -1.0);
      EXPECT_LE(bp.data()[i], 1.0);
    }
    EXPECT_LE((mid - 0.5 * (mp + bp)).cwiseAbs().maxCoeff(), 1e-15);
  }
}

TEST(ResultsMatrix, RowSumIdentities) {
  testing::Rng rng(12);
  for (int trial = 0; trial < 30; ++trial) {
    const TournamentLog log = testing::random_swiss_log(rng, 8, 5, 2);
    for (int c = 1; c <= log.round_count(); ++c) {
      const PointsTally p = tally(log, c);
      const Eigen::VectorXd s_mp = row_sum(results_matrix(log, c, 0.0)).values;
      const Eigen::VectorXd s_bp = row_sum(results_matrix(log, c, 1.0)).values;
      for (int i = 0; i < log.size(); ++i) {
        EXPECT_EQ(s_mp[i], p.mp[i] - c);
        EXPECT_EQ(s_bp[i], (p.bp[i] - c * log.half_boards()) /
                               log.half_boards());
      }
      EXPECT_EQ(ranking_from_ratings(
                    row_sum(results_matrix(log, c, 1.0))),
                points_ranking(log, c, PointsBasis::kBoardPoints));
      EXPECT_EQ(ranking_from_ratings(
                    row_sum(results_matrix(log, c, 0.0))),
                points_ranking(log, c, PointsBasis::kMatchPoints));
    }
  }
}

TEST(PointsRanking, TiesAreKept) {
  // mp = (4, 2, 2, 0).
  const TournamentLog log({"A", "B", "C", "D"}, 2,
                          {{{"A", "C", 3.0}, {"B", "D", 3.0}},
                           {{"A", "D", 2.5}, {"C", "B", 2.5}}});
  EXPECT_EQ(points_ranking(log, 2, PointsBasis::kMatchPoints),
            Ranking({{"A"}, {"B", "C"}, {"D"}}));
}

TEST(PointsRanking, AllEqualIsOneGroup) {
  const TournamentLog log({"A", "B", "C", "D"}, 2,
                          {{{"A", "B", 2.0}, {"C", "D", 2.0}}});
  EXPECT_EQ(points_ranking(log, 1, PointsBasis::kMatchPoints),
            Ranking({{"A", "B", "C", "D"}}));
}

TEST(PointsRanking, DistinctBoardPointsAreStrict) {
  const TournamentLog log({"A", "B", "C", "D"}, 2,
                          {{{"A", "B", 4.0}, {"C", "D", 2.5}}});
  EXPECT_EQ(points_ranking(log, 1, PointsBasis::kBoardPoints),
            Ranking::strict({"A", "C", "D", "B"}));
}

TEST(OfficialStyleRanking, LexicographicChain) {
  const TournamentLog log = tie_break_fixture();
  const PointsTally p = tally(log, 2);
  EXPECT_EQ(p.mp, (std::vector<int>{2, 2, 2, 2}));
  EXPECT_EQ(p.bp, (std::vector<double>{4.0, 3.5, 4.0, 4.5}));
  EXPECT_EQ(p.buchholz, (std::vector<double>{8.5, 8.5, 7.5, 7.5}));
  EXPECT_EQ(official_style_ranking(log, 2),
            Ranking::strict({"D", "A", "C", "B"}));
}

TEST(OfficialStyleRanking, IdenticalTriplesStayTied) {
  const TournamentLog log({"A", "B", "C", "D"}, 2,
                          {{{"A", "B", 2.0}, {"C", "D", 2.0}}});
  EXPECT_EQ(official_style_ranking(log, 1), Ranking({{"A", "B", "C", "D"}}));
}

TEST(BreakTies, UsesChainThenInputOrder) {
  const TournamentLog log = tie_break_fixture();
  const TieBrokenRanking chain =
      break_ties(points_ranking(log, 2, PointsBasis::kMatchPoints), log, 2);
  EXPECT_EQ(chain.ranking, Ranking::strict({"D", "A", "C", "B"}));
  EXPECT_FALSE(chain.artificial);

  const TournamentLog draws({"A", "B", "C", "D"}, 2,
                            {{{"B", "A", 2.0}, {"C", "D", 2.0}}});
  const TieBrokenRanking order =
      break_ties(Ranking({{"D", "C", "B", "A"}}), draws, 1);
  EXPECT_EQ(order.ranking, Ranking::strict({"A", "B", "C", "D"}));
  EXPECT_TRUE(order.artificial);
}

TEST(TournamentLog, ValidationErrors) {
  using R = std::vector<TournamentRound>;
  auto build = [](std::vector<std::string> teams, R rounds, int t = 2) {
    return [=] { TournamentLog(teams, t, rounds); };
  };
  const std::vector<std::string> four{"A", "B", "C", "D"};
  EXPECT_EQ(code_of(build({"A", "B", "C"}, {})), ErrorCode::kInvalidLog);
  EXPECT_EQ(code_of(build({"A", "A"}, {})), ErrorCode::kInvalidLog);
  EXPECT_EQ(code_of(build(four, {{{"A", "B", 2.0}}})), ErrorCode::kInvalidLog);
  EXPECT_EQ(code_of(build(four, {{{"A", "B", 2.0}, {"A", "C", 2.0}}})),
            ErrorCode::kInvalidLog);
  EXPECT_EQ(code_of(build(four, {{{"A", "B", 2.0}, {"C", "D", 2.0}},
                                 {{"B", "A", 2.0}, {"C", "D", 2.0}}})),
            ErrorCode::kInvalidLog);
  EXPECT_EQ(code_of(build(four, {{{"A", "B", 2.2}, {"C", "D", 2.0}}})),
            ErrorCode::kInvalidLog);
  EXPECT_EQ(code_of(build(four, {{{"A", "B", 4.5}, {"C", "D", 2.0}}})),
            ErrorCode::kInvalidLog);
  EXPECT_EQ(code_of(build(four, {{{"A", "X", 2.0}, {"C", "D", 2.0}}})),
            ErrorCode::kInvalidLog);
  EXPECT_EQ(code_of(build(four, {{{"A", "A", 2.0}, {"C", "D", 2.0}}})),
            ErrorCode::kInvalidLog);
  EXPECT_EQ(code_of(build(four, {}, 0)), ErrorCode::kInvalidLog);
  EXPECT_EQ(code_of([&] {
              TournamentLog(four, 2, {}, {{"Start", {"A", "B", "C"}}});
            }),
            ErrorCode::kInvalidLog);
}

}  // namespace
}  // namespace swissrank
