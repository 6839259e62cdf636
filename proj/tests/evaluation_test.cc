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

#include "swissrank/evaluation.h"

#include <cmath>

#include <gtest/gtest.h>

#include "support/expect_error.h"
#include "support/generators.h"

namespace swissrank {
namespace {

using testing::code_of;

// Round robin on four teams, scored against the ranking A, B, C, D.
// Underdog points per round: R1 B 0/1.0, D 2/3.0; R2 C 1/2.0, D 0/1.5;
// R3 D 2/2.5, C 1/2.0.
TournamentLog round_robin_fixture() {
  return TournamentLog({"A", "B", "C", "D"}, 2,
                       {{{"A", "B", 3.0}, {"C", "D", 1.0}},
                        {{"A", "C", 2.0}, {"B", "D", 2.5}},
                        {{"A", "D", 1.5}, {"B", "C", 2.0}}});
}

const Ranking kAbcd = Ranking::strict({"A", "B", "C", "D"});

TEST(Retrodictive, HandCountedUpsets) {
  const PerformanceScore s = retrodictive_score(kAbcd, round_robin_fixture(), 3);
  EXPECT_EQ(s.upset_match_points, 6.0);
  EXPECT_EQ(s.upset_board_points, 12.0);
  EXPECT_EQ(s.matches_considered, 6);

  const PerformanceScore first =
      retrodictive_score(kAbcd, round_robin_fixture(), 1);
  EXPECT_EQ(first.upset_match_points, 2.0);
  EXPECT_EQ(first.upset_board_points, 4.0);
  EXPECT_EQ(retrodictive_score(kAbcd, round_robin_fixture(), 0)
                .matches_considered,
            0);
}

TEST(Predictive, LaterRoundsOnly) {
  const TournamentLog log = round_robin_fixture();
  const PerformanceScore all = predictive_score(kAbcd, log, 1);
  EXPECT_EQ(all.upset_match_points, 4.0);
  EXPECT_EQ(all.upset_board_points, 8.0);
  EXPECT_EQ(all.matches_considered, 4);

  const PerformanceScore next = predictive_score(kAbcd, log, 1, 1);
  EXPECT_EQ(next.upset_match_points, 1.0);
  EXPECT_EQ(next.upset_board_points, 3.5);
  EXPECT_EQ(next.matches_considered, 2);

  EXPECT_EQ(predictive_score(kAbcd, log, 3).matches_considered, 0);
}

TEST(UpsetScores, ErrorPaths) {
  const TournamentLog log = round_robin_fixture();
  EXPECT_EQ(code_of([&] { predictive_score(kAbcd, log, 4); }),
            ErrorCode::kInvalidRound);
  EXPECT_EQ(code_of([&] { retrodictive_score(kAbcd, log, -1); }),
            ErrorCode::kInvalidRound);
  EXPECT_EQ(code_of([&] { predictive_score(kAbcd, log, 1, -1); }),
            ErrorCode::kBadArguments);
  EXPECT_EQ(code_of([&] {
              retrodictive_score(Ranking({{"A", "B"}, {"C"}, {"D"}}), log, 3);
            }),
            ErrorCode::kNotStrict);
  EXPECT_EQ(code_of([&] {
              retrodictive_score(Ranking::strict({"A", "B", "C", "E"}), log,
                                 3);
            }),
            ErrorCode::kObjectSetMismatch);
}

// A ranking and its reverse split every match between them.
TEST(UpsetScores, ReversalIsComplementary) {
  testing::Rng rng(8);
  for (int trial = 0; trial < 50; ++trial) {
    const int t = testing::uniform_int(rng, 1, 3);
    const TournamentLog log = testing::random_swiss_log(rng, 8, 5, t);
    const Ranking r = testing::random_strict_ranking(rng, log.teams());
    const PerformanceScore a = retrodictive_score(r, log, 5);
    const PerformanceScore b = retrodictive_score(r.reversed(), log, 5);
    EXPECT_EQ(a.upset_match_points + b.upset_match_points, 2.0 * 20);
    EXPECT_EQ(a.upset_board_points + b.upset_board_points, 2.0 * t * 20);
  }
}

TEST(Robustness, SeriesMatchesConsecutiveDistances) {
  testing::Rng rng(10);
  const TournamentLog log = testing::random_swiss_log(rng, 8, 5);
  const MethodSpec spec{Method::kLeastSquares, 0.0, 0.25};
  const std::vector<RobustnessPoint> series =
      robustness_series(spec, log, DistanceMetric::kemeny());
  ASSERT_EQ(series.size(), 2u);
  for (const RobustnessPoint& point : series) {
    EXPECT_EQ(point.distance,
              kemeny_distance(method_ranking(log, point.round, spec).ranking,
                              method_ranking(log, point.round + 1, spec)
                                  .ranking));
  }
  EXPECT_EQ(series.front().round, 3);
}

TEST(Robustness, DisconnectedEarlyRound) {
  testing::Rng rng(10);
  const TournamentLog log = testing::random_swiss_log(rng, 8, 5);
  EXPECT_EQ(code_of([&] {
              robustness_series({Method::kLeastSquares, 0.0, 0.0}, log,
                                DistanceMetric::kemeny(), 1);
            }),
            ErrorCode::kDisconnectedAtRound);
  EXPECT_NO_THROW(robustness_series({Method::kRowSum, 0.0, 0.0}, log,
                                    DistanceMetric::harmonic(), 1));
}

Eigen::MatrixXd pairwise(const Eigen::MatrixXd& points) {
  const Eigen::Index n = points.rows();
  Eigen::MatrixXd d(n, n);
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = 0; j < n; ++j) {
      d(i, j) = (points.row(i) - points.row(j)).norm();
    }
  }
  return d;
}

TEST(ClassicalMds, RecoversPlanarConfiguration) {
  testing::Rng rng(13);
  for (int trial = 0; trial < 20; ++trial) {
    Eigen::MatrixXd points(6, 2);
    for (Eigen::Index k = 0; k < points.size(); ++k) {
      points.data()[k] = testing::uniform(rng, -3.0, 3.0);
    }
    const Eigen::MatrixXd d = pairwise(points);
    const Embedding e = classical_mds(d);
    EXPECT_LE((pairwise(e.coordinates) - d).cwiseAbs().maxCoeff(), 1e-9);
    EXPECT_LE(e.stress, 1e-6);
    EXPECT_GE(e.rsq, 1.0 - 1e-9);
    EXPECT_EQ(e.effective_dims, 2);
    EXPECT_FALSE(e.degenerate);
    for (int c = 0; c < 2; ++c) {
      Eigen::Index pivot = 0;
      e.coordinates.col(c).cwiseAbs().maxCoeff(&pivot);
      EXPECT_GT(e.coordinates(pivot, c), 0.0);
    }
  }
}

TEST(ClassicalMds, CollinearPointsAreDegenerate) {
  Eigen::MatrixXd points(4, 1);
  points << 0, 1, 3, 7;
  const Embedding e = classical_mds(pairwise(points));
  EXPECT_TRUE(e.degenerate);
  EXPECT_EQ(e.effective_dims, 1);
  EXPECT_EQ(e.coordinates.col(1), Eigen::VectorXd::Zero(4));
  EXPECT_GE(e.rsq, 1.0 - 1e-9);
}

TEST(ClassicalMds, ConstantDistances) {
  // Equilateral triangle: exact in the plane.
  const Eigen::MatrixXd tri =
      Eigen::MatrixXd::Ones(3, 3) - Eigen::MatrixXd::Identity(3, 3);
  const Embedding flat = classical_mds(tri);
  EXPECT_EQ(flat.rsq, 1.0);
  EXPECT_LE(flat.stress, 1e-9);

  // Regular simplex on four points does not fit in two dimensions.
  const Eigen::MatrixXd simplex =
      Eigen::MatrixXd::Ones(4, 4) - Eigen::MatrixXd::Identity(4, 4);
  const Embedding squashed = classical_mds(simplex);
  EXPECT_EQ(squashed.rsq, 0.0);
  EXPECT_GT(squashed.stress, 0.01);
}

TEST(ClassicalMds, InvalidInput) {
  Eigen::MatrixXd asym = Eigen::MatrixXd::Zero(3, 3);
  asym(0, 1) = 1.0;
  EXPECT_EQ(code_of([&] { classical_mds(asym); }),
            ErrorCode::kInvalidDistanceMatrix);
  Eigen::MatrixXd negative = Eigen::MatrixXd::Zero(3, 3);
  negative(0, 1) = negative(1, 0) = -1.0;
  EXPECT_EQ(code_of([&] { classical_mds(negative); }),
            ErrorCode::kInvalidDistanceMatrix);
  Eigen::MatrixXd diagonal = Eigen::MatrixXd::Zero(3, 3);
  diagonal(2, 2) = 1.0;
  EXPECT_EQ(code_of([&] { classical_mds(diagonal); }),
            ErrorCode::kInvalidDistanceMatrix);
  EXPECT_EQ(code_of([] { classical_mds(Eigen::MatrixXd::Zero(2, 2)); }),
            ErrorCode::kInvalidDistanceMatrix);
  EXPECT_EQ(code_of([] { classical_mds(Eigen::MatrixXd::Zero(3, 2)); }),
            ErrorCode::kInvalidDistanceMatrix);
}

}  // namespace
}  // namespace swissrank
