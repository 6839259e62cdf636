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

#ifndef SWISSRANK_EVALUATION_H_
#define SWISSRANK_EVALUATION_H_

#include <vector>

#include <Eigen/Dense>

#include "swissrank/distances.h"
#include "swissrank/method.h"
#include "swissrank/ranking.h"
#include "swissrank/tournament.h"

namespace swissrank {

// Points scored by underdogs (the lower-ranked team of each match) over a
// set of matches. Lower is a better fit of the ranking.
struct PerformanceScore {
  double upset_match_points = 0.0;
  double upset_board_points = 0.0;
  int matches_considered = 0;
};

// Matches of rounds after_round+1 .. after_round+horizon (all remaining
// rounds when horizon is 0). Throws kNotStrict, kObjectSetMismatch,
// kInvalidRound.
PerformanceScore predictive_score(const Ranking& ranking,
                                  const TournamentLog& log, int after_round,
                                  int horizon = 0);

// Matches of rounds 1..through_round.
PerformanceScore retrodictive_score(const Ranking& ranking,
                                    const TournamentLog& log,
                                    int through_round);

struct RobustnessPoint {
  int round = 0;
  // Distance between the rankings after `round` and after `round + 1`.
  double distance = 0.0;
};

// Rounds first_round..c-1 where c is the number of rounds. Throws
// kDisconnectedAtRound naming the round whose graph is disconnected.
std::vector<RobustnessPoint> robustness_series(const MethodSpec& spec,
                                               const TournamentLog& log,
                                               const DistanceMetric& metric,
                                               int first_round = 3);

struct Embedding {
  // One row per item, `dims` columns.
  Eigen::MatrixXd coordinates;
  // Kruskal stress-1 of embedded against input distances.
  double stress = 0.0;
  // Squared correlation of input and embedded distances.
  double rsq = 1.0;
  // Number of positive eigenvalues used; below `dims` when the spectrum is
  // degenerate, in which case the missing columns are zero.
  int effective_dims = 0;
  bool degenerate = false;
};

// Classical (Torgerson) scaling. Throws kInvalidDistanceMatrix on fewer
// than three items, asymmetric, negative or non-zero-diagonal input.
Embedding classical_mds(const Eigen::MatrixXd& distances, int dims = 2);

}  // namespace swissrank

#endif  // SWISSRANK_EVALUATION_H_
