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

// Rating methods for paired-comparison ranking problems.
//
//   row sum                 s = R e
//   generalized row sum     (I + eps L) x = (1 + eps m n) s,  eps > 0
//   least squares           L q = s,  e'q = 0  (connected graphs only)
//
// The least squares rating is also the limit of the series
//   q0 = s / d,   qk = q(k-1) + (1/d) [(1/d)(d I - L)]^k s
// with d the maximum degree; ls_decomposition() records that series.

#ifndef SWISSRANK_SCORING_H_
#define SWISSRANK_SCORING_H_

#include <string>
#include <vector>

#include <Eigen/Dense>

#include "swissrank/problem.h"
#include "swissrank/ranking.h"

namespace swissrank {

inline constexpr double kDefaultTieTolerance = 1e-9;

struct RatingVector {
  std::vector<std::string> labels;
  Eigen::VectorXd values;
  // e.g. "rowsum", "grs(eps=0.0277778)", "ls".
  std::string method_tag;
};

RatingVector row_sum(const RankingProblem& problem);

// Throws kInvalidEpsilon for eps <= 0 and kSolverFailure when the residual
// ||(I + eps L) x - (1 + eps m n) s||_inf exceeds
// 1e-10 (1 + ||s||_inf) max(1, eps).
RatingVector generalized_row_sum(const RankingProblem& problem, double eps);

// 1 / (m (n - 2)); throws kDegenerateSize for n <= 2.
double reasonable_epsilon_bound(const RankingProblem& problem);

// Throws kDisconnectedProblem when the comparison multigraph is not
// connected (the solution is then not unique).
RatingVector least_squares(const RankingProblem& problem);

struct DecompositionStep {
  int k = 0;
  Eigen::VectorXd ratings;
  Ranking ranking;
};

struct DecompositionTrace {
  std::vector<DecompositionStep> steps;
  // Smallest k from which every recorded ranking equals the least squares
  // ranking.
  int converged_at = 0;
};

struct DecompositionOptions {
  int max_k = 10'000;
  double stop_tol = 1e-10;
  double tie_tol = kDefaultTieTolerance;
};

// Throws kBipartiteOrDisconnected when the series is not guaranteed to
// converge, kNoRankConvergence when the last recorded ranking still differs
// from the least squares ranking.
DecompositionTrace ls_decomposition(const RankingProblem& problem,
                                    const DecompositionOptions& options = {});

// Descending by rating; ratings within tie_tol of a neighbour (chained)
// share a tie-group, members kept in label order.
Ranking ranking_from_ratings(const RatingVector& ratings,
                             double tie_tol = kDefaultTieTolerance);

}  // namespace swissrank

#endif  // SWISSRANK_SCORING_H_
