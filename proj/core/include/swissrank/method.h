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

#ifndef SWISSRANK_METHOD_H_
#define SWISSRANK_METHOD_H_

#include <string>
#include <string_view>
#include <vector>

#include "swissrank/scoring.h"
#include "swissrank/tournament.h"

namespace swissrank {

enum class Method { kRowSum, kGeneralizedRowSum, kLeastSquares };

inline constexpr double kEpsilonSmall = 1.0 / 324.0;
inline constexpr double kEpsilonLarge = 1.0 / 6.0;

// A rating method applied to the lambda-blended results matrix of a log.
struct MethodSpec {
  Method method = Method::kLeastSquares;
  double epsilon = kEpsilonSmall;  // generalized row sum only
  double lambda = 0.0;

  friend bool operator==(const MethodSpec& a, const MethodSpec& b);
};

// GRS1, GRS2 and LS on the match-point (0), 3:1 blend (1/4), 1:2 blend (2/3)
// and board-point (1) results matrices, grouped by method.
std::vector<MethodSpec> default_battery();

// "GRS1(MP)", "LS(MB)", "RS(BP)", "GRS[0.01](P0.3)" and so on.
std::string method_label(const MethodSpec& spec);

// Parses "ls", "rowsum:1/4", "grs:1/324:2/3"; absent fields fall back to
// the given defaults. Throws kBadArguments.
MethodSpec parse_method_spec(std::string_view text, double default_epsilon,
                             double default_lambda);

// Accepts decimals and simple fractions such as "1/324".
double parse_real(std::string_view text);

// Ratings after through_round. Generalized row sum and least squares
// require a connected comparison graph and throw kDisconnectedProblem
// otherwise; kInvalidEpsilon and kLambdaOutOfRange come from the spec.
RatingVector method_ratings(const TournamentLog& log, int through_round,
                            const MethodSpec& spec);

// Strict ranking: ratings, then break_ties() for the remaining ties.
TieBrokenRanking method_ranking(const TournamentLog& log, int through_round,
                                const MethodSpec& spec,
                                double tie_tol = kDefaultTieTolerance);

}  // namespace swissrank

#endif  // SWISSRANK_METHOD_H_
