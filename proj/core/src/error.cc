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

#include "swissrank/error.h"

namespace swissrank {

std::string_view error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::kDimensionMismatch: return "DimensionMismatch";
    case ErrorCode::kAsymmetricMatches: return "AsymmetricMatches";
    case ErrorCode::kNotSkewSymmetric: return "NotSkewSymmetric";
    case ErrorCode::kBoundViolation: return "BoundViolation";
    case ErrorCode::kInadmissibleScale: return "InadmissibleScale";
    case ErrorCode::kInvalidEpsilon: return "InvalidEpsilon";
    case ErrorCode::kSolverFailure: return "SolverFailure";
    case ErrorCode::kDegenerateSize: return "DegenerateSize";
    case ErrorCode::kDisconnectedProblem: return "DisconnectedProblem";
    case ErrorCode::kBipartiteOrDisconnected: return "BipartiteOrDisconnected";
    case ErrorCode::kNoRankConvergence: return "NoRankConvergence";
    case ErrorCode::kLambdaOutOfRange: return "LambdaOutOfRange";
    case ErrorCode::kInvalidRound: return "InvalidRound";
    case ErrorCode::kInvalidLog: return "InvalidLog";
    case ErrorCode::kNotStrict: return "NotStrict";
    case ErrorCode::kObjectSetMismatch: return "ObjectSetMismatch";
    case ErrorCode::kNonMonotoneWeights: return "NonMonotoneWeights";
    case ErrorCode::kTooLarge: return "TooLarge";
    case ErrorCode::kDisconnectedAtRound: return "DisconnectedAtRound";
    case ErrorCode::kInvalidDistanceMatrix: return "InvalidDistanceMatrix";
    case ErrorCode::kInvalidRanking: return "InvalidRanking";
    case ErrorCode::kEmptyBattery: return "EmptyBattery";
    case ErrorCode::kBadFile: return "BadFile";
    case ErrorCode::kBadArguments: return "BadArguments";
  }
  return "Unknown";
}

Error::Error(ErrorCode code, const std::string& message)
    : std::runtime_error(message), code_(code) {}

}  // namespace swissrank
