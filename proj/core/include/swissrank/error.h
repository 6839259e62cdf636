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

#ifndef SWISSRANK_ERROR_H_
#define SWISSRANK_ERROR_H_

#include <stdexcept>
#include <string>
#include <string_view>

namespace swissrank {

// Machine-readable failure categories. The CLI prints the name of the code
// as the first token of its diagnostic line.
enum class ErrorCode {
  kDimensionMismatch,
  kAsymmetricMatches,
  kNotSkewSymmetric,
  kBoundViolation,
  kInadmissibleScale,
  kInvalidEpsilon,
  kSolverFailure,
  kDegenerateSize,
  kDisconnectedProblem,
  kBipartiteOrDisconnected,
  kNoRankConvergence,
  kLambdaOutOfRange,
  kInvalidRound,
  kInvalidLog,
  kNotStrict,
  kObjectSetMismatch,
  kNonMonotoneWeights,
  kTooLarge,
  kDisconnectedAtRound,
  kInvalidDistanceMatrix,
  kInvalidRanking,
  kEmptyBattery,
  kBadFile,
  kBadArguments,
};

std::string_view error_code_name(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message);

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace swissrank

#endif  // SWISSRANK_ERROR_H_
