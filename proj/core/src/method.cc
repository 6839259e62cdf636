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

#include "swissrank/method.h"

#include <charconv>
#include <cmath>
#include <sstream>

#include "swissrank/error.h"

namespace swissrank {
namespace {

constexpr double kParameterMatch = 1e-12;

bool near(double a, double b) { return std::abs(a - b) <= kParameterMatch; }

std::string short_real(double value) {
  std::ostringstream os;
  os << value;
  return os.str();
}

double parse_plain(std::string_view text) {
  double value = 0.0;
  const auto [end, ec] =
      std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || end != text.data() + text.size()) {
    throw Error(ErrorCode::kBadArguments,
                "not a number: '" + std::string(text) + "'");
  }
  return value;
}

}  // namespace

bool operator==(const MethodSpec& a, const MethodSpec& b) {
  if (a.method != b.method || !near(a.lambda, b.lambda)) return false;
  return a.method != Method::kGeneralizedRowSum || near(a.epsilon, b.epsilon);
}

std::vector<MethodSpec> default_battery() {
  std::vector<MethodSpec> battery;
  const double lambdas[] = {0.0, 0.25, 2.0 / 3.0, 1.0};
  for (double eps : {kEpsilonSmall, kEpsilonLarge}) {
    for (double lambda : lambdas) {
      battery.push_back({Method::kGeneralizedRowSum, eps, lambda});
    }
  }
  for (double lambda : lambdas) {
    battery.push_back({Method::kLeastSquares, kEpsilonSmall, lambda});
  }
  return battery;
}

std::string method_label(const MethodSpec& spec) {
  std::string label;
  switch (spec.method) {
    case Method::kRowSum:
      label = "RS";
      break;
    case Method::kLeastSquares:
      label = "LS";
      break;
    case Method::kGeneralizedRowSum:
      if (near(spec.epsilon, kEpsilonSmall)) {
        label = "GRS1";
      } else if (near(spec.epsilon, kEpsilonLarge)) {
        label = "GRS2";
      } else {
        label = "GRS[" + short_real(spec.epsilon) + "]";
      }
      break;
  }
  if (near(spec.lambda, 0.0)) return label + "(MP)";
  if (near(spec.lambda, 0.25)) return label + "(MB)";
  if (near(spec.lambda, 2.0 / 3.0)) return label + "(BM)";
  if (near(spec.lambda, 1.0)) return label + "(BP)";
  return label + "(P" + short_real(spec.lambda) + ")";
}

double parse_real(std::string_view text) {
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) return parse_plain(text);
  const double numerator = parse_plain(text.substr(0, slash));
  const double denominator = parse_plain(text.substr(slash + 1));
  if (denominator == 0.0) {
    throw Error(ErrorCode::kBadArguments,
                "zero denominator in '" + std::string(text) + "'");
  }
  return numerator / denominator;
}

MethodSpec parse_method_spec(std::string_view text, double default_epsilon,
                             double default_lambda) {
  std::vector<std::string_view> parts;
  std::size_t start = 0;
  while (true) {
    const auto colon = text.find(':', start);
    parts.push_back(text.substr(start, colon - start));
    if (colon == std::string_view::npos) break;
    start = colon + 1;
  }

  MethodSpec spec;
  spec.epsilon = default_epsilon;
  spec.lambda = default_lambda;
  const std::string_view name = parts.front();
  std::size_t max_parts = 2;
  if (name == "rowsum") {
    spec.method = Method::kRowSum;
  } else if (name == "ls") {
    spec.method = Method::kLeastSquares;
  } else if (name == "grs") {
    spec.method = Method::kGeneralizedRowSum;
    max_parts = 3;
  } else {
    throw Error(ErrorCode::kBadArguments,
                "unknown method '" + std::string(name) +
                    "' (expected rowsum, grs or ls)");
  }
  if (parts.size() > max_parts) {
    throw Error(ErrorCode::kBadArguments,
                "too many fields in method spec '" + std::string(text) + "'");
  }
  if (spec.method == Method::kGeneralizedRowSum) {
    if (parts.size() > 1) spec.epsilon = parse_real(parts[1]);
    if (parts.size() > 2) spec.lambda = parse_real(parts[2]);
  } else if (parts.size() > 1) {
    spec.lambda = parse_real(parts[1]);
  }
  if (spec.method == Method::kGeneralizedRowSum && !(spec.epsilon > 0.0)) {
    throw Error(ErrorCode::kInvalidEpsilon, "epsilon must be positive");
  }
  if (!(spec.lambda >= 0.0 && spec.lambda <= 1.0)) {
    throw Error(ErrorCode::kLambdaOutOfRange, "lambda must lie in [0, 1]");
  }
  return spec;
}

RatingVector method_ratings(const TournamentLog& log, int through_round,
                            const MethodSpec& spec) {
  const RankingProblem problem =
      results_matrix(log, through_round, spec.lambda);
  if (spec.method == Method::kRowSum) return row_sum(problem);
  if (!graph_summary(problem).connected) {
    std::ostringstream os;
    os << method_label(spec) << ": comparison graph after round "
       << through_round << " is disconnected";
    throw Error(ErrorCode::kDisconnectedProblem, os.str());
  }
  if (spec.method == Method::kGeneralizedRowSum) {
    return generalized_row_sum(problem, spec.epsilon);
  }
  return least_squares(problem);
}

TieBrokenRanking method_ranking(const TournamentLog& log, int through_round,
                                const MethodSpec& spec, double tie_tol) {
  const Ranking weak =
      ranking_from_ratings(method_ratings(log, through_round, spec), tie_tol);
  return break_ties(weak, log, through_round);
}

}  // namespace swissrank
