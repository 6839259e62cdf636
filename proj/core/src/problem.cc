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

#include "swissrank/problem.h"

#include <algorithm>
#include <cmath>
#include <queue>
#include <sstream>

#include "swissrank/error.h"

namespace swissrank {
namespace {

std::string entry_name(const std::vector<std::string>& labels, int i, int j) {
  std::ostringstream os;
  os << "(" << labels[i] << ", " << labels[j] << ")";
  return os.str();
}

}  // namespace

RankingProblem validate_problem(std::vector<std::string> labels,
                                ResultsMatrix results, MatchesMatrix matches) {
  const auto n = static_cast<Eigen::Index>(labels.size());
  if (n < 2) {
    throw Error(ErrorCode::kDimensionMismatch,
                "a ranking problem needs at least two objects");
  }
  if (results.rows() != n || results.cols() != n || matches.rows() != n ||
      matches.cols() != n) {
    std::ostringstream os;
    os << "expected " << n << "x" << n << " matrices, got results "
       << results.rows() << "x" << results.cols() << " and matches "
       << matches.rows() << "x" << matches.cols();
    throw Error(ErrorCode::kDimensionMismatch, os.str());
  }
  for (int i = 0; i < n; ++i) {
    if (matches(i, i) != 0) {
      throw Error(ErrorCode::kAsymmetricMatches,
                  "nonzero diagonal in matches matrix at " + labels[i]);
    }
    for (int j = i + 1; j < n; ++j) {
      if (matches(i, j) != matches(j, i)) {
        throw Error(ErrorCode::kAsymmetricMatches,
                    "matches matrix not symmetric at " +
                        entry_name(labels, i, j));
      }
    }
  }
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      const double r = results(i, j);
      if (!std::isfinite(r)) {
        throw Error(ErrorCode::kBoundViolation,
                    "non-finite result at " + entry_name(labels, i, j));
      }
      if (std::abs(r + results(j, i)) > kValidationTolerance) {
        throw Error(ErrorCode::kNotSkewSymmetric,
                    "results matrix not skew-symmetric at " +
                        entry_name(labels, i, j));
      }
      if (std::abs(r) > matches(i, j) + kValidationTolerance) {
        throw Error(ErrorCode::kBoundViolation,
                    "|r_ij| exceeds m_ij at " + entry_name(labels, i, j));
      }
    }
  }
  return RankingProblem(std::move(labels), std::move(results),
                        std::move(matches));
}

GraphSummary graph_summary(const RankingProblem& problem) {
  const int n = problem.size();
  const MatchesMatrix& m = problem.matches();

  GraphSummary summary;
  summary.degrees.resize(n);
  for (int i = 0; i < n; ++i) summary.degrees[i] = m.row(i).sum();
  summary.max_degree =
      *std::max_element(summary.degrees.begin(), summary.degrees.end());
  summary.max_multiplicity = m.maxCoeff();

  // BFS 2-colouring over edges with m_ij > 0; also yields connectivity.
  std::vector<int> colour(n, -1);
  bool bipartite = true;
  int components = 0;
  for (int root = 0; root < n; ++root) {
    if (colour[root] != -1) continue;
    ++components;
    colour[root] = 0;
    std::queue<int> frontier;
    frontier.push(root);
    while (!frontier.empty()) {
      const int u = frontier.front();
      frontier.pop();
      for (int v = 0; v < n; ++v) {
        if (m(u, v) <= 0) continue;
        if (colour[v] == -1) {
          colour[v] = 1 - colour[u];
          frontier.push(v);
        } else if (colour[v] == colour[u]) {
          bipartite = false;
        }
      }
    }
  }
  summary.connected = components == 1;
  const bool regular =
      std::all_of(summary.degrees.begin(), summary.degrees.end(),
                  [&](int d) { return d == summary.degrees.front(); });
  summary.regular_bipartite = regular && bipartite;
  return summary;
}

Eigen::MatrixXd laplacian(const RankingProblem& problem) {
  Eigen::MatrixXd l = -problem.matches().cast<double>();
  for (int i = 0; i < problem.size(); ++i) {
    l(i, i) = problem.matches().row(i).sum();
  }
  return l;
}

RankingProblem scale_results(const RankingProblem& problem, double k) {
  if (!(k > 0.0) || !std::isfinite(k)) {
    throw Error(ErrorCode::kInadmissibleScale,
                "scale factor must be positive and finite");
  }
  ResultsMatrix scaled = k * problem.results();
  const int n = problem.size();
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (std::abs(scaled(i, j)) >
          problem.matches()(i, j) + kValidationTolerance) {
        throw Error(ErrorCode::kInadmissibleScale,
                    "scaled result exceeds m_ij at " +
                        entry_name(problem.labels(), i, j));
      }
    }
  }
  return RankingProblem(problem.labels(), std::move(scaled),
                        problem.matches());
}

}  // namespace swissrank
