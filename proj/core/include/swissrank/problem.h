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

// The paired-comparison ranking problem: a set of labelled objects, a
// symmetric matrix of comparison counts and a skew-symmetric matrix of
// comparison outcomes, together with the comparison multigraph facts the
// rating methods depend on.

#ifndef SWISSRANK_PROBLEM_H_
#define SWISSRANK_PROBLEM_H_

#include <string>
#include <vector>

#include <Eigen/Dense>

namespace swissrank {

// Absolute tolerance of the skew-symmetry and |r_ij| <= m_ij checks.
inline constexpr double kValidationTolerance = 1e-12;

using MatchesMatrix = Eigen::MatrixXi;
using ResultsMatrix = Eigen::MatrixXd;

// Immutable, validated ranking problem. Only validate_problem() and
// scale_results() construct one.
class RankingProblem {
 public:
  int size() const { return static_cast<int>(labels_.size()); }
  const std::vector<std::string>& labels() const { return labels_; }
  const MatchesMatrix& matches() const { return matches_; }
  const ResultsMatrix& results() const { return results_; }

 private:
  friend RankingProblem validate_problem(std::vector<std::string> labels,
                                         ResultsMatrix results,
                                         MatchesMatrix matches);
  friend RankingProblem scale_results(const RankingProblem& problem,
                                      double k);

  RankingProblem(std::vector<std::string> labels, ResultsMatrix results,
                 MatchesMatrix matches)
      : labels_(std::move(labels)),
        results_(std::move(results)),
        matches_(std::move(matches)) {}

  std::vector<std::string> labels_;
  ResultsMatrix results_;
  MatchesMatrix matches_;
};

// Throws Error with kDimensionMismatch, kAsymmetricMatches,
// kNotSkewSymmetric or kBoundViolation.
RankingProblem validate_problem(std::vector<std::string> labels,
                                ResultsMatrix results, MatchesMatrix matches);

struct GraphSummary {
  std::vector<int> degrees;
  int max_degree = 0;
  int max_multiplicity = 0;
  bool connected = false;
  // All degrees equal and the underlying simple graph is 2-colourable.
  bool regular_bipartite = false;
};

GraphSummary graph_summary(const RankingProblem& problem);

// l_ij = -m_ij off the diagonal, l_ii = d_i.
Eigen::MatrixXd laplacian(const RankingProblem& problem);

// Returns (N, kR, M). Throws kInadmissibleScale when k <= 0 or some
// |k r_ij| would exceed m_ij.
RankingProblem scale_results(const RankingProblem& problem, double k);

}  // namespace swissrank

#endif  // SWISSRANK_PROBLEM_H_
