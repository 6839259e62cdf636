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

#include "swissrank/scoring.h"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>

#include "swissrank/error.h"

namespace swissrank {
namespace {

constexpr double kResidualTolerance = 1e-10;

Eigen::VectorXd scores(const RankingProblem& problem) {
  return problem.results().rowwise().sum();
}

double inf_norm(const Eigen::VectorXd& v) {
  return v.size() == 0 ? 0.0 : v.cwiseAbs().maxCoeff();
}

// Symmetric positive definite solve with a residual check.
Eigen::VectorXd spd_solve(const Eigen::MatrixXd& a, const Eigen::VectorXd& b,
                          double tolerance, const char* what) {
  Eigen::LLT<Eigen::MatrixXd> llt(a);
  if (llt.info() != Eigen::Success) {
    throw Error(ErrorCode::kSolverFailure,
                std::string(what) + ": matrix is not positive definite");
  }
  Eigen::VectorXd x = llt.solve(b);
  const double residual = inf_norm(a * x - b);
  if (!(residual <= tolerance)) {
    std::ostringstream os;
    os << what << ": residual " << residual << " above " << tolerance;
    throw Error(ErrorCode::kSolverFailure, os.str());
  }
  return x;
}

}  // namespace

RatingVector row_sum(const RankingProblem& problem) {
  return {problem.labels(), scores(problem), "rowsum"};
}

RatingVector generalized_row_sum(const RankingProblem& problem, double eps) {
  if (!(eps > 0.0) || !std::isfinite(eps)) {
    throw Error(ErrorCode::kInvalidEpsilon, "epsilon must be positive");
  }
  const int n = problem.size();
  const Eigen::VectorXd s = scores(problem);
  const double m = problem.matches().maxCoeff();

  // For eps > 1 solve the equivalent system divided by eps. The residual
  // check applies to the divided system, which keeps it attainable when the
  // entries of eps L are huge.
  const double scale = std::max(1.0, eps);
  const Eigen::MatrixXd a =
      (Eigen::MatrixXd::Identity(n, n) + eps * laplacian(problem)) / scale;
  const Eigen::VectorXd b = ((1.0 + eps * m * n) / scale) * s;
  const double tolerance = kResidualTolerance * (1.0 + inf_norm(s));
  Eigen::VectorXd x = spd_solve(a, b, tolerance, "generalized row sum");

  std::ostringstream tag;
  tag << "grs(eps=" << eps << ")";
  return {problem.labels(), std::move(x), tag.str()};
}

double reasonable_epsilon_bound(const RankingProblem& problem) {
  const int n = problem.size();
  if (n <= 2) {
    throw Error(ErrorCode::kDegenerateSize,
                "reasonable epsilon bound needs at least three objects");
  }
  const int m = problem.matches().maxCoeff();
  if (m <= 0) {
    throw Error(ErrorCode::kDegenerateSize,
                "reasonable epsilon bound needs at least one comparison");
  }
  return 1.0 / (static_cast<double>(m) * (n - 2));
}

RatingVector least_squares(const RankingProblem& problem) {
  if (!graph_summary(problem).connected) {
    throw Error(ErrorCode::kDisconnectedProblem,
                "comparison multigraph is not connected; least squares "
                "ratings are not unique");
  }
  const int n = problem.size();
  const Eigen::VectorXd s = scores(problem);
  // L + J is positive definite on a connected graph, and e's = 0 forces
  // e'q = 0 for its solution.
  const Eigen::MatrixXd a =
      laplacian(problem) + Eigen::MatrixXd::Ones(n, n);
  const double tolerance = kResidualTolerance * (1.0 + inf_norm(s));
  Eigen::VectorXd q = spd_solve(a, s, tolerance, "least squares");
  // Remove the rounding drift from the zero-sum subspace.
  q.array() -= q.mean();
  return {problem.labels(), std::move(q), "ls"};
}

DecompositionTrace ls_decomposition(const RankingProblem& problem,
                                    const DecompositionOptions& options) {
  const GraphSummary summary = graph_summary(problem);
  if (!summary.connected || summary.regular_bipartite) {
    throw Error(ErrorCode::kBipartiteOrDisconnected,
                "decomposition requires a connected comparison multigraph "
                "that is not regular bipartite");
  }
  if (options.max_k < 0 || !(options.stop_tol > 0.0)) {
    throw Error(ErrorCode::kBadArguments,
                "decomposition needs max_k >= 0 and stop_tol > 0");
  }

  const Eigen::MatrixXd l = laplacian(problem);
  const double degree = summary.max_degree;
  const Eigen::VectorXd s = scores(problem);

  const Ranking limit =
      ranking_from_ratings(least_squares(problem), options.tie_tol);

  DecompositionTrace trace;
  auto record = [&](int k, const Eigen::VectorXd& q) {
    RatingVector rv{problem.labels(), q, "ls-decomposition"};
    trace.steps.push_back({k, q, ranking_from_ratings(rv, options.tie_tol)});
  };

  // term holds [(1/d)(d I - L)]^k s.
  Eigen::VectorXd term = s;
  Eigen::VectorXd q = s / degree;
  record(0, q);
  for (int k = 1; k <= options.max_k; ++k) {
    term -= (l * term) / degree;
    const Eigen::VectorXd increment = term / degree;
    q += increment;
    record(k, q);
    if (inf_norm(increment) < options.stop_tol) break;
  }

  int converged = -1;
  for (int idx = static_cast<int>(trace.steps.size()) - 1; idx >= 0; --idx) {
    if (!(trace.steps[idx].ranking == limit)) break;
    converged = trace.steps[idx].k;
  }
  if (converged < 0) {
    std::ostringstream os;
    os << "ranking of the decomposition did not reach the least squares "
          "ranking within "
       << trace.steps.back().k << " steps";
    throw Error(ErrorCode::kNoRankConvergence, os.str());
  }
  trace.converged_at = converged;
  return trace;
}

Ranking ranking_from_ratings(const RatingVector& ratings, double tie_tol) {
  const auto n = static_cast<int>(ratings.values.size());
  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
    return ratings.values[a] > ratings.values[b];
  });

  std::vector<std::vector<int>> index_groups;
  for (int pos = 0; pos < n; ++pos) {
    const int object = order[pos];
    if (pos > 0 &&
        ratings.values[order[pos - 1]] - ratings.values[object] <= tie_tol) {
      index_groups.back().push_back(object);
    } else {
      index_groups.push_back({object});
    }
  }

  std::vector<Ranking::TieGroup> groups;
  groups.reserve(index_groups.size());
  for (std::vector<int>& members : index_groups) {
    std::sort(members.begin(), members.end());
    Ranking::TieGroup group;
    for (int i : members) group.push_back(ratings.labels[i]);
    groups.push_back(std::move(group));
  }
  return Ranking(std::move(groups));
}

}  // namespace swissrank
