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
#include <map>
#include <sstream>

#include "swissrank/error.h"

namespace swissrank {
namespace {

std::map<std::string, int> positions(const Ranking& ranking,
                                     const TournamentLog& log) {
  if (!ranking.is_strict()) {
    throw Error(ErrorCode::kNotStrict,
                "upset scoring needs a strict ranking");
  }
  std::map<std::string, int> pos;
  int p = 0;
  for (const std::string& team : ranking.flatten()) pos[team] = p++;
  if (pos.size() != static_cast<std::size_t>(log.size())) {
    throw Error(ErrorCode::kObjectSetMismatch,
                "ranking does not cover the tournament's teams");
  }
  for (const std::string& team : log.teams()) {
    if (!pos.contains(team)) {
      throw Error(ErrorCode::kObjectSetMismatch,
                  "team " + team + " missing from ranking");
    }
  }
  return pos;
}

// Rounds are 1-based and inclusive.
PerformanceScore upset_points(const Ranking& ranking, const TournamentLog& log,
                              int first_round, int last_round) {
  const std::map<std::string, int> pos = positions(ranking, log);
  const int t = log.half_boards();
  PerformanceScore score;
  for (int r = first_round; r <= last_round; ++r) {
    for (const MatchResult& match : log.rounds()[r - 1]) {
      const int home_mp = match_points(match.board_points_home, t);
      if (pos.at(match.home) > pos.at(match.away)) {
        score.upset_match_points += home_mp;
        score.upset_board_points += match.board_points_home;
      } else {
        score.upset_match_points += 2 - home_mp;
        score.upset_board_points += 2.0 * t - match.board_points_home;
      }
      ++score.matches_considered;
    }
  }
  return score;
}

[[noreturn]] void invalid_round(int round, int rounds) {
  std::ostringstream os;
  os << "round " << round << " outside 0.." << rounds;
  throw Error(ErrorCode::kInvalidRound, os.str());
}

double pair_distance(const Eigen::MatrixXd& x, Eigen::Index i,
                     Eigen::Index j) {
  return (x.row(i) - x.row(j)).norm();
}

}  // namespace

PerformanceScore predictive_score(const Ranking& ranking,
                                  const TournamentLog& log, int after_round,
                                  int horizon) {
  const int rounds = log.round_count();
  if (after_round < 0 || after_round > rounds) {
    invalid_round(after_round, rounds);
  }
  if (horizon < 0) {
    throw Error(ErrorCode::kBadArguments, "horizon must be non-negative");
  }
  const int last =
      horizon == 0 ? rounds : std::min(rounds, after_round + horizon);
  return upset_points(ranking, log, after_round + 1, last);
}

PerformanceScore retrodictive_score(const Ranking& ranking,
                                    const TournamentLog& log,
                                    int through_round) {
  const int rounds = log.round_count();
  if (through_round < 0 || through_round > rounds) {
    invalid_round(through_round, rounds);
  }
  return upset_points(ranking, log, 1, through_round);
}

std::vector<RobustnessPoint> robustness_series(const MethodSpec& spec,
                                               const TournamentLog& log,
                                               const DistanceMetric& metric,
                                               int first_round) {
  if (first_round < 1) invalid_round(first_round, log.round_count());
  std::vector<Ranking> rankings;
  for (int r = first_round; r <= log.round_count(); ++r) {
    try {
      rankings.push_back(method_ranking(log, r, spec).ranking);
    } catch (const Error& e) {
      if (e.code() != ErrorCode::kDisconnectedProblem) throw;
      std::ostringstream os;
      os << "comparison graph disconnected after round " << r;
      throw Error(ErrorCode::kDisconnectedAtRound, os.str());
    }
  }
  std::vector<RobustnessPoint> series;
  for (std::size_t k = 0; k + 1 < rankings.size(); ++k) {
    series.push_back({first_round + static_cast<int>(k),
                      distance(metric, rankings[k], rankings[k + 1])});
  }
  return series;
}

Embedding classical_mds(const Eigen::MatrixXd& distances, int dims) {
  const Eigen::Index n = distances.rows();
  if (n < 3 || distances.cols() != n) {
    throw Error(ErrorCode::kInvalidDistanceMatrix,
                "scaling needs a square matrix over at least three items");
  }
  if (dims < 1) {
    throw Error(ErrorCode::kBadArguments, "dims must be positive");
  }
  const double scale = std::max(1.0, distances.cwiseAbs().maxCoeff());
  for (Eigen::Index i = 0; i < n; ++i) {
    if (distances(i, i) != 0.0) {
      throw Error(ErrorCode::kInvalidDistanceMatrix, "nonzero diagonal");
    }
    for (Eigen::Index j = 0; j < n; ++j) {
      if (!(distances(i, j) >= 0.0) || !std::isfinite(distances(i, j))) {
        throw Error(ErrorCode::kInvalidDistanceMatrix,
                    "negative or non-finite distance");
      }
      if (std::abs(distances(i, j) - distances(j, i)) > 1e-12 * scale) {
        throw Error(ErrorCode::kInvalidDistanceMatrix,
                    "distance matrix not symmetric");
      }
    }
  }

  // B = -1/2 C D.^2 C with the centring matrix C = I - J/n.
  const Eigen::MatrixXd squared = distances.array().square().matrix();
  const Eigen::MatrixXd centring =
      Eigen::MatrixXd::Identity(n, n) -
      Eigen::MatrixXd::Constant(n, n, 1.0 / static_cast<double>(n));
  Eigen::MatrixXd b = -0.5 * centring * squared * centring;
  b = 0.5 * (b + b.transpose());

  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(b);
  if (solver.info() != Eigen::Success) {
    throw Error(ErrorCode::kSolverFailure, "eigen-decomposition failed");
  }
  const Eigen::VectorXd& values = solver.eigenvalues();  // ascending
  const Eigen::MatrixXd& vectors = solver.eigenvectors();
  const double positive_floor =
      1e-12 * std::max(1.0, values.cwiseAbs().maxCoeff()) * n;

  Embedding embedding;
  embedding.coordinates = Eigen::MatrixXd::Zero(n, dims);
  for (int d = 0; d < dims && d < n; ++d) {
    const Eigen::Index idx = n - 1 - d;
    if (values[idx] <= positive_floor) break;
    Eigen::VectorXd axis = vectors.col(idx) * std::sqrt(values[idx]);
    // Fix the sign so the output is deterministic.
    Eigen::Index pivot = 0;
    axis.cwiseAbs().maxCoeff(&pivot);
    if (axis[pivot] < 0) axis = -axis;
    embedding.coordinates.col(d) = axis;
    ++embedding.effective_dims;
  }
  embedding.degenerate = embedding.effective_dims < dims;

  std::vector<double> input;
  std::vector<double> fitted;
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = i + 1; j < n; ++j) {
      input.push_back(distances(i, j));
      fitted.push_back(pair_distance(embedding.coordinates, i, j));
    }
  }

  double residual = 0.0;
  double fitted_norm = 0.0;
  double input_norm = 0.0;
  double max_gap = 0.0;
  for (std::size_t k = 0; k < input.size(); ++k) {
    residual += (fitted[k] - input[k]) * (fitted[k] - input[k]);
    fitted_norm += fitted[k] * fitted[k];
    input_norm += input[k] * input[k];
    max_gap = std::max(max_gap, std::abs(fitted[k] - input[k]));
  }
  const double denominator = fitted_norm > 0.0 ? fitted_norm : input_norm;
  embedding.stress = denominator > 0.0 ? std::sqrt(residual / denominator)
                                       : 0.0;

  const auto count = static_cast<double>(input.size());
  double mean_in = 0.0;
  double mean_fit = 0.0;
  for (std::size_t k = 0; k < input.size(); ++k) {
    mean_in += input[k] / count;
    mean_fit += fitted[k] / count;
  }
  double cov = 0.0;
  double var_in = 0.0;
  double var_fit = 0.0;
  for (std::size_t k = 0; k < input.size(); ++k) {
    cov += (input[k] - mean_in) * (fitted[k] - mean_fit);
    var_in += (input[k] - mean_in) * (input[k] - mean_in);
    var_fit += (fitted[k] - mean_fit) * (fitted[k] - mean_fit);
  }
  // Constant input distances have no correlation to speak of; score the
  // embedding as exact or not.
  const double flat = 1e-18 * scale * scale * count;
  if (var_in <= flat) {
    embedding.rsq = max_gap <= 1e-9 * scale ? 1.0 : 0.0;
  } else if (var_fit <= flat) {
    embedding.rsq = 0.0;
  } else {
    embedding.rsq = std::min(1.0, cov * cov / (var_in * var_fit));
  }
  return embedding;
}

}  // namespace swissrank
