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

#include "swissrank_cli/commands.h"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <map>
#include <ostream>
#include <sstream>

#include <fmt/format.h>

#include "CLI11.hpp"
#include "swissrank/distances.h"
#include "swissrank/error.h"
#include "swissrank/evaluation.h"
#include "swissrank/method.h"
#include "swissrank/scoring.h"
#include "swissrank/tournament_file.h"
#include "swissrank_cli/bundle.h"

namespace swissrank::cli {
namespace {

struct Options {
  std::string file;
  int round = 0;
  bool round_given = false;
  std::vector<std::string> methods;
  std::string epsilon = "1/324";
  std::string lambda = "0";
  std::string metric = "weighted";
  std::string weights = "harmonic";
  int horizon = 0;
  std::string out;
};

void warn(std::ostream& err, const std::string& context, const Error& e) {
  err << "warning: " << context << ": " << error_code_name(e.code()) << ": "
      << e.what() << '\n';
}

std::string read_text(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::kBadFile, "cannot open " + path);
  std::ostringstream contents;
  contents << in.rdbuf();
  return contents.str();
}

bool looks_like_json(const std::string& text) {
  const auto first = std::find_if_not(
      text.begin(), text.end(),
      [](unsigned char ch) { return std::isspace(ch) != 0; });
  return first != text.end() && *first == '{';
}

int through_round(const Options& o, const TournamentLog& log) {
  const int rounds = log.round_count();
  if (!o.round_given) {
    if (rounds == 0) {
      throw Error(ErrorCode::kInvalidRound, "the log contains no rounds");
    }
    return rounds;
  }
  if (o.round < 1 || o.round > rounds) {
    throw Error(ErrorCode::kInvalidRound,
                fmt::format("round {} outside 1..{}", o.round, rounds));
  }
  return o.round;
}

// Comma-separated specs, possibly over several --method values. No value at
// all selects the default battery.
std::vector<MethodSpec> method_list(const Options& o, std::ostream& err) {
  if (o.methods.empty()) return default_battery();
  const double eps = parse_real(o.epsilon);
  const double lambda = parse_real(o.lambda);
  std::vector<MethodSpec> specs;
  for (const std::string& value : o.methods) {
    std::istringstream in(value);
    std::string item;
    while (std::getline(in, item, ',')) {
      if (item.empty()) continue;
      const MethodSpec spec = parse_method_spec(item, eps, lambda);
      if (std::find(specs.begin(), specs.end(), spec) != specs.end()) {
        err << "warning: duplicate method " << method_label(spec)
            << " dropped\n";
        continue;
      }
      specs.push_back(spec);
    }
  }
  if (specs.empty()) {
    throw Error(ErrorCode::kEmptyBattery, "no method specs given");
  }
  return specs;
}

DistanceMetric make_metric(const Options& o, std::size_t objects) {
  DistanceMetric metric;
  if (o.metric == "kemeny") return metric;
  if (o.metric != "weighted") {
    throw Error(ErrorCode::kBadArguments,
                "unknown metric '" + o.metric + "' (expected kemeny or "
                                                "weighted)");
  }
  metric.kind = MetricKind::kWeighted;
  if (o.weights == "harmonic") {
    metric.weights = WeightVector::harmonic(objects).values();
  } else if (o.weights == "uniform") {
    metric.weights = WeightVector::uniform(objects).values();
  } else {
    std::vector<double> values;
    std::istringstream in(o.weights);
    std::string item;
    while (std::getline(in, item, ',')) values.push_back(parse_real(item));
    metric.weights = WeightVector(std::move(values)).values();
  }
  return metric;
}

Bundle build_battery(const TournamentLog& log, int round,
                     const std::vector<MethodSpec>& specs, std::ostream& err) {
  Bundle bundle;
  for (const auto& [name, order] : log.exogenous_rankings()) {
    bundle.push_back({name, Ranking::strict(order), false});
  }
  for (const MethodSpec& spec : specs) {
    const std::string label = method_label(spec);
    if (std::any_of(bundle.begin(), bundle.end(),
                    [&](const BundleColumn& c) { return c.name == label; })) {
      err << "warning: column " << label << " already present; skipped\n";
      continue;
    }
    try {
      TieBrokenRanking r = method_ranking(log, round, spec);
      bundle.push_back({label, std::move(r.ranking), r.artificial});
    } catch (const Error& e) {
      warn(err, label, e);
    }
  }
  if (bundle.empty()) {
    throw Error(ErrorCode::kEmptyBattery, "no ranking could be computed");
  }
  return bundle;
}

void cmd_rank(const Options& o, std::ostream& out) {
  const TournamentLog log = read_tournament_file(o.file);
  const int round = through_round(o, log);
  if (o.methods.size() > 1) {
    throw Error(ErrorCode::kBadArguments, "rank takes a single --method");
  }
  const MethodSpec spec =
      parse_method_spec(o.methods.empty() ? "ls" : o.methods.front(),
                        parse_real(o.epsilon), parse_real(o.lambda));
  const RatingVector ratings = method_ratings(log, round, spec);
  std::map<std::string, double> value;
  for (std::size_t i = 0; i < ratings.labels.size(); ++i) {
    value[ratings.labels[i]] = ratings.values[static_cast<Eigen::Index>(i)];
  }
  out << "rank\tteam\trating\n";
  std::size_t rank = 1;
  const Ranking ranking = ranking_from_ratings(ratings);
  for (const auto& group : ranking.groups()) {
    for (const std::string& team : group) {
      out << rank << '\t' << team << '\t' << format_real(value.at(team))
          << '\n';
    }
    rank += group.size();
  }
}

void cmd_battery(const Options& o, std::ostream& out, std::ostream& err) {
  const TournamentLog log = read_tournament_file(o.file);
  const int round = through_round(o, log);
  out << emit_bundle(build_battery(log, round, method_list(o, err), err));
}

void cmd_distances(const Options& o, std::ostream& out, std::ostream& err) {
  const std::string text = read_text(o.file);
  Bundle bundle;
  if (looks_like_json(text)) {
    const TournamentLog log = parse_tournament(text);
    bundle = build_battery(log, through_round(o, log), method_list(o, err),
                           err);
  } else {
    bundle = parse_bundle(text);
  }
  const Eigen::MatrixXd d = distance_matrix(
      named_rankings(bundle), make_metric(o, bundle.front().ranking.size()));
  out << "ranking";
  for (const BundleColumn& column : bundle) out << '\t' << column.name;
  out << '\n';
  for (Eigen::Index i = 0; i < d.rows(); ++i) {
    out << bundle[static_cast<std::size_t>(i)].name;
    for (Eigen::Index j = 0; j < d.cols(); ++j) {
      out << '\t' << format_real(d(i, j));
    }
    out << '\n';
  }
}

// Rows follow the starting order; column k holds the signed move between
// steps k-1 and k (positive = up).
void cmd_decompose(const Options& o, std::ostream& out) {
  const TournamentLog log = read_tournament_file(o.file);
  const int round = through_round(o, log);
  const RankingProblem problem =
      results_matrix(log, round, parse_real(o.lambda));
  const DecompositionTrace trace = ls_decomposition(problem);
  const int last = trace.converged_at;

  auto positions = [&](const Ranking& weak) {
    std::map<std::string, int> pos;
    int p = 1;
    for (const std::string& team : break_ties(weak, log, round).ranking.flatten()) {
      pos[team] = p++;
    }
    return pos;
  };
  std::vector<std::map<std::string, int>> step_pos;
  for (int k = 0; k <= last; ++k) {
    step_pos.push_back(positions(trace.steps[static_cast<std::size_t>(k)].ranking));
  }
  const std::map<std::string, int> limit =
      positions(ranking_from_ratings(least_squares(problem)));
  std::vector<std::string> start_order(log.size());
  for (const auto& [team, p] : step_pos.front()) start_order[p - 1] = team;

  out << "# converged_at\t" << last << '\n';
  out << "start\tteam";
  for (int k = 1; k <= last; ++k) out << "\tk" << k;
  out << "\ttotal\tlimit\n";
  for (const std::string& team : start_order) {
    const int start = step_pos.front().at(team);
    out << start << '\t' << team;
    for (int k = 1; k <= last; ++k) {
      out << '\t' << step_pos[k - 1].at(team) - step_pos[k].at(team);
    }
    out << '\t' << start - limit.at(team) << '\t' << limit.at(team) << '\n';
  }
}

std::string score_cells(const PerformanceScore& s, const PerformanceScore& r) {
  return fmt::format("{}\t{}\t{}\t{}\t{}", s.matches_considered,
                     format_real(s.upset_match_points),
                     format_real(s.upset_board_points),
                     format_real(r.upset_match_points),
                     format_real(r.upset_board_points));
}

void cmd_evaluate(const Options& o, std::ostream& out, std::ostream& err) {
  const TournamentLog log = read_tournament_file(o.file);
  const int rounds = log.round_count();
  if (rounds == 0) {
    throw Error(ErrorCode::kInvalidRound, "the log contains no rounds");
  }
  const std::vector<MethodSpec> specs = method_list(o, err);
  const DistanceMetric metric = make_metric(o, log.size());
  constexpr int kFirstRound = 3;

  std::ostringstream predictive;
  std::ostringstream retrodictive;
  std::ostringstream robustness;
  for (const MethodSpec& spec : specs) {
    const std::string label = method_label(spec);
    std::ostringstream p;
    std::ostringstream r;
    std::ostringstream b;
    try {
      for (int round = kFirstRound; round <= rounds; ++round) {
        const Ranking ranking = method_ranking(log, round, spec).ranking;
        const Ranking reversed = ranking.reversed();
        if (round < rounds) {
          p << label << '\t' << round << '\t'
            << score_cells(
                   predictive_score(ranking, log, round, o.horizon),
                   predictive_score(reversed, log, round, o.horizon))
            << '\n';
        }
        r << label << '\t' << round << '\t'
          << score_cells(retrodictive_score(ranking, log, round),
                         retrodictive_score(reversed, log, round))
          << '\n';
      }
      for (const RobustnessPoint& point :
           robustness_series(spec, log, metric, kFirstRound)) {
        b << label << '\t' << point.round << '\t'
          << format_real(point.distance) << '\n';
      }
    } catch (const Error& e) {
      warn(err, label, e);
      continue;
    }
    predictive << p.str();
    retrodictive << r.str();
    robustness << b.str();
  }

  const std::string score_header =
      "method\tround\tmatches\tupset_mp\tupset_bp\tfavourite_mp\t"
      "favourite_bp\n";
  out << "# predictive\n" << score_header << predictive.str();
  out << "# retrodictive\n" << score_header << retrodictive.str();
  out << "# robustness\nmethod\tround\tdistance\n" << robustness.str();

  const Bundle bundle = build_battery(log, rounds, specs, err);
  if (bundle.size() < 3) {
    err << "warning: mds: needs at least three rankings; section omitted\n";
    return;
  }
  const Embedding e = classical_mds(
      distance_matrix(named_rankings(bundle), metric), 2);
  out << "# mds\nranking\tx\ty\n";
  for (std::size_t i = 0; i < bundle.size(); ++i) {
    const auto row = static_cast<Eigen::Index>(i);
    out << bundle[i].name << '\t' << format_real(e.coordinates(row, 0)) << '\t'
        << format_real(e.coordinates(row, 1)) << '\n';
  }
  out << "# mds_fit\nstress\t" << format_real(e.stress) << "\nrsq\t"
      << format_real(e.rsq) << "\neffective_dims\t" << e.effective_dims
      << '\n';
}

}  // namespace

std::string format_real(double value) {
  std::string text = fmt::format("{:.6f}", value);
  if (text == "-0.000000") text.erase(0, 1);
  return text;
}

int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err) {
  CLI::App app{"Paired-comparison rankings for Swiss-system team tournaments",
               "swissrank"};
  app.require_subcommand(1);
  Options o;

  auto add_file = [&](CLI::App* sub, const std::string& what) {
    sub->add_option("--file", o.file, what)->required();
  };
  auto add_round = [&](CLI::App* sub) {
    sub->add_option("--round", o.round,
                    "Use rounds 1..ROUND (default: all played rounds)")
        ->each([&](const std::string&) { o.round_given = true; });
  };
  auto add_methods = [&](CLI::App* sub, const std::string& what) {
    sub->add_option("--method", o.methods, what);
    sub->add_option("--epsilon", o.epsilon,
                    "Default epsilon for grs specs (fractions allowed)")
        ->capture_default_str();
    sub->add_option("--lambda", o.lambda,
                    "Default match/board point blend in [0, 1]")
        ->capture_default_str();
  };
  auto add_metric = [&](CLI::App* sub) {
    sub->add_option("--metric", o.metric, "kemeny or weighted")
        ->capture_default_str();
    sub->add_option("--weights", o.weights,
                    "harmonic, uniform or a comma list of position weights")
        ->capture_default_str();
  };
  auto add_out = [&](CLI::App* sub) {
    sub->add_option("--out", o.out, "Write the report here instead of stdout");
  };
  const std::string battery_help =
      "Method specs such as ls, rowsum:1, grs:1/6:2/3; comma separated or "
      "repeated (default: the 12-ranking battery)";

  CLI::App* rank = app.add_subcommand("rank", "Ratings and ranking of one method");
  add_file(rank, "Tournament file");
  add_round(rank);
  add_methods(rank, "Method spec (default: ls)");
  add_out(rank);

  CLI::App* battery =
      app.add_subcommand("battery", "Strict rankings of several methods side by side");
  add_file(battery, "Tournament file");
  add_round(battery);
  add_methods(battery, battery_help);
  add_out(battery);

  CLI::App* distances =
      app.add_subcommand("distances", "Pairwise distances between rankings");
  add_file(distances, "Ranking table, or a tournament file to run the battery on");
  add_round(distances);
  add_methods(distances, battery_help);
  add_metric(distances);
  add_out(distances);

  CLI::App* decompose = app.add_subcommand(
      "decompose", "Positional changes along the least squares decomposition");
  add_file(decompose, "Tournament file");
  add_round(decompose);
  decompose->add_option("--lambda", o.lambda, "Match/board point blend in [0, 1]")
      ->capture_default_str();
  add_out(decompose);

  CLI::App* evaluate = app.add_subcommand(
      "evaluate", "Predictive, retrodictive and robustness tables plus scaling");
  add_file(evaluate, "Tournament file");
  add_methods(evaluate, battery_help);
  add_metric(evaluate);
  evaluate->add_option("--horizon", o.horizon,
                       "Rounds ahead for predictive scores (0: all remaining)")
      ->capture_default_str();
  add_out(evaluate);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e, out, err);
    std::string message = e.what();
    std::replace(message.begin(), message.end(), '\n', ' ');
    err << "error: " << error_code_name(ErrorCode::kBadArguments) << ": "
        << message << '\n';
    return 1;
  }

  try {
    std::ostringstream report;
    if (rank->parsed()) {
      cmd_rank(o, report);
    } else if (battery->parsed()) {
      cmd_battery(o, report, err);
    } else if (distances->parsed()) {
      cmd_distances(o, report, err);
    } else if (decompose->parsed()) {
      cmd_decompose(o, report);
    } else {
      cmd_evaluate(o, report, err);
    }
    if (o.out.empty()) {
      out << report.str();
    } else {
      std::ofstream file(o.out);
      if (!file) throw Error(ErrorCode::kBadFile, "cannot write " + o.out);
      file << report.str();
    }
  } catch (const Error& e) {
    std::string message = e.what();
    std::replace(message.begin(), message.end(), '\n', ' ');
    err << "error: " << error_code_name(e.code()) << ": " << message << '\n';
    return 1;
  } catch (const std::exception& e) {
    err << "error: Internal: " << e.what() << '\n';
    return 1;
  }
  return 0;
}

}  // namespace swissrank::cli
