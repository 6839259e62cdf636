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
#include "swissrank/tournament_file.h"

#include <fstream>
#include <sstream>

#include "json.hpp"
#include "swissrank/error.h"

namespace swissrank {
namespace {

using Json = nlohmann::ordered_json;

[[noreturn]] void bad_file(const std::string& message) {
  throw Error(ErrorCode::kBadFile, message);
}

const Json& require(const Json& object, const char* key) {
  if (!object.is_object() || !object.contains(key)) {
    bad_file(std::string("missing field '") + key + "'");
  }
  return object.at(key);
}

std::string require_string(const Json& value, const char* what) {
  if (!value.is_string()) bad_file(std::string(what) + " must be a string");
  return value.get<std::string>();
}

std::vector<std::string> string_list(const Json& value, const char* what) {
  if (!value.is_array()) bad_file(std::string(what) + " must be a list");
  std::vector<std::string> items;
  for (const Json& item : value) items.push_back(require_string(item, what));
  return items;
}

}  // namespace

TournamentLog parse_tournament(std::string_view text) {
  Json doc;
  try {
    doc = Json::parse(text.begin(), text.end());
  } catch (const Json::parse_error& e) {
    bad_file(std::string("not valid JSON: ") + e.what());
  }
  if (!doc.is_object()) bad_file("top level must be an object");

  const Json& version = require(doc, "format_version");
  if (!version.is_number_integer() ||
      version.get<int>() != kTournamentFormatVersion) {
    bad_file("unsupported format_version (expected 1)");
  }
  std::vector<std::string> teams = string_list(require(doc, "teams"), "teams");
  const Json& t = require(doc, "t");
  if (!t.is_number_integer()) bad_file("t must be an integer");

  const Json& rounds_json = require(doc, "rounds");
  if (!rounds_json.is_array()) bad_file("rounds must be a list");
  std::vector<TournamentRound> rounds;
  for (const Json& round_json : rounds_json) {
    if (!round_json.is_array()) bad_file("each round must be a list");
    TournamentRound round;
    for (const Json& match : round_json) {
      const Json& bp = require(match, "bp_home");
      if (!bp.is_number()) bad_file("bp_home must be a number");
      round.push_back({require_string(require(match, "home"), "home"),
                       require_string(require(match, "away"), "away"),
                       bp.get<double>()});
    }
    rounds.push_back(std::move(round));
  }

  ExogenousRankings exogenous;
  if (doc.contains("exogenous_rankings")) {
    const Json& rankings = doc.at("exogenous_rankings");
    if (!rankings.is_object()) bad_file("exogenous_rankings must be an object");
    for (const auto& [name, order] : rankings.items()) {
      exogenous.emplace_back(name, string_list(order, "exogenous ranking"));
    }
  }
  return TournamentLog(std::move(teams), t.get<int>(), std::move(rounds),
                       std::move(exogenous));
}

TournamentLog read_tournament_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) bad_file("cannot open " + path.string());
  std::ostringstream contents;
  contents << in.rdbuf();
  return parse_tournament(contents.str());
}

std::string emit_tournament(const TournamentLog& log) {
  Json doc;
  doc["format_version"] = kTournamentFormatVersion;
  doc["teams"] = log.teams();
  doc["t"] = log.half_boards();
  Json rounds = Json::array();
  for (const TournamentRound& round : log.rounds()) {
    Json matches = Json::array();
    for (const MatchResult& match : round) {
      matches.push_back({{"home", match.home},
                         {"away", match.away},
                         {"bp_home", match.board_points_home}});
    }
    rounds.push_back(std::move(matches));
  }
  doc["rounds"] = std::move(rounds);
  if (!log.exogenous_rankings().empty()) {
    Json rankings = Json::object();
    for (const auto& [name, order] : log.exogenous_rankings()) {
      rankings[name] = order;
    }
    doc["exogenous_rankings"] = std::move(rankings);
  }
  return doc.dump(2) + "\n";
}

void write_tournament_file(const TournamentLog& log,
                           const std::filesystem::path& path) {
  std::ofstream out(path);
  if (!out) bad_file("cannot write " + path.string());
  out << emit_tournament(log);
}

}  // namespace swissrank
