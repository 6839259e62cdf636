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

#include "swissrank_cli/bundle.h"

#include <set>
#include <sstream>

#include "swissrank/error.h"

namespace swissrank::cli {
namespace {

constexpr std::string_view kArtificialRow = "#artificial";

[[noreturn]] void bad_bundle(int line, const std::string& message) {
  std::ostringstream os;
  os << "ranking table line " << line << ": " << message;
  throw Error(ErrorCode::kBadFile, os.str());
}

std::vector<std::string> split_tabs(std::string_view line) {
  std::vector<std::string> cells;
  std::size_t start = 0;
  while (true) {
    const auto tab = line.find('\t', start);
    cells.emplace_back(line.substr(start, tab - start));
    if (tab == std::string_view::npos) break;
    start = tab + 1;
  }
  return cells;
}

}  // namespace

std::string emit_bundle(const Bundle& bundle) {
  std::ostringstream os;
  os << "position";
  for (const BundleColumn& column : bundle) os << '\t' << column.name;
  os << '\n';
  std::vector<std::vector<std::string>> orders;
  for (const BundleColumn& column : bundle) {
    if (!column.ranking.is_strict()) {
      throw Error(ErrorCode::kNotStrict,
                  "column " + column.name + " is not a strict ranking");
    }
    orders.push_back(column.ranking.flatten());
  }
  const std::size_t rows = orders.empty() ? 0 : orders.front().size();
  for (std::size_t row = 0; row < rows; ++row) {
    os << row + 1;
    for (const auto& order : orders) {
      if (order.size() != rows) {
        throw Error(ErrorCode::kObjectSetMismatch,
                    "bundle columns rank different numbers of teams");
      }
      os << '\t' << order[row];
    }
    os << '\n';
  }
  os << kArtificialRow;
  for (const BundleColumn& column : bundle) os << '\t' << column.artificial;
  os << '\n';
  return os.str();
}

Bundle parse_bundle(std::string_view text) {
  std::vector<std::vector<std::string>> lines;
  std::istringstream in{std::string(text)};
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    lines.push_back(split_tabs(line));
  }
  if (lines.empty() || lines.front().front() != "position") {
    bad_bundle(1, "expected a header starting with 'position'");
  }
  const std::vector<std::string>& header = lines.front();
  if (header.size() < 2) bad_bundle(1, "no ranking columns");
  const std::size_t width = header.size();

  Bundle bundle(width - 1);
  std::set<std::string> names;
  for (std::size_t c = 1; c < width; ++c) {
    if (header[c].empty()) bad_bundle(1, "empty column name");
    if (!names.insert(header[c]).second) {
      bad_bundle(1, "duplicate column name '" + header[c] + "'");
    }
    bundle[c - 1].name = header[c];
  }

  std::vector<std::vector<std::string>> orders(width - 1);
  int expected_position = 1;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const auto& cells = lines[i];
    const int line_no = static_cast<int>(i) + 1;
    if (cells.size() != width) bad_bundle(line_no, "wrong number of cells");
    if (cells.front() == kArtificialRow) {
      if (i + 1 != lines.size()) bad_bundle(line_no, "flag row must be last");
      for (std::size_t c = 1; c < width; ++c) {
        if (cells[c] != "0" && cells[c] != "1") {
          bad_bundle(line_no, "flags must be 0 or 1");
        }
        bundle[c - 1].artificial = cells[c] == "1";
      }
      continue;
    }
    if (cells.front() != std::to_string(expected_position)) {
      bad_bundle(line_no, "positions must count up from 1");
    }
    ++expected_position;
    for (std::size_t c = 1; c < width; ++c) {
      if (cells[c].empty()) bad_bundle(line_no, "empty team name");
      orders[c - 1].push_back(cells[c]);
    }
  }
  if (expected_position == 1) bad_bundle(2, "table has no rows");

  for (std::size_t c = 0; c + 1 < width; ++c) {
    try {
      bundle[c].ranking = Ranking::strict(orders[c]);
    } catch (const Error& e) {
      bad_bundle(1, "column " + bundle[c].name + ": " + e.what());
    }
  }
  return bundle;
}

std::vector<NamedRanking> named_rankings(const Bundle& bundle) {
  std::vector<NamedRanking> out;
  for (const BundleColumn& column : bundle) {
    out.emplace_back(column.name, column.ranking);
  }
  return out;
}

}  // namespace swissrank::cli
