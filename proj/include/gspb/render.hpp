// Copyright 2026 The gspb Authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


// Text forms of bound reports.
//
// JSON, one object per report:
//   {"family", "n", "r", "q",
//    "bounds": {"MB": {"num", "den", "floor", "approx", "certified", ...}},
//    "refs": {"VT65": 316}}
// CSV: header "n,<columns>,notes"; bound cells hold the reported integer
// (or "p/q" with exact output), empty when absent; REF cells hold "?"
// when absent and are followed by a REF_SOURCE column.

#ifndef GSPB_RENDER_HPP_
#define GSPB_RENDER_HPP_

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "gspb/rational.hpp"
#include "gspb/report.hpp"

namespace gspb {

std::string to_json(const std::vector<BoundReport>& reports);
std::string to_csv(const std::vector<BoundReport>& reports, const std::vector<Column>& columns,
                   bool exact = false);
std::string to_pretty(const std::vector<BoundReport>& reports, const std::vector<Column>& columns);

struct ParsedRow {
  int n = 0;
  // Keyed by column name; nullopt for empty or "?" cells.
  std::map<std::string, std::optional<Rational>> values;
  std::map<std::string, std::string> text;  // REF_SOURCE and notes
};

// Inverse of to_csv. Throws std::invalid_argument on malformed input.
std::vector<ParsedRow> parse_csv(std::string_view csv);

}  // namespace gspb

#endif  // GSPB_RENDER_HPP_
