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


#include "gspb/render.hpp"

#include <algorithm>
#include <iomanip>
#include <sstream>
#include <stdexcept>

#include <nlohmann/json.hpp>

namespace gspb {
namespace {

using nlohmann::ordered_json;

constexpr std::string_view kAspvNote = "value, not bound";

std::string pretty_header(Column c) { return c == Column::kClosed ? "Theorem" : std::string(column_name(c)); }

std::string ref_header(const std::vector<BoundReport>& reports) {
  std::string name;
  for (const auto& r : reports)
    for (const auto& ref : r.refs) {
      if (name.empty()) name = ref.source;
      else if (name != ref.source) return "LB";
    }
  return name.empty() ? "REF" : name;
}

std::string csv_quote(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

std::vector<std::string> csv_split(std::string_view line) {
  std::vector<std::string> out;
  std::string cur;
  bool quoted = false;
  for (std::size_t i = 0; i < line.size(); ++i) {
    const char c = line[i];
    if (quoted) {
      if (c == '"' && i + 1 < line.size() && line[i + 1] == '"') {
        cur += '"';
        ++i;
      } else if (c == '"') {
        quoted = false;
      } else {
        cur += c;
      }
    } else if (c == '"') {
      quoted = true;
    } else if (c == ',') {
      out.push_back(std::move(cur));
      cur.clear();
    } else {
      cur += c;
    }
  }
  if (quoted) throw std::invalid_argument("unterminated quoted CSV field");
  out.push_back(std::move(cur));
  return out;
}

std::string row_notes(const BoundReport& rep, const std::vector<Column>& columns) {
  std::string out;
  for (Column c : columns) {
    if (c == Column::kRef) continue;
    const BoundCell& cell = rep.cell(c);
    std::string msg;
    if (cell.requested && !cell.present()) msg = cell.absent_reason;
    else if (cell.present() && cell.bound->note != kAspvNote) msg = cell.bound->note;
    if (msg.empty()) continue;
    if (!out.empty()) out += "; ";
    out += std::string(column_name(c)) + ": " + msg;
  }
  return out;
}

}  // namespace

std::string to_json(const std::vector<BoundReport>& reports) {
  ordered_json arr = ordered_json::array();
  for (const auto& rep : reports) {
    ordered_json j;
    j["family"] = family_name(rep.spec.family);
    j["n"] = rep.spec.n;
    j["r"] = rep.r;
    j["q"] = rep.spec.q;
    ordered_json bounds = ordered_json::object();
    for (Column c : {Column::kMB, Column::kASPV, Column::kClosed, Column::kGSPB}) {
      const BoundCell& cell = rep.cell(c);
      if (!cell.requested) continue;
      ordered_json b;
      if (cell.present()) {
        const BoundValue& v = *cell.bound;
        b["num"] = to_string(BigInt(v.value.get_num()));
        b["den"] = to_string(BigInt(v.value.get_den()));
        b["floor"] = to_string(v.floor);
        if (v.reported != v.floor) b["reported"] = to_string(v.reported);
        b["approx"] = to_double(v.value);
        b["certified"] = v.certified;
        if (!v.note.empty()) b["note"] = v.note;
      } else {
        b["absent"] = cell.absent_reason;
      }
      bounds[std::string(column_name(c))] = std::move(b);
    }
    j["bounds"] = std::move(bounds);
    ordered_json refs = ordered_json::object();
    for (const auto& ref : rep.refs) {
      if (ref.value) refs[ref.source] = *ref.value;
      else refs[ref.source] = "?";
    }
    j["refs"] = std::move(refs);
    arr.push_back(std::move(j));
  }
  return arr.dump(2) + "\n";
}

std::string to_csv(const std::vector<BoundReport>& reports, const std::vector<Column>& columns,
                   bool exact) {
  std::ostringstream out;
  out << "n";
  for (Column c : columns) {
    out << ',' << column_name(c);
    if (c == Column::kRef) out << ",REF_SOURCE";
  }
  out << ",notes\n";
  for (const auto& rep : reports) {
    out << rep.spec.n;
    for (Column c : columns) {
      out << ',';
      if (c == Column::kRef) {
        if (rep.refs.empty()) out << "?,";
        else out << render_reference(rep.refs.front()) << ',' << csv_quote(rep.refs.front().source);
        continue;
      }
      const BoundCell& cell = rep.cell(c);
      if (!cell.present()) continue;
      out << (exact ? to_string(cell.bound->value) : to_string(cell.bound->reported));
    }
    out << ',' << csv_quote(row_notes(rep, columns)) << '\n';
  }
  return out.str();
}

std::string to_pretty(const std::vector<BoundReport>& reports, const std::vector<Column>& columns) {
  std::vector<std::string> header{"n"};
  for (Column c : columns) header.push_back(c == Column::kRef ? ref_header(reports) : pretty_header(c));
  std::vector<std::vector<std::string>> rows;
  std::vector<std::string> footnotes;
  for (const auto& rep : reports) {
    std::vector<std::string> row{std::to_string(rep.spec.n)};
    for (Column c : columns) {
      if (c == Column::kRef) {
        row.push_back(rep.refs.empty() ? "?" : render_reference(rep.refs.front()));
        continue;
      }
      const BoundCell& cell = rep.cell(c);
      if (!cell.present()) {
        row.push_back("-");
        footnotes.push_back("n=" + std::to_string(rep.spec.n) + " " + pretty_header(c) + ": " +
                            cell.absent_reason);
        continue;
      }
      std::string text = to_string(cell.bound->reported);
      if (c == Column::kGSPB && !cell.bound->note.empty()) {
        text += "*";
        footnotes.push_back("n=" + std::to_string(rep.spec.n) + " GSPB: " + cell.bound->note);
      }
      row.push_back(std::move(text));
    }
    rows.push_back(std::move(row));
  }
  std::vector<std::size_t> width(header.size(), 0);
  for (std::size_t i = 0; i < header.size(); ++i) width[i] = header[i].size();
  for (const auto& row : rows)
    for (std::size_t i = 0; i < row.size(); ++i) width[i] = std::max(width[i], row[i].size());
  std::ostringstream out;
  auto emit = [&](const std::vector<std::string>& row) {
    for (std::size_t i = 0; i < row.size(); ++i) {
      if (i) out << "  ";
      out << std::setw(static_cast<int>(width[i])) << row[i];
    }
    out << '\n';
  };
  emit(header);
  std::size_t total = 0;
  for (auto w : width) total += w;
  out << std::string(total + 2 * (width.size() - 1), '-') << '\n';
  for (const auto& row : rows) emit(row);
  for (const auto& f : footnotes) out << "  " << f << '\n';
  return out.str();
}

std::vector<ParsedRow> parse_csv(std::string_view csv) {
  std::vector<std::string_view> lines;
  while (!csv.empty()) {
    const auto nl = csv.find('\n');
    lines.push_back(csv.substr(0, nl));
    if (nl == std::string_view::npos) break;
    csv.remove_prefix(nl + 1);
  }
  if (lines.empty()) throw std::invalid_argument("empty CSV");
  const auto header = csv_split(lines.front());
  if (header.empty() || header.front() != "n") throw std::invalid_argument("CSV header must start with n");
  std::vector<ParsedRow> rows;
  for (std::size_t li = 1; li < lines.size(); ++li) {
    if (lines[li].empty()) continue;
    const auto cells = csv_split(lines[li]);
    if (cells.size() != header.size())
      throw std::invalid_argument("CSV row " + std::to_string(li) + " has the wrong field count");
    ParsedRow row;
    try {
      row.n = std::stoi(cells[0]);
    } catch (const std::exception&) {
      throw std::invalid_argument("bad n in CSV row " + std::to_string(li));
    }
    for (std::size_t i = 1; i < cells.size(); ++i) {
      if (header[i] == "REF_SOURCE" || header[i] == "notes") {
        row.text[header[i]] = cells[i];
        continue;
      }
      if (cells[i].empty() || cells[i] == "?") row.values[header[i]] = std::nullopt;
      else row.values[header[i]] = parse_rational(cells[i]);
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace gspb
