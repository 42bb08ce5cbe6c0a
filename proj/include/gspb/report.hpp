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


// Per-row bound reports: every applicable bound for one channel instance,
// exact values with their floors and the embedded reference columns.

#ifndef GSPB_REPORT_HPP_
#define GSPB_REPORT_HPP_

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "gspb/channel.hpp"
#include "gspb/rational.hpp"
#include "gspb/reference.hpp"
#include "gspb/seqchannels.hpp"

namespace gspb {

enum class Column { kMB, kASPV, kClosed, kGSPB, kRef };

// "MB", "ASPV", "CLOSED", "GSPB", "REF".
std::string_view column_name(Column c);
std::optional<Column> parse_column(std::string_view name);
// Accepts a comma-separated list; throws std::invalid_argument on junk.
std::vector<Column> parse_columns(std::string_view list);

// Columns of the family's published table layout.
std::vector<Column> default_columns(Family f);

// Empty when the column can be computed for the family, otherwise the
// reason it never can.
std::string column_refusal(Family f, Column c);

struct BoundValue {
  Rational value;
  BigInt floor;
  // The integer a table shows. Equals floor except where an integrality
  // argument sharpens it (grain: code sizes are even).
  BigInt reported;
  // MB: monotonicity established. CLOSED: transversal checked feasible.
  // GSPB: exact primal/dual certificate. Always false for ASPV, which is
  // a value, not a bound.
  bool certified = false;
  std::string note;
};

enum class AbsentKind { kNone, kRefused, kCapExceeded, kInvalidParameters };

struct BoundCell {
  std::optional<BoundValue> bound;
  // Set when the column was requested but not produced.
  std::string absent_reason;
  AbsentKind absent_kind = AbsentKind::kNone;
  bool requested = false;

  bool present() const { return bound.has_value(); }
};

struct BoundReport {
  ChannelSpec spec;
  int r = 1;
  BoundCell mb;
  BoundCell aspv;
  BoundCell closed_form;
  BoundCell gspb;
  std::vector<ReferenceValue> refs;

  const BoundCell& cell(Column c) const;
  BoundCell& cell(Column c);
};

struct ReportOptions {
  std::vector<Column> columns;  // empty: default_columns(family)
  std::size_t enum_cap = kDefaultEnumerationCap;
  // Largest n for the full deletion/grain LP.
  int lp_cap = kDefaultSeqLpCap;
  // Largest n whose deletion/grain closed form is swept exhaustively.
  int sweep_cap = 16;
};

BoundReport assemble_report(const ChannelSpec& spec, int r, const ReportOptions& options = {});

// Reports for n = n_lo..n_hi of one family, computed on up to `workers`
// threads and returned in n order.
std::vector<BoundReport> assemble_table(const ChannelSpec& prototype, int r, int n_lo, int n_hi,
                                        const ReportOptions& options = {},
                                        unsigned workers = 0);

}  // namespace gspb

#endif  // GSPB_REPORT_HPP_
