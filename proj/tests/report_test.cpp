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


#include "gspb/report.hpp"

#include <nlohmann/json.hpp>

#include <gtest/gtest.h>

#include "gspb/render.hpp"
#include "gspb/zchannel.hpp"

namespace gspb {
namespace {

const std::vector<Column> kAll{Column::kMB, Column::kASPV, Column::kClosed, Column::kGSPB, Column::kRef};

TEST(Columns, NamesRoundTrip) {
  for (Column c : kAll) EXPECT_EQ(parse_column(column_name(c)), c);
  EXPECT_EQ(parse_column("gspb"), Column::kGSPB);
  EXPECT_FALSE(parse_column("LB").has_value());
  EXPECT_EQ(parse_columns("mb,GSPB"), (std::vector<Column>{Column::kMB, Column::kGSPB}));
  EXPECT_THROW(parse_columns("MB,,GSPB"), std::invalid_argument);
  EXPECT_THROW(parse_columns("MB,XYZ"), std::invalid_argument);
}

TEST(Columns, FamilyLayouts) {
  EXPECT_EQ(default_columns(Family::Z), (std::vector<Column>{Column::kMB, Column::kASPV, Column::kGSPB, Column::kRef}));
  EXPECT_EQ(default_columns(Family::Deletion), kAll);
  EXPECT_FALSE(column_refusal(Family::MagSym, Column::kMB).empty());
  EXPECT_FALSE(column_refusal(Family::Explicit, Column::kRef).empty());
  EXPECT_TRUE(column_refusal(Family::Z, Column::kMB).empty());
}

TEST(Report, ZTenBits) {
  const BoundReport rep = assemble_report(ChannelSpec::z(10), 1);
  ASSERT_TRUE(rep.gspb.present());
  EXPECT_EQ(rep.gspb.bound->value, make_rational(89393, 560));
  EXPECT_EQ(rep.gspb.bound->floor, 159);
  EXPECT_EQ(rep.gspb.bound->reported, 159);
  EXPECT_TRUE(rep.gspb.bound->certified);
  ASSERT_TRUE(rep.aspv.present());
  EXPECT_FALSE(rep.aspv.bound->certified);
  EXPECT_FALSE(rep.closed_form.requested);
  ASSERT_EQ(rep.refs.size(), 1u);
  EXPECT_EQ(rep.refs[0].source, "WVB88");
}

TEST(Report, GrainUsesParity) {
  ReportOptions o;
  o.columns = {Column::kMB, Column::kClosed};
  const BoundReport rep = assemble_report(ChannelSpec::grain(9), 1, o);
  ASSERT_TRUE(rep.closed_form.present());
  EXPECT_EQ(rep.closed_form.bound->reported, parity_floor(grain_bound(9)));
  EXPECT_EQ(rep.closed_form.bound->floor, floor_of(grain_bound(9)));
  EXPECT_TRUE(rep.closed_form.bound->certified);
  EXPECT_EQ(rep.mb.bound->reported, floor_of(grain_mb(9, true)));
}

TEST(Report, AbsentCellsCarryReasons) {
  ReportOptions o;
  o.columns = kAll;
  const BoundReport sym = assemble_report(ChannelSpec::mag_sym(4, 3), 1, o);
  EXPECT_FALSE(sym.mb.present());
  EXPECT_EQ(sym.mb.absent_kind, AbsentKind::kRefused);
  EXPECT_FALSE(sym.mb.absent_reason.empty());

  o.lp_cap = 10;
  o.sweep_cap = 10;
  const BoundReport del = assemble_report(ChannelSpec::deletion(11), 1, o);
  EXPECT_EQ(del.gspb.absent_kind, AbsentKind::kCapExceeded);
  ASSERT_TRUE(del.closed_form.present());
  EXPECT_FALSE(del.closed_form.bound->certified);

  const BoundReport proj = assemble_report(ChannelSpec::projective(1), 1, o);
  EXPECT_EQ(proj.gspb.absent_kind, AbsentKind::kInvalidParameters);
}

TEST(ReportProperty, GspbBelowClosedBelowMb) {
  ReportOptions o;
  o.columns = kAll;
  std::vector<BoundReport> reps;
  for (int n = 2; n <= 9; ++n) {
    reps.push_back(assemble_report(ChannelSpec::z(n), 1, o));
    reps.push_back(assemble_report(ChannelSpec::deletion(n), 1, o));
    reps.push_back(assemble_report(ChannelSpec::grain(n), 1, o));
    reps.push_back(assemble_report(ChannelSpec::projective(n), 1, o));
  }
  for (int n = 1; n <= 5; ++n) {
    reps.push_back(assemble_report(ChannelSpec::mag_asym(n, 3), 1, o));
    reps.push_back(assemble_report(ChannelSpec::mag_sym(n, 4), 1, o));
  }
  for (const auto& r : reps) {
    const std::string what = std::string(family_name(r.spec.family)) + " n=" + std::to_string(r.spec.n);
    ASSERT_TRUE(r.gspb.present()) << what;
    EXPECT_TRUE(r.gspb.bound->certified) << what;
    if (r.closed_form.present() && r.closed_form.bound->certified) {
      EXPECT_LE(r.gspb.bound->value, r.closed_form.bound->value) << what;
    }
    if (r.mb.present()) {
      EXPECT_LE(r.gspb.bound->value, r.mb.bound->value) << what;
    }
    for (const BoundCell* c : {&r.mb, &r.aspv, &r.closed_form, &r.gspb})
      if (c->present()) {
        EXPECT_EQ(c->bound->floor, floor_of(c->bound->value)) << what;
      }
  }
}

TEST(Render, CsvRoundTripExact) {
  const auto reps = assemble_table(ChannelSpec::deletion(2), 1, 4, 9, {}, 2);
  const auto rows = parse_csv(to_csv(reps, kAll, true));
  ASSERT_EQ(rows.size(), reps.size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    EXPECT_EQ(rows[i].n, reps[i].spec.n);
    for (Column c : {Column::kMB, Column::kASPV, Column::kClosed, Column::kGSPB}) {
      const auto& cell = reps[i].cell(c);
      const auto& got = rows[i].values.at(std::string(column_name(c)));
      ASSERT_EQ(got.has_value(), cell.present());
      if (got) {
        EXPECT_EQ(*got, cell.bound->value);
      }
    }
    EXPECT_EQ(rows[i].text.at("REF_SOURCE"), rows[i].n >= 5 ? "VT65" : "");
  }
}

TEST(Render, CsvIntegersAndUnknownReference) {
  const auto reps = assemble_table(ChannelSpec::z(2), 1, 23, 24);
  const std::string csv = to_csv(reps, default_columns(Family::Z));
  EXPECT_EQ(csv.substr(0, csv.find('\n')), "n,MB,ASPV,GSPB,REF,REF_SOURCE,notes");
  const auto rows = parse_csv(csv);
  ASSERT_EQ(rows.size(), 2u);
  EXPECT_EQ(rows[0].values.at("GSPB"), Rational(647131));
  EXPECT_EQ(rows[0].values.at("REF"), Rational(523586));
  EXPECT_FALSE(rows[1].values.at("REF").has_value());
  EXPECT_NE(csv.find(",?,"), std::string::npos);
  EXPECT_THROW(parse_csv("n,MB\n3,x/y\n"), std::invalid_argument);
}

TEST(Render, JsonFields) {
  ReportOptions o;
  o.columns = kAll;
  const auto reps = assemble_table(ChannelSpec::grain(2), 1, 6, 7, o);
  const auto j = nlohmann::json::parse(to_json(reps));
  ASSERT_TRUE(j.is_array());
  ASSERT_EQ(j.size(), 2u);
  EXPECT_EQ(j[0]["family"], "grain");
  EXPECT_EQ(j[0]["n"], 6);
  const auto& closed = j[0]["bounds"]["CLOSED"];
  EXPECT_EQ(closed["certified"], true);
  EXPECT_EQ(parse_rational(closed["num"].get<std::string>() + "/" + closed["den"].get<std::string>()),
            grain_bound(6));
  EXPECT_TRUE(j[0]["bounds"]["GSPB"].contains("num"));
  EXPECT_FALSE(j[0]["bounds"]["ASPV"]["certified"].get<bool>());
  EXPECT_TRUE(j[0]["refs"].is_object());
}

TEST(Render, PrettyMarksAbsentCells) {
  ReportOptions o;
  o.columns = {Column::kMB, Column::kGSPB};
  const std::string s = to_pretty(assemble_table(ChannelSpec::mag_sym(2, 3), 1, 2, 3, o), o.columns);
  EXPECT_NE(s.find("MB"), std::string::npos);
  EXPECT_NE(s.find('-'), std::string::npos);
}

TEST(ReportProperty, TableIsDeterministicAcrossWorkers) {
  ReportOptions o;
  o.columns = kAll;
  const auto one = to_json(assemble_table(ChannelSpec::grain(2), 1, 2, 10, o, 1));
  const auto many = to_json(assemble_table(ChannelSpec::grain(2), 1, 2, 10, o, 6));
  EXPECT_EQ(one, many);
  const auto reps = assemble_table(ChannelSpec::z(2), 2, 3, 12, {}, 4);
  for (std::size_t i = 0; i < reps.size(); ++i) {
    EXPECT_EQ(reps[i].spec.n, static_cast<int>(i) + 3);
    EXPECT_EQ(reps[i].r, 2);
  }
}

}  // namespace
}  // namespace gspb
