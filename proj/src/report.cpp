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

#include <algorithm>
#include <atomic>
#include <exception>
#include <functional>
#include <stdexcept>
#include <thread>

#include "gspb/bounds.hpp"
#include "gspb/errors.hpp"
#include "gspb/exact_lp.hpp"
#include "gspb/magnitude.hpp"
#include "gspb/projective.hpp"
#include "gspb/reduction.hpp"
#include "gspb/zchannel.hpp"

namespace gspb {
namespace {

constexpr Column kAllColumns[] = {Column::kMB, Column::kASPV, Column::kClosed, Column::kGSPB,
                                  Column::kRef};

BoundValue make_value(Rational v, bool certified, std::string note = {}) {
  BoundValue b;
  b.floor = floor_of(v);
  b.reported = b.floor;
  b.value = std::move(v);
  b.certified = certified;
  b.note = std::move(note);
  return b;
}

void fill(BoundCell& cell, const std::function<BoundValue()>& compute) {
  cell.requested = true;
  try {
    cell.bound = compute();
  } catch (const RefusalError& e) {
    cell.absent_reason = e.what();
    cell.absent_kind = AbsentKind::kRefused;
  } catch (const CapExceededError& e) {
    cell.absent_reason = e.what();
    cell.absent_kind = AbsentKind::kCapExceeded;
  } catch (const std::invalid_argument& e) {
    cell.absent_reason = e.what();
    cell.absent_kind = AbsentKind::kInvalidParameters;
  }
}

std::string sweep_note(int n, int sweep_cap) {
  return "feasibility not swept above n=" + std::to_string(sweep_cap) + " (n=" + std::to_string(n) + ")";
}

BoundValue mb_value(const ChannelSpec& spec, int r, const ReportOptions& opt) {
  if (const auto why = column_refusal(spec.family, Column::kMB); !why.empty()) throw RefusalError(why);
  if (spec.family == Family::Grain && r == 1) {
    BoundValue b = make_value(grain_mb(spec.n), true);
    b.reported = floor_of(grain_mb(spec.n, true));
    if (b.reported != b.floor) b.note = "even code size";
    return b;
  }
  return make_value(monotonicity_bound(spec, r, opt.enum_cap), true);
}

BoundValue closed_value(const ChannelSpec& spec, int r, const ReportOptions& opt) {
  const int n = spec.n;
  switch (spec.family) {
    case Family::Z: {
      const ZWeights w = z_weights_recursive(n, r);
      return make_value(z_objective(n, w.w), z_check_feasibility(w).feasible);
    }
    case Family::Deletion: {
      const bool swept = n <= opt.sweep_cap;
      const bool ok = swept && deletion_theorem_feasibility(n).feasible;
      return make_value(deletion_bound(n), ok, swept ? "" : sweep_note(n, opt.sweep_cap));
    }
    case Family::Explicit: {
      const Hypergraph h = build_hypergraph(spec, r, opt.enum_cap);
      const auto w = lemma3_transversal(spec, r, opt.enum_cap);
      const auto rep = verify_transversal(hypergraph_lp(h), w);
      return make_value(rep.bound.value_or(sum(w)), rep.feasible);
    }
    default:
      break;
  }
  if (r != 1) throw RefusalError("closed-form transversal only for r = 1");
  switch (spec.family) {
    case Family::MagAsym: {
      const ClassBound b = asym_improved_transversal(n, spec.q);
      return make_value(b.bound, b.feasible);
    }
    case Family::MagSym: {
      const ClassBound b = sym_transversal(n, spec.q);
      return make_value(b.bound, b.feasible);
    }
    case Family::Grain: {
      const bool swept = n <= opt.sweep_cap;
      const bool ok = swept && grain_theorem_feasibility(n).feasible;
      const Rational v = grain_bound(n);
      BoundValue b = make_value(v, ok, swept ? "" : sweep_note(n, opt.sweep_cap));
      b.reported = parity_floor(v);
      if (b.reported != b.floor) b.note = b.note.empty() ? "even code size" : b.note + "; even code size";
      return b;
    }
    case Family::Projective: {
      const ClosedFormWeights cf = closed_form_weights(n);
      std::string note;
      if (!cf.mismatches.empty()) {
        note = "differs from greedy weights at k =";
        for (int k : cf.mismatches) note += " " + std::to_string(k);
      }
      return make_value(projective_objective(n, cf.weights.w), cf.weights.feasible, note);
    }
    default:
      throw std::logic_error("closed_value: unhandled family");
  }
}

BoundValue lp_value(const LPSolution& s) { return make_value(s.optimum, s.certified); }

BoundValue gspb_value(const ChannelSpec& spec, int r, const ReportOptions& opt) {
  const int n = spec.n;
  switch (spec.family) {
    case Family::Z: {
      const ZResult z = z_gspb(n, r);
      return make_value(z.value, z.certified, z.path == ZPath::kLPFallback ? "quotient LP fallback" : "");
    }
    case Family::Deletion:
    case Family::Grain: {
      if (r != 1) break;
      const FullLPResult res = spec.family == Family::Deletion ? deletion_full_gspb(n, opt.lp_cap)
                                                               : grain_full_gspb(n, opt.lp_cap);
      if (!res.solution) throw CapExceededError(res.absent_reason);
      return lp_value(*res.solution);
    }
    case Family::Explicit:
      return lp_value(solve_min_transversal(hypergraph_lp(build_hypergraph(spec, r, opt.enum_cap))));
    default:
      break;
  }
  if (r == 1) {
    switch (spec.family) {
      case Family::MagAsym:
        return lp_value(asym_gspb(n, spec.q));
      case Family::MagSym:
        return lp_value(sym_gspb(n, spec.q));
      case Family::Projective: {
        const ProjectiveResult p = projective_gspb(n);
        if (p.matches_lp) return make_value(p.value, p.certificate.certified);
        return make_value(p.lp_optimum, p.certificate.certified,
                          "greedy weights infeasible; exact LP optimum shown");
      }
      default:
        break;
    }
  }
  if (has_quotient(spec.family)) return lp_value(reduced_gspb(spec, r));
  return lp_value(solve_min_transversal(hypergraph_lp(build_hypergraph(spec, r, opt.enum_cap))));
}

}  // namespace

std::string_view column_name(Column c) {
  switch (c) {
    case Column::kMB: return "MB";
    case Column::kASPV: return "ASPV";
    case Column::kClosed: return "CLOSED";
    case Column::kGSPB: return "GSPB";
    case Column::kRef: return "REF";
  }
  return "?";
}

std::optional<Column> parse_column(std::string_view name) {
  std::string upper(name);
  std::transform(upper.begin(), upper.end(), upper.begin(),
                 [](unsigned char ch) { return static_cast<char>(std::toupper(ch)); });
  for (Column c : kAllColumns)
    if (column_name(c) == upper) return c;
  return std::nullopt;
}

std::vector<Column> parse_columns(std::string_view list) {
  std::vector<Column> out;
  while (!list.empty()) {
    const auto comma = list.find(',');
    const auto item = list.substr(0, comma);
    const auto c = parse_column(item);
    if (!c) throw std::invalid_argument("unknown column '" + std::string(item) + "'");
    if (std::find(out.begin(), out.end(), *c) == out.end()) out.push_back(*c);
    if (comma == std::string_view::npos) break;
    list.remove_prefix(comma + 1);
  }
  return out;
}

std::vector<Column> default_columns(Family f) {
  switch (f) {
    case Family::Z:
      return {Column::kMB, Column::kASPV, Column::kGSPB, Column::kRef};
    case Family::MagAsym:
      return {Column::kMB, Column::kASPV, Column::kClosed, Column::kGSPB};
    case Family::MagSym:
      return {Column::kASPV, Column::kClosed, Column::kGSPB};
    case Family::Deletion:
      return {Column::kMB, Column::kASPV, Column::kClosed, Column::kGSPB, Column::kRef};
    case Family::Grain:
      return {Column::kMB, Column::kASPV, Column::kClosed, Column::kRef};
    case Family::Projective:
      return {Column::kASPV, Column::kGSPB, Column::kRef};
    case Family::Explicit:
      return {Column::kMB, Column::kASPV, Column::kClosed, Column::kGSPB};
  }
  return {};
}

std::string column_refusal(Family f, Column c) {
  if (c == Column::kMB && f == Family::MagSym) return "monotonicity bound refused: graph is not monotone";
  if (c == Column::kRef && (f == Family::MagAsym || f == Family::MagSym || f == Family::Explicit))
    return "no reference column for this family";
  return {};
}

const BoundCell& BoundReport::cell(Column c) const {
  switch (c) {
    case Column::kMB: return mb;
    case Column::kASPV: return aspv;
    case Column::kClosed: return closed_form;
    case Column::kGSPB: return gspb;
    case Column::kRef: break;
  }
  throw std::invalid_argument("REF is not a bound column");
}

BoundCell& BoundReport::cell(Column c) {
  return const_cast<BoundCell&>(std::as_const(*this).cell(c));
}

BoundReport assemble_report(const ChannelSpec& spec, int r, const ReportOptions& options) {
  ChannelSpec s = spec;
  s.r = r;
  s.validate();
  BoundReport rep;
  rep.spec = s;
  rep.r = r;
  const auto columns = options.columns.empty() ? default_columns(s.family) : options.columns;
  for (Column c : columns) {
    switch (c) {
      case Column::kMB:
        fill(rep.mb, [&] { return mb_value(s, r, options); });
        break;
      case Column::kASPV:
        fill(rep.aspv, [&] { return make_value(aspv(s, r, options.enum_cap), false, "value, not bound"); });
        break;
      case Column::kClosed:
        fill(rep.closed_form, [&] { return closed_value(s, r, options); });
        break;
      case Column::kGSPB:
        fill(rep.gspb, [&] { return gspb_value(s, r, options); });
        break;
      case Column::kRef:
        rep.refs = reference_values(s.family, s.n, r);
        break;
    }
  }
  return rep;
}

std::vector<BoundReport> assemble_table(const ChannelSpec& prototype, int r, int n_lo, int n_hi,
                                        const ReportOptions& options, unsigned workers) {
  if (n_lo > n_hi) throw std::invalid_argument("empty n range");
  const auto count = static_cast<std::size_t>(n_hi - n_lo + 1);
  std::vector<std::optional<BoundReport>> slots(count);
  std::vector<std::exception_ptr> errors(count);
  std::atomic<std::size_t> next{0};
  auto work = [&] {
    for (std::size_t i = next++; i < count; i = next++) {
      ChannelSpec s = prototype;
      s.n = n_lo + static_cast<int>(i);
      try {
        slots[i] = assemble_report(s, r, options);
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };
  if (workers == 0) workers = std::max(1u, std::thread::hardware_concurrency());
  workers = static_cast<unsigned>(std::min<std::size_t>(workers, count));
  {
    std::vector<std::jthread> pool;
    for (unsigned t = 1; t < workers; ++t) pool.emplace_back(work);
    work();
  }
  std::vector<BoundReport> out;
  out.reserve(count);
  for (std::size_t i = 0; i < count; ++i) {
    if (errors[i]) std::rethrow_exception(errors[i]);
    out.push_back(std::move(*slots[i]));
  }
  return out;
}

}  // namespace gspb
