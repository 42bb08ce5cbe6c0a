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


// gspb: compute, tabulate and verify upper bounds on code sizes.

#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "gspb/bounds.hpp"
#include "gspb/channel.hpp"
#include "gspb/errors.hpp"
#include "gspb/exact_lp.hpp"
#include "gspb/magnitude.hpp"
#include "gspb/oracle.hpp"
#include "gspb/projective.hpp"
#include "gspb/reduction.hpp"
#include "gspb/render.hpp"
#include "gspb/report.hpp"
#include "gspb/seqchannels.hpp"
#include "gspb/zchannel.hpp"

namespace {

using namespace gspb;

constexpr int kExitOk = 0;
constexpr int kExitCheckFailed = 1;
constexpr int kExitUsage = 2;
constexpr int kExitRefused = 3;
constexpr int kExitCap = 4;

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Args {
  std::string family;
  std::string n_text;
  int r = 1;
  int q = 0;
  std::string bound = "gspb";
  std::string columns;
  std::string format = "pretty";
  std::string out_path;
  std::string weights_path;
  std::string fixture;
  int lp_cap = kDefaultSeqLpCap;
  std::size_t enum_cap = 0;
  bool exact = false;
  unsigned jobs = 0;
  std::uint64_t seed = 0;
};

std::string approx(const Rational& v, int digits = 4) {
  std::ostringstream os;
  os << std::fixed << std::setprecision(digits) << to_double(v);
  return os.str();
}

std::pair<int, int> parse_range(const std::string& text) {
  const auto dots = text.find("..");
  try {
    if (dots == std::string::npos) {
      const int n = std::stoi(text);
      return {n, n};
    }
    return {std::stoi(text.substr(0, dots)), std::stoi(text.substr(dots + 2))};
  } catch (const std::exception&) {
    throw UsageError("--n expects N or LO..HI, got '" + text + "'");
  }
}

ChannelSpec spec_from(const Args& a, int n) {
  if (!a.fixture.empty()) {
    auto f = fixture_by_name(a.fixture);
    if (!f) throw UsageError("unknown fixture '" + a.fixture + "'");
    return *f;
  }
  if (a.family.empty()) throw UsageError("--family is required");
  const auto fam = parse_family(a.family);
  if (!fam || *fam == Family::Explicit)
    throw UsageError("unknown family '" + a.family + "' (z, mag-asym, mag-sym, deletion, grain, projective)");
  ChannelSpec s;
  switch (*fam) {
    case Family::Z: s = ChannelSpec::z(n, a.r); break;
    case Family::MagAsym:
    case Family::MagSym:
      if (a.q < 2) throw UsageError("--q (at least 2) is required for magnitude channels");
      s = *fam == Family::MagAsym ? ChannelSpec::mag_asym(n, a.q) : ChannelSpec::mag_sym(n, a.q);
      s.r = a.r;
      break;
    case Family::Deletion: s = ChannelSpec::deletion(n); s.r = a.r; break;
    case Family::Grain: s = ChannelSpec::grain(n); s.r = a.r; break;
    case Family::Projective: s = ChannelSpec::projective(n); s.r = a.r; break;
    case Family::Explicit: break;
  }
  try {
    s.validate();
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  return s;
}

int single_n(const Args& a) {
  if (a.n_text.empty()) throw UsageError("--n is required");
  const auto [lo, hi] = parse_range(a.n_text);
  if (lo != hi) throw UsageError("this command takes a single --n");
  return lo;
}

ReportOptions report_options(const Args& a, std::vector<Column> columns) {
  ReportOptions o;
  o.columns = std::move(columns);
  o.lp_cap = a.lp_cap;
  if (a.enum_cap) o.enum_cap = a.enum_cap;
  return o;
}

void check_format(const std::string& f) {
  if (f != "pretty" && f != "csv" && f != "json") throw UsageError("--format must be csv, json or pretty");
}

// Writes to --out when given, else stdout.
void emit(const Args& a, const std::string& text) {
  if (a.out_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(a.out_path);
  if (!f) throw UsageError("cannot open '" + a.out_path + "' for writing");
  f << text;
}

std::string render(const Args& a, const std::vector<BoundReport>& reps, const std::vector<Column>& cols) {
  if (a.format == "json") return to_json(reps);
  if (a.format == "csv") return to_csv(reps, cols, a.exact);
  return to_pretty(reps, cols);
}

int absent_exit(const BoundCell& cell) {
  switch (cell.absent_kind) {
    case AbsentKind::kCapExceeded: return kExitCap;
    case AbsentKind::kInvalidParameters: return kExitUsage;
    default: return kExitRefused;
  }
}

int cmd_compute(const Args& a) {
  check_format(a.format);
  const auto col = parse_column(a.bound);
  if (!col || *col == Column::kRef) throw UsageError("--bound must be mb, aspv, closed or gspb");
  const ChannelSpec spec = spec_from(a, a.fixture.empty() ? single_n(a) : 0);
  const BoundReport rep = assemble_report(spec, spec.r, report_options(a, {*col}));
  const BoundCell& cell = rep.cell(*col);
  if (!cell.present()) {
    std::cerr << "gspb: " << column_name(*col) << " unavailable: " << cell.absent_reason << '\n';
    return absent_exit(cell);
  }
  if (a.format != "pretty") {
    emit(a, render(a, {rep}, {*col}));
    return kExitOk;
  }
  const BoundValue& v = *cell.bound;
  std::ostringstream os;
  os << to_string(v.reported) << '\n'
     << "exact      " << to_string(v.value) << '\n'
     << "approx     " << approx(v.value) << '\n'
     << "certified  " << (v.certified ? "yes" : "no") << '\n';
  if (v.reported != v.floor) os << "floor      " << to_string(v.floor) << '\n';
  if (!v.note.empty()) os << "note       " << v.note << '\n';
  emit(a, os.str());
  return kExitOk;
}

int cmd_table(const Args& a) {
  check_format(a.format);
  if (a.n_text.empty()) throw UsageError("--n is required (N or LO..HI)");
  const auto [lo, hi] = parse_range(a.n_text);
  if (lo > hi) throw UsageError("empty --n range");
  const ChannelSpec proto = spec_from(a, lo);
  std::vector<Column> cols;
  try {
    cols = a.columns.empty() ? default_columns(proto.family) : parse_columns(a.columns);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  for (Column c : cols) {
    if (const auto why = column_refusal(proto.family, c); !why.empty()) {
      std::cerr << "gspb: column " << column_name(c) << ": " << why << '\n';
      return kExitRefused;
    }
  }
  const auto reps = assemble_table(proto, a.r, lo, hi, report_options(a, cols), a.jobs);
  emit(a, render(a, reps, cols));
  return kExitOk;
}

std::vector<Rational> read_weights(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw UsageError("cannot read weights file '" + path + "'");
  std::vector<Rational> w;
  std::string line;
  int line_no = 0;
  while (std::getline(f, line)) {
    ++line_no;
    if (const auto hash = line.find('#'); hash != std::string::npos) line.resize(hash);
    std::istringstream ls(line);
    std::string tok;
    while (ls >> tok) {
      try {
        w.push_back(parse_rational(tok));
      } catch (const std::exception&) {
        throw UsageError("weights file line " + std::to_string(line_no) + ": bad value '" + tok + "'");
      }
    }
  }
  if (w.empty()) throw UsageError("weights file '" + path + "' holds no values");
  return w;
}

void print_slack(std::ostream& os, const FeasibilityReport& rep, const std::vector<Rational>& w) {
  std::size_t violated = 0;
  std::size_t tight = 0;
  std::optional<Rational> min_slack;
  for (const auto& s : rep.slacks) {
    if (sgn(s) < 0) ++violated;
    if (sgn(s) == 0) ++tight;
    if (!min_slack || s < *min_slack) min_slack = s;
  }
  os << "rows       " << rep.slacks.size() << " (" << violated << " violated, " << tight << " tight)\n";
  if (min_slack) os << "min slack  " << to_string(*min_slack) << '\n';
  if (rep.first_violated_row) os << "first violated row " << *rep.first_violated_row << '\n';
  if (rep.first_negative_var)
    os << "negative weight at " << *rep.first_negative_var << " ("
       << to_string(w[static_cast<std::size_t>(*rep.first_negative_var)]) << ")\n";
}

void print_value(std::ostream& os, const Rational& v) {
  os << "value " << approx(v, 2) << " (floor " << to_string(floor_of(v)) << "), exact " << to_string(v)
     << '\n';
}

int verify_file(const Args& a, const ChannelSpec& spec) {
  const auto w = read_weights(a.weights_path);
  CoveringLP lp;
  std::string form;
  if (has_quotient(spec.family)) {
    const ClassPartition part = partition_by_canonical_form(spec);
    if (w.size() == part.size()) {
      lp = quotient_matrix(spec, part, spec.r).to_covering_lp();
      form = "quotient LP, " + std::to_string(part.size()) + " classes";
    }
  }
  if (form.empty()) {
    const Hypergraph h = build_hypergraph(spec, spec.r, a.enum_cap ? a.enum_cap : kDefaultEnumerationCap);
    if (w.size() != h.num_vertices())
      throw UsageError("weights file holds " + std::to_string(w.size()) + " values; expected " +
                       std::to_string(h.num_vertices()) + " vertex weights" +
                       (has_quotient(spec.family) ? " or one weight per class" : ""));
    lp = hypergraph_lp(h);
    form = "full hypergraph, " + std::to_string(h.num_vertices()) + " vertices";
  }
  const FeasibilityReport rep = verify_transversal(lp, w);
  std::ostringstream os;
  os << (rep.feasible ? "feasible" : "infeasible") << " (" << form << ")\n";
  print_slack(os, rep, w);
  if (rep.bound) print_value(os, *rep.bound);
  emit(a, os.str());
  return rep.feasible ? kExitOk : kExitCheckFailed;
}

int verify_builtin(const Args& a, const ChannelSpec& spec) {
  std::ostringstream os;
  bool ok = true;
  const int n = spec.n;
  switch (spec.family) {
    case Family::Z: {
      const ZResult z = z_gspb(n, spec.r);
      ok = z.certified;
      os << (z_check_feasibility(z.weights).feasible ? "feasible" : "infeasible") << ", "
         << (z.certified ? "certified optimal" : "not certified") << ", ";
      print_value(os, z.value);
      break;
    }
    case Family::MagAsym:
    case Family::MagSym: {
      const bool asym = spec.family == Family::MagAsym;
      const ClassBound b = asym ? asym_improved_transversal(n, spec.q) : sym_transversal(n, spec.q);
      const LPSolution lp = asym ? asym_gspb(n, spec.q) : sym_gspb(n, spec.q);
      ok = b.feasible && lp.certified;
      os << "closed-form transversal " << (b.feasible ? "feasible" : "infeasible") << ", ";
      print_value(os, b.bound);
      os << "quotient LP " << (lp.certified ? "certified optimal" : "not certified") << ", ";
      print_value(os, lp.optimum);
      break;
    }
    case Family::Deletion:
    case Family::Grain: {
      if (n > kMaxSweepLength) throw CapExceededError("sweep limited to n <= " + std::to_string(kMaxSweepLength));
      const bool del = spec.family == Family::Deletion;
      const SweepResult s = del ? deletion_theorem_feasibility(n) : grain_theorem_feasibility(n);
      ok = s.feasible;
      os << "closed-form run weights " << (s.feasible ? "feasible" : "infeasible") << " ("
         << s.centers_checked << " balls checked)\n";
      if (s.first_violation) os << "first violated ball at word value " << *s.first_violation << '\n';
      print_value(os, del ? deletion_bound(n) : grain_bound(n));
      break;
    }
    case Family::Projective: {
      const ProjectiveResult p = projective_gspb(n);
      ok = p.certificate.certified && p.matches_lp;
      os << "greedy weights " << (p.greedy_feasible ? "feasible" : "infeasible") << ", "
         << (p.certificate.certified ? "certified optimal" : "not certified")
         << (p.certificate.used_lp_dual ? " (LP dual)" : " (block dual)") << ", ";
      print_value(os, p.matches_lp ? p.value : p.lp_optimum);
      if (!p.certificate.note.empty()) os << "note: " << p.certificate.note << '\n';
      break;
    }
    case Family::Explicit: {
      const Hypergraph h = build_hypergraph(spec, 1);
      const auto w = lemma3_transversal(spec, 1);
      const FeasibilityReport rep = verify_transversal(hypergraph_lp(h), w);
      ok = rep.feasible;
      os << "min-degree transversal " << (rep.feasible ? "feasible" : "infeasible") << '\n';
      print_slack(os, rep, w);
      if (rep.bound) print_value(os, *rep.bound);
      break;
    }
  }
  emit(a, os.str());
  return ok ? kExitOk : kExitCheckFailed;
}

int cmd_verify(const Args& a) {
  const ChannelSpec spec = spec_from(a, a.fixture.empty() ? single_n(a) : 0);
  return a.weights_path.empty() ? verify_builtin(a, spec) : verify_file(a, spec);
}

int cmd_oracle(const Args& a) {
  const ChannelSpec spec = spec_from(a, a.fixture.empty() ? single_n(a) : 0);
  const std::size_t cap = a.enum_cap ? a.enum_cap : kDefaultOracleCap;
  const OracleResult res = run_oracle(spec, spec.r, cap);
  std::ostringstream os;
  os << "tau*       " << to_string(res.tau_star_full) << " (" << approx(res.tau_star_full) << ")\n"
     << "nu         " << res.nu_integral << " (<= floor tau* = " << to_string(floor_of(res.tau_star_full))
     << ")\n"
     << "max code   " << res.max_code << '\n'
     << "witness   ";
  for (const auto& v : res.witness) os << ' ' << to_string(spec, v);
  os << '\n';
  if (spec.family == Family::Explicit) {
    const Rational asp = aspv(spec, spec.r, cap);
    const Rational spb = sphere_packing_value(spec, spec.r, cap);
    os << "ASPV       " << to_string(asp) << " (" << approx(asp) << ")\n"
       << "SPB        " << to_string(spb) << '\n';
  }
  emit(a, os.str());
  return kExitOk;
}

int cmd_fixtures(const Args& a) {
  std::ostringstream os;
  for (const auto& f : counterexample_suite()) {
    const auto spec = fixture_by_name(f.fixture);
    os << f.fixture << ": " << (spec ? spec->n : 0) << " vertices\n"
       << "  GSPB " << to_string(f.gspb) << ", SPB " << to_string(f.sphere_packing) << ", ASPV "
       << to_string(f.aspv) << ", max code " << f.max_code << '\n'
       << "  " << f.claim << ": " << (f.holds ? "holds" : "FAILS") << '\n';
  }
  emit(a, os.str());
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Upper bounds on code sizes for non-regular channels"};
  app.require_subcommand(1);
  Args a;

  auto add_instance = [&](CLI::App* cmd) {
    cmd->add_option("--family", a.family, "z, mag-asym, mag-sym, deletion, grain, projective");
    cmd->add_option("--n", a.n_text, "word length or dimension (table: N or LO..HI)");
    cmd->add_option("--r", a.r, "radius")->check(CLI::PositiveNumber);
    cmd->add_option("--q", a.q, "alphabet size (magnitude channels)");
    cmd->add_option("--lp-cap", a.lp_cap, "largest n for full deletion/grain LPs");
    cmd->add_option("--enum-cap", a.enum_cap, "largest vertex count for full enumeration");
    cmd->add_option("--out", a.out_path, "write output to FILE");
    cmd->add_option("--seed", a.seed, "reserved; nothing is randomized");
  };

  auto* compute = app.add_subcommand("compute", "compute one bound");
  add_instance(compute);
  compute->add_option("--bound", a.bound, "mb, aspv, closed or gspb");
  compute->add_option("--format", a.format, "pretty, csv or json");
  compute->add_option("--fixture", a.fixture, "built-in graph instead of a family");

  auto* table = app.add_subcommand("table", "sweep a range of n");
  add_instance(table);
  table->add_option("--columns", a.columns, "comma-separated subset of MB,ASPV,CLOSED,GSPB,REF");
  table->add_option("--format", a.format, "pretty, csv or json");
  table->add_flag("--exact", a.exact, "CSV cells as exact p/q");
  table->add_option("--jobs", a.jobs, "worker threads (0: one per core)");

  auto* verify = app.add_subcommand("verify", "check a transversal and optimality certificate");
  add_instance(verify);
  verify->add_option("--weights", a.weights_path, "file of class or vertex weights");
  verify->add_option("--fixture", a.fixture, "built-in graph instead of a family");

  auto* oracle = app.add_subcommand("oracle", "brute-force tau* and largest code");
  add_instance(oracle);
  oracle->add_option("--fixture", a.fixture, "example2, example3, example4 or example4-kK");

  auto* fixtures = app.add_subcommand("fixtures", "list the built-in counterexample graphs");
  fixtures->add_option("--out", a.out_path, "write output to FILE");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*compute) return cmd_compute(a);
    if (*table) return cmd_table(a);
    if (*verify) return cmd_verify(a);
    if (*oracle) return cmd_oracle(a);
    if (*fixtures) return cmd_fixtures(a);
  } catch (const UsageError& e) {
    std::cerr << "gspb: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "gspb: " << e.what() << '\n';
    return kExitUsage;
  } catch (const RefusalError& e) {
    std::cerr << "gspb: refused: " << e.what() << '\n';
    return kExitRefused;
  } catch (const CapExceededError& e) {
    std::cerr << "gspb: " << e.what() << '\n';
    return kExitCap;
  }
  return kExitUsage;
}
