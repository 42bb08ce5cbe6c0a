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

#include "gspb/exact_lp.hpp"

#include <algorithm>
#include <istream>
#include <map>
#include <numeric>
#include <ostream>
#include <set>
#include <sstream>
#include <stdexcept>

#include "lp/packing_form.hpp"
#include "lp/simplex.hpp"

namespace gspb {

void CoveringLP::validate() const {
  if (num_vars < 0 || objective.size() != static_cast<std::size_t>(num_vars))
    throw std::invalid_argument("objective length differs from num_vars");
  for (const auto& c : objective)
    if (c < 0) throw std::invalid_argument("negative objective coefficient");
  for (const auto& row : rows) {
    if (row.empty()) throw std::invalid_argument("empty covering row");
    std::set<int> seen;
    for (const auto& [j, a] : row) {
      if (j < 0 || j >= num_vars) throw std::invalid_argument("row index out of range");
      if (!seen.insert(j).second) throw std::invalid_argument("repeated index in row");
      if (a < 0) throw std::invalid_argument("negative coefficient");
    }
  }
}

CoveringLP hypergraph_lp(const Hypergraph& h) {
  CoveringLP lp;
  lp.num_vars = static_cast<int>(h.num_vertices());
  lp.objective.assign(h.num_vertices(), Rational(1));
  lp.rows.reserve(h.num_edges());
  for (const auto& e : h.edges) {
    SparseRow row;
    row.reserve(e.size());
    for (int v : e) row.emplace_back(v, Rational(1));
    lp.rows.push_back(std::move(row));
  }
  return lp;
}

std::string_view status_name(LPStatus s) {
  switch (s) {
    case LPStatus::kOptimal: return "optimal";
    case LPStatus::kInfeasible: return "infeasible";
    case LPStatus::kUnbounded: return "unbounded";
    case LPStatus::kPivotLimit: return "pivot-limit";
  }
  return "?";
}

namespace lp {

PackingForm make_packing_form(const CoveringLP& lp) {
  PackingForm pf;
  pf.m = lp.num_vars;
  pf.k = static_cast<int>(lp.rows.size());
  pf.scale.assign(static_cast<std::size_t>(pf.m), 1);
  for (std::size_t v = 0; v < pf.scale.size(); ++v)
    pf.scale[v] = lp.objective[v].get_den();
  for (const auto& row : lp.rows) {
    for (const auto& [v, a] : row) {
      auto& s = pf.scale[static_cast<std::size_t>(v)];
      s = lcm(s, a.get_den());
    }
  }
  pf.columns.reserve(lp.rows.size());
  for (const auto& row : lp.rows) {
    IntColumn col;
    for (const auto& [v, a] : row) {
      if (a == 0) continue;
      Rational scaled = a * pf.scale[static_cast<std::size_t>(v)];
      col.emplace_back(v, scaled.get_num());
    }
    pf.columns.push_back(std::move(col));
  }
  pf.rhs.resize(static_cast<std::size_t>(pf.m));
  for (std::size_t v = 0; v < pf.rhs.size(); ++v) {
    Rational scaled = lp.objective[v] * pf.scale[v];
    pf.rhs[v] = scaled.get_num();
  }
  return pf;
}

}  // namespace lp

namespace {

LPSolution solve_both(const CoveringLP& lp, const SolveOptions& opts) {
  lp.validate();
  const lp::PackingForm pf = lp::make_packing_form(lp);
  LPSolution sol;
  std::vector<int> warm;
  if (opts.use_float_presolve && pf.m > 0) {
    FloatSolution fs = lp::float_tableau_simplex(lp, 1e-9, 0);
    sol.float_pivots = fs.pivots;
    if (fs.converged) warm = std::move(fs.basis);
  }
  lp::ExactResult er = lp::exact_revised_simplex(pf, std::move(warm), opts.pivot_cap);
  sol.status = er.status;
  sol.exact_pivots = er.pivots;
  sol.warm_started = er.warm_start_used;

  // Covering weights from the row duals, packing values from the basis.
  const auto m = static_cast<std::size_t>(pf.m);
  std::vector<Rational> w(m), z(lp.rows.size(), Rational(0));
  for (std::size_t v = 0; v < m; ++v)
    w[v] = make_rational(er.y.num[v] * pf.scale[v], er.y.den);
  for (std::size_t p = 0; p < er.basis.size(); ++p) {
    const int c = er.basis[p];
    if (!pf.is_slack(c)) z[static_cast<std::size_t>(c)] = er.x_basic.at(p);
  }
  Rational packing_value = 0;
  for (const auto& zi : z) packing_value += zi;

  sol.primal = std::move(w);
  sol.dual = std::move(z);
  if (sol.status == LPStatus::kOptimal) {
    FeasibilityReport rep = verify_transversal(lp, sol.primal);
    sol.certified = rep.feasible && verify_packing(lp, sol.dual) && rep.bound &&
                    *rep.bound == packing_value;
    if (!sol.certified) throw std::logic_error("exact LP certificate check failed");
    sol.optimum = packing_value;
  } else {
    // Best bound so far: the packing value of a primal feasible basis.
    sol.optimum = packing_value;
    sol.certified = false;
  }
  return sol;
}

}  // namespace

LPSolution solve_min_transversal(const CoveringLP& lp, const SolveOptions& opts) {
  return solve_both(lp, opts);
}

LPSolution solve_max_matching_lp(const CoveringLP& lp, const SolveOptions& opts) {
  LPSolution s = solve_both(lp, opts);
  std::swap(s.primal, s.dual);
  return s;
}

namespace {

std::vector<int> orbits(std::size_t size, const std::vector<std::vector<int>>& perms) {
  std::vector<int> parent(size);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[static_cast<std::size_t>(x)] != x) {
      parent[static_cast<std::size_t>(x)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
      x = parent[static_cast<std::size_t>(x)];
    }
    return x;
  };
  for (const auto& perm : perms) {
    if (perm.size() != size) throw std::invalid_argument("permutation has wrong size");
    for (std::size_t i = 0; i < size; ++i) {
      int a = find(static_cast<int>(i)), b = find(perm[i]);
      if (a != b) parent[static_cast<std::size_t>(std::max(a, b))] = std::min(a, b);
    }
  }
  std::vector<int> label(size);
  for (std::size_t i = 0; i < size; ++i) label[i] = find(static_cast<int>(i));
  return label;
}

}  // namespace

LPSolution solve_min_transversal(const CoveringLP& lp, const LPSymmetry& sym,
                                 const SolveOptions& opts) {
  lp.validate();
  if (sym.var_perms.size() != sym.row_perms.size())
    throw std::invalid_argument("symmetry generators must come in pairs");
  const auto nv = static_cast<std::size_t>(lp.num_vars);
  const std::size_t nr = lp.rows.size();
  const std::vector<int> var_root = orbits(nv, sym.var_perms);
  const std::vector<int> row_root = orbits(nr, sym.row_perms);

  std::map<int, int> var_class, row_class;
  for (std::size_t v = 0; v < nv; ++v)
    var_class.emplace(var_root[v], static_cast<int>(var_class.size()));
  std::vector<int> row_rep;
  std::vector<std::size_t> row_orbit_size;
  for (std::size_t i = 0; i < nr; ++i) {
    auto [it, fresh] = row_class.emplace(row_root[i], static_cast<int>(row_class.size()));
    if (fresh) {
      row_rep.push_back(static_cast<int>(i));
      row_orbit_size.push_back(0);
    }
    ++row_orbit_size[static_cast<std::size_t>(it->second)];
  }

  CoveringLP q;
  q.num_vars = static_cast<int>(var_class.size());
  q.objective.assign(var_class.size(), Rational(0));
  for (std::size_t v = 0; v < nv; ++v)
    q.objective[static_cast<std::size_t>(var_class.at(var_root[v]))] += lp.objective[v];
  for (int rep : row_rep) {
    std::map<int, Rational> agg;
    for (const auto& [v, a] : lp.rows[static_cast<std::size_t>(rep)])
      agg[var_class.at(var_root[static_cast<std::size_t>(v)])] += a;
    SparseRow row(agg.begin(), agg.end());
    q.rows.push_back(std::move(row));
  }

  LPSolution qs = solve_min_transversal(q, opts);
  if (qs.status != LPStatus::kOptimal) return solve_min_transversal(lp, opts);

  LPSolution sol = qs;
  sol.primal.assign(nv, Rational(0));
  for (std::size_t v = 0; v < nv; ++v)
    sol.primal[v] = qs.primal[static_cast<std::size_t>(var_class.at(var_root[v]))];
  sol.dual.assign(nr, Rational(0));
  for (std::size_t i = 0; i < nr; ++i) {
    const auto c = static_cast<std::size_t>(row_class.at(row_root[i]));
    sol.dual[i] = qs.dual[c] / static_cast<unsigned long>(row_orbit_size[c]);
  }
  FeasibilityReport rep = verify_transversal(lp, sol.primal);
  Rational packing_value = 0;
  for (const auto& z : sol.dual) packing_value += z;
  sol.certified = rep.feasible && rep.bound && *rep.bound == packing_value &&
                  verify_packing(lp, sol.dual);
  if (!sol.certified) return solve_min_transversal(lp, opts);
  sol.optimum = packing_value;
  return sol;
}

FeasibilityReport verify_transversal(const CoveringLP& lp, const std::vector<Rational>& w) {
  if (w.size() != static_cast<std::size_t>(lp.num_vars))
    throw std::invalid_argument("weight vector has wrong dimension");
  FeasibilityReport rep;
  rep.feasible = true;
  for (std::size_t v = 0; v < w.size(); ++v) {
    if (w[v] < 0) {
      rep.feasible = false;
      if (!rep.first_negative_var) rep.first_negative_var = static_cast<int>(v);
    }
  }
  rep.slacks.reserve(lp.rows.size());
  for (std::size_t i = 0; i < lp.rows.size(); ++i) {
    Rational s = -1;
    for (const auto& [v, a] : lp.rows[i]) s += a * w[static_cast<std::size_t>(v)];
    if (s < 0) {
      rep.feasible = false;
      if (!rep.first_violated_row) rep.first_violated_row = static_cast<int>(i);
    }
    rep.slacks.push_back(std::move(s));
  }
  if (rep.feasible) {
    Rational b = 0;
    for (std::size_t v = 0; v < w.size(); ++v) b += lp.objective[v] * w[v];
    rep.bound = b;
  }
  return rep;
}

bool verify_packing(const CoveringLP& lp, const std::vector<Rational>& z) {
  if (z.size() != lp.rows.size()) return false;
  std::vector<Rational> load(static_cast<std::size_t>(lp.num_vars), Rational(0));
  for (std::size_t i = 0; i < z.size(); ++i) {
    if (z[i] < 0) return false;
    if (z[i] == 0) continue;
    for (const auto& [v, a] : lp.rows[i]) load[static_cast<std::size_t>(v)] += a * z[i];
  }
  for (std::size_t v = 0; v < load.size(); ++v)
    if (load[v] > lp.objective[v]) return false;
  return true;
}

FloatSolution float_presolve(const CoveringLP& lp, double tolerance, std::size_t max_pivots) {
  lp.validate();
  return lp::float_tableau_simplex(lp, tolerance, max_pivots);
}

void write_lp(std::ostream& out, const CoveringLP& lp) {
  out << "gspb-lp 1\n";
  out << "vars " << lp.num_vars << "\n";
  out << "objective";
  for (const auto& c : lp.objective) out << ' ' << to_string(c);
  out << "\nrows " << lp.rows.size() << "\n";
  for (const auto& row : lp.rows) {
    out << "row";
    for (const auto& [j, a] : row) out << ' ' << j << ':' << to_string(a);
    out << '\n';
  }
  out << "end\n";
}

CoveringLP read_lp(std::istream& in) {
  auto fail = [](const std::string& why) -> void {
    throw std::invalid_argument("malformed LP text: " + why);
  };
  std::string line, word;
  CoveringLP lp;
  std::size_t expected_rows = 0;
  bool header = false, done = false;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    std::istringstream ls(line);
    ls >> word;
    if (!header) {
      int version = 0;
      if (word != "gspb-lp" || !(ls >> version) || version != 1) fail("missing header");
      header = true;
    } else if (word == "vars") {
      if (!(ls >> lp.num_vars) || lp.num_vars < 0) fail("bad vars line");
    } else if (word == "objective") {
      std::string tok;
      while (ls >> tok) lp.objective.push_back(parse_rational(tok));
    } else if (word == "rows") {
      if (!(ls >> expected_rows)) fail("bad rows line");
    } else if (word == "row") {
      SparseRow row;
      std::string tok;
      while (ls >> tok) {
        auto colon = tok.find(':');
        if (colon == std::string::npos) fail("entry without ':'");
        row.emplace_back(std::stoi(tok.substr(0, colon)), parse_rational(tok.substr(colon + 1)));
      }
      lp.rows.push_back(std::move(row));
    } else if (word == "end") {
      done = true;
      break;
    } else {
      fail("unknown keyword '" + word + "'");
    }
  }
  if (!header || !done) fail("truncated input");
  if (lp.rows.size() != expected_rows) fail("row count mismatch");
  lp.validate();
  return lp;
}

}  // namespace gspb
