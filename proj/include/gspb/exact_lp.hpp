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

// Exact covering / packing LPs.
//
//   tau* = min c.w  s.t.  A w >= 1, w >= 0         (covering)
//   nu*  = max 1.z  s.t.  A^T z <= c, z >= 0       (packing)
//
// The solver works on the packing form, whose slack basis is feasible. A
// floating-point tableau pass proposes a basis; the exact phase verifies it
// with exact basis solves and, if needed, continues with Bland's rule.

#ifndef GSPB_EXACT_LP_HPP_
#define GSPB_EXACT_LP_HPP_

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "gspb/channel.hpp"
#include "gspb/rational.hpp"

namespace gspb {

using SparseRow = std::vector<std::pair<int, Rational>>;

struct CoveringLP {
  int num_vars = 0;
  std::vector<Rational> objective;
  std::vector<SparseRow> rows;

  // Throws std::invalid_argument if a row is empty, an index is out of range
  // or a coefficient is negative.
  void validate() const;
};

CoveringLP hypergraph_lp(const Hypergraph& h);

enum class LPStatus { kOptimal, kInfeasible, kUnbounded, kPivotLimit };

std::string_view status_name(LPStatus s);

struct LPSolution {
  LPStatus status = LPStatus::kOptimal;
  Rational optimum;
  // Covering weights for solve_min_transversal, packing values for
  // solve_max_matching_lp; `dual` holds the other side.
  std::vector<Rational> primal;
  std::vector<Rational> dual;
  // True only when primal and dual were re-checked feasible with equal
  // objectives by exact arithmetic.
  bool certified = false;
  std::size_t exact_pivots = 0;
  std::size_t float_pivots = 0;
  bool warm_started = false;
};

struct SolveOptions {
  std::size_t pivot_cap = 10'000'000;
  bool use_float_presolve = true;
};

LPSolution solve_min_transversal(const CoveringLP& lp, const SolveOptions& opts = {});
LPSolution solve_max_matching_lp(const CoveringLP& lp, const SolveOptions& opts = {});

// Generators of a group acting on variables and rows together: variable
// permutation var_perms[g] maps row i onto row row_perms[g][i]. Objective
// coefficients must be constant on variable orbits.
struct LPSymmetry {
  std::vector<std::vector<int>> var_perms;
  std::vector<std::vector<int>> row_perms;
};

// Solves the orbit quotient, lifts both witnesses to the full LP and
// certifies them there. Falls back to the direct solve if the lifted pair
// does not certify (e.g. the generators are not symmetries).
LPSolution solve_min_transversal(const CoveringLP& lp, const LPSymmetry& sym,
                                 const SolveOptions& opts = {});

struct FeasibilityReport {
  bool feasible = false;
  // Row sum minus one, per row.
  std::vector<Rational> slacks;
  std::optional<int> first_violated_row;
  std::optional<int> first_negative_var;
  // Objective value; set only when feasible.
  std::optional<Rational> bound;
};

FeasibilityReport verify_transversal(const CoveringLP& lp, const std::vector<Rational>& w);

// True iff z >= 0 and A^T z <= c.
bool verify_packing(const CoveringLP& lp, const std::vector<Rational>& z);

struct FloatSolution {
  bool converged = false;
  double optimum = 0.0;
  std::vector<double> primal;  // covering weights
  std::vector<double> dual;    // packing values
  std::vector<int> basis;      // packing-form basis columns
  std::size_t pivots = 0;
};

FloatSolution float_presolve(const CoveringLP& lp, double tolerance = 1e-9,
                             std::size_t max_pivots = 0);

// Line-oriented text form:
//   gspb-lp 1
//   vars <n>
//   objective <c_0> ... <c_{n-1}>
//   rows <m>
//   row <j>:<a> <j>:<a> ...
//   end
void write_lp(std::ostream& out, const CoveringLP& lp);
CoveringLP read_lp(std::istream& in);

}  // namespace gspb

#endif  // GSPB_EXACT_LP_HPP_
