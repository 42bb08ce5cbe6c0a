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

// q-ary limited-magnitude channels, one error of size one.
//   asymmetric: a symbol may drop by one,
//   symmetric:  a symbol may move by one in either direction.

#ifndef GSPB_MAGNITUDE_HPP_
#define GSPB_MAGNITUDE_HPP_

#include <cstdint>
#include <vector>

#include "gspb/exact_lp.hpp"
#include "gspb/rational.hpp"
#include "gspb/reduction.hpp"

namespace gspb {

// Per-class weights (in partition order) and their total.
struct ClassBound {
  std::vector<Rational> weights;
  Rational bound;
  bool feasible = false;
};

QuotientLP asym_quotient(int n, int q);
Rational asym_mb(int n, int q);
Rational asym_aspv(int n, int q);
ClassBound asym_improved_transversal(int n, int q);
LPSolution asym_gspb(int n, int q, const SolveOptions& opts = {});

QuotientLP sym_quotient(int n, int q);
Rational sym_aspv(int n, int q);
// w_x = 1 / (deg(x) - 1). Throws RefusalError when some degree is 1.
ClassBound sym_transversal(int n, int q);
LPSolution sym_gspb(int n, int q, const SolveOptions& opts = {});

// The terse symmetric rule: diagonal 1, entry k for a move from folded
// label k to k-1. Kept for comparison with the counted matrix.
QuotientLP sym_rule_as_printed(int n, int q);

struct MatrixDivergence {
  int row = 0;
  int col = 0;
  std::int64_t stated = 0;
  std::int64_t counted = 0;
};

std::vector<MatrixDivergence> sym_rule_divergence(int n, int q);

}  // namespace gspb

#endif  // GSPB_MAGNITUDE_HPP_
