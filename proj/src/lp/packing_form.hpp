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

#ifndef GSPB_SRC_LP_PACKING_FORM_HPP_
#define GSPB_SRC_LP_PACKING_FORM_HPP_

#include <utility>
#include <vector>

#include "gspb/exact_lp.hpp"
#include "gspb/rational.hpp"

namespace gspb::lp {

using IntColumn = std::vector<std::pair<int, BigInt>>;

// Packing LP in standard form with integer data:
//   max sum_{j<k} x_j  s.t.  [S | I] x = rhs,  x >= 0.
// Row v is covering variable v scaled by scale[v]; column j < k is covering
// row j, column k + v is the (unit) slack of row v.
struct PackingForm {
  int m = 0;
  int k = 0;
  std::vector<IntColumn> columns;  // structural only, size k
  std::vector<BigInt> rhs;
  std::vector<BigInt> scale;

  int num_columns() const { return k + m; }
  bool is_slack(int col) const { return col >= k; }
  int cost(int col) const { return col < k ? 1 : 0; }
};

PackingForm make_packing_form(const CoveringLP& lp);

}  // namespace gspb::lp

#endif  // GSPB_SRC_LP_PACKING_FORM_HPP_
