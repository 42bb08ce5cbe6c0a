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

#ifndef GSPB_SRC_LP_SIMPLEX_HPP_
#define GSPB_SRC_LP_SIMPLEX_HPP_

#include <cstddef>
#include <vector>

#include "gspb/exact_lp.hpp"
#include "lp/dixon.hpp"
#include "lp/packing_form.hpp"

namespace gspb::lp {

// Dense tableau simplex on the packing form in doubles, starting from the
// slack basis. Dantzig pricing, switching to Bland's rule while stalled.
FloatSolution float_tableau_simplex(const CoveringLP& lp, double tolerance,
                                    std::size_t max_pivots);

struct ExactResult {
  LPStatus status = LPStatus::kOptimal;
  std::vector<int> basis;
  RatVec x_basic;  // by basis position
  RatVec y;        // row duals of the scaled packing form
  std::size_t pivots = 0;
  bool warm_start_used = false;
};

// Revised simplex with exact basis solves. A warm-start basis that is not
// primal feasible is repaired with dual simplex steps when it is dual
// feasible; otherwise the solve restarts from the slack basis.
ExactResult exact_revised_simplex(const PackingForm& pf, std::vector<int> warm_basis,
                                  std::size_t pivot_cap);

}  // namespace gspb::lp

#endif  // GSPB_SRC_LP_SIMPLEX_HPP_
