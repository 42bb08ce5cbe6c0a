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

// Channel-agnostic bounds.
//
//   MB    sum_x 1/deg_r(x), valid when every ball member has degree at most
//         that of the center
//   ASPV  |X| / mean ball size, a heuristic value that is not a bound in
//         general

#ifndef GSPB_BOUNDS_HPP_
#define GSPB_BOUNDS_HPP_

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "gspb/channel.hpp"
#include "gspb/rational.hpp"

namespace gspb {

struct MonotoneVerdict {
  bool monotone = false;
  // (center, ball member of larger degree) when not monotone.
  std::optional<std::pair<Vertex, Vertex>> witness;
};

// Exhaustive, over class representatives where a quotient exists. Throws
// RefusalError for Deletion, whose balls are not subsets of the center set.
MonotoneVerdict check_monotone(const ChannelSpec& spec, int r,
                               std::size_t cap = kDefaultEnumerationCap);

// Families accepted by monotonicity_bound without an exhaustive check.
bool known_monotone(Family f);

// Published closed forms where they exist; Explicit graphs are checked
// exhaustively first. Throws RefusalError for non-monotone instances.
Rational monotonicity_bound(const ChannelSpec& spec, int r,
                            std::size_t cap = kDefaultEnumerationCap);

// Exact sum_x 1/deg_r(x), by class sums where available. For Deletion the
// sum runs over the ground set with rho(y), the size of the smallest ball
// containing y.
Rational monotonicity_sum(const ChannelSpec& spec, int r,
                          std::size_t cap = kDefaultEnumerationCap);

// w_v = 1 / min{|B| : B a ball containing v}, in enumerate_vertices order.
std::vector<Rational> lemma3_transversal(const ChannelSpec& spec, int r,
                                         std::size_t cap = kDefaultEnumerationCap);

Rational aspv(const ChannelSpec& spec, int r, std::size_t cap = kDefaultEnumerationCap);

// |X| * |centers| / sum of ball sizes, by enumeration.
Rational aspv_by_enumeration(const ChannelSpec& spec, int r,
                             std::size_t cap = kDefaultEnumerationCap);

// |X| / max ball size; the sphere packing bound of a regular graph.
Rational sphere_packing_value(const ChannelSpec& spec, int r,
                              std::size_t cap = kDefaultEnumerationCap);

}  // namespace gspb

#endif  // GSPB_BOUNDS_HPP_
