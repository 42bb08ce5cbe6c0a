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

// Symmetry reduction by per-family orbit invariants.
//
// Orbit labels:
//   Z           Hamming weight
//   MagAsym     value counts (i_0, ..., i_{q-1})
//   MagSym      folded counts, value v and q-1-v share label min(v, q-1-v)
//   Projective  min(dim, n - dim)
//
// A quotient row lists, for one center of class i, how many members of its
// ball fall in each class j. The reduced covering LP has one row and one
// variable per class, objective = class sizes.

#ifndef GSPB_REDUCTION_HPP_
#define GSPB_REDUCTION_HPP_

#include <cstdint>
#include <iosfwd>
#include <map>
#include <optional>
#include <vector>

#include "gspb/channel.hpp"
#include "gspb/exact_lp.hpp"
#include "gspb/rational.hpp"

namespace gspb {

struct ClassInfo {
  std::vector<int> invariant;
  Vertex representative;
  BigInt size;
};

class ClassPartition {
 public:
  ClassPartition(ChannelSpec spec, std::vector<ClassInfo> classes);

  const ChannelSpec& spec() const { return spec_; }
  const std::vector<ClassInfo>& classes() const { return classes_; }
  std::size_t size() const { return classes_.size(); }
  int index_of(const std::vector<int>& invariant) const;
  int class_of(const Vertex& v) const;

 private:
  ChannelSpec spec_;
  std::vector<ClassInfo> classes_;
  std::map<std::vector<int>, int> lookup_;
};

bool has_quotient(Family f);

// Throws RefusalError for Deletion, Grain and Explicit.
std::vector<int> class_invariant(const ChannelSpec& spec, const Vertex& v);
ClassPartition partition_by_canonical_form(const ChannelSpec& spec);

struct QuotientLP {
  std::vector<BigInt> class_sizes;
  std::vector<std::vector<std::int64_t>> matrix;

  std::size_t size() const { return class_sizes.size(); }
  CoveringLP to_covering_lp() const;
};

// Entries from the per-family transition rules.
QuotientLP quotient_matrix(const ChannelSpec& spec, const ClassPartition& partition, int r);
// Entries by expanding the ball of each class representative.
QuotientLP quotient_by_counting(const ChannelSpec& spec, const ClassPartition& partition,
                                int r);

LPSolution reduced_gspb(const ChannelSpec& spec, int r, const SolveOptions& opts = {});

// Class weights copied onto every vertex of its class.
std::vector<Rational> lift_weights(const ClassPartition& partition,
                                   const std::vector<Rational>& class_weights,
                                   const std::vector<Vertex>& vertices);

struct LiftCheck {
  bool primal_feasible = false;
  bool dual_feasible = false;
  Rational primal_value;
  Rational dual_value;
  // First failing center (primal) or vertex (dual), for diagnostics.
  std::optional<Vertex> failure;

  bool certified() const { return primal_feasible && dual_feasible && primal_value == dual_value; }
};

// Lifts an optimal quotient pair to the full hypergraph and checks it ball
// by ball, without materializing the full LP: weights are copied per class
// and class duals are spread evenly over the class's centers. A certified
// result proves the full tau* equals the quotient optimum.
LiftCheck check_lift_on_full_graph(const ChannelSpec& spec, int r, const ClassPartition& partition,
                                   const LPSolution& quotient_solution,
                                   std::size_t cap = kDefaultEnumerationCap);

void write_quotient(std::ostream& out, const QuotientLP& q);

// Compositions of n into `parts` nonnegative parts, lexicographic.
std::vector<std::vector<int>> compositions(int n, int parts);

}  // namespace gspb

#endif  // GSPB_REDUCTION_HPP_
