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

// Brute-force ground truth for tiny instances. Nothing here uses symmetry
// or closed forms.

#ifndef GSPB_ORACLE_HPP_
#define GSPB_ORACLE_HPP_

#include <cstddef>
#include <string>
#include <vector>

#include "gspb/channel.hpp"
#include "gspb/rational.hpp"

namespace gspb {

inline constexpr std::size_t kDefaultOracleCap = 4096;

// tau* of the full ball hypergraph.
Rational brute_force_tau(const ChannelSpec& spec, int r, std::size_t cap = kDefaultOracleCap);

struct MatchingResult {
  int size = 0;
  // Centers of pairwise-disjoint balls, sorted.
  std::vector<Vertex> witness;
  std::size_t nodes = 0;
};

// Maximum number of pairwise-disjoint balls (a largest code).
MatchingResult brute_force_matching(const ChannelSpec& spec, int r,
                                    std::size_t cap = kDefaultOracleCap);

// True iff the balls of the given centers are pairwise disjoint.
bool balls_disjoint(const ChannelSpec& spec, int r, const std::vector<Vertex>& centers);

struct OracleResult {
  Rational tau_star_full;
  int nu_integral = 0;
  int max_code = 0;
  std::vector<Vertex> witness;
};

OracleResult run_oracle(const ChannelSpec& spec, int r, std::size_t cap = kDefaultOracleCap);

struct CounterexampleFacts {
  std::string fixture;
  Rational gspb;
  Rational aspv;
  Rational sphere_packing;
  int max_code = 0;
  // The fact the fixture demonstrates.
  bool holds = false;
  std::string claim;
};

std::vector<CounterexampleFacts> counterexample_suite();

}  // namespace gspb

#endif  // GSPB_ORACLE_HPP_
