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

// Single-deletion and single-grain-error channels on binary words.
//
// Both channels have deg(x) = rho(x), the number of runs. The transversal
// weights depend on (rho, mu), mu being the number of length-one runs that
// are neither first nor last:
//   w = 1/rho                   if mu <= 1
//   w = (1/rho)(1 - mu/rho^2)   otherwise.
// For deletion the weights live on {0,1}^{n-1}; for grain on {0,1}^n.

#ifndef GSPB_SEQCHANNELS_HPP_
#define GSPB_SEQCHANNELS_HPP_

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "gspb/channel.hpp"
#include "gspb/exact_lp.hpp"
#include "gspb/rational.hpp"

namespace gspb {

struct RunProfile {
  int rho = 1;
  int mu = 0;

  bool valid(int length) const;
  friend bool operator==(const RunProfile&, const RunProfile&) = default;
};

int runs(const Vertex& x);
int middle_one_runs(const Vertex& x);
RunProfile run_profile(const Vertex& x);

// Number of words of length n with the given profile.
BigInt count_profiles(int n, int rho, int mu);

Rational seq_weight(const RunProfile& p);

Rational deletion_bound(int n);
Rational deletion_mb(int n);
Rational deletion_aspv(int n);

Rational grain_bound(int n);
// With even_improvement the value is 2 * floor((2^{n+1} - 2) / (2n)).
Rational grain_mb(int n, bool even_improvement = false);
Rational grain_aspv(int n);

// 2 * floor(v / 2).
BigInt parity_floor(const Rational& v);

// Transversal weights in enumerate_vertices order.
std::vector<Rational> deletion_theorem_weights(int n);
std::vector<Rational> grain_theorem_weights(int n);

inline constexpr int kMaxSweepLength = 24;

struct SweepResult {
  bool feasible = false;
  std::uint64_t centers_checked = 0;
  // Word value (first symbol most significant) of the first violated ball.
  std::optional<std::uint64_t> first_violation;
};

// Exhaustive exact check of every ball constraint.
SweepResult deletion_theorem_feasibility(int n);
SweepResult grain_theorem_feasibility(int n);

inline constexpr int kDefaultSeqLpCap = 12;

struct FullLPResult {
  std::optional<LPSolution> solution;
  std::string absent_reason;
};

// Exact full-hypergraph optimum, solved on the orbit quotient of the word
// symmetries (reversal and complement for deletion, complement for grain)
// and certified on the full LP.
FullLPResult deletion_full_gspb(int n, int cap = kDefaultSeqLpCap, const SolveOptions& opts = {});
FullLPResult grain_full_gspb(int n, int cap = kDefaultSeqLpCap, const SolveOptions& opts = {});

// The generators used above, for a hypergraph from build_hypergraph.
LPSymmetry deletion_symmetry(const Hypergraph& h);
LPSymmetry grain_symmetry(const Hypergraph& h);

}  // namespace gspb

#endif  // GSPB_SEQCHANNELS_HPP_
