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

// Subspaces of GF(2)^n, radius one (one dimension step).
//
// Weights depend only on the dimension k and satisfy w_k = w_{n-k}, so the
// LP has variables w_0..w_{floor(n/2)} and rows k = 0..n:
//
//   w_k + (2^k - 1) w_{k-1} + (2^{n-k} - 1) w_{k+1} >= 1.

#ifndef GSPB_PROJECTIVE_HPP_
#define GSPB_PROJECTIVE_HPP_

#include <string>
#include <vector>

#include "gspb/exact_lp.hpp"
#include "gspb/rational.hpp"

namespace gspb {

// Number of m-dimensional subspaces of GF(2)^n; 0 outside 0 <= m <= n.
BigInt gaussian_binomial(int n, int m);

// min(k, n - k).
int projective_fold(int n, int k);

CoveringLP projective_lp(int n);

enum class WeightOrigin { kGreedy, kClosedForm, kLP };

struct ProjectiveWeights {
  int n = 0;
  std::vector<Rational> w;  // folded, indices 0..floor(n/2)
  WeightOrigin source = WeightOrigin::kGreedy;
  bool feasible = false;
};

Rational projective_objective(int n, const std::vector<Rational>& folded_w);

ProjectiveWeights greedy_weights(int n);

struct ClosedFormWeights {
  ProjectiveWeights weights;
  // Indices where the pattern differs from greedy_weights.
  std::vector<int> mismatches;
};

ClosedFormWeights closed_form_weights(int n);

struct ProjectiveCertificate {
  std::vector<Rational> y;  // one entry per folded variable or LP row
  bool certified = false;
  // Dual built from the partial-cost block system; false when that system
  // is singular, has a negative entry, or misses complementary slackness.
  bool block_construction_ok = false;
  Rational block_value;
  bool used_lp_dual = false;
  std::string note;
};

ProjectiveCertificate projective_certificate(int n);

struct ProjectiveResult {
  Rational value;       // greedy objective
  Rational lp_optimum;  // exact folded LP
  bool greedy_feasible = false;
  bool matches_lp = false;
  ProjectiveWeights weights;
  ProjectiveCertificate certificate;
};

ProjectiveResult projective_gspb(int n);

Rational projective_aspv(int n);

}  // namespace gspb

#endif  // GSPB_PROJECTIVE_HPP_
