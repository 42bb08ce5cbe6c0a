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

// Z channel (1 -> 0 errors), radius r, weight-class LP:
//
//   min sum_l C(n,l) w_l   s.t.  sum_{i=0}^{min(l,r)} C(l,i) w_{l-i} >= 1.
//
// The optimum is given by a back-substitution that makes rows r+1..n tight
// and zeroes the top r weights. Each instance is certified at runtime: the
// weights are checked feasible and a dual vector y solving M^T y = c is
// checked nonnegative, where M holds the tight rows and the zero bounds.

#ifndef GSPB_ZCHANNEL_HPP_
#define GSPB_ZCHANNEL_HPP_

#include <optional>
#include <vector>

#include "gspb/exact_lp.hpp"
#include "gspb/rational.hpp"

namespace gspb {

enum class WeightSource { kRecursive, kExplicit };

struct ZWeights {
  int n = 0;
  int r = 1;
  std::vector<Rational> w;  // indexed by Hamming weight 0..n
  WeightSource source = WeightSource::kRecursive;
};

struct DSequence {
  int r = 1;
  std::vector<Rational> values;
};

enum class CertificateStatus { kOptimalCertified, kNonnegativityFailed };

struct ZCertificate {
  std::vector<Rational> y;
  CertificateStatus status = CertificateStatus::kNonnegativityFailed;
  std::optional<int> failed_index;
  // y_0 + ... + y_{n-r}.
  Rational dual_value;
};

struct ZFeasibility {
  bool feasible = false;
  std::optional<int> negative_index;
  std::optional<int> violated_row;
};

enum class ZPath { kClosedForm, kLPFallback };

struct ZResult {
  Rational value;
  bool certified = false;
  ZPath path = ZPath::kClosedForm;
  ZWeights weights;
  ZCertificate certificate;
};

CoveringLP z_quotient_lp(int n, int r);

Rational z_objective(int n, const std::vector<Rational>& w);

ZWeights z_weights_recursive(int n, int r);
ZWeights z_weights_explicit(int n, int r);

// D_0..D_{length-1}.
DSequence d_sequence(int r, int length);

ZFeasibility z_check_feasibility(const ZWeights& weights);

ZCertificate z_optimality_certificate(int n, int r);

// Closed form when weights and certificate both check out, exact LP
// otherwise.
ZResult z_gspb(int n, int r);

struct ZExampleBound {
  std::vector<Rational> w;
  Rational bound;
  bool feasible = false;
};

// r = 1 weights w_k = (k+2)/((k+1)(k+3)), w_0 = 1.
ZExampleBound z_example_wprime(int n);

}  // namespace gspb

#endif  // GSPB_ZCHANNEL_HPP_
