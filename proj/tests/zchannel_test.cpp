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


#include "gspb/zchannel.hpp"

#include <gtest/gtest.h>

#include "gspb/exact_lp.hpp"

namespace gspb {
namespace {

Rational quotient_lp_optimum(int n, int r) {
  return solve_min_transversal(z_quotient_lp(n, r)).optimum;
}

TEST(ZChannel, WeightsForFiveBits) {
  const ZWeights w = z_weights_recursive(5, 1);
  // Rows 2..5 tight: w_l + l w_{l-1} = 1, top weight zero.
  ASSERT_EQ(w.w.size(), 6u);
  EXPECT_EQ(w.w[0], 1);
  EXPECT_EQ(w.w[5], 0);
  EXPECT_EQ(w.w[4], make_rational(1, 5));
  for (int l = 2; l <= 5; ++l) EXPECT_EQ(w.w[l] + Rational(l) * w.w[l - 1], 1) << l;
  EXPECT_EQ(z_gspb(5, 1).value, quotient_lp_optimum(5, 1));
}

TEST(ZChannel, PinnedValues) {
  EXPECT_EQ(z_gspb(10, 1).value, make_rational(89393, 560));
  EXPECT_EQ(floor_of(z_gspb(10, 1).value), 159);
  const ZResult big = z_gspb(26, 1);
  EXPECT_TRUE(big.certified);
  EXPECT_EQ(big.path, ZPath::kClosedForm);
  EXPECT_EQ(big.value, quotient_lp_optimum(26, 1));
}

TEST(ZChannel, DSequenceClosedForms) {
  const DSequence one = d_sequence(1, 12);
  for (int i = 0; i < 12; ++i) EXPECT_EQ(one.values[static_cast<std::size_t>(i)], i % 2 ? -1 : 1) << i;
  // r = 2: D_i = Im((-1 + i)^i).
  const DSequence two = d_sequence(2, 12);
  long re = 1, im = 0;
  for (int i = 0; i < 12; ++i) {
    EXPECT_EQ(two.values[static_cast<std::size_t>(i)], Rational(im)) << i;
    const long next_re = -re - im;
    im = re - im;
    re = next_re;
  }
  const DSequence four = d_sequence(4, 10);
  EXPECT_EQ(four.values[0], 0);
  EXPECT_EQ(four.values[2], 0);
  EXPECT_EQ(four.values[3], 1);
  EXPECT_THROW(d_sequence(0, 3), std::invalid_argument);
}

TEST(ZChannel, FeasibilityDetectsBrokenWeights) {
  ZWeights w = z_weights_recursive(9, 2);
  EXPECT_TRUE(z_check_feasibility(w).feasible);
  ZWeights neg = w;
  neg.w[3] = -1;
  EXPECT_EQ(z_check_feasibility(neg).negative_index, 3);
  EXPECT_FALSE(z_check_feasibility(neg).feasible);
  ZWeights low = w;
  low.w[0] = 0;
  const ZFeasibility f = z_check_feasibility(low);
  EXPECT_FALSE(f.feasible);
  EXPECT_EQ(f.violated_row, 0);
  ZWeights short_w = w;
  short_w.w.pop_back();
  EXPECT_THROW(z_check_feasibility(short_w), std::invalid_argument);
}

TEST(ZChannel, ExampleWeightsAreFeasibleButLoose) {
  for (int n = 2; n <= 30; ++n) {
    const ZExampleBound e = z_example_wprime(n);
    EXPECT_TRUE(e.feasible) << n;
    EXPECT_GE(e.bound, z_gspb(n, 1).value) << n;
  }
}

TEST(ZChannelProperty, ClosedFormMatchesQuotientLP) {
  for (int r = 1; r <= 4; ++r)
    for (int n = 1; n <= 28; ++n) {
      const ZResult res = z_gspb(n, r);
      EXPECT_TRUE(res.certified) << n << " " << r;
      EXPECT_EQ(res.value, quotient_lp_optimum(n, r)) << n << " " << r;
      EXPECT_EQ(z_objective(n, res.weights.w), res.value);
    }
}

TEST(ZChannelProperty, RecursiveAndExplicitWeightsAgree) {
  for (int r = 1; r <= 4; ++r)
    for (int n = r; n <= 26; ++n) {
      const auto a = z_weights_recursive(n, r);
      const auto b = z_weights_explicit(n, r);
      EXPECT_EQ(a.w, b.w) << n << " " << r;
      EXPECT_EQ(b.source, WeightSource::kExplicit);
    }
}

TEST(ZChannelProperty, CertificateIsDualFeasibleWithEqualValue) {
  for (int r = 1; r <= 4; ++r)
    for (int n = r + 1; n <= 24; ++n) {
      const ZCertificate c = z_optimality_certificate(n, r);
      ASSERT_EQ(c.status, CertificateStatus::kOptimalCertified) << n << " " << r;
      for (const auto& y : c.y) EXPECT_GE(sgn(y), 0);
      EXPECT_EQ(c.dual_value, z_objective(n, z_weights_recursive(n, r).w)) << n << " " << r;
    }
}

TEST(ZChannelProperty, WeightsAreNonnegative) {
  for (int n = 2; n <= 24; ++n) {
    const auto w = z_weights_recursive(n, 1).w;
    for (const auto& x : w) EXPECT_GE(sgn(x), 0) << n;
  }
}

}  // namespace
}  // namespace gspb
