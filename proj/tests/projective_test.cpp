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


#include "gspb/projective.hpp"

#include <gtest/gtest.h>

#include "gspb/exact_lp.hpp"

namespace gspb {
namespace {

TEST(Projective, GaussianBinomials) {
  EXPECT_EQ(gaussian_binomial(4, 2), 35);
  EXPECT_EQ(gaussian_binomial(5, 2), 155);
  EXPECT_EQ(gaussian_binomial(6, 3), 1395);
  EXPECT_EQ(gaussian_binomial(3, 4), 0);
  EXPECT_EQ(gaussian_binomial(3, -1), 0);
}

TEST(ProjectiveProperty, GaussianPascalRule) {
  for (int n = 1; n <= 20; ++n)
    for (int k = 1; k < n; ++k)
      EXPECT_EQ(gaussian_binomial(n, k), gaussian_binomial(n - 1, k - 1) + pow2(k) * gaussian_binomial(n - 1, k));
}

TEST(Projective, FoldedLPShape) {
  const CoveringLP lp = projective_lp(6);
  EXPECT_EQ(lp.num_vars, 4);
  EXPECT_EQ(lp.rows.size(), 7u);
  EXPECT_EQ(lp.objective[3], gaussian_binomial(6, 3));
  EXPECT_EQ(lp.objective[0], 2);
  EXPECT_THROW(projective_lp(0), std::invalid_argument);
}

TEST(Projective, SixDimensions) {
  const ProjectiveResult r = projective_gspb(6);
  EXPECT_TRUE(r.greedy_feasible);
  EXPECT_TRUE(r.matches_lp);
  EXPECT_EQ(floor_of(r.value), 132);
  EXPECT_TRUE(r.certificate.certified);
}

TEST(Projective, PlaneGreedyIsInfeasible) {
  const ProjectiveResult r = projective_gspb(2);
  EXPECT_FALSE(r.greedy_feasible);
  EXPECT_FALSE(r.matches_lp);
  EXPECT_EQ(r.lp_optimum, make_rational(7, 5));
}

TEST(ProjectiveProperty, FoldedLPEqualsFullLP) {
  for (int n = 1; n <= 5; ++n) {
    const Rational full =
        solve_min_transversal(hypergraph_lp(build_hypergraph(ChannelSpec::projective(n), 1))).optimum;
    EXPECT_EQ(solve_min_transversal(projective_lp(n)).optimum, full) << n;
  }
}

TEST(ProjectiveProperty, GreedyWeightsAreOptimal) {
  for (int n = 3; n <= 16; ++n) {
    const ProjectiveResult r = projective_gspb(n);
    EXPECT_TRUE(r.greedy_feasible) << n;
    EXPECT_EQ(r.value, r.lp_optimum) << n;
    EXPECT_TRUE(r.certificate.certified) << n;
    const auto rep = verify_transversal(projective_lp(n), r.weights.w);
    EXPECT_TRUE(rep.feasible) << n;
  }
}

TEST(ProjectiveProperty, CertificateIsPackingWithGreedyValue) {
  for (int n = 3; n <= 14; ++n) {
    const ProjectiveCertificate c = projective_certificate(n);
    ASSERT_TRUE(c.certified) << n;
    if (c.used_lp_dual) {
      EXPECT_TRUE(verify_packing(projective_lp(n), c.y)) << n;
      EXPECT_EQ(sum(c.y), projective_objective(n, greedy_weights(n).w)) << n;
    } else {
      EXPECT_EQ(c.block_value, projective_objective(n, greedy_weights(n).w)) << n;
    }
  }
}

TEST(ProjectiveProperty, ClosedFormFlagsAreHonest) {
  for (int n = 2; n <= 16; ++n) {
    const ClosedFormWeights c = closed_form_weights(n);
    EXPECT_EQ(c.weights.feasible, verify_transversal(projective_lp(n), c.weights.w).feasible) << n;
    const ProjectiveWeights g = greedy_weights(n);
    for (int k = 0; k <= n / 2; ++k) {
      const bool listed = std::find(c.mismatches.begin(), c.mismatches.end(), k) != c.mismatches.end();
      EXPECT_EQ(listed, c.weights.w[static_cast<std::size_t>(k)] != g.w[static_cast<std::size_t>(k)]) << n << " " << k;
    }
  }
}

}  // namespace
}  // namespace gspb
