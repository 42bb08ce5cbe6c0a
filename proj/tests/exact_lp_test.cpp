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


#include "gspb/exact_lp.hpp"

#include <random>
#include <sstream>
#include <stdexcept>
#include <vector>

#include <gtest/gtest.h>

#include "gspb/channel.hpp"
#include "gspb/seqchannels.hpp"

namespace gspb {
namespace {

Rational dot(const std::vector<Rational>& a, const std::vector<Rational>& b) {
  Rational s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

void expect_certified_pair(const CoveringLP& lp, const LPSolution& s) {
  ASSERT_EQ(s.status, LPStatus::kOptimal);
  EXPECT_TRUE(s.certified);
  const auto rep = verify_transversal(lp, s.primal);
  EXPECT_TRUE(rep.feasible);
  EXPECT_EQ(dot(lp.objective, s.primal), s.optimum);
  EXPECT_TRUE(verify_packing(lp, s.dual));
  EXPECT_EQ(sum(s.dual), s.optimum);
}

CoveringLP from_dense(const std::vector<std::vector<int>>& a, const std::vector<int>& c) {
  CoveringLP lp;
  lp.num_vars = static_cast<int>(c.size());
  for (int x : c) lp.objective.emplace_back(x);
  for (const auto& row : a) {
    SparseRow r;
    for (std::size_t j = 0; j < row.size(); ++j)
      if (row[j]) r.emplace_back(static_cast<int>(j), Rational(row[j]));
    lp.rows.push_back(std::move(r));
  }
  return lp;
}

// Minimum over all basic points: every choice of num_vars tight
// constraints among rows (= 1) and bounds (w_j = 0), solved exactly.
std::optional<Rational> vertex_enumeration_optimum(const std::vector<std::vector<int>>& a,
                                                   const std::vector<int>& c) {
  const int n = static_cast<int>(c.size());
  const int m = static_cast<int>(a.size());
  std::optional<Rational> best;
  const int total = m + n;
  for (int mask = 0; mask < (1 << total); ++mask) {
    if (__builtin_popcount(static_cast<unsigned>(mask)) != n) continue;
    std::vector<std::vector<Rational>> mat;
    std::vector<Rational> rhs;
    for (int t = 0; t < total; ++t) {
      if (!(mask >> t & 1)) continue;
      std::vector<Rational> row(static_cast<std::size_t>(n), Rational(0));
      if (t < m) {
        for (int j = 0; j < n; ++j) row[static_cast<std::size_t>(j)] = a[static_cast<std::size_t>(t)][static_cast<std::size_t>(j)];
        rhs.emplace_back(1);
      } else {
        row[static_cast<std::size_t>(t - m)] = 1;
        rhs.emplace_back(0);
      }
      mat.push_back(std::move(row));
    }
    bool singular = false;
    for (int col = 0; col < n && !singular; ++col) {
      int piv = col;
      while (piv < n && sgn(mat[static_cast<std::size_t>(piv)][static_cast<std::size_t>(col)]) == 0) ++piv;
      if (piv == n) {
        singular = true;
        break;
      }
      std::swap(mat[static_cast<std::size_t>(piv)], mat[static_cast<std::size_t>(col)]);
      std::swap(rhs[static_cast<std::size_t>(piv)], rhs[static_cast<std::size_t>(col)]);
      for (int r = 0; r < n; ++r) {
        if (r == col) continue;
        const Rational f = mat[static_cast<std::size_t>(r)][static_cast<std::size_t>(col)] /
                           mat[static_cast<std::size_t>(col)][static_cast<std::size_t>(col)];
        for (int k = 0; k < n; ++k)
          mat[static_cast<std::size_t>(r)][static_cast<std::size_t>(k)] -=
              f * mat[static_cast<std::size_t>(col)][static_cast<std::size_t>(k)];
        rhs[static_cast<std::size_t>(r)] -= f * rhs[static_cast<std::size_t>(col)];
      }
    }
    if (singular) continue;
    std::vector<Rational> w(static_cast<std::size_t>(n));
    for (int j = 0; j < n; ++j)
      w[static_cast<std::size_t>(j)] = rhs[static_cast<std::size_t>(j)] / mat[static_cast<std::size_t>(j)][static_cast<std::size_t>(j)];
    bool feasible = true;
    for (const auto& x : w) feasible = feasible && sgn(x) >= 0;
    for (const auto& row : a) {
      Rational s = 0;
      for (int j = 0; j < n; ++j) s += row[static_cast<std::size_t>(j)] * w[static_cast<std::size_t>(j)];
      feasible = feasible && s >= 1;
    }
    if (!feasible) continue;
    Rational obj = 0;
    for (int j = 0; j < n; ++j) obj += c[static_cast<std::size_t>(j)] * w[static_cast<std::size_t>(j)];
    if (!best || obj < *best) best = obj;
  }
  return best;
}

TEST(ExactLP, RegularCounterexampleGraph) {
  const CoveringLP lp = hypergraph_lp(build_hypergraph(example2_graph(), 1));
  const LPSolution s = solve_min_transversal(lp);
  EXPECT_EQ(s.optimum, 1);
  expect_certified_pair(lp, s);
  const std::vector<Rational> e1{1, 0, 0, 0, 0, 0};
  EXPECT_TRUE(verify_transversal(lp, e1).feasible);
}

TEST(ExactLP, ZTwoBits) {
  const CoveringLP lp = hypergraph_lp(build_hypergraph(ChannelSpec::z(2), 1));
  const LPSolution s = solve_min_transversal(lp);
  EXPECT_EQ(s.optimum, 2);
  expect_certified_pair(lp, s);
  const std::vector<Rational> w{1, make_rational(1, 2), make_rational(1, 2), 0};
  EXPECT_TRUE(verify_transversal(lp, w).feasible);
}

TEST(ExactLP, SingletonBalls) {
  CoveringLP lp;
  lp.num_vars = 7;
  lp.objective.assign(7, Rational(1));
  for (int i = 0; i < 7; ++i) lp.rows.push_back({{i, Rational(1)}});
  const LPSolution s = solve_min_transversal(lp);
  EXPECT_EQ(s.optimum, 7);
  expect_certified_pair(lp, s);
}

TEST(ExactLP, PackingSideMatches) {
  for (const auto& g : {example2_graph(), example3_graph(), example4_graph(3)}) {
    const CoveringLP lp = hypergraph_lp(build_hypergraph(g, 1));
    EXPECT_EQ(solve_max_matching_lp(lp).optimum, solve_min_transversal(lp).optimum) << g.name;
  }
  const CoveringLP lp = hypergraph_lp(build_hypergraph(example2_graph(), 1));
  EXPECT_EQ(solve_max_matching_lp(lp).optimum, 1);
}

TEST(ExactLP, ExactWithoutPresolve) {
  const CoveringLP lp = hypergraph_lp(build_hypergraph(ChannelSpec::mag_sym(3, 3), 1));
  SolveOptions plain;
  plain.use_float_presolve = false;
  const LPSolution a = solve_min_transversal(lp, plain);
  const LPSolution b = solve_min_transversal(lp);
  EXPECT_EQ(a.optimum, b.optimum);
  EXPECT_FALSE(a.warm_started);
  expect_certified_pair(lp, a);
}

TEST(ExactLP, PivotCapReportsUncertified) {
  const CoveringLP lp = hypergraph_lp(build_hypergraph(ChannelSpec::z(5), 1));
  SolveOptions tiny;
  tiny.pivot_cap = 1;
  tiny.use_float_presolve = false;
  const LPSolution s = solve_min_transversal(lp, tiny);
  EXPECT_EQ(s.status, LPStatus::kPivotLimit);
  EXPECT_FALSE(s.certified);
}

TEST(ExactLP, ValidateRejectsBadRows) {
  CoveringLP lp;
  lp.num_vars = 2;
  lp.objective = {1, 1};
  lp.rows = {{}};
  EXPECT_THROW(lp.validate(), std::invalid_argument);
  lp.rows = {{{0, Rational(-1)}}};
  EXPECT_THROW(lp.validate(), std::invalid_argument);
  lp.rows = {{{2, Rational(1)}}};
  EXPECT_THROW(lp.validate(), std::invalid_argument);
}

TEST(ExactLP, FeasibilityReportDetails) {
  const CoveringLP lp = from_dense({{1, 1, 0}, {0, 1, 1}, {1, 0, 1}}, {1, 1, 1});
  const std::vector<Rational> bad{make_rational(1, 2), make_rational(1, 2), 0};
  const auto rep = verify_transversal(lp, bad);
  EXPECT_FALSE(rep.feasible);
  EXPECT_EQ(rep.first_violated_row, 1);
  EXPECT_FALSE(rep.bound.has_value());
  ASSERT_EQ(rep.slacks.size(), 3u);
  EXPECT_EQ(rep.slacks[0], 0);
  EXPECT_EQ(rep.slacks[1], make_rational(-1, 2));
  const std::vector<Rational> negative{2, -1, 1};
  EXPECT_EQ(verify_transversal(lp, negative).first_negative_var, 1);
  const std::vector<Rational> half(3, make_rational(1, 2));
  const auto ok = verify_transversal(lp, half);
  EXPECT_TRUE(ok.feasible);
  EXPECT_EQ(ok.bound, make_rational(3, 2));
}

TEST(ExactLP, TextRoundTrip) {
  const CoveringLP lp = hypergraph_lp(build_hypergraph(ChannelSpec::mag_asym(2, 3), 1));
  std::stringstream ss;
  write_lp(ss, lp);
  const CoveringLP back = read_lp(ss);
  EXPECT_EQ(back.num_vars, lp.num_vars);
  EXPECT_EQ(back.objective, lp.objective);
  EXPECT_EQ(back.rows, lp.rows);
  std::stringstream junk("gspb-lp 1\nvars x\n");
  EXPECT_THROW(read_lp(junk), std::invalid_argument);
}

TEST(ExactLP, SymmetryAssistedSolveMatchesDirect) {
  for (int n = 4; n <= 7; ++n) {
    const Hypergraph h = build_hypergraph(ChannelSpec::deletion(n), 1);
    const CoveringLP lp = hypergraph_lp(h);
    const LPSolution direct = solve_min_transversal(lp);
    const LPSolution sym = solve_min_transversal(lp, deletion_symmetry(h));
    EXPECT_EQ(sym.optimum, direct.optimum) << n;
    expect_certified_pair(lp, sym);
  }
}

TEST(ExactLP, BrokenSymmetryFallsBack) {
  const Hypergraph h = build_hypergraph(ChannelSpec::z(4), 1);
  const CoveringLP lp = hypergraph_lp(h);
  // Swapping the all-zero and all-one words is not an automorphism.
  LPSymmetry bogus;
  std::vector<int> perm(h.num_vertices());
  for (std::size_t i = 0; i < perm.size(); ++i) perm[i] = static_cast<int>(i);
  std::swap(perm.front(), perm.back());
  bogus.var_perms = {perm};
  bogus.row_perms = {perm};
  const LPSolution s = solve_min_transversal(lp, bogus);
  EXPECT_EQ(s.optimum, solve_min_transversal(lp).optimum);
  expect_certified_pair(lp, s);
}

TEST(ExactLPProperty, RandomCoveringLPsMatchVertexEnumeration) {
  std::mt19937 rng(2026);
  std::uniform_int_distribution<int> bit(0, 1);
  std::uniform_int_distribution<int> cost(1, 5);
  std::uniform_int_distribution<int> coef(0, 3);
  for (int trial = 0; trial < 300; ++trial) {
    const int n = 1 + trial % 3;
    const int m = 1 + trial % 5;
    std::vector<std::vector<int>> a(static_cast<std::size_t>(m), std::vector<int>(static_cast<std::size_t>(n)));
    for (auto& row : a) {
      bool any = false;
      for (auto& x : row) {
        x = trial % 2 ? coef(rng) : bit(rng);
        any = any || x;
      }
      if (!any) row[0] = 1;
    }
    std::vector<int> c(static_cast<std::size_t>(n));
    for (auto& x : c) x = cost(rng);
    const CoveringLP lp = from_dense(a, c);
    const LPSolution s = solve_min_transversal(lp);
    const auto oracle = vertex_enumeration_optimum(a, c);
    ASSERT_TRUE(oracle.has_value());
    EXPECT_EQ(s.optimum, *oracle) << "trial " << trial;
    expect_certified_pair(lp, s);
  }
}

TEST(ExactLPProperty, FloatPresolveAgrees) {
  std::mt19937 rng(11);
  std::uniform_int_distribution<int> bit(0, 3);
  for (int trial = 0; trial < 50; ++trial) {
    const int n = 10 + trial % 20;
    const int m = 8 + trial % 25;
    std::vector<std::vector<int>> a(static_cast<std::size_t>(m), std::vector<int>(static_cast<std::size_t>(n)));
    for (auto& row : a) {
      for (auto& x : row) x = bit(rng) == 0 ? 1 : 0;
      row[static_cast<std::size_t>(trial % n)] = 1;
    }
    const CoveringLP lp = from_dense(a, std::vector<int>(static_cast<std::size_t>(n), 1));
    const LPSolution s = solve_min_transversal(lp);
    expect_certified_pair(lp, s);
    const FloatSolution f = float_presolve(lp);
    ASSERT_TRUE(f.converged);
    EXPECT_NEAR(f.optimum, to_double(s.optimum), 1e-7);
  }
}

}  // namespace
}  // namespace gspb
