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

#include "gspb/magnitude.hpp"

#include <stdexcept>

#include "gspb/errors.hpp"

namespace gspb {
namespace {

void check_params(int n, int q) {
  if (n < 1 || q < 2) throw std::invalid_argument("magnitude channel needs n >= 1 and q >= 2");
}

ClassBound finish(const QuotientLP& quotient, std::vector<Rational> weights) {
  ClassBound out;
  out.weights = std::move(weights);
  for (std::size_t i = 0; i < out.weights.size(); ++i)
    out.bound += Rational(quotient.class_sizes[i]) * out.weights[i];
  out.feasible = verify_transversal(quotient.to_covering_lp(), out.weights).feasible;
  return out;
}

}  // namespace

QuotientLP asym_quotient(int n, int q) {
  check_params(n, q);
  const ChannelSpec spec = ChannelSpec::mag_asym(n, q);
  return quotient_matrix(spec, partition_by_canonical_form(spec), 1);
}

Rational asym_mb(int n, int q) {
  check_params(n, q);
  return Rational(ipow(q, n + 1)) / Rational((q - 1) * (n + 1));
}

Rational asym_aspv(int n, int q) {
  check_params(n, q);
  return Rational(ipow(q, n + 1)) / Rational((q - 1) * (n + 1) + 1);
}

ClassBound asym_improved_transversal(int n, int q) {
  check_params(n, q);
  const ChannelSpec spec = ChannelSpec::mag_asym(n, q);
  const ClassPartition p = partition_by_canonical_form(spec);
  std::vector<Rational> w;
  for (const auto& c : p.classes()) {
    const int i0 = c.invariant[0];
    const int i1 = c.invariant[1];
    if (i0 == n) {
      w.emplace_back(1);
    } else {
      const Rational denom = Rational(n - i0 + 1) + make_rational(i1 - 1, 2 * (n - i0));
      w.push_back(Rational(1) / denom);
    }
  }
  return finish(quotient_matrix(spec, p, 1), std::move(w));
}

LPSolution asym_gspb(int n, int q, const SolveOptions& opts) {
  return solve_min_transversal(asym_quotient(n, q).to_covering_lp(), opts);
}

QuotientLP sym_quotient(int n, int q) {
  check_params(n, q);
  const ChannelSpec spec = ChannelSpec::mag_sym(n, q);
  return quotient_matrix(spec, partition_by_canonical_form(spec), 1);
}

Rational sym_aspv(int n, int q) {
  check_params(n, q);
  return Rational(ipow(q, n)) / (Rational(2 * n + 1) - make_rational(2 * n, q));
}

ClassBound sym_transversal(int n, int q) {
  check_params(n, q);
  const ChannelSpec spec = ChannelSpec::mag_sym(n, q);
  const ClassPartition p = partition_by_canonical_form(spec);
  // Folded label 0 counts the symbols at either end of the alphabet, the
  // ones with a single move; deg = 2n + 1 - i_0.
  std::vector<Rational> w;
  for (const auto& c : p.classes()) {
    const int deg = 2 * n + 1 - c.invariant[0];
    if (deg <= 1) throw RefusalError("vertex of degree 1; weight 1/(deg-1) undefined");
    w.push_back(make_rational(1, deg - 1));
  }
  return finish(quotient_matrix(spec, p, 1), std::move(w));
}

LPSolution sym_gspb(int n, int q, const SolveOptions& opts) {
  return solve_min_transversal(sym_quotient(n, q).to_covering_lp(), opts);
}

QuotientLP sym_rule_as_printed(int n, int q) {
  check_params(n, q);
  const ChannelSpec spec = ChannelSpec::mag_sym(n, q);
  const ClassPartition p = partition_by_canonical_form(spec);
  const std::size_t nc = p.size();
  QuotientLP out;
  out.matrix.assign(nc, std::vector<std::int64_t>(nc, 0));
  for (const auto& c : p.classes()) out.class_sizes.push_back(c.size);
  const int h = (q + 1) / 2;
  for (std::size_t row = 0; row < nc; ++row) {
    const auto& inv = p.classes()[row].invariant;
    out.matrix[row][row] = 1;
    for (int k = 1; k <= h - 1; ++k) {
      if (inv[static_cast<std::size_t>(k)] == 0) continue;
      auto t = inv;
      --t[static_cast<std::size_t>(k)];
      ++t[static_cast<std::size_t>(k - 1)];
      out.matrix[row][static_cast<std::size_t>(p.index_of(t))] = k;
    }
  }
  return out;
}

std::vector<MatrixDivergence> sym_rule_divergence(int n, int q) {
  const QuotientLP stated = sym_rule_as_printed(n, q);
  const QuotientLP counted = sym_quotient(n, q);
  std::vector<MatrixDivergence> out;
  for (std::size_t i = 0; i < stated.size(); ++i)
    for (std::size_t j = 0; j < stated.size(); ++j)
      if (stated.matrix[i][j] != counted.matrix[i][j])
        out.push_back({static_cast<int>(i), static_cast<int>(j), stated.matrix[i][j],
                       counted.matrix[i][j]});
  return out;
}

}  // namespace gspb
