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

#include "gspb/reduction.hpp"

#include <algorithm>
#include <ostream>
#include <stdexcept>

#include "gf2.hpp"
#include "gspb/errors.hpp"

namespace gspb {
namespace {

int fold(int v, int q) { return std::min(v, q - 1 - v); }

int folded_labels(int q) { return (q + 1) / 2; }

void composition_rec(int remaining, int parts, std::vector<int>& cur,
                     std::vector<std::vector<int>>& out) {
  if (static_cast<int>(cur.size()) == parts - 1) {
    cur.push_back(remaining);
    out.push_back(cur);
    cur.pop_back();
    return;
  }
  for (int v = 0; v <= remaining; ++v) {
    cur.push_back(v);
    composition_rec(remaining - v, parts, cur, out);
    cur.pop_back();
  }
}

Vertex sorted_word(const std::vector<int>& counts) {
  Vertex v;
  for (std::size_t s = 0; s < counts.size(); ++s)
    v.code.insert(v.code.end(), static_cast<std::size_t>(counts[s]),
                  static_cast<std::uint32_t>(s));
  return v;
}

void add_entry(QuotientLP& q, const ClassPartition& p, int row, const std::vector<int>& target,
               std::int64_t count) {
  const int col = p.index_of(target);
  if (col < 0) throw std::logic_error("transition leaves the class set");
  q.matrix[static_cast<std::size_t>(row)][static_cast<std::size_t>(col)] += count;
}

}  // namespace

ClassPartition::ClassPartition(ChannelSpec spec, std::vector<ClassInfo> classes)
    : spec_(std::move(spec)), classes_(std::move(classes)) {
  for (std::size_t i = 0; i < classes_.size(); ++i)
    lookup_.emplace(classes_[i].invariant, static_cast<int>(i));
}

int ClassPartition::index_of(const std::vector<int>& invariant) const {
  auto it = lookup_.find(invariant);
  return it == lookup_.end() ? -1 : it->second;
}

int ClassPartition::class_of(const Vertex& v) const {
  return index_of(class_invariant(spec_, v));
}

bool has_quotient(Family f) {
  return f == Family::Z || f == Family::MagAsym || f == Family::MagSym ||
         f == Family::Projective;
}

std::vector<std::vector<int>> compositions(int n, int parts) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  if (parts >= 1) composition_rec(n, parts, cur, out);
  return out;
}

std::vector<int> class_invariant(const ChannelSpec& spec, const Vertex& v) {
  switch (spec.family) {
    case Family::Z: {
      int w = 0;
      for (auto s : v.code) w += static_cast<int>(s);
      return {w};
    }
    case Family::MagAsym: {
      std::vector<int> c(static_cast<std::size_t>(spec.q), 0);
      for (auto s : v.code) ++c[s];
      return c;
    }
    case Family::MagSym: {
      std::vector<int> c(static_cast<std::size_t>(folded_labels(spec.q)), 0);
      for (auto s : v.code) ++c[static_cast<std::size_t>(fold(static_cast<int>(s), spec.q))];
      return c;
    }
    case Family::Projective: {
      const int k = projective_dimension(v);
      return {std::min(k, spec.n - k)};
    }
    default:
      throw RefusalError("no quotient available; use full LP");
  }
}

ClassPartition partition_by_canonical_form(const ChannelSpec& spec) {
  spec.validate();
  std::vector<ClassInfo> classes;
  switch (spec.family) {
    case Family::Z:
      for (int w = 0; w <= spec.n; ++w) {
        std::vector<int> counts{spec.n - w, w};
        classes.push_back({{w}, sorted_word(counts), binomial(spec.n, w)});
      }
      break;
    case Family::MagAsym:
      for (auto& c : compositions(spec.n, spec.q)) {
        Vertex rep = sorted_word(c);
        BigInt size = multinomial(c);
        classes.push_back({std::move(c), std::move(rep), std::move(size)});
      }
      break;
    case Family::MagSym: {
      // A paired label holds either of two values, so it contributes a
      // factor 2 per position; the middle label of odd q has one value.
      const int h = folded_labels(spec.q);
      for (auto& c : compositions(spec.n, h)) {
        BigInt size = multinomial(c);
        for (int j = 0; j < h; ++j)
          if (j != spec.q - 1 - j) size *= pow2(c[static_cast<std::size_t>(j)]);
        Vertex rep = sorted_word(c);
        classes.push_back({std::move(c), std::move(rep), std::move(size)});
      }
      break;
    }
    case Family::Projective:
      for (int k = 0; k <= spec.n / 2; ++k) {
        BigInt size = gf2::gaussian_binomial(spec.n, k);
        if (k != spec.n - k) size += gf2::gaussian_binomial(spec.n, spec.n - k);
        Vertex rep;
        for (int b = k - 1; b >= 0; --b) rep.code.push_back(std::uint32_t{1} << b);
        classes.push_back({{k}, std::move(rep), std::move(size)});
      }
      break;
    default:
      throw RefusalError("no quotient available; use full LP");
  }
  return ClassPartition(spec, std::move(classes));
}

CoveringLP QuotientLP::to_covering_lp() const {
  CoveringLP lp;
  lp.num_vars = static_cast<int>(class_sizes.size());
  for (const auto& s : class_sizes) lp.objective.emplace_back(s);
  for (const auto& row : matrix) {
    SparseRow sr;
    for (std::size_t j = 0; j < row.size(); ++j)
      if (row[j] != 0) sr.emplace_back(static_cast<int>(j), Rational(static_cast<long>(row[j])));
    lp.rows.push_back(std::move(sr));
  }
  return lp;
}

QuotientLP quotient_matrix(const ChannelSpec& spec, const ClassPartition& partition, int r) {
  const std::size_t nc = partition.size();
  const bool radius_one_rules = spec.family == Family::Z || r == 1;
  if (!radius_one_rules) return quotient_by_counting(spec, partition, r);

  QuotientLP q;
  q.matrix.assign(nc, std::vector<std::int64_t>(nc, 0));
  for (const auto& c : partition.classes()) q.class_sizes.push_back(c.size);

  for (std::size_t row = 0; row < nc; ++row) {
    const auto& inv = partition.classes()[row].invariant;
    const int irow = static_cast<int>(row);
    switch (spec.family) {
      case Family::Z: {
        const int l = inv[0];
        for (int i = 0; i <= std::min(l, r); ++i)
          add_entry(q, partition, irow, {l - i}, binomial(l, i).get_si());
        break;
      }
      case Family::MagAsym:
        add_entry(q, partition, irow, inv, 1);
        for (int k = 1; k < spec.q; ++k) {
          if (inv[static_cast<std::size_t>(k)] == 0) continue;
          auto t = inv;
          --t[static_cast<std::size_t>(k)];
          ++t[static_cast<std::size_t>(k - 1)];
          add_entry(q, partition, irow, t, inv[static_cast<std::size_t>(k)]);
        }
        break;
      case Family::MagSym: {
        // Representative uses values 0..h-1; a coordinate holding value j
        // moves to j-1 and j+1 when those exist.
        add_entry(q, partition, irow, inv, 1);
        const int h = folded_labels(spec.q);
        for (int j = 0; j < h; ++j) {
          const int cnt = inv[static_cast<std::size_t>(j)];
          if (cnt == 0) continue;
          for (int value : {j - 1, j + 1}) {
            if (value < 0 || value > spec.q - 1) continue;
            auto t = inv;
            --t[static_cast<std::size_t>(j)];
            ++t[static_cast<std::size_t>(fold(value, spec.q))];
            add_entry(q, partition, irow, t, cnt);
          }
        }
        break;
      }
      case Family::Projective: {
        const int k = inv[0];
        const int n = spec.n;
        add_entry(q, partition, irow, {k}, 1);
        if (k >= 1)
          add_entry(q, partition, irow, {std::min(k - 1, n - k + 1)},
                    (std::int64_t{1} << k) - 1);
        if (k + 1 <= n)
          add_entry(q, partition, irow, {std::min(k + 1, n - k - 1)},
                    (std::int64_t{1} << (n - k)) - 1);
        break;
      }
      default:
        throw RefusalError("no quotient available; use full LP");
    }
  }
  return q;
}

QuotientLP quotient_by_counting(const ChannelSpec& spec, const ClassPartition& partition,
                                int r) {
  const std::size_t nc = partition.size();
  QuotientLP q;
  q.matrix.assign(nc, std::vector<std::int64_t>(nc, 0));
  for (const auto& c : partition.classes()) q.class_sizes.push_back(c.size);
  for (std::size_t row = 0; row < nc; ++row) {
    for (const auto& y : out_ball(spec, partition.classes()[row].representative, r)) {
      const int col = partition.class_of(y);
      if (col < 0) throw std::logic_error("ball member outside the partition");
      ++q.matrix[row][static_cast<std::size_t>(col)];
    }
  }
  return q;
}

LPSolution reduced_gspb(const ChannelSpec& spec, int r, const SolveOptions& opts) {
  const ClassPartition p = partition_by_canonical_form(spec);
  return solve_min_transversal(quotient_matrix(spec, p, r).to_covering_lp(), opts);
}

std::vector<Rational> lift_weights(const ClassPartition& partition,
                                   const std::vector<Rational>& class_weights,
                                   const std::vector<Vertex>& vertices) {
  std::vector<Rational> out;
  out.reserve(vertices.size());
  for (const auto& v : vertices) {
    const int c = partition.class_of(v);
    if (c < 0) throw std::invalid_argument("vertex outside the partition");
    out.push_back(class_weights.at(static_cast<std::size_t>(c)));
  }
  return out;
}

LiftCheck check_lift_on_full_graph(const ChannelSpec& spec, int r, const ClassPartition& partition,
                                   const LPSolution& quotient_solution, std::size_t cap) {
  const auto& classes = partition.classes();
  const auto& w = quotient_solution.primal;
  const auto& y = quotient_solution.dual;
  if (w.size() != classes.size() || y.size() != classes.size())
    throw std::invalid_argument("solution does not match the partition");
  std::vector<Rational> z;
  z.reserve(classes.size());
  for (std::size_t i = 0; i < classes.size(); ++i) z.push_back(y[i] / Rational(classes[i].size));

  LiftCheck out;
  out.primal_feasible = true;
  out.dual_feasible = true;
  for (std::size_t i = 0; i < classes.size(); ++i) {
    out.primal_value += Rational(classes[i].size) * w[i];
    out.dual_value += y[i];
    if (sgn(w[i]) < 0) out.primal_feasible = false;
    if (sgn(y[i]) < 0) out.dual_feasible = false;
  }
  auto weight_of = [&](const std::vector<Rational>& per_class, const Vertex& v) -> const Rational& {
    const int c = partition.class_of(v);
    if (c < 0) throw std::invalid_argument("vertex outside the partition");
    return per_class[static_cast<std::size_t>(c)];
  };
  // Symmetric channels have equal in- and out-balls.
  const bool symmetric = spec.family == Family::MagSym || spec.family == Family::Projective;
  for (const auto& x : enumerate_vertices(spec, cap)) {
    const auto ball = out_ball(spec, x, r);
    if (out.primal_feasible) {
      Rational s = 0;
      for (const auto& v : ball) s += weight_of(w, v);
      if (s < 1) {
        out.primal_feasible = false;
        out.failure = x;
      }
    }
    if (out.dual_feasible) {
      // Centers whose ball contains x.
      Rational s = 0;
      for (const auto& c : symmetric ? ball : in_ball(spec, x, r)) s += weight_of(z, c);
      if (s > 1) {
        out.dual_feasible = false;
        out.failure = x;
      }
    }
    if (!out.primal_feasible && !out.dual_feasible) break;
  }
  return out;
}

void write_quotient(std::ostream& out, const QuotientLP& q) { write_lp(out, q.to_covering_lp()); }

}  // namespace gspb
