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

#include <numeric>
#include <optional>
#include <stdexcept>

#include "lp/simplex.hpp"

namespace gspb::lp {
namespace {

// Exact solves with a basis of the packing form. Basic slack columns are
// unit vectors, so their rows are eliminated before the integer system is
// handed to the lifting solver.
class BasisSystem {
 public:
  BasisSystem(const PackingForm& pf, const std::vector<int>& basis)
      : pf_(pf), basis_(basis) {
    const auto m = static_cast<std::size_t>(pf.m);
    slack_pos_.assign(m, -1);
    reduced_index_.assign(m, -1);
    for (std::size_t p = 0; p < basis.size(); ++p) {
      if (pf.is_slack(basis[p])) {
        slack_pos_[static_cast<std::size_t>(basis[p] - pf.k)] = static_cast<int>(p);
      } else {
        struct_pos_.push_back(static_cast<int>(p));
      }
    }
    for (std::size_t v = 0; v < m; ++v) {
      if (slack_pos_[v] >= 0) continue;
      reduced_index_[v] = static_cast<int>(reduced_rows_.size());
      reduced_rows_.push_back(static_cast<int>(v));
    }
    if (reduced_rows_.size() != struct_pos_.size()) return;
    std::vector<IntColumn> cols;
    cols.reserve(struct_pos_.size());
    for (int p : struct_pos_) {
      IntColumn c;
      for (const auto& [v, a] : pf.columns[static_cast<std::size_t>(basis[static_cast<std::size_t>(p)])]) {
        int r = reduced_index_[static_cast<std::size_t>(v)];
        if (r >= 0) c.emplace_back(r, a);
      }
      cols.push_back(std::move(c));
    }
    solver_.emplace(static_cast<int>(struct_pos_.size()), std::move(cols));
  }

  bool ok() const { return solver_ && solver_->factored(); }

  // B x = rhs; result indexed by basis position.
  RatVec solve(const std::vector<BigInt>& rhs) const {
    std::vector<BigInt> reduced(reduced_rows_.size());
    for (std::size_t t = 0; t < reduced_rows_.size(); ++t)
      reduced[t] = rhs[static_cast<std::size_t>(reduced_rows_[t])];
    RatVec xs = solver_->solve(reduced);
    const auto m = static_cast<std::size_t>(pf_.m);
    RatVec out;
    out.den = xs.den;
    out.num.assign(m, 0);
    std::vector<BigInt> used(m, 0);
    for (std::size_t t = 0; t < struct_pos_.size(); ++t) {
      const auto p = static_cast<std::size_t>(struct_pos_[t]);
      out.num[p] = xs.num[t];
      if (xs.num[t] == 0) continue;
      for (const auto& [v, a] : pf_.columns[static_cast<std::size_t>(basis_[p])]) {
        if (slack_pos_[static_cast<std::size_t>(v)] >= 0)
          used[static_cast<std::size_t>(v)] += a * xs.num[t];
      }
    }
    for (std::size_t v = 0; v < m; ++v) {
      const int p = slack_pos_[v];
      if (p >= 0) out.num[static_cast<std::size_t>(p)] = rhs[v] * xs.den - used[v];
    }
    return out;
  }

  // B^T y = rhs (rhs indexed by basis position); result indexed by row.
  RatVec solve_transposed(const std::vector<BigInt>& rhs) const {
    const auto m = static_cast<std::size_t>(pf_.m);
    std::vector<BigInt> reduced(struct_pos_.size());
    for (std::size_t t = 0; t < struct_pos_.size(); ++t) {
      const auto p = static_cast<std::size_t>(struct_pos_[t]);
      BigInt val = rhs[p];
      for (const auto& [v, a] : pf_.columns[static_cast<std::size_t>(basis_[p])]) {
        const int sp = slack_pos_[static_cast<std::size_t>(v)];
        if (sp >= 0) val -= a * rhs[static_cast<std::size_t>(sp)];
      }
      reduced[t] = std::move(val);
    }
    RatVec ys = solver_->solve_transposed(reduced);
    RatVec out;
    out.den = ys.den;
    out.num.assign(m, 0);
    for (std::size_t v = 0; v < m; ++v) {
      const int sp = slack_pos_[v];
      if (sp >= 0) {
        out.num[v] = rhs[static_cast<std::size_t>(sp)] * ys.den;
      } else {
        out.num[v] = ys.num[static_cast<std::size_t>(reduced_index_[v])];
      }
    }
    return out;
  }

 private:
  const PackingForm& pf_;
  std::vector<int> basis_;
  std::vector<int> struct_pos_;
  std::vector<int> slack_pos_;
  std::vector<int> reduced_index_;
  std::vector<int> reduced_rows_;
  std::optional<DixonSolver> solver_;
};

std::vector<BigInt> dense_column(const PackingForm& pf, int col) {
  std::vector<BigInt> out(static_cast<std::size_t>(pf.m), 0);
  if (pf.is_slack(col)) {
    out[static_cast<std::size_t>(col - pf.k)] = 1;
  } else {
    for (const auto& [v, a] : pf.columns[static_cast<std::size_t>(col)])
      out[static_cast<std::size_t>(v)] = a;
  }
  return out;
}

// Numerator of (row vector / den) . column, times den.
BigInt dot_num(const PackingForm& pf, const RatVec& y, int col) {
  if (pf.is_slack(col)) return y.num[static_cast<std::size_t>(col - pf.k)];
  BigInt acc = 0;
  for (const auto& [v, a] : pf.columns[static_cast<std::size_t>(col)])
    acc += a * y.num[static_cast<std::size_t>(v)];
  return acc;
}

std::vector<int> slack_basis(const PackingForm& pf) {
  std::vector<int> b(static_cast<std::size_t>(pf.m));
  std::iota(b.begin(), b.end(), pf.k);
  return b;
}

bool valid_basis(const PackingForm& pf, const std::vector<int>& basis) {
  if (basis.size() != static_cast<std::size_t>(pf.m)) return false;
  std::vector<char> seen(static_cast<std::size_t>(pf.num_columns()), 0);
  for (int c : basis) {
    if (c < 0 || c >= pf.num_columns() || seen[static_cast<std::size_t>(c)]) return false;
    seen[static_cast<std::size_t>(c)] = 1;
  }
  return true;
}

}  // namespace

ExactResult exact_revised_simplex(const PackingForm& pf, std::vector<int> warm_basis,
                                  std::size_t pivot_cap) {
  ExactResult res;
  bool cold = !valid_basis(pf, warm_basis) || warm_basis == slack_basis(pf);
  res.basis = cold ? slack_basis(pf) : std::move(warm_basis);
  res.warm_start_used = !cold;
  const auto m = static_cast<std::size_t>(pf.m);
  const int ncols = pf.num_columns();
  std::size_t dual_steps = 0;
  const std::size_t dual_step_cap = 20 * m + 100;

  auto restart_cold = [&] {
    if (cold) throw std::logic_error("slack basis failed in exact simplex");
    cold = true;
    res.basis = slack_basis(pf);
  };

  for (;;) {
    BasisSystem sys(pf, res.basis);
    if (!sys.ok()) {
      restart_cold();
      continue;
    }
    res.x_basic = sys.solve(pf.rhs);
    std::vector<BigInt> cb(m);
    for (std::size_t p = 0; p < m; ++p) cb[p] = pf.cost(res.basis[p]);
    res.y = sys.solve_transposed(cb);

    std::vector<char> basic(static_cast<std::size_t>(ncols), 0);
    for (int c : res.basis) basic[static_cast<std::size_t>(c)] = 1;

    // d_j * den = cost_j * den - y_num . a_j
    std::vector<BigInt> dnum(static_cast<std::size_t>(ncols), 0);
    bool dual_feasible = true;
    int entering = -1;
    for (int j = 0; j < ncols; ++j) {
      if (basic[static_cast<std::size_t>(j)]) continue;
      dnum[static_cast<std::size_t>(j)] = pf.cost(j) * res.y.den - dot_num(pf, res.y, j);
      if (sgn(dnum[static_cast<std::size_t>(j)]) > 0) {
        dual_feasible = false;
        if (entering < 0) entering = j;
      }
    }
    int negative_pos = -1;
    for (std::size_t p = 0; p < m; ++p) {
      if (sgn(res.x_basic.num[p]) < 0 &&
          (negative_pos < 0 || res.basis[p] < res.basis[static_cast<std::size_t>(negative_pos)])) {
        negative_pos = static_cast<int>(p);
      }
    }
    const bool primal_feasible = negative_pos < 0;

    if (primal_feasible && dual_feasible) {
      res.status = LPStatus::kOptimal;
      return res;
    }
    if (res.pivots >= pivot_cap) {
      res.status = LPStatus::kPivotLimit;
      return res;
    }

    if (primal_feasible) {
      // Bland: lowest-index improving column, lowest-index leaving variable
      // among the minimum ratios.
      RatVec dir = sys.solve(dense_column(pf, entering));
      int leave = -1;
      for (std::size_t p = 0; p < m; ++p) {
        if (sgn(dir.num[p]) <= 0) continue;
        if (leave < 0) {
          leave = static_cast<int>(p);
          continue;
        }
        const auto l = static_cast<std::size_t>(leave);
        // x_p / dir_p  vs  x_l / dir_l (common positive denominators)
        int cmp = sgn(BigInt(res.x_basic.num[p] * dir.num[l] - res.x_basic.num[l] * dir.num[p]));
        if (cmp < 0 || (cmp == 0 && res.basis[p] < res.basis[l])) leave = static_cast<int>(p);
      }
      if (leave < 0) {
        res.status = LPStatus::kUnbounded;
        return res;
      }
      res.basis[static_cast<std::size_t>(leave)] = entering;
      ++res.pivots;
      continue;
    }

    if (dual_feasible && dual_steps < dual_step_cap) {
      std::vector<BigInt> e(m, 0);
      e[static_cast<std::size_t>(negative_pos)] = 1;
      RatVec rho = sys.solve_transposed(e);
      int enter = -1;
      BigInt best_d, best_a;
      for (int j = 0; j < ncols; ++j) {
        if (basic[static_cast<std::size_t>(j)]) continue;
        BigInt a = dot_num(pf, rho, j);
        if (sgn(a) >= 0) continue;
        const BigInt& dj = dnum[static_cast<std::size_t>(j)];
        // minimise d_j / a_j, both scaled by positive denominators
        if (enter < 0 || sgn(BigInt(dj * best_a - best_d * a)) < 0) {
          enter = j;
          best_d = dj;
          best_a = a;
        }
      }
      if (enter < 0) {
        res.status = LPStatus::kInfeasible;
        return res;
      }
      res.basis[static_cast<std::size_t>(negative_pos)] = enter;
      ++res.pivots;
      ++dual_steps;
      continue;
    }

    restart_cold();
  }
}

}  // namespace gspb::lp
