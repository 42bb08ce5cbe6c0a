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

#include <algorithm>
#include <cmath>
#include <limits>

#include "lp/simplex.hpp"

namespace gspb::lp {

FloatSolution float_tableau_simplex(const CoveringLP& lp, double tolerance,
                                    std::size_t max_pivots) {
  const auto m = static_cast<std::size_t>(lp.num_vars);
  const std::size_t k = lp.rows.size();
  const std::size_t cols = k + m;
  if (max_pivots == 0) max_pivots = 50 * cols + 10000;
  const double pivot_tol = 1e-9;
  const double zero_tol = 1e-13;

  std::vector<double> t(m * cols, 0.0);
  std::vector<double> b(m);
  std::vector<double> d(cols, 0.0);
  std::vector<int> basis(m);
  for (std::size_t i = 0; i < k; ++i) {
    for (const auto& [v, a] : lp.rows[i]) t[static_cast<std::size_t>(v) * cols + i] = a.get_d();
    d[i] = 1.0;
  }
  for (std::size_t v = 0; v < m; ++v) {
    t[v * cols + k + v] = 1.0;
    b[v] = lp.objective[v].get_d();
    basis[v] = static_cast<int>(k + v);
  }

  FloatSolution out;
  double objective = 0;
  double last_improving = -1;
  std::size_t stalled = 0;
  std::vector<std::size_t> nz;

  for (;;) {
    const bool bland = stalled > 200;
    std::size_t enter = cols;
    double best = tolerance;
    for (std::size_t j = 0; j < cols; ++j) {
      if (d[j] > best) {
        enter = j;
        if (bland) break;
        best = d[j];
      }
    }
    if (enter == cols) {
      out.converged = true;
      break;
    }
    if (out.pivots >= max_pivots) break;

    // Ratio test, two passes: bound with a small relaxation, then prefer
    // the largest pivot (or smallest basis index under Bland's rule).
    double theta = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < m; ++i) {
      double a = t[i * cols + enter];
      if (a > pivot_tol) theta = std::min(theta, (std::max(b[i], 0.0) + 1e-9) / a);
    }
    if (!std::isfinite(theta)) break;
    std::size_t leave = m;
    double leave_score = -1;
    for (std::size_t i = 0; i < m; ++i) {
      double a = t[i * cols + enter];
      if (a <= pivot_tol || std::max(b[i], 0.0) / a > theta) continue;
      double score = bland ? -static_cast<double>(basis[i]) : a;
      if (leave == m || score > leave_score) {
        leave = i;
        leave_score = score;
      }
    }

    double* pr = &t[leave * cols];
    const double inv = 1.0 / pr[enter];
    nz.clear();
    for (std::size_t j = 0; j < cols; ++j) {
      if (pr[j] == 0.0) continue;
      pr[j] *= inv;
      nz.push_back(j);
    }
    pr[enter] = 1.0;
    b[leave] *= inv;
    for (std::size_t i = 0; i < m; ++i) {
      if (i == leave) continue;
      double* ri = &t[i * cols];
      const double f = ri[enter];
      if (f == 0.0) continue;
      for (std::size_t j : nz) {
        double v = ri[j] - f * pr[j];
        ri[j] = std::fabs(v) < zero_tol ? 0.0 : v;
      }
      ri[enter] = 0.0;
      b[i] -= f * b[leave];
      if (b[i] < 0 && b[i] > -1e-11) b[i] = 0;
    }
    const double f = d[enter];
    for (std::size_t j : nz) d[j] -= f * pr[j];
    d[enter] = 0.0;
    objective += f * b[leave];
    basis[leave] = static_cast<int>(enter);
    ++out.pivots;

    if (objective > last_improving + 1e-12 * (1.0 + std::fabs(objective))) {
      last_improving = objective;
      stalled = 0;
    } else {
      ++stalled;
    }
  }

  out.optimum = objective;
  out.basis = basis;
  out.primal.assign(m, 0.0);
  out.dual.assign(k, 0.0);
  for (std::size_t v = 0; v < m; ++v) out.primal[v] = std::max(0.0, -d[k + v]);
  for (std::size_t i = 0; i < m; ++i) {
    if (static_cast<std::size_t>(basis[i]) < k)
      out.dual[static_cast<std::size_t>(basis[i])] = std::max(0.0, b[i]);
  }
  return out;
}

}  // namespace gspb::lp
