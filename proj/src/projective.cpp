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

#include <algorithm>
#include <optional>
#include <stdexcept>

#include "gf2.hpp"

namespace gspb {
namespace {

void check_n(int n, int min_n) {
  if (n < min_n || n > 30) throw std::invalid_argument("projective n out of range");
}

Rational p2m1(int e) { return Rational(pow2(e) - 1); }

int mod4(int v) { return ((v % 4) + 4) % 4; }

// Folded coefficients of row k.
std::vector<Rational> row_coeffs(int n, int k) {
  std::vector<Rational> c(static_cast<std::size_t>(n / 2 + 1), Rational(0));
  c[static_cast<std::size_t>(projective_fold(n, k))] += 1;
  if (k >= 1) c[static_cast<std::size_t>(projective_fold(n, k - 1))] += p2m1(k);
  if (k + 1 <= n) c[static_cast<std::size_t>(projective_fold(n, k + 1))] += p2m1(n - k);
  return c;
}

Rational row_value(int n, int k, const std::vector<Rational>& w) {
  const auto c = row_coeffs(n, k);
  Rational s = 0;
  for (std::size_t j = 0; j < c.size(); ++j) s += c[j] * w[j];
  return s;
}

std::vector<Rational> folded_objective(int n) {
  std::vector<Rational> c(static_cast<std::size_t>(n / 2 + 1), Rational(0));
  for (int k = 0; k <= n; ++k)
    c[static_cast<std::size_t>(projective_fold(n, k))] += Rational(gaussian_binomial(n, k));
  return c;
}

bool folded_feasible(int n, const std::vector<Rational>& w) {
  for (const auto& x : w)
    if (sgn(x) < 0) return false;
  for (int k = 0; k <= n; ++k)
    if (row_value(n, k, w) < 1) return false;
  return true;
}

// Solves M y = b exactly; nullopt when singular.
std::optional<std::vector<Rational>> solve_square(std::vector<std::vector<Rational>> m,
                                                  std::vector<Rational> b) {
  const std::size_t d = b.size();
  for (std::size_t col = 0; col < d; ++col) {
    std::size_t piv = col;
    while (piv < d && sgn(m[piv][col]) == 0) ++piv;
    if (piv == d) return std::nullopt;
    std::swap(m[piv], m[col]);
    std::swap(b[piv], b[col]);
    for (std::size_t r = 0; r < d; ++r) {
      if (r == col || sgn(m[r][col]) == 0) continue;
      const Rational f = m[r][col] / m[col][col];
      for (std::size_t c = col; c < d; ++c) m[r][c] -= f * m[col][c];
      b[r] -= f * b[col];
    }
  }
  for (std::size_t i = 0; i < d; ++i) b[i] /= m[i][i];
  return b;
}

}  // namespace

BigInt gaussian_binomial(int n, int m) { return gf2::gaussian_binomial(n, m); }

int projective_fold(int n, int k) { return std::min(k, n - k); }

CoveringLP projective_lp(int n) {
  check_n(n, 1);
  CoveringLP lp;
  lp.num_vars = n / 2 + 1;
  lp.objective = folded_objective(n);
  for (int k = 0; k <= n; ++k) {
    const auto c = row_coeffs(n, k);
    SparseRow row;
    for (std::size_t j = 0; j < c.size(); ++j)
      if (sgn(c[j]) != 0) row.emplace_back(static_cast<int>(j), c[j]);
    lp.rows.push_back(std::move(row));
  }
  return lp;
}

Rational projective_objective(int n, const std::vector<Rational>& folded_w) {
  const auto c = folded_objective(n);
  Rational s = 0;
  for (std::size_t j = 0; j < c.size(); ++j) s += c[j] * folded_w.at(j);
  return s;
}

ProjectiveWeights greedy_weights(int n) {
  check_n(n, 2);
  const int h = n / 2;
  ProjectiveWeights out{n, std::vector<Rational>(static_cast<std::size_t>(h + 1), Rational(0)),
                        WeightOrigin::kGreedy, false};
  auto& w = out.w;
  auto at = [&](int k) -> const Rational& { return w[static_cast<std::size_t>(projective_fold(n, k))]; };
  for (int k = h - 1; k >= 0; --k) {
    // Row k+1 solved for w_k. When k+2 folds back onto k the unknown sits
    // on both sides and the equation is solved directly.
    const Rational c2 = p2m1(n - k - 1);
    Rational v;
    if (projective_fold(n, k + 2) == k)
      v = (Rational(1) - at(k + 1)) / (p2m1(k + 1) + c2);
    else
      v = (Rational(1) - at(k + 1) - c2 * at(k + 2)) / p2m1(k + 1);
    w[static_cast<std::size_t>(k)] = sgn(v) > 0 ? v : Rational(0);
  }
  if (h >= 1 && sgn(w[0]) == 0 && sgn(w[1]) == 0) w[0] = 1;
  out.feasible = folded_feasible(n, w);
  return out;
}

ClosedFormWeights closed_form_weights(int n) {
  check_n(n, 2);
  const int h = n / 2;
  ClosedFormWeights out;
  out.weights = {n, std::vector<Rational>(static_cast<std::size_t>(h + 1), Rational(0)),
                 WeightOrigin::kClosedForm, false};
  auto& w = out.weights.w;
  for (int k = 0; k < h; ++k) {
    Rational v = 0;
    if (n % 2 == 0 && k == h - 1) {
      v = Rational(1) / (2 * p2m1(k + 1));
    } else if (n % 2 == 0 && k == h - 2) {
      v = p2m1(k + 3) - 2;  // 2^{k+3} - 3
      v /= p2m1(k + 1) * (p2m1(k + 2) - 1);
    } else if (mod4(k - (h - 1)) == 0) {
      v = Rational(1) / p2m1(k + 1);
    } else if (mod4(k - (h - 2)) == 0) {
      v = Rational(2) / p2m1(k + 2);
    }
    w[static_cast<std::size_t>(k)] = v;
  }
  if (h >= 1 && sgn(w[0]) == 0 && sgn(w[1]) == 0) w[0] = 1;
  out.weights.feasible = folded_feasible(n, w);
  const ProjectiveWeights g = greedy_weights(n);
  for (int k = 0; k <= h; ++k)
    if (w[static_cast<std::size_t>(k)] != g.w[static_cast<std::size_t>(k)]) out.mismatches.push_back(k);
  return out;
}

ProjectiveCertificate projective_certificate(int n) {
  check_n(n, 2);
  const int h = n / 2;
  const ProjectiveWeights g = greedy_weights(n);
  const Rational greedy_value = projective_objective(n, g.w);
  ProjectiveCertificate cert;

  // Partial costs: f_k is either LP row rows[k] or the bound w_k >= 0.
  std::vector<int> rows(static_cast<std::size_t>(h + 1), -1);
  for (int k = 0; k <= h; ++k) {
    if (n % 2 == 0 && k == h)
      rows[static_cast<std::size_t>(k)] = k - 1;
    else if (k == 0 && mod4(h) != 1 && mod4(h) != 2)
      rows[static_cast<std::size_t>(k)] = 0;
    else if (mod4(k - (h - 1)) == 0 || mod4(k - (h - 2)) == 0)
      rows[static_cast<std::size_t>(k)] = k + 1;
  }
  std::vector<std::vector<Rational>> m(static_cast<std::size_t>(h + 1),
                                       std::vector<Rational>(static_cast<std::size_t>(h + 1), Rational(0)));
  for (int k = 0; k <= h; ++k) {
    const int row = rows[static_cast<std::size_t>(k)];
    if (row < 0) {
      m[static_cast<std::size_t>(k)][static_cast<std::size_t>(k)] = 1;
      continue;
    }
    const auto c = row_coeffs(n, row);
    for (int j = 0; j <= h; ++j) m[static_cast<std::size_t>(j)][static_cast<std::size_t>(k)] = c[static_cast<std::size_t>(j)];
  }
  const auto y = solve_square(m, folded_objective(n));
  if (!y) {
    cert.note = "block system singular";
  } else {
    bool ok = g.feasible;
    for (int k = 0; k <= h && ok; ++k) {
      const Rational& yk = (*y)[static_cast<std::size_t>(k)];
      if (sgn(yk) < 0) {
        ok = false;
        cert.note = "block dual negative at k=" + std::to_string(k);
      } else if (sgn(yk) > 0) {
        const int row = rows[static_cast<std::size_t>(k)];
        const bool tight = row < 0 ? sgn(g.w[static_cast<std::size_t>(k)]) == 0
                                   : row_value(n, row, g.w) == 1;
        if (!tight) {
          ok = false;
          cert.note = "complementary slackness fails at k=" + std::to_string(k);
        }
      }
      if (rows[static_cast<std::size_t>(k)] >= 0) cert.block_value += yk;
    }
    if (!g.feasible) cert.note = "greedy weights infeasible";
    if (ok && cert.block_value != greedy_value) {
      ok = false;
      cert.note = "block value differs from greedy objective";
    }
    cert.block_construction_ok = ok;
    if (ok) {
      cert.y = *y;
      cert.certified = true;
      return cert;
    }
  }
  const LPSolution lp = solve_min_transversal(projective_lp(n));
  cert.used_lp_dual = true;
  cert.y = lp.dual;
  cert.certified = lp.certified;
  if (lp.optimum != greedy_value) cert.note += "; LP optimum differs from greedy objective";
  return cert;
}

ProjectiveResult projective_gspb(int n) {
  check_n(n, 2);
  ProjectiveResult res;
  res.weights = greedy_weights(n);
  res.value = projective_objective(n, res.weights.w);
  res.greedy_feasible = res.weights.feasible;
  res.lp_optimum = solve_min_transversal(projective_lp(n)).optimum;
  res.matches_lp = res.greedy_feasible && res.lp_optimum == res.value;
  res.certificate = projective_certificate(n);
  return res;
}

Rational projective_aspv(int n) {
  check_n(n, 1);
  BigInt total = 0;
  BigInt ball_sum = 0;
  for (int k = 0; k <= n; ++k) {
    const BigInt g = gaussian_binomial(n, k);
    total += g;
    ball_sum += g * (pow2(k) + pow2(n - k) - 1);
  }
  return Rational(total * total) / Rational(ball_sum);
}

}  // namespace gspb
