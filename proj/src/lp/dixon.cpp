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

#include "lp/dixon.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace gspb::lp {
namespace {

constexpr int kPrimesTried = 4;

bool is_prime(std::uint32_t v) {
  if (v < 2) return false;
  for (std::uint32_t d = 2; d * d <= v; ++d)
    if (v % d == 0) return false;
  return true;
}

std::int64_t inverse_mod(std::int64_t a, std::int64_t p) {
  std::int64_t t0 = 0, t1 = 1, r0 = p, r1 = a % p;
  while (r1 != 0) {
    std::int64_t q = r0 / r1;
    std::tie(r0, r1) = std::make_pair(r1, r0 - q * r1);
    std::tie(t0, t1) = std::make_pair(t1, t0 - q * t1);
  }
  if (r0 != 1) throw std::logic_error("element not invertible modulo p");
  return t0 < 0 ? t0 + p : t0;
}

double log2_norm(const IntColumn& col) {
  // log2 of the Euclidean norm, computed without overflow.
  double best = 0;
  for (const auto& [row, a] : col) {
    long exp = 0;
    double mant = mpz_get_d_2exp(&exp, a.get_mpz_t());
    best = std::max(best, static_cast<double>(exp) + std::log2(std::fabs(mant) + 1e-300));
  }
  // ||v||_2 <= sqrt(len) * max|v_i|
  return best + 0.5 * std::log2(static_cast<double>(std::max<std::size_t>(col.size(), 1)));
}

double log2_norm(const std::vector<BigInt>& v) {
  IntColumn col;
  for (std::size_t i = 0; i < v.size(); ++i)
    if (v[i] != 0) col.emplace_back(static_cast<int>(i), v[i]);
  return log2_norm(col);
}

}  // namespace

const std::vector<std::uint32_t>& lifting_primes() {
  static const std::vector<std::uint32_t> primes = [] {
    std::vector<std::uint32_t> out;
    for (std::uint32_t v = (1u << 26) - 1; out.size() < 8; v -= 2)
      if (is_prime(v)) out.push_back(v);
    return out;
  }();
  return primes;
}

double ModularLU::mulmod(double a, double b) const {
  double t = a * b;
  double q = static_cast<double>(static_cast<std::int32_t>(t * pinv_));
  double r = t - q * pd_;
  r += (r < 0) ? pd_ : 0.0;
  r -= (r >= pd_) ? pd_ : 0.0;
  return r;
}

std::optional<ModularLU> ModularLU::factor(int dim, std::vector<double> a, std::uint32_t p) {
  ModularLU f;
  f.dim_ = dim;
  f.p_ = p;
  f.pd_ = static_cast<double>(p);
  f.pinv_ = 1.0 / f.pd_;
  f.lu_ = std::move(a);
  f.perm_.resize(static_cast<std::size_t>(dim));
  std::iota(f.perm_.begin(), f.perm_.end(), 0);
  f.inv_diag_.assign(static_cast<std::size_t>(dim), 0.0);

  const double pd = f.pd_, pinv = f.pinv_;
  auto& lu = f.lu_;
  const auto n = static_cast<std::size_t>(dim);
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t piv = c;
    while (piv < n && lu[piv * n + c] == 0.0) ++piv;
    if (piv == n) return std::nullopt;
    if (piv != c) {
      std::swap_ranges(lu.begin() + static_cast<long>(piv * n),
                       lu.begin() + static_cast<long>(piv * n + n),
                       lu.begin() + static_cast<long>(c * n));
      std::swap(f.perm_[piv], f.perm_[c]);
    }
    const double inv = static_cast<double>(
        inverse_mod(static_cast<std::int64_t>(lu[c * n + c]), p));
    f.inv_diag_[c] = inv;
    const double* rc = &lu[c * n];
    for (std::size_t i = c + 1; i < n; ++i) {
      double* ri = &lu[i * n];
      if (ri[c] == 0.0) continue;
      const double m = f.mulmod(ri[c], inv);
      ri[c] = m;
      for (std::size_t j = c + 1; j < n; ++j) {
        double t = m * rc[j];
        double q = static_cast<double>(static_cast<std::int32_t>(t * pinv));
        double r = t - q * pd;
        r += (r < 0) ? pd : 0.0;
        r -= (r >= pd) ? pd : 0.0;
        double x = ri[j] - r;
        x += (x < 0) ? pd : 0.0;
        ri[j] = x;
      }
    }
  }
  return f;
}

void ModularLU::solve(std::vector<double>& b) const {
  const auto n = static_cast<std::size_t>(dim_);
  std::vector<double> y(n);
  for (std::size_t i = 0; i < n; ++i) y[i] = b[static_cast<std::size_t>(perm_[i])];
  for (std::size_t i = 0; i < n; ++i) {
    const double* row = &lu_[i * n];
    double acc = 0;
    for (std::size_t j = 0; j < i; ++j) acc += mulmod(row[j], y[j]);
    acc = std::fmod(acc, pd_);
    double v = y[i] - acc;
    y[i] = v < 0 ? v + pd_ : v;
  }
  for (std::size_t i = n; i-- > 0;) {
    const double* row = &lu_[i * n];
    double acc = 0;
    for (std::size_t j = i + 1; j < n; ++j) acc += mulmod(row[j], y[j]);
    acc = std::fmod(acc, pd_);
    double v = y[i] - acc;
    if (v < 0) v += pd_;
    y[i] = mulmod(v, inv_diag_[i]);
  }
  b = std::move(y);
}

void ModularLU::solve_transposed(std::vector<double>& b) const {
  // A = P^T L U, so A^T y = b is U^T s = b, L^T t = s, y = P^T t.
  const auto n = static_cast<std::size_t>(dim_);
  std::vector<double> s = b;
  for (std::size_t i = 0; i < n; ++i) {
    s[i] = mulmod(s[i], inv_diag_[i]);
    const double* row = &lu_[i * n];
    const double si = s[i];
    if (si == 0.0) continue;
    for (std::size_t j = i + 1; j < n; ++j) {
      double v = s[j] - mulmod(row[j], si);
      s[j] = v < 0 ? v + pd_ : v;
    }
  }
  for (std::size_t i = n; i-- > 0;) {
    const double* row = &lu_[i * n];
    const double ti = s[i];
    if (ti == 0.0) continue;
    for (std::size_t j = 0; j < i; ++j) {
      double v = s[j] - mulmod(row[j], ti);
      s[j] = v < 0 ? v + pd_ : v;
    }
  }
  for (std::size_t i = 0; i < n; ++i) b[static_cast<std::size_t>(perm_[i])] = s[i];
}

DixonSolver::DixonSolver(int dim, std::vector<IntColumn> columns)
    : dim_(dim), columns_(std::move(columns)) {
  const auto n = static_cast<std::size_t>(dim);
  if (columns_.size() != n) throw std::logic_error("square system expected");
  if (dim == 0) return;

  double det_cols = 0, min_col = 1e300;
  for (const auto& col : columns_) {
    double l = log2_norm(col);
    det_cols += l;
    min_col = std::min(min_col, l);
  }
  log2_det_bound_ = det_cols;
  log2_min_col_ = min_col;

  for (int attempt = 0; attempt < kPrimesTried; ++attempt) {
    const std::uint32_t p = lifting_primes()[static_cast<std::size_t>(attempt)];
    std::vector<double> dense(n * n, 0.0);
    for (std::size_t j = 0; j < n; ++j) {
      for (const auto& [row, a] : columns_[j]) {
        dense[static_cast<std::size_t>(row) * n + j] =
            static_cast<double>(mpz_fdiv_ui(a.get_mpz_t(), p));
      }
    }
    lu_ = ModularLU::factor(dim, std::move(dense), p);
    if (lu_) return;
  }
}

void DixonSolver::multiply(const std::vector<std::uint32_t>& x, bool transposed,
                           std::vector<BigInt>& acc) const {
  // acc -= A x (or A^T x).
  for (std::size_t j = 0; j < columns_.size(); ++j) {
    if (!transposed) {
      if (x[j] == 0) continue;
      for (const auto& [row, a] : columns_[j])
        mpz_submul_ui(acc[static_cast<std::size_t>(row)].get_mpz_t(), a.get_mpz_t(), x[j]);
    } else {
      for (const auto& [row, a] : columns_[j]) {
        const auto xr = x[static_cast<std::size_t>(row)];
        if (xr != 0) mpz_submul_ui(acc[j].get_mpz_t(), a.get_mpz_t(), xr);
      }
    }
  }
}

RatVec DixonSolver::solve(const std::vector<BigInt>& rhs) const { return lift(rhs, false); }

RatVec DixonSolver::solve_transposed(const std::vector<BigInt>& rhs) const {
  return lift(rhs, true);
}

RatVec DixonSolver::lift(const std::vector<BigInt>& rhs, bool transposed) const {
  const auto n = static_cast<std::size_t>(dim_);
  RatVec out;
  if (n == 0) return out;
  if (!lu_) throw std::logic_error("solve on a singular system");

  const std::uint32_t p = lu_->prime();
  const double bits_per_digit = std::log2(static_cast<double>(p));
  // Hadamard-type bound on numerators and denominators; lifting past it
  // makes reconstruction unique. Row norms are not tracked, so transposed
  // solves use the same column-based bound, which still bounds |det|.
  double num_bits = log2_det_bound_ - log2_min_col_ + log2_norm(rhs);
  if (transposed) {
    double det_rows = 0, min_row = 1e300;
    std::vector<IntColumn> rows(n);
    for (std::size_t j = 0; j < n; ++j)
      for (const auto& [row, a] : columns_[j])
        rows[static_cast<std::size_t>(row)].emplace_back(static_cast<int>(j), a);
    for (const auto& r : rows) {
      double l = log2_norm(r);
      det_rows += l;
      min_row = std::min(min_row, l);
    }
    num_bits = det_rows - min_row + log2_norm(rhs);
  }
  const double needed_bits = 2.0 + std::max(log2_det_bound_, 0.0) + std::max(num_bits, 0.0);
  const std::size_t max_iter =
      static_cast<std::size_t>(std::ceil(needed_bits / bits_per_digit)) + 2;

  std::vector<BigInt> residual = rhs;
  std::vector<BigInt> acc(n, 0);
  BigInt modulus = 1;
  std::vector<double> digit(n);
  std::vector<std::uint32_t> xi(n);
  std::size_t next_check = 4;

  auto verify = [&](const RatVec& cand) {
    std::vector<BigInt> lhs(n, 0);
    for (std::size_t j = 0; j < n; ++j) {
      for (const auto& [row, a] : columns_[j]) {
        if (!transposed) {
          lhs[static_cast<std::size_t>(row)] += a * cand.num[j];
        } else {
          lhs[j] += a * cand.num[static_cast<std::size_t>(row)];
        }
      }
    }
    for (std::size_t i = 0; i < n; ++i)
      if (lhs[i] != cand.den * rhs[i]) return false;
    return true;
  };

  auto reconstruct = [&]() -> std::optional<RatVec> {
    BigInt den = 1;
    std::vector<BigInt> nums(n), dens(n);
    for (std::size_t i = 0; i < n; ++i) {
      BigInt a = acc[i] * den;
      mpz_fdiv_r(a.get_mpz_t(), a.get_mpz_t(), modulus.get_mpz_t());
      auto rr = rational_reconstruct(a, modulus);
      if (!rr) return std::nullopt;
      den *= rr->second;
      nums[i] = std::move(rr->first);
      dens[i] = den;
    }
    RatVec cand;
    cand.den = den;
    cand.num.resize(n);
    for (std::size_t i = 0; i < n; ++i) {
      BigInt factor;
      mpz_divexact(factor.get_mpz_t(), den.get_mpz_t(), dens[i].get_mpz_t());
      cand.num[i] = nums[i] * factor;
    }
    if (!verify(cand)) return std::nullopt;
    return cand;
  };

  for (std::size_t iter = 1;; ++iter) {
    for (std::size_t i = 0; i < n; ++i)
      digit[i] = static_cast<double>(mpz_fdiv_ui(residual[i].get_mpz_t(), p));
    if (transposed) {
      lu_->solve_transposed(digit);
    } else {
      lu_->solve(digit);
    }
    for (std::size_t i = 0; i < n; ++i) {
      xi[i] = static_cast<std::uint32_t>(digit[i]);
      if (xi[i] != 0) mpz_addmul_ui(acc[i].get_mpz_t(), modulus.get_mpz_t(), xi[i]);
    }
    modulus *= p;
    multiply(xi, transposed, residual);
    bool zero = true;
    for (auto& r : residual) {
      mpz_divexact_ui(r.get_mpz_t(), r.get_mpz_t(), p);
      if (zero && r != 0) zero = false;
    }
    if (zero) {
      out.num = acc;
      out.den = 1;
      return out;
    }
    if (iter >= next_check || iter >= max_iter) {
      if (auto cand = reconstruct()) return *cand;
      if (iter >= max_iter + 4) {
        throw std::logic_error("p-adic lifting failed to reconstruct a solution");
      }
      next_check = iter + std::max<std::size_t>(2, iter / 2);
    }
  }
}

std::optional<std::pair<BigInt, BigInt>> rational_reconstruct(const BigInt& a,
                                                              const BigInt& modulus) {
  BigInt bound = modulus / 2;
  mpz_sqrt(bound.get_mpz_t(), bound.get_mpz_t());
  BigInt r0 = modulus, r1 = a, t0 = 0, t1 = 1, q, tmp;
  while (r1 > bound) {
    mpz_fdiv_q(q.get_mpz_t(), r0.get_mpz_t(), r1.get_mpz_t());
    tmp = r0 - q * r1;
    r0 = std::move(r1);
    r1 = std::move(tmp);
    tmp = t0 - q * t1;
    t0 = std::move(t1);
    t1 = std::move(tmp);
  }
  if (t1 == 0 || abs(t1) > bound) return std::nullopt;
  BigInt g = gcd(r1, t1);
  if (g != 1) return std::nullopt;
  if (t1 < 0) return std::make_pair(BigInt(-r1), BigInt(-t1));
  return std::make_pair(r1, t1);
}

}  // namespace gspb::lp
