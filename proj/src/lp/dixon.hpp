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

// Exact solution of square integer systems by p-adic lifting: factor once
// modulo a word-size prime, lift the solution digit by digit, then recover
// the rational solution by reconstruction and check it exactly.

#ifndef GSPB_SRC_LP_DIXON_HPP_
#define GSPB_SRC_LP_DIXON_HPP_

#include <cstdint>
#include <optional>
#include <vector>

#include "lp/packing_form.hpp"

namespace gspb::lp {

// x = num / den, den > 0.
struct RatVec {
  std::vector<BigInt> num;
  BigInt den = 1;

  Rational at(std::size_t i) const { return make_rational(num[i], den); }
  int sign(std::size_t i) const { return sgn(num[i]); }
};

class ModularLU {
 public:
  // Row-major dim x dim matrix with entries already reduced into [0, p).
  static std::optional<ModularLU> factor(int dim, std::vector<double> a, std::uint32_t p);

  // Solve A x = b (or A^T x = b) mod p in place; entries in [0, p).
  void solve(std::vector<double>& b) const;
  void solve_transposed(std::vector<double>& b) const;

  std::uint32_t prime() const { return p_; }

 private:
  ModularLU() = default;
  int dim_ = 0;
  std::uint32_t p_ = 0;
  double pd_ = 0, pinv_ = 0;
  std::vector<double> lu_;
  std::vector<int> perm_;
  std::vector<double> inv_diag_;

  double mulmod(double a, double b) const;
};

class DixonSolver {
 public:
  // Square system given by sparse integer columns. factored() is false when
  // the matrix is singular modulo every prime tried.
  DixonSolver(int dim, std::vector<IntColumn> columns);

  bool factored() const { return dim_ == 0 || lu_.has_value(); }
  int dim() const { return dim_; }

  RatVec solve(const std::vector<BigInt>& rhs) const;
  RatVec solve_transposed(const std::vector<BigInt>& rhs) const;

 private:
  RatVec lift(const std::vector<BigInt>& rhs, bool transposed) const;
  void multiply(const std::vector<std::uint32_t>& x, bool transposed,
                std::vector<BigInt>& acc) const;

  int dim_;
  std::vector<IntColumn> columns_;
  std::optional<ModularLU> lu_;
  double log2_det_bound_ = 0;
  double log2_min_col_ = 0;
};

// Primes just below 2^26, largest first.
const std::vector<std::uint32_t>& lifting_primes();

std::optional<std::pair<BigInt, BigInt>> rational_reconstruct(const BigInt& a,
                                                              const BigInt& modulus);

}  // namespace gspb::lp

#endif  // GSPB_SRC_LP_DIXON_HPP_
