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

#include "gf2.hpp"

#include <algorithm>
#include <bit>

namespace gspb::gf2 {

std::vector<std::uint32_t> rref(std::vector<std::uint32_t> rows) {
  std::vector<std::uint32_t> basis;
  for (auto v : rows) {
    for (auto b : basis)
      if (v & std::bit_floor(b)) v ^= b;
    if (v == 0) continue;
    const std::uint32_t pivot = std::bit_floor(v);
    for (auto& b : basis)
      if (b & pivot) b ^= v;
    basis.push_back(v);
  }
  std::sort(basis.begin(), basis.end(), [](auto a, auto b) {
    return std::bit_floor(a) > std::bit_floor(b);
  });
  return basis;
}

std::vector<std::uint32_t> span(const std::vector<std::uint32_t>& basis) {
  std::vector<std::uint32_t> out{0};
  for (auto b : basis) {
    const std::size_t size = out.size();
    for (std::size_t i = 0; i < size; ++i) out.push_back(out[i] ^ b);
  }
  return out;
}

std::vector<std::vector<std::uint32_t>> subspaces_of_dimension(int n, int k) {
  std::vector<std::vector<std::uint32_t>> out;
  if (k < 0 || k > n) return out;
  // Pivot sets are k-subsets of bit positions; each row's free entries are
  // the non-pivot positions below its pivot.
  for (std::uint32_t pivots = 0; pivots < (std::uint32_t{1} << n); ++pivots) {
    if (std::popcount(pivots) != k) continue;
    std::vector<int> piv;
    for (int b = n - 1; b >= 0; --b)
      if (pivots >> b & 1u) piv.push_back(b);
    std::vector<std::vector<int>> free(static_cast<std::size_t>(k));
    int total_free = 0;
    for (int i = 0; i < k; ++i) {
      for (int b = piv[static_cast<std::size_t>(i)] - 1; b >= 0; --b) {
        if (!(pivots >> b & 1u)) free[static_cast<std::size_t>(i)].push_back(b);
      }
      total_free += static_cast<int>(free[static_cast<std::size_t>(i)].size());
    }
    for (std::uint64_t assign = 0; assign < (std::uint64_t{1} << total_free); ++assign) {
      std::vector<std::uint32_t> rows(static_cast<std::size_t>(k));
      int bit = 0;
      for (int i = 0; i < k; ++i) {
        auto& row = rows[static_cast<std::size_t>(i)];
        row = std::uint32_t{1} << piv[static_cast<std::size_t>(i)];
        for (int b : free[static_cast<std::size_t>(i)]) {
          if (assign >> bit & 1u) row |= std::uint32_t{1} << b;
          ++bit;
        }
      }
      out.push_back(std::move(rows));
    }
  }
  return out;
}

BigInt gaussian_binomial(int n, int m) {
  if (m < 0 || n < 0 || m > n) return 0;
  BigInt num = 1, den = 1;
  for (int t = 0; t < m; ++t) {
    num *= pow2(n - t) - 1;
    den *= pow2(m - t) - 1;
  }
  return num / den;
}

}  // namespace gspb::gf2
