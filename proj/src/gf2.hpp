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

// GF(2) linear algebra on row bitmasks. Internal to the library.

#ifndef GSPB_SRC_GF2_HPP_
#define GSPB_SRC_GF2_HPP_

#include <cstdint>
#include <vector>

#include "gspb/rational.hpp"

namespace gspb::gf2 {

// Reduced row echelon form of the span of `rows`: one row per pivot, the
// pivot is the row's highest set bit, no other row has that bit set, rows
// ordered by pivot descending. Zero rows are dropped.
std::vector<std::uint32_t> rref(std::vector<std::uint32_t> rows);

// All 2^k members of the span of an independent basis.
std::vector<std::uint32_t> span(const std::vector<std::uint32_t>& basis);

// Every k-dimensional subspace of GF(2)^n, each as its RREF basis.
std::vector<std::vector<std::uint32_t>> subspaces_of_dimension(int n, int k);

BigInt gaussian_binomial(int n, int m);

}  // namespace gspb::gf2

#endif  // GSPB_SRC_GF2_HPP_
