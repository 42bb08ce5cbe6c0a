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

#include "gspb/reference.hpp"

#include <array>
#include <string_view>

namespace gspb {
namespace {

constexpr int kFirstN = 5;

// Z channel integer-programming bounds, n = 5..23 per radius. Larger n
// were not published.
constexpr std::array<std::array<std::int64_t, 19>, 4> kWvbZ = {{
    {6, 12, 18, 36, 62, 117, 210, 410, 786, 1500, 2828, 5430, 10374, 19898, 38008, 73174, 140798,
     271953, 523586},
    {2, 4, 4, 7, 12, 18, 32, 63, 114, 218, 398, 739, 1279, 2380, 4242, 8069, 14374, 26679, 50200},
    {2, 2, 2, 4, 4, 6, 8, 12, 18, 34, 50, 90, 168, 320, 616, 1144, 2134, 4116, 7346},
    {2, 2, 2, 2, 2, 4, 4, 4, 6, 8, 12, 16, 26, 44, 76, 134, 229, 423, 745},
}};

// Single-deletion code sizes, n = 5..23.
constexpr std::array<std::int64_t, 19> kVtDeletion = {
    6, 10, 16, 30, 52, 94, 172, 316, 586, 1096, 2048, 3856, 7286, 13798, 26216, 49940, 95326,
    182362, 349536};

struct SourcedValue {
  std::int64_t value;
  std::string_view source;
};

// Single grain-error code sizes, n = 5..23.
constexpr std::array<SourcedValue, 19> kGrainLower = {{
    {8, "SR11"},       {16, "SR11"},      {26, "SR11"},      {44, "SR11"},
    {72, "SR13"},      {112, "SR13"},     {210, "GYD13b"},   {372, "SR13"},
    {702, "GYD13b"},   {1272, "SR13"},    {2400, "GYD13b"},  {4522, "SR13"},
    {8428, "SR13"},    {15348, "GYD13b"}, {27596, "GYD13b"}, {52432, "GYD13b"},
    {99880, "GYD13b"}, {190652, "GYD13b"}, {364724, "GYD13b"},
}};

// Projective code sizes, n = 4..9.
constexpr std::array<std::int64_t, 6> kBvpProjective = {6, 20, 124, 776, 9268, 107419};

template <std::size_t N>
std::optional<std::int64_t> lookup(const std::array<std::int64_t, N>& col, int first, int n) {
  if (n < first || n - first >= static_cast<int>(N)) return std::nullopt;
  return col[static_cast<std::size_t>(n - first)];
}

}  // namespace

std::vector<ReferenceValue> reference_values(Family family, int n, int r) {
  switch (family) {
    case Family::Z:
      if (r < 1 || r > 4 || n < kFirstN || n > 32) return {};
      return {{"WVB88", lookup(kWvbZ[static_cast<std::size_t>(r - 1)], kFirstN, n)}};
    case Family::Deletion:
      if (r != 1 || n < kFirstN || n > 23) return {};
      return {{"VT65", lookup(kVtDeletion, kFirstN, n)}};
    case Family::Grain:
      if (r != 1 || n < kFirstN || n > 23) return {};
      {
        const auto& e = kGrainLower[static_cast<std::size_t>(n - kFirstN)];
        return {{std::string(e.source), e.value}};
      }
    case Family::Projective:
      if (r != 1 || n < 2 || n > 11) return {};
      return {{"BVP", lookup(kBvpProjective, 4, n)}};
    default:
      return {};
  }
}

std::string render_reference(const ReferenceValue& ref) {
  return ref.value ? std::to_string(*ref.value) : std::string("?");
}

}  // namespace gspb
