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

// Published code sizes from other work, embedded as static data. These
// are never computed here.

#ifndef GSPB_REFERENCE_HPP_
#define GSPB_REFERENCE_HPP_

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "gspb/channel.hpp"

namespace gspb {

struct ReferenceValue {
  std::string source;
  // Absent entries are listed with their source and no value.
  std::optional<std::int64_t> value;
};

// Reference entries for one table row, possibly none.
std::vector<ReferenceValue> reference_values(Family family, int n, int r);

// "?" for absent entries.
std::string render_reference(const ReferenceValue& ref);

}  // namespace gspb

#endif  // GSPB_REFERENCE_HPP_
