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

#ifndef GSPB_ERRORS_HPP_
#define GSPB_ERRORS_HPP_

#include <stdexcept>
#include <string>

namespace gspb {

// The computation does not apply to this instance (no quotient, family not
// monotone, degenerate degrees, ...).
class RefusalError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// The instance is larger than a configured enumeration or LP cap.
class CapExceededError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace gspb

#endif  // GSPB_ERRORS_HPP_
