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

#ifndef GSPB_RATIONAL_HPP_
#define GSPB_RATIONAL_HPP_

#include <gmpxx.h>

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace gspb {

// mpq_class keeps values canonical (lowest terms, positive denominator) as
// long as every constructor path goes through canonicalize(); the helpers
// below do that.
using BigInt = mpz_class;
using Rational = mpq_class;

Rational make_rational(const BigInt& num, const BigInt& den);
Rational make_rational(std::int64_t num, std::int64_t den = 1);

BigInt floor_of(const Rational& x);
BigInt ceil_of(const Rational& x);

// "p/q", or "p" when the denominator is one.
std::string to_string(const Rational& x);
std::string to_string(const BigInt& x);

// Accepts "p", "p/q", "-p/q" and plain decimals such as "0.25".
Rational parse_rational(std::string_view text);

double to_double(const Rational& x);

BigInt binomial(long n, long k);
BigInt factorial(long n);
BigInt pow2(long e);
BigInt ipow(long base, long e);

// n! / (k_0! k_1! ...), with the parts summing to n.
BigInt multinomial(std::span<const int> parts);

Rational sum(std::span<const Rational> values);

}  // namespace gspb

#endif  // GSPB_RATIONAL_HPP_
