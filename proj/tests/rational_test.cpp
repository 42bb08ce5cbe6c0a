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


#include "gspb/rational.hpp"

#include <random>
#include <stdexcept>
#include <vector>

#include <gtest/gtest.h>

namespace gspb {
namespace {

TEST(Rational, LowestTermsPositiveDenominator) {
  const Rational x = make_rational(6, -4);
  EXPECT_EQ(x.get_num(), -3);
  EXPECT_EQ(x.get_den(), 2);
  EXPECT_EQ(to_string(x), "-3/2");
  EXPECT_EQ(to_string(make_rational(18, 6)), "3");
}

TEST(Rational, FloorAndCeil) {
  EXPECT_EQ(floor_of(make_rational(30, 4)), 7);
  EXPECT_EQ(floor_of(make_rational(-3, 2)), -2);
  EXPECT_EQ(ceil_of(make_rational(-3, 2)), -1);
  EXPECT_EQ(floor_of(Rational(5)), 5);
  EXPECT_EQ(ceil_of(Rational(5)), 5);
}

TEST(Rational, ParseRoundTrip) {
  EXPECT_EQ(parse_rational("17/2"), make_rational(17, 2));
  EXPECT_EQ(parse_rational("-4/6"), make_rational(-2, 3));
  EXPECT_EQ(parse_rational("12"), Rational(12));
  EXPECT_THROW(parse_rational("1/0"), std::invalid_argument);
  EXPECT_THROW(parse_rational("abc"), std::invalid_argument);
  EXPECT_THROW(parse_rational(""), std::invalid_argument);
}

TEST(Rational, Combinatorics) {
  EXPECT_EQ(binomial(10, 3), 120);
  EXPECT_EQ(binomial(5, 7), 0);
  EXPECT_EQ(binomial(5, -1), 0);
  EXPECT_EQ(factorial(0), 1);
  EXPECT_EQ(factorial(20), BigInt("2432902008176640000"));
  EXPECT_EQ(pow2(70), BigInt("1180591620717411303424"));
  EXPECT_EQ(ipow(3, 5), 243);
  const std::vector<int> parts{2, 1, 1};
  EXPECT_EQ(multinomial(parts), 12);
}

TEST(Rational, SumAndDouble) {
  const std::vector<Rational> v{make_rational(1, 2), make_rational(1, 3), make_rational(1, 6)};
  EXPECT_EQ(sum(v), 1);
  EXPECT_DOUBLE_EQ(to_double(make_rational(1, 4)), 0.25);
}

TEST(RationalProperty, FloorBracketsValue) {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<std::int64_t> num(-1'000'000, 1'000'000);
  std::uniform_int_distribution<std::int64_t> den(1, 10'000);
  for (int i = 0; i < 2000; ++i) {
    const Rational x = make_rational(num(rng), den(rng));
    const BigInt f = floor_of(x);
    EXPECT_LE(Rational(f), x);
    EXPECT_GT(Rational(f + 1), x);
    EXPECT_EQ(parse_rational(to_string(x)), x);
  }
}

TEST(RationalProperty, PascalRule) {
  for (long n = 1; n <= 60; ++n)
    for (long k = 1; k < n; ++k) EXPECT_EQ(binomial(n, k), binomial(n - 1, k - 1) + binomial(n - 1, k));
}

}  // namespace
}  // namespace gspb
