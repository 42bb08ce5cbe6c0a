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

#include <stdexcept>

namespace gspb {

Rational make_rational(const BigInt& num, const BigInt& den) {
  if (den == 0) throw std::domain_error("rational with zero denominator");
  Rational x(num, den);
  x.canonicalize();
  return x;
}

Rational make_rational(std::int64_t num, std::int64_t den) {
  return make_rational(BigInt(static_cast<long>(num)),
                       BigInt(static_cast<long>(den)));
}

BigInt floor_of(const Rational& x) {
  BigInt out;
  mpz_fdiv_q(out.get_mpz_t(), x.get_num_mpz_t(), x.get_den_mpz_t());
  return out;
}

BigInt ceil_of(const Rational& x) {
  BigInt out;
  mpz_cdiv_q(out.get_mpz_t(), x.get_num_mpz_t(), x.get_den_mpz_t());
  return out;
}

std::string to_string(const Rational& x) {
  if (x.get_den() == 1) return x.get_num().get_str();
  return x.get_num().get_str() + "/" + x.get_den().get_str();
}

std::string to_string(const BigInt& x) { return x.get_str(); }

Rational parse_rational(std::string_view text) {
  std::string s(text);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r'))
    s.pop_back();
  std::size_t start = s.find_first_not_of(" \t");
  if (start == std::string::npos) throw std::invalid_argument("empty rational");
  s = s.substr(start);

  auto parse_int = [&](const std::string& t) {
    BigInt v;
    if (t.empty() || v.set_str(t, 10) != 0)
      throw std::invalid_argument("malformed number: " + std::string(text));
    return v;
  };

  if (auto slash = s.find('/'); slash != std::string::npos) {
    const BigInt den = parse_int(s.substr(slash + 1));
    if (den == 0) throw std::invalid_argument("zero denominator: " + std::string(text));
    return make_rational(parse_int(s.substr(0, slash)), den);
  }
  if (auto dot = s.find('.'); dot != std::string::npos) {
    bool negative = !s.empty() && s[0] == '-';
    std::string whole = s.substr(negative ? 1 : 0, dot - (negative ? 1 : 0));
    std::string frac = s.substr(dot + 1);
    if (whole.empty()) whole = "0";
    BigInt den = ipow(10, static_cast<long>(frac.size()));
    BigInt num = parse_int(whole) * den + (frac.empty() ? BigInt(0) : parse_int(frac));
    if (negative) num = -num;
    return make_rational(num, den);
  }
  return Rational(parse_int(s));
}

double to_double(const Rational& x) { return x.get_d(); }

BigInt binomial(long n, long k) {
  if (k < 0 || n < 0 || k > n) return 0;
  BigInt out;
  mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(n),
               static_cast<unsigned long>(k));
  return out;
}

BigInt factorial(long n) {
  if (n < 0) throw std::domain_error("factorial of negative number");
  BigInt out;
  mpz_fac_ui(out.get_mpz_t(), static_cast<unsigned long>(n));
  return out;
}

BigInt pow2(long e) { return ipow(2, e); }

BigInt ipow(long base, long e) {
  if (e < 0) throw std::domain_error("negative exponent");
  BigInt out;
  mpz_ui_pow_ui(out.get_mpz_t(), static_cast<unsigned long>(base),
                static_cast<unsigned long>(e));
  return out;
}

BigInt multinomial(std::span<const int> parts) {
  long n = 0;
  for (int p : parts) {
    if (p < 0) return 0;
    n += p;
  }
  BigInt out = factorial(n);
  for (int p : parts) out /= factorial(p);
  return out;
}

Rational sum(std::span<const Rational> values) {
  Rational acc = 0;
  for (const auto& v : values) acc += v;
  return acc;
}

}  // namespace gspb
