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

#include "gspb/seqchannels.hpp"

#include <bit>
#include <map>
#include <numeric>
#include <stdexcept>

namespace gspb {
namespace {

using Wide = __int128;

std::uint64_t low_mask(int bits) {
  return bits >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << bits) - 1;
}

// Bit b of the word is the symbol at position len-1-b.
RunProfile profile_bits(std::uint64_t x, int len) {
  if (len <= 1) return {1, 0};
  const std::uint64_t diff_up = (x ^ (x >> 1)) & low_mask(len - 1);  // b vs b+1
  const std::uint64_t diff_dn = (x ^ (x << 1)) & low_mask(len);       // b vs b-1
  const std::uint64_t middle = low_mask(len - 1) & ~std::uint64_t{1};
  return {1 + std::popcount(diff_up), std::popcount(diff_up & diff_dn & middle)};
}

// Weights scaled by a common denominator so sweeps run in integers.
class ScaledWeights {
 public:
  explicit ScaledWeights(int len) : len_(len) {
    std::uint64_t l = 1;
    for (int rho = 1; rho <= len; ++rho) l = std::lcm(l, static_cast<std::uint64_t>(rho));
    scale_ = static_cast<Wide>(l) * l * l;
    table_.assign(static_cast<std::size_t>((len + 1) * (len + 1)), 0);
    for (int rho = 1; rho <= len; ++rho) {
      for (int mu = 0; mu <= std::max(rho - 2, 0); ++mu) {
        const Wide r3 = static_cast<Wide>(rho) * rho * rho;
        const Wide v = mu <= 1 ? scale_ / rho : scale_ / r3 * (static_cast<Wide>(rho) * rho - mu);
        table_[static_cast<std::size_t>(rho * (len + 1) + mu)] = v;
      }
    }
  }

  Wide scale() const { return scale_; }
  Wide at(std::uint64_t word) const {
    const RunProfile p = profile_bits(word, len_);
    return table_[static_cast<std::size_t>(p.rho * (len_ + 1) + p.mu)];
  }

 private:
  int len_;
  Wide scale_ = 1;
  std::vector<Wide> table_;
};

void check_sweep_length(int n) {
  if (n < 2 || n > kMaxSweepLength)
    throw std::invalid_argument("sweep length must be in [2, " + std::to_string(kMaxSweepLength) + "]");
}

Vertex reversed(const Vertex& v) { return Vertex{{v.code.rbegin(), v.code.rend()}}; }

Vertex complemented(const Vertex& v) {
  Vertex out = v;
  for (auto& s : out.code) s ^= 1u;
  return out;
}

template <typename Map>
std::vector<int> permutation(const std::vector<Vertex>& items, const Map& index, Vertex (*f)(const Vertex&)) {
  std::vector<int> perm(items.size());
  for (std::size_t i = 0; i < items.size(); ++i) perm[i] = index.at(f(items[i]));
  return perm;
}

LPSymmetry word_symmetry(const Hypergraph& h, bool with_reversal) {
  std::map<Vertex, int> vindex;
  for (std::size_t i = 0; i < h.vertices.size(); ++i) vindex.emplace(h.vertices[i], static_cast<int>(i));
  std::map<Vertex, int> cindex;
  for (std::size_t i = 0; i < h.centers.size(); ++i) cindex.emplace(h.centers[i], static_cast<int>(i));
  LPSymmetry sym;
  sym.var_perms.push_back(permutation(h.vertices, vindex, &complemented));
  sym.row_perms.push_back(permutation(h.centers, cindex, &complemented));
  if (with_reversal) {
    sym.var_perms.push_back(permutation(h.vertices, vindex, &reversed));
    sym.row_perms.push_back(permutation(h.centers, cindex, &reversed));
  }
  return sym;
}

FullLPResult full_lp(const ChannelSpec& spec, int n, int cap, bool with_reversal,
                     const SolveOptions& opts) {
  FullLPResult out;
  if (n > cap) {
    out.absent_reason = "n=" + std::to_string(n) + " exceeds full LP cap " + std::to_string(cap);
    return out;
  }
  const Hypergraph h = build_hypergraph(spec, 1);
  out.solution = solve_min_transversal(hypergraph_lp(h), word_symmetry(h, with_reversal), opts);
  return out;
}

std::vector<Rational> theorem_weights(int len) {
  if (len < 1 || len > 30) throw std::invalid_argument("word length out of range");
  std::vector<Rational> w;
  w.reserve(std::size_t{1} << len);
  for (std::uint64_t x = 0; x < (std::uint64_t{1} << len); ++x)
    w.push_back(seq_weight(profile_bits(x, len)));
  return w;
}

Rational profile_sum(int len) {
  Rational s = 2;
  for (int rho = 2; rho <= len; ++rho)
    for (int mu = 0; mu <= rho - 2; ++mu)
      s += Rational(count_profiles(len, rho, mu)) * seq_weight({rho, mu});
  return s;
}

}  // namespace

bool RunProfile::valid(int length) const {
  if (rho < 1 || rho > length) return false;
  if (rho == 1) return mu == 0;
  return mu >= 0 && mu <= rho - 2;
}

int runs(const Vertex& x) {
  if (x.code.empty()) return 0;
  int r = 1;
  for (std::size_t i = 1; i < x.code.size(); ++i) r += x.code[i] != x.code[i - 1];
  return r;
}

int middle_one_runs(const Vertex& x) {
  int mu = 0;
  for (std::size_t i = 1; i + 1 < x.code.size(); ++i)
    mu += x.code[i] != x.code[i - 1] && x.code[i] != x.code[i + 1];
  return mu;
}

RunProfile run_profile(const Vertex& x) { return {runs(x), middle_one_runs(x)}; }

BigInt count_profiles(int n, int rho, int mu) {
  if (n < 1) throw std::invalid_argument("count_profiles needs n >= 1");
  if (rho == 1 && mu == 0) return 2;
  if (rho < 2 || rho > n || mu < 0 || mu > rho - 2) return 0;
  return 2 * binomial(rho - 2, mu) * binomial(n - rho + 1, rho - mu - 1);
}

Rational seq_weight(const RunProfile& p) {
  if (p.rho < 1 || p.mu < 0) throw std::invalid_argument("invalid run profile");
  const Rational inv = make_rational(1, p.rho);
  if (p.mu <= 1) return inv;
  return inv * (Rational(1) - make_rational(p.mu, static_cast<std::int64_t>(p.rho) * p.rho));
}

Rational deletion_bound(int n) {
  if (n < 2) throw std::invalid_argument("deletion needs n >= 2");
  return profile_sum(n - 1);
}

Rational deletion_mb(int n) {
  if (n < 2) throw std::invalid_argument("deletion needs n >= 2");
  return Rational(pow2(n) - 2) / Rational(n - 1);
}

Rational deletion_aspv(int n) {
  if (n < 2) throw std::invalid_argument("deletion needs n >= 2");
  return Rational(pow2(n)) / Rational(n + 1);
}

Rational grain_bound(int n) {
  if (n < 1) throw std::invalid_argument("grain needs n >= 1");
  return profile_sum(n);
}

Rational grain_mb(int n, bool even_improvement) {
  if (n < 1) throw std::invalid_argument("grain needs n >= 1");
  const BigInt num = pow2(n + 1) - 2;
  if (!even_improvement) return Rational(num) / Rational(n);
  BigInt half = num / (2 * n);
  return Rational(2 * half);
}

Rational grain_aspv(int n) {
  if (n < 1) throw std::invalid_argument("grain needs n >= 1");
  return Rational(pow2(n + 1)) / Rational(n + 1);
}

BigInt parity_floor(const Rational& v) { return 2 * floor_of(v / 2); }

std::vector<Rational> deletion_theorem_weights(int n) { return theorem_weights(n - 1); }
std::vector<Rational> grain_theorem_weights(int n) { return theorem_weights(n); }

SweepResult deletion_theorem_feasibility(int n) {
  check_sweep_length(n);
  const ScaledWeights w(n - 1);
  SweepResult res;
  res.feasible = true;
  for (std::uint64_t x = 0; x < (std::uint64_t{1} << n); ++x) {
    // One deletion per run: drop the most significant bit of each run.
    Wide s = 0;
    for (int b = 0; b < n; ++b) {
      if (b != n - 1 && ((x >> b) & 1u) == ((x >> (b + 1)) & 1u)) continue;
      const std::uint64_t y = ((x >> (b + 1)) << b) | (x & low_mask(b));
      s += w.at(y);
    }
    ++res.centers_checked;
    if (s < w.scale()) {
      res.feasible = false;
      res.first_violation = x;
      break;
    }
  }
  return res;
}

SweepResult grain_theorem_feasibility(int n) {
  check_sweep_length(n);
  const ScaledWeights w(n);
  SweepResult res;
  res.feasible = true;
  for (std::uint64_t x = 0; x < (std::uint64_t{1} << n); ++x) {
    // A symbol that differs from its left neighbour may be overwritten.
    Wide s = w.at(x);
    for (int b = 0; b + 1 < n; ++b)
      if (((x >> b) & 1u) != ((x >> (b + 1)) & 1u)) s += w.at(x ^ (std::uint64_t{1} << b));
    ++res.centers_checked;
    if (s < w.scale()) {
      res.feasible = false;
      res.first_violation = x;
      break;
    }
  }
  return res;
}

FullLPResult deletion_full_gspb(int n, int cap, const SolveOptions& opts) {
  return full_lp(ChannelSpec::deletion(n), n, cap, true, opts);
}

FullLPResult grain_full_gspb(int n, int cap, const SolveOptions& opts) {
  return full_lp(ChannelSpec::grain(n), n, cap, false, opts);
}

LPSymmetry deletion_symmetry(const Hypergraph& h) { return word_symmetry(h, true); }
LPSymmetry grain_symmetry(const Hypergraph& h) { return word_symmetry(h, false); }

}  // namespace gspb
