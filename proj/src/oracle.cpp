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

#include "gspb/oracle.hpp"

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <set>

#include "gspb/bounds.hpp"
#include "gspb/errors.hpp"
#include "gspb/exact_lp.hpp"

namespace gspb {
namespace {

class Bitset {
 public:
  explicit Bitset(std::size_t n = 0) : words_((n + 63) / 64, 0) {}
  void set(std::size_t i) { words_[i / 64] |= std::uint64_t{1} << (i % 64); }
  bool intersects(const Bitset& o) const {
    for (std::size_t i = 0; i < words_.size(); ++i)
      if (words_[i] & o.words_[i]) return true;
    return false;
  }
  void merge(const Bitset& o) {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= o.words_[i];
  }

 private:
  std::vector<std::uint64_t> words_;
};

Hypergraph checked_hypergraph(const ChannelSpec& spec, int r, std::size_t cap) {
  if (vertex_count(spec) > cap)
    throw CapExceededError("instance too large for the oracle (cap " + std::to_string(cap) + ")");
  return build_hypergraph(spec, r, cap);
}

class MatchingSearch {
 public:
  explicit MatchingSearch(const Hypergraph& h) : h_(h) {
    for (const auto& e : h.edges) {
      Bitset b(h.num_vertices());
      for (int v : e) b.set(static_cast<std::size_t>(v));
      sets_.push_back(std::move(b));
    }
  }

  // Largest matching size, searching the edges in the given order.
  int maximum(std::vector<int> order, int upper) {
    upper_ = upper;
    best_ = 0;
    Bitset covered(h_.num_vertices());
    dfs_max(order, covered, 0);
    return best_;
  }

  // Lexicographically smallest set of edge indices forming a matching of
  // the given size.
  std::vector<int> smallest_witness(int size) {
    std::vector<int> order(h_.num_edges());
    std::iota(order.begin(), order.end(), 0);
    target_ = size;
    found_.clear();
    std::vector<int> chosen;
    Bitset covered(h_.num_vertices());
    dfs_first(order, covered, chosen);
    return found_;
  }

  std::size_t nodes() const { return nodes_; }

 private:
  // Fractional bound: each uncovered vertex weighs 1 / (smallest candidate
  // edge containing it), a transversal of the candidate edges.
  int bound(const std::vector<int>& candidates) const {
    if (candidates.empty()) return 0;
    std::vector<std::size_t> smallest(h_.num_vertices(), 0);
    for (int e : candidates) {
      const auto sz = h_.edges[static_cast<std::size_t>(e)].size();
      for (int v : h_.edges[static_cast<std::size_t>(e)]) {
        auto& s = smallest[static_cast<std::size_t>(v)];
        if (s == 0 || sz < s) s = sz;
      }
    }
    double total = 0;
    for (auto s : smallest)
      if (s) total += 1.0 / static_cast<double>(s);
    const int frac = static_cast<int>(total + 1e-9);
    return std::min(frac, static_cast<int>(candidates.size()));
  }

  std::vector<int> compatible(const std::vector<int>& edges, const Bitset& covered) const {
    std::vector<int> out;
    for (int e : edges)
      if (!sets_[static_cast<std::size_t>(e)].intersects(covered)) out.push_back(e);
    return out;
  }

  void dfs_max(const std::vector<int>& candidates, const Bitset& covered, int count) {
    ++nodes_;
    if (best_ >= upper_) return;
    if (count > best_) best_ = count;
    if (candidates.empty() || count + bound(candidates) <= best_) return;
    const int e = candidates.front();
    Bitset with = covered;
    with.merge(sets_[static_cast<std::size_t>(e)]);
    std::vector<int> rest(candidates.begin() + 1, candidates.end());
    dfs_max(compatible(rest, with), with, count + 1);
    dfs_max(rest, covered, count);
  }

  bool dfs_first(const std::vector<int>& candidates, const Bitset& covered, std::vector<int>& chosen) {
    ++nodes_;
    const int have = static_cast<int>(chosen.size());
    if (have == target_) {
      found_ = chosen;
      return true;
    }
    if (have + bound(candidates) < target_) return false;
    for (std::size_t i = 0; i < candidates.size(); ++i) {
      const int e = candidates[i];
      Bitset with = covered;
      with.merge(sets_[static_cast<std::size_t>(e)]);
      std::vector<int> rest(candidates.begin() + static_cast<std::ptrdiff_t>(i) + 1, candidates.end());
      chosen.push_back(e);
      if (dfs_first(compatible(rest, with), with, chosen)) return true;
      chosen.pop_back();
      if (have + bound(rest) < target_) return false;
    }
    return false;
  }

  const Hypergraph& h_;
  std::vector<Bitset> sets_;
  int upper_ = 0;
  int best_ = 0;
  int target_ = 0;
  std::vector<int> found_;
  std::size_t nodes_ = 0;
};

}  // namespace

Rational brute_force_tau(const ChannelSpec& spec, int r, std::size_t cap) {
  const Hypergraph h = checked_hypergraph(spec, r, cap);
  return solve_min_transversal(hypergraph_lp(h)).optimum;
}

MatchingResult brute_force_matching(const ChannelSpec& spec, int r, std::size_t cap) {
  const Hypergraph h = checked_hypergraph(spec, r, cap);
  const BigInt lp_floor = floor_of(solve_min_transversal(hypergraph_lp(h)).optimum);
  MatchingSearch search(h);
  std::vector<int> order(h.num_edges());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
    return h.edges[static_cast<std::size_t>(a)].size() > h.edges[static_cast<std::size_t>(b)].size();
  });
  MatchingResult res;
  res.size = search.maximum(order, static_cast<int>(lp_floor.get_si()));
  for (int e : search.smallest_witness(res.size)) res.witness.push_back(h.centers[static_cast<std::size_t>(e)]);
  std::sort(res.witness.begin(), res.witness.end());
  res.nodes = search.nodes();
  return res;
}

bool balls_disjoint(const ChannelSpec& spec, int r, const std::vector<Vertex>& centers) {
  std::set<Vertex> seen;
  for (const auto& c : centers)
    for (auto& y : out_ball(spec, c, r))
      if (!seen.insert(std::move(y)).second) return false;
  return true;
}

OracleResult run_oracle(const ChannelSpec& spec, int r, std::size_t cap) {
  OracleResult out;
  out.tau_star_full = brute_force_tau(spec, r, cap);
  const MatchingResult m = brute_force_matching(spec, r, cap);
  out.nu_integral = m.size;
  out.max_code = m.size;
  out.witness = m.witness;
  return out;
}

std::vector<CounterexampleFacts> counterexample_suite() {
  std::vector<CounterexampleFacts> out;
  auto facts = [](const ChannelSpec& g) {
    CounterexampleFacts f;
    f.fixture = g.name;
    f.gspb = brute_force_tau(g, 1);
    f.aspv = aspv(g, 1);
    f.sphere_packing = sphere_packing_value(g, 1);
    f.max_code = brute_force_matching(g, 1).size;
    return f;
  };

  CounterexampleFacts e2 = facts(example2_graph());
  e2.claim = "regular graph: GSPB below the sphere packing bound";
  e2.holds = e2.gspb < e2.sphere_packing;
  out.push_back(std::move(e2));

  CounterexampleFacts e3 = facts(example3_graph());
  e3.claim = "largest code exceeds ASPV";
  e3.holds = Rational(e3.max_code) > e3.aspv;
  out.push_back(std::move(e3));

  CounterexampleFacts e4 = facts(example4_graph(3));
  e4.claim = "ASPV below 2 while a code of size 3 exists";
  e4.holds = e4.aspv < 2 && e4.max_code >= 3 && Rational(e4.max_code) > e4.aspv;
  out.push_back(std::move(e4));
  return out;
}

}  // namespace gspb
