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

#include "gspb/bounds.hpp"

#include <algorithm>
#include <limits>

#include "gspb/errors.hpp"
#include "gspb/magnitude.hpp"
#include "gspb/projective.hpp"
#include "gspb/reduction.hpp"
#include "gspb/seqchannels.hpp"

namespace gspb {
namespace {

Rational z_degree(int w, int r) {
  BigInt d = 0;
  for (int i = 0; i <= std::min(w, r); ++i) d += binomial(w, i);
  return Rational(d);
}

// Sum of size / degree over the orbit classes, radius one.
Rational class_degree_sum(const ChannelSpec& spec) {
  const ClassPartition p = partition_by_canonical_form(spec);
  Rational s = 0;
  for (const auto& c : p.classes()) {
    long deg = 0;
    switch (spec.family) {
      case Family::MagAsym:
        deg = spec.n - c.invariant[0] + 1;
        break;
      case Family::MagSym:
        deg = 2L * spec.n + 1 - c.invariant[0];
        break;
      case Family::Projective: {
        const int k = c.invariant[0];
        deg = BigInt(pow2(k) + pow2(spec.n - k) - 1).get_si();
        break;
      }
      default:
        throw std::logic_error("class_degree_sum: unsupported family");
    }
    s += Rational(c.size) / Rational(deg);
  }
  return s;
}

Rational degree_sum_by_enumeration(const ChannelSpec& spec, int r, std::size_t cap) {
  const Hypergraph h = build_hypergraph(spec, r, cap);
  Rational s = 0;
  for (const auto& e : h.edges) s += make_rational(1, static_cast<std::int64_t>(e.size()));
  return s;
}

// Run-count sum 2 * sum_rho C(len-1, rho-1) / rho over words of length len.
Rational run_degree_sum(int len) {
  Rational s = 0;
  for (int rho = 1; rho <= len; ++rho) s += Rational(2 * binomial(len - 1, rho - 1)) / Rational(rho);
  return s;
}

}  // namespace

MonotoneVerdict check_monotone(const ChannelSpec& spec, int r, std::size_t cap) {
  if (spec.family == Family::Deletion)
    throw RefusalError("deletion balls are not subsets of the center set");
  MonotoneVerdict v;
  v.monotone = true;
  if (has_quotient(spec.family)) {
    // Degrees are constant on classes, so representatives suffice.
    const ClassPartition p = partition_by_canonical_form(spec);
    std::vector<std::size_t> deg;
    for (const auto& c : p.classes()) deg.push_back(out_ball(spec, c.representative, r).size());
    for (std::size_t i = 0; i < p.size(); ++i) {
      for (const auto& y : out_ball(spec, p.classes()[i].representative, r)) {
        if (deg[static_cast<std::size_t>(p.class_of(y))] > deg[i]) {
          v.monotone = false;
          v.witness = std::make_pair(p.classes()[i].representative, y);
          return v;
        }
      }
    }
    return v;
  }
  const Hypergraph h = build_hypergraph(spec, r, cap);
  for (std::size_t i = 0; i < h.edges.size(); ++i) {
    // Vertices and centers coincide here, edge i is the ball of vertex i.
    for (int y : h.edges[i]) {
      if (h.edges[static_cast<std::size_t>(y)].size() > h.edges[i].size()) {
        v.monotone = false;
        v.witness = std::make_pair(h.centers[i], h.vertices[static_cast<std::size_t>(y)]);
        return v;
      }
    }
  }
  return v;
}

bool known_monotone(Family f) {
  return f == Family::Z || f == Family::MagAsym || f == Family::Deletion || f == Family::Grain;
}

Rational monotonicity_bound(const ChannelSpec& spec, int r, std::size_t cap) {
  spec.validate();
  const int n = spec.n;
  switch (spec.family) {
    case Family::Z:
      if (r == 1) return Rational(pow2(n + 1)) / Rational(n + 1);
      return monotonicity_sum(spec, r, cap);
    case Family::MagAsym:
      if (r == 1) return asym_mb(n, spec.q);
      break;
    case Family::Deletion:
      return deletion_mb(n);
    case Family::Grain:
      if (r == 1) return grain_mb(n);
      break;
    default:
      break;
  }
  if (!known_monotone(spec.family)) {
    if (!has_quotient(spec.family) && vertex_count(spec) > cap)
      throw RefusalError("monotonicity bound refused: family not known to be monotone");
    if (!check_monotone(spec, r, cap).monotone)
      throw RefusalError("monotonicity bound refused: graph is not monotone");
  }
  return monotonicity_sum(spec, r, cap);
}

Rational monotonicity_sum(const ChannelSpec& spec, int r, std::size_t cap) {
  spec.validate();
  const int n = spec.n;
  switch (spec.family) {
    case Family::Z: {
      Rational s = 0;
      for (int w = 0; w <= n; ++w) s += Rational(binomial(n, w)) / z_degree(w, r);
      return s;
    }
    case Family::MagAsym:
    case Family::MagSym:
    case Family::Projective:
      if (r == 1) return class_degree_sum(spec);
      break;
    case Family::Deletion:
      return run_degree_sum(n - 1);
    case Family::Grain:
      if (r == 1) return run_degree_sum(n);
      break;
    default:
      break;
  }
  return degree_sum_by_enumeration(spec, r, cap);
}

std::vector<Rational> lemma3_transversal(const ChannelSpec& spec, int r, std::size_t cap) {
  const Hypergraph h = build_hypergraph(spec, r, cap);
  std::vector<std::size_t> smallest(h.vertices.size(), std::numeric_limits<std::size_t>::max());
  for (const auto& e : h.edges)
    for (int v : e) smallest[static_cast<std::size_t>(v)] = std::min(smallest[static_cast<std::size_t>(v)], e.size());
  std::vector<Rational> w;
  w.reserve(smallest.size());
  for (auto s : smallest)
    w.push_back(s == std::numeric_limits<std::size_t>::max() ? Rational(0)
                                                             : make_rational(1, static_cast<std::int64_t>(s)));
  return w;
}

Rational aspv(const ChannelSpec& spec, int r, std::size_t cap) {
  spec.validate();
  const int n = spec.n;
  switch (spec.family) {
    case Family::Z: {
      Rational d = 0;
      for (int i = 0; i <= std::min(n, r); ++i) d += Rational(binomial(n, i)) / Rational(pow2(i));
      return Rational(pow2(n)) / d;
    }
    case Family::MagAsym:
      if (r == 1) return asym_aspv(n, spec.q);
      break;
    case Family::MagSym:
      if (r == 1) return sym_aspv(n, spec.q);
      break;
    case Family::Deletion:
      return deletion_aspv(n);
    case Family::Grain:
      if (r == 1) return grain_aspv(n);
      break;
    case Family::Projective:
      if (r == 1) return projective_aspv(n);
      break;
    default:
      break;
  }
  return aspv_by_enumeration(spec, r, cap);
}

Rational aspv_by_enumeration(const ChannelSpec& spec, int r, std::size_t cap) {
  const Hypergraph h = build_hypergraph(spec, r, cap);
  BigInt ball_total = 0;
  for (const auto& e : h.edges) ball_total += static_cast<unsigned long>(e.size());
  return Rational(BigInt(static_cast<unsigned long>(h.num_vertices())) *
                  static_cast<unsigned long>(h.num_edges())) /
         Rational(ball_total);
}

Rational sphere_packing_value(const ChannelSpec& spec, int r, std::size_t cap) {
  const Hypergraph h = build_hypergraph(spec, r, cap);
  std::size_t largest = 0;
  for (const auto& e : h.edges) largest = std::max(largest, e.size());
  return make_rational(static_cast<std::int64_t>(h.num_vertices()), static_cast<std::int64_t>(largest));
}

}  // namespace gspb
