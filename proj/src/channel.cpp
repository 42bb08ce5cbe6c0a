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

#include "gspb/channel.hpp"

#include <algorithm>
#include <bit>
#include <set>
#include <stdexcept>

#include "gf2.hpp"
#include "gspb/errors.hpp"
#include "gspb/rational.hpp"

namespace gspb {
namespace {

bool is_word_family(Family f) {
  return f == Family::Z || f == Family::MagAsym || f == Family::MagSym ||
         f == Family::Grain || f == Family::Deletion;
}

int alphabet(const ChannelSpec& spec) {
  return (spec.family == Family::MagAsym || spec.family == Family::MagSym)
             ? spec.q
             : 2;
}

void require_vertex(const ChannelSpec& spec, const Vertex& v) {
  if (!is_vertex(spec, v)) {
    throw std::invalid_argument("not a vertex of this channel: " +
                                to_string(spec, v));
  }
}

std::vector<Vertex> all_words(int length, int q) {
  std::vector<Vertex> out;
  std::size_t total = 1;
  for (int i = 0; i < length; ++i) total *= static_cast<std::size_t>(q);
  out.reserve(total);
  Vertex cur{std::vector<std::uint32_t>(static_cast<std::size_t>(length), 0)};
  for (std::size_t t = 0; t < total; ++t) {
    out.push_back(cur);
    for (int i = length - 1; i >= 0; --i) {
      auto& d = cur.code[static_cast<std::size_t>(i)];
      if (++d < static_cast<std::uint32_t>(q)) break;
      d = 0;
    }
  }
  return out;
}

BigInt count_for(const ChannelSpec& spec, bool centers) {
  switch (spec.family) {
    case Family::Z:
    case Family::Grain:
      return pow2(spec.n);
    case Family::Deletion:
      return pow2(centers ? spec.n : spec.n - 1);
    case Family::MagAsym:
    case Family::MagSym:
      return ipow(spec.q, spec.n);
    case Family::Projective: {
      BigInt total = 0;
      for (int k = 0; k <= spec.n; ++k) total += gf2::gaussian_binomial(spec.n, k);
      return total;
    }
    case Family::Explicit:
      return spec.n;
  }
  return 0;
}

void check_cap(const ChannelSpec& spec, bool centers, std::size_t cap) {
  if (count_for(spec, centers) > BigInt(static_cast<unsigned long>(cap))) {
    throw CapExceededError(
        "instance too large for full enumeration; use quotient path");
  }
}

std::vector<Vertex> sorted_unique(std::vector<Vertex> v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
  return v;
}

std::vector<Vertex> deletions_of(const Vertex& x) {
  std::vector<Vertex> out;
  const auto& c = x.code;
  for (std::size_t i = 0; i < c.size(); ++i) {
    // Deleting any bit of a run gives the same word; take each run's first.
    if (i > 0 && c[i] == c[i - 1]) continue;
    Vertex y;
    y.code.reserve(c.size() - 1);
    for (std::size_t j = 0; j < c.size(); ++j)
      if (j != i) y.code.push_back(c[j]);
    out.push_back(std::move(y));
  }
  return sorted_unique(std::move(out));
}

std::vector<Vertex> insertions_of(const Vertex& y) {
  std::vector<Vertex> out;
  const auto& c = y.code;
  for (std::size_t i = 0; i <= c.size(); ++i) {
    for (std::uint32_t b = 0; b < 2; ++b) {
      Vertex x;
      x.code.reserve(c.size() + 1);
      x.code.insert(x.code.end(), c.begin(), c.begin() + static_cast<long>(i));
      x.code.push_back(b);
      x.code.insert(x.code.end(), c.begin() + static_cast<long>(i), c.end());
      out.push_back(std::move(x));
    }
  }
  return sorted_unique(std::move(out));
}

Vertex subspace_vertex(const std::vector<std::uint32_t>& rows) {
  return Vertex{gf2::rref(rows)};
}

std::vector<Vertex> projective_neighbors(int n, const Vertex& u) {
  std::vector<Vertex> out;
  const auto& basis = u.code;
  const std::size_t k = basis.size();
  // Vectors with no pivot bit are unique coset representatives of U, so
  // each superspace U + <v> is produced exactly once.
  std::uint32_t pivots = 0;
  for (auto row : basis) pivots |= std::bit_floor(row);

  for (std::uint32_t v = 1; v < (std::uint32_t{1} << n); ++v) {
    if (v & pivots) continue;
    auto rows = basis;
    rows.push_back(v);
    out.push_back(subspace_vertex(rows));
  }
  // Hyperplanes of U are kernels of the nonzero functionals on its
  // coordinate space.
  for (std::uint32_t f = 1; k > 0 && f < (std::uint32_t{1} << k); ++f) {
    std::vector<std::uint32_t> rows;
    for (std::uint32_t c = 0; c < (std::uint32_t{1} << k); ++c) {
      if (std::popcount(c & f) % 2 != 0) continue;
      std::uint32_t vec = 0;
      for (std::size_t i = 0; i < k; ++i)
        if (c >> i & 1u) vec ^= basis[i];
      rows.push_back(vec);
    }
    out.push_back(subspace_vertex(rows));
  }
  return sorted_unique(std::move(out));
}

std::vector<Vertex> explicit_neighbors(const ChannelSpec& spec, const Vertex& v,
                                       bool forward) {
  std::vector<Vertex> out;
  const int id = static_cast<int>(v.code[0]);
  for (auto [a, b] : spec.explicit_edges) {
    if (forward && a == id) out.push_back(Vertex{{static_cast<std::uint32_t>(b)}});
    if (!forward && b == id) out.push_back(Vertex{{static_cast<std::uint32_t>(a)}});
  }
  return sorted_unique(std::move(out));
}

std::vector<Vertex> bfs_ball(const ChannelSpec& spec, const Vertex& x, int r,
                             bool forward) {
  std::set<Vertex> seen{x};
  std::vector<Vertex> frontier{x};
  for (int depth = 0; depth < r && !frontier.empty(); ++depth) {
    std::vector<Vertex> next;
    for (const auto& v : frontier) {
      for (auto& y : forward ? successors(spec, v) : predecessors(spec, v)) {
        if (seen.insert(y).second) next.push_back(std::move(y));
      }
    }
    frontier = std::move(next);
  }
  return {seen.begin(), seen.end()};
}

}  // namespace

std::string_view family_name(Family f) {
  switch (f) {
    case Family::Z: return "z";
    case Family::MagAsym: return "mag-asym";
    case Family::MagSym: return "mag-sym";
    case Family::Deletion: return "deletion";
    case Family::Grain: return "grain";
    case Family::Projective: return "projective";
    case Family::Explicit: return "explicit";
  }
  return "?";
}

std::optional<Family> parse_family(std::string_view name) {
  for (Family f : {Family::Z, Family::MagAsym, Family::MagSym, Family::Deletion,
                   Family::Grain, Family::Projective, Family::Explicit}) {
    if (family_name(f) == name) return f;
  }
  return std::nullopt;
}

ChannelSpec ChannelSpec::z(int n, int r) {
  ChannelSpec s;
  s.family = Family::Z;
  s.n = n;
  s.r = r;
  return s;
}

ChannelSpec ChannelSpec::mag_asym(int n, int q) {
  ChannelSpec s;
  s.family = Family::MagAsym;
  s.n = n;
  s.q = q;
  return s;
}

ChannelSpec ChannelSpec::mag_sym(int n, int q) {
  ChannelSpec s;
  s.family = Family::MagSym;
  s.n = n;
  s.q = q;
  return s;
}

ChannelSpec ChannelSpec::deletion(int n) {
  ChannelSpec s;
  s.family = Family::Deletion;
  s.n = n;
  return s;
}

ChannelSpec ChannelSpec::grain(int n) {
  ChannelSpec s;
  s.family = Family::Grain;
  s.n = n;
  return s;
}

ChannelSpec ChannelSpec::projective(int n) {
  ChannelSpec s;
  s.family = Family::Projective;
  s.n = n;
  return s;
}

ChannelSpec ChannelSpec::explicit_graph(int vertex_count,
                                        std::vector<std::pair<int, int>> edges,
                                        std::string name) {
  ChannelSpec s;
  s.family = Family::Explicit;
  s.n = vertex_count;
  s.explicit_edges = std::move(edges);
  s.name = std::move(name);
  return s;
}

void ChannelSpec::validate() const {
  if (n < 1) throw std::invalid_argument("n must be at least 1");
  if (r < 1) throw std::invalid_argument("r must be at least 1");
  switch (family) {
    case Family::MagAsym:
    case Family::MagSym:
      if (q < 2) throw std::invalid_argument("q must be at least 2");
      break;
    case Family::Deletion:
      if (n < 2) throw std::invalid_argument("deletion channel needs n >= 2");
      if (r != 1) throw std::invalid_argument("only single deletions are modelled");
      break;
    case Family::Projective:
      if (q != 2) throw std::invalid_argument("projective spaces are over GF(2)");
      if (n > 30) throw std::invalid_argument("projective dimension too large");
      break;
    case Family::Explicit: {
      std::set<std::pair<int, int>> seen;
      for (auto e : explicit_edges) {
        if (e.first < 0 || e.first >= n || e.second < 0 || e.second >= n)
          throw std::invalid_argument("explicit edge out of range");
        if (!seen.insert(e).second)
          throw std::invalid_argument("explicit edge listed twice");
      }
      break;
    }
    default:
      break;
  }
}

Vertex word(std::string_view digits) {
  Vertex v;
  for (char c : digits) {
    if (c < '0' || c > '9') throw std::invalid_argument("word digits must be 0-9");
    v.code.push_back(static_cast<std::uint32_t>(c - '0'));
  }
  return v;
}

std::string to_string(const ChannelSpec& spec, const Vertex& v) {
  std::string out;
  if (spec.family == Family::Explicit) {
    return v.code.size() == 1 ? "x_" + std::to_string(v.code[0] + 1) : "x_?";
  }
  if (spec.family == Family::Projective) {
    out = "<";
    for (std::size_t i = 0; i < v.code.size(); ++i) {
      if (i) out += ",";
      for (int b = spec.n - 1; b >= 0; --b) out += (v.code[i] >> b & 1u) ? '1' : '0';
    }
    return out + ">";
  }
  const bool wide = alphabet(spec) > 10;
  for (std::size_t i = 0; i < v.code.size(); ++i) {
    if (wide && i) out += ",";
    out += wide ? std::to_string(v.code[i]) : std::string(1, static_cast<char>('0' + v.code[i]));
  }
  return out;
}

int projective_dimension(const Vertex& v) { return static_cast<int>(v.code.size()); }

bool is_vertex(const ChannelSpec& spec, const Vertex& v) {
  if (is_word_family(spec.family)) {
    const std::size_t len = v.code.size();
    const bool ok_len = spec.family == Family::Deletion
                            ? (len == static_cast<std::size_t>(spec.n) ||
                               len == static_cast<std::size_t>(spec.n - 1))
                            : len == static_cast<std::size_t>(spec.n);
    if (!ok_len) return false;
    const auto q = static_cast<std::uint32_t>(alphabet(spec));
    return std::all_of(v.code.begin(), v.code.end(), [q](auto s) { return s < q; });
  }
  if (spec.family == Family::Projective) {
    if (v.code.size() > static_cast<std::size_t>(spec.n)) return false;
    for (auto row : v.code)
      if (row >> spec.n != 0) return false;
    return gf2::rref(v.code) == v.code;
  }
  return v.code.size() == 1 && v.code[0] < static_cast<std::uint32_t>(spec.n);
}

std::size_t vertex_count(const ChannelSpec& spec) {
  return count_for(spec, false).get_ui();
}

std::vector<Vertex> enumerate_vertices(const ChannelSpec& spec, std::size_t cap) {
  spec.validate();
  check_cap(spec, false, cap);
  switch (spec.family) {
    case Family::Z:
    case Family::Grain:
      return all_words(spec.n, 2);
    case Family::Deletion:
      return all_words(spec.n - 1, 2);
    case Family::MagAsym:
    case Family::MagSym:
      return all_words(spec.n, spec.q);
    case Family::Projective: {
      std::vector<Vertex> out;
      for (int k = 0; k <= spec.n; ++k) {
        auto layer = gf2::subspaces_of_dimension(spec.n, k);
        std::vector<Vertex> vs;
        vs.reserve(layer.size());
        for (auto& rows : layer) vs.push_back(Vertex{std::move(rows)});
        std::sort(vs.begin(), vs.end());
        out.insert(out.end(), vs.begin(), vs.end());
      }
      return out;
    }
    case Family::Explicit: {
      std::vector<Vertex> out;
      for (int i = 0; i < spec.n; ++i) out.push_back(Vertex{{static_cast<std::uint32_t>(i)}});
      return out;
    }
  }
  return {};
}

std::vector<Vertex> enumerate_centers(const ChannelSpec& spec, std::size_t cap) {
  if (spec.family != Family::Deletion) return enumerate_vertices(spec, cap);
  spec.validate();
  check_cap(spec, true, cap);
  return all_words(spec.n, 2);
}

std::vector<Vertex> successors(const ChannelSpec& spec, const Vertex& v) {
  require_vertex(spec, v);
  std::vector<Vertex> out;
  const auto& c = v.code;
  switch (spec.family) {
    case Family::Z:
    case Family::MagAsym:
      for (std::size_t i = 0; i < c.size(); ++i) {
        if (c[i] == 0) continue;
        Vertex y = v;
        --y.code[i];
        out.push_back(std::move(y));
      }
      break;
    case Family::MagSym:
      for (std::size_t i = 0; i < c.size(); ++i) {
        if (c[i] > 0) {
          Vertex y = v;
          --y.code[i];
          out.push_back(std::move(y));
        }
        if (c[i] + 1 < static_cast<std::uint32_t>(spec.q)) {
          Vertex y = v;
          ++y.code[i];
          out.push_back(std::move(y));
        }
      }
      break;
    case Family::Grain:
      for (std::size_t i = 1; i < c.size(); ++i) {
        if (c[i] == c[i - 1]) continue;
        Vertex y = v;
        y.code[i] = c[i - 1];
        out.push_back(std::move(y));
      }
      break;
    case Family::Deletion:
      if (c.size() == static_cast<std::size_t>(spec.n)) return deletions_of(v);
      return {};
    case Family::Projective:
      return projective_neighbors(spec.n, v);
    case Family::Explicit:
      return explicit_neighbors(spec, v, true);
  }
  return sorted_unique(std::move(out));
}

std::vector<Vertex> predecessors(const ChannelSpec& spec, const Vertex& v) {
  require_vertex(spec, v);
  std::vector<Vertex> out;
  const auto& c = v.code;
  switch (spec.family) {
    case Family::Z:
    case Family::MagAsym: {
      const auto top = static_cast<std::uint32_t>(alphabet(spec) - 1);
      for (std::size_t i = 0; i < c.size(); ++i) {
        if (c[i] == top) continue;
        Vertex y = v;
        ++y.code[i];
        out.push_back(std::move(y));
      }
      break;
    }
    case Family::MagSym:
    case Family::Projective:
      return successors(spec, v);
    case Family::Grain:
      // x reaches v by overwriting bit i with bit i-1, so v_i = v_{i-1}.
      for (std::size_t i = 1; i < c.size(); ++i) {
        if (c[i] != c[i - 1]) continue;
        Vertex y = v;
        y.code[i] ^= 1u;
        out.push_back(std::move(y));
      }
      break;
    case Family::Deletion:
      if (c.size() == static_cast<std::size_t>(spec.n - 1)) return insertions_of(v);
      return {};
    case Family::Explicit:
      return explicit_neighbors(spec, v, false);
  }
  return sorted_unique(std::move(out));
}

std::vector<Vertex> out_ball(const ChannelSpec& spec, const Vertex& x, int r) {
  require_vertex(spec, x);
  if (r < 1) throw std::invalid_argument("radius must be at least 1");
  if (spec.family == Family::Deletion) return successors(spec, x);
  return bfs_ball(spec, x, r, true);
}

std::vector<Vertex> in_ball(const ChannelSpec& spec, const Vertex& x, int r) {
  require_vertex(spec, x);
  if (r < 1) throw std::invalid_argument("radius must be at least 1");
  if (spec.family == Family::Deletion) return predecessors(spec, x);
  return bfs_ball(spec, x, r, false);
}

std::optional<int> path_distance(const ChannelSpec& spec, const Vertex& from,
                                 const Vertex& to, int max_depth) {
  require_vertex(spec, from);
  require_vertex(spec, to);
  if (from == to) return 0;
  std::set<Vertex> seen{from};
  std::vector<Vertex> frontier{from};
  for (int depth = 1; depth <= max_depth && !frontier.empty(); ++depth) {
    std::vector<Vertex> next;
    for (const auto& v : frontier) {
      for (auto& y : successors(spec, v)) {
        if (y == to) return depth;
        if (seen.insert(y).second) next.push_back(std::move(y));
      }
    }
    frontier = std::move(next);
  }
  return std::nullopt;
}

std::optional<int> Hypergraph::index_of(const Vertex& v) const {
  auto it = index_.find(v);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

Hypergraph build_hypergraph(const ChannelSpec& spec, int r, std::size_t cap) {
  Hypergraph h;
  h.vertices = enumerate_vertices(spec, cap);
  h.centers = enumerate_centers(spec, cap);
  for (std::size_t i = 0; i < h.vertices.size(); ++i)
    h.index_.emplace(h.vertices[i], static_cast<int>(i));
  h.edges.reserve(h.centers.size());
  for (const auto& c : h.centers) {
    std::vector<int> edge;
    for (const auto& y : out_ball(spec, c, r)) edge.push_back(h.index_.at(y));
    std::sort(edge.begin(), edge.end());
    h.edges.push_back(std::move(edge));
  }
  return h;
}

ChannelSpec example2_graph() {
  std::vector<std::pair<int, int>> edges;
  for (int i = 1; i < 6; ++i) edges.emplace_back(i, 0);
  edges.emplace_back(0, 1);
  return ChannelSpec::explicit_graph(6, std::move(edges), "example2");
}

ChannelSpec example3_graph() {
  std::vector<std::pair<int, int>> edges;
  for (int i = 1; i < 5; ++i) edges.emplace_back(0, i);
  return ChannelSpec::explicit_graph(5, std::move(edges), "example3");
}

ChannelSpec example4_graph(int k) {
  if (k < 2) throw std::invalid_argument("example4 needs k >= 2");
  const int n = k * k;
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < k; ++i) {
    for (int t = 0; t < k - 1; ++t) {
      int partner = k + i * (k - 1) + t;
      edges.emplace_back(i, partner);
      edges.emplace_back(partner, i);
    }
  }
  for (int a = k; a < n; ++a)
    for (int b = k; b < n; ++b)
      if (a != b) edges.emplace_back(a, b);
  return ChannelSpec::explicit_graph(n, std::move(edges),
                                     "example4-k" + std::to_string(k));
}

std::optional<ChannelSpec> fixture_by_name(std::string_view name) {
  if (name == "example2") return example2_graph();
  if (name == "example3") return example3_graph();
  if (name == "example4") return example4_graph(3);
  constexpr std::string_view prefix = "example4-k";
  if (name.substr(0, prefix.size()) == prefix) {
    try {
      return example4_graph(std::stoi(std::string(name.substr(prefix.size()))));
    } catch (const std::exception&) {
      return std::nullopt;
    }
  }
  return std::nullopt;
}

}  // namespace gspb
