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

// Channel graphs: vertex sets, single-error edges, radius-r balls and the
// ball hypergraph built from them.

#ifndef GSPB_CHANNEL_HPP_
#define GSPB_CHANNEL_HPP_

#include <compare>
#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace gspb {

enum class Family { Z, MagAsym, MagSym, Deletion, Grain, Projective, Explicit };

std::string_view family_name(Family f);
std::optional<Family> parse_family(std::string_view name);

inline constexpr std::size_t kDefaultEnumerationCap = std::size_t{1} << 22;

struct ChannelSpec {
  Family family = Family::Z;
  // Word length, ambient dimension, or (Explicit) vertex count.
  int n = 1;
  int r = 1;
  // Alphabet size. Only meaningful for the magnitude channels.
  int q = 2;
  // Directed edges (u, v), 0-based. Explicit graphs only.
  std::vector<std::pair<int, int>> explicit_edges;
  std::string name;

  static ChannelSpec z(int n, int r = 1);
  static ChannelSpec mag_asym(int n, int q);
  static ChannelSpec mag_sym(int n, int q);
  static ChannelSpec deletion(int n);
  static ChannelSpec grain(int n);
  static ChannelSpec projective(int n);
  static ChannelSpec explicit_graph(int vertex_count,
                                    std::vector<std::pair<int, int>> edges,
                                    std::string name = {});

  // Throws std::invalid_argument on a malformed instance.
  void validate() const;

  friend bool operator==(const ChannelSpec&, const ChannelSpec&) = default;
};

// Canonical vertex encoding.
//  - words (Z, magnitude, grain, deletion): one symbol per entry;
//  - projective: the RREF basis rows as n-bit masks, pivots descending;
//    the dimension is the number of rows;
//  - explicit: a single entry holding the vertex id.
struct Vertex {
  std::vector<std::uint32_t> code;

  friend auto operator<=>(const Vertex&, const Vertex&) = default;
};

Vertex word(std::string_view digits);
std::string to_string(const ChannelSpec& spec, const Vertex& v);
int projective_dimension(const Vertex& v);

bool is_vertex(const ChannelSpec& spec, const Vertex& v);

// All vertices of the hypergraph ground set in lexicographic order (for
// projective: by dimension, then RREF rows). For Deletion this is
// {0,1}^{n-1}.
std::vector<Vertex> enumerate_vertices(const ChannelSpec& spec,
                                       std::size_t cap = kDefaultEnumerationCap);

// Centers of the balls that form hyperedges. Equal to enumerate_vertices
// except for Deletion, where the centers are {0,1}^n.
std::vector<Vertex> enumerate_centers(const ChannelSpec& spec,
                                      std::size_t cap = kDefaultEnumerationCap);

std::size_t vertex_count(const ChannelSpec& spec);

// Single-error edges leaving / entering v.
std::vector<Vertex> successors(const ChannelSpec& spec, const Vertex& v);
std::vector<Vertex> predecessors(const ChannelSpec& spec, const Vertex& v);

// Sorted. The center is included, except for Deletion where a ball holds only
// the length-(n-1) words reachable by one deletion.
std::vector<Vertex> out_ball(const ChannelSpec& spec, const Vertex& x, int r);
std::vector<Vertex> in_ball(const ChannelSpec& spec, const Vertex& x, int r);

// Directed path distance; nullopt means unreachable within max_depth.
std::optional<int> path_distance(const ChannelSpec& spec, const Vertex& from,
                                 const Vertex& to, int max_depth);

struct Hypergraph {
  std::vector<Vertex> vertices;
  std::vector<std::vector<int>> edges;
  std::vector<Vertex> centers;

  std::optional<int> index_of(const Vertex& v) const;
  std::size_t num_vertices() const { return vertices.size(); }
  std::size_t num_edges() const { return edges.size(); }

 private:
  friend Hypergraph build_hypergraph(const ChannelSpec&, int, std::size_t);
  std::map<Vertex, int> index_;
};

Hypergraph build_hypergraph(const ChannelSpec& spec, int r,
                            std::size_t cap = kDefaultEnumerationCap);

// Built-in counterexample graphs.
ChannelSpec example2_graph();
ChannelSpec example3_graph();
ChannelSpec example4_graph(int k);
std::optional<ChannelSpec> fixture_by_name(std::string_view name);

}  // namespace gspb

#endif  // GSPB_CHANNEL_HPP_
