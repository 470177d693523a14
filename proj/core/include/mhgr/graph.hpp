// Copyright 2026 The mhgr Authors
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

#ifndef MHGR_GRAPH_HPP_
#define MHGR_GRAPH_HPP_

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "mhgr/permutation.hpp"

namespace mhgr {

// Simple undirected graph with sorted neighbor lists and a packed adjacency
// bitset for O(1) edge tests.
class Graph {
 public:
  Graph() = default;
  explicit Graph(int n);
  static Graph from_edges(int n, const std::vector<std::pair<int, int>>& edges);

  int num_vertices() const { return n_; }
  long long num_edges() const { return m_; }

  // Returns false if the edge was already present. Loops are rejected.
  bool add_edge(int u, int v);
  bool adjacent(int u, int v) const {
    return (bits_[static_cast<std::size_t>(u) * words_ + (v >> 6)] >> (v & 63)) & 1U;
  }
  const std::vector<int>& neighbors(int v) const { return adj_[v]; }
  int degree(int v) const { return static_cast<int>(adj_[v].size()); }
  std::optional<int> regular_degree() const;

  std::vector<std::pair<int, int>> edges() const;  // u < v, sorted
  // Vertex v of this graph becomes p[v].
  Graph relabeled(const Perm& p) const;
  bool is_automorphism(const Perm& p) const;
  bool is_connected() const;
  bool on_triangle(int v) const;

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.n_ == b.n_ && a.bits_ == b.bits_;
  }

 private:
  void check_vertex(int v) const;

  int n_ = 0;
  long long m_ = 0;
  int words_ = 0;
  std::vector<std::vector<int>> adj_;
  std::vector<std::uint64_t> bits_;
};

// Edge list: "p <n> <e>" then one "u v" line per edge, 0-based. Lines starting
// with 'c' or '#' are comments.
std::string to_edge_list(const Graph& g);
Graph parse_edge_list(std::string_view text);

std::string to_graph6(const Graph& g);
Graph from_graph6(std::string_view s);

// Reads either format: a first non-blank line with inner whitespace (or a '#'
// comment) means edge list, anything else is taken as graph6.
Graph load_graph_file(const std::string& path);

}  // namespace mhgr

#endif  // MHGR_GRAPH_HPP_
