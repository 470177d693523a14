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

#include "mhgr/graph.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "mhgr/error.hpp"

namespace mhgr {

Graph::Graph(int n) : n_(n), words_((n + 63) / 64), adj_(n) {
  if (n < 0) throw InvalidArgument("negative vertex count");
  bits_.assign(static_cast<std::size_t>(n) * words_, 0);
}

Graph Graph::from_edges(int n, const std::vector<std::pair<int, int>>& edges) {
  Graph g(n);
  for (auto [u, v] : edges) g.add_edge(u, v);
  return g;
}

void Graph::check_vertex(int v) const {
  if (v < 0 || v >= n_)
    throw InvalidArgument("vertex " + std::to_string(v) + " out of range [0, " +
                          std::to_string(n_) + ")");
}

bool Graph::add_edge(int u, int v) {
  check_vertex(u);
  check_vertex(v);
  if (u == v) throw InvalidArgument("loop at vertex " + std::to_string(u));
  if (adjacent(u, v)) return false;
  bits_[static_cast<std::size_t>(u) * words_ + (v >> 6)] |= std::uint64_t{1} << (v & 63);
  bits_[static_cast<std::size_t>(v) * words_ + (u >> 6)] |= std::uint64_t{1} << (u & 63);
  adj_[u].insert(std::upper_bound(adj_[u].begin(), adj_[u].end(), v), v);
  adj_[v].insert(std::upper_bound(adj_[v].begin(), adj_[v].end(), u), u);
  ++m_;
  return true;
}

std::optional<int> Graph::regular_degree() const {
  if (n_ == 0) return 0;
  const int d = degree(0);
  for (int v = 1; v < n_; ++v)
    if (degree(v) != d) return std::nullopt;
  return d;
}

std::vector<std::pair<int, int>> Graph::edges() const {
  std::vector<std::pair<int, int>> e;
  e.reserve(static_cast<std::size_t>(m_));
  for (int u = 0; u < n_; ++u)
    for (int v : adj_[u])
      if (u < v) e.emplace_back(u, v);
  return e;
}

Graph Graph::relabeled(const Perm& p) const {
  if (static_cast<int>(p.size()) != n_ || !is_permutation(p))
    throw InvalidArgument("relabeling is not a permutation of the vertex set");
  Graph g(n_);
  for (auto [u, v] : edges()) g.add_edge(p[u], p[v]);
  return g;
}

bool Graph::is_automorphism(const Perm& p) const {
  if (static_cast<int>(p.size()) != n_ || !is_permutation(p)) return false;
  for (int u = 0; u < n_; ++u) {
    if (degree(p[u]) != degree(u)) return false;
    for (int v : adj_[u])
      if (!adjacent(p[u], p[v])) return false;
  }
  return true;
}

bool Graph::is_connected() const {
  if (n_ == 0) return true;
  std::vector<char> seen(n_, 0);
  std::vector<int> stack{0};
  seen[0] = 1;
  int count = 1;
  while (!stack.empty()) {
    int u = stack.back();
    stack.pop_back();
    for (int v : adj_[u])
      if (!seen[v]) {
        seen[v] = 1;
        ++count;
        stack.push_back(v);
      }
  }
  return count == n_;
}

bool Graph::on_triangle(int v) const {
  check_vertex(v);
  const auto& nv = adj_[v];
  for (std::size_t a = 0; a < nv.size(); ++a)
    for (std::size_t b = a + 1; b < nv.size(); ++b)
      if (adjacent(nv[a], nv[b])) return true;
  return false;
}

std::string to_edge_list(const Graph& g) {
  std::ostringstream os;
  os << "p " << g.num_vertices() << " " << g.num_edges() << "\n";
  for (auto [u, v] : g.edges()) os << u << " " << v << "\n";
  return os.str();
}

Graph parse_edge_list(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  int line_no = 0;
  std::optional<Graph> g;
  long long declared = -1;
  while (std::getline(in, line)) {
    ++line_no;
    auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == 'c' || line[first] == '#') continue;
    std::istringstream ls(line);
    auto fail = [&](const std::string& what) {
      throw InvalidArgument("edge list line " + std::to_string(line_no) + ": " + what);
    };
    if (!g) {
      std::string tag;
      int n = -1;
      ls >> tag >> n >> declared;
      if (tag != "p" || n < 0 || declared < 0 || ls.fail()) fail("expected header 'p <n> <e>'");
      g.emplace(n);
      continue;
    }
    int u = -1, v = -1;
    if (!(ls >> u >> v)) fail("expected 'u v'");
    if (u < 0 || v < 0 || u >= g->num_vertices() || v >= g->num_vertices())
      fail("vertex out of range");
    if (u == v) fail("loop");
    if (!g->add_edge(u, v)) fail("duplicate edge");
  }
  if (!g) throw InvalidArgument("edge list has no 'p' header");
  if (g->num_edges() != declared)
    throw InvalidArgument("edge list declares " + std::to_string(declared) + " edges but lists " +
                          std::to_string(g->num_edges()));
  return std::move(*g);
}

std::string to_graph6(const Graph& g) {
  const int n = g.num_vertices();
  if (n > 258047) throw CapacityError("graph6 writer supports at most 258047 vertices");
  std::string out;
  if (n <= 62) {
    out.push_back(static_cast<char>(n + 63));
  } else {
    out.push_back(126);
    out.push_back(static_cast<char>(((n >> 12) & 63) + 63));
    out.push_back(static_cast<char>(((n >> 6) & 63) + 63));
    out.push_back(static_cast<char>((n & 63) + 63));
  }
  // Upper triangle, column by column: (0,1), (0,2), (1,2), (0,3), ...
  int acc = 0, nbits = 0;
  for (int v = 1; v < n; ++v)
    for (int u = 0; u < v; ++u) {
      acc = (acc << 1) | (g.adjacent(u, v) ? 1 : 0);
      if (++nbits == 6) {
        out.push_back(static_cast<char>(acc + 63));
        acc = nbits = 0;
      }
    }
  if (nbits > 0) out.push_back(static_cast<char>((acc << (6 - nbits)) + 63));
  return out;
}

Graph from_graph6(std::string_view s) {
  if (!s.empty() && s.front() == '>') {
    constexpr std::string_view kHeader = ">>graph6<<";
    if (s.substr(0, kHeader.size()) != kHeader) throw InvalidArgument("bad graph6 header");
    s.remove_prefix(kHeader.size());
  }
  while (!s.empty() && (s.back() == '\n' || s.back() == '\r')) s.remove_suffix(1);
  auto byte = [&](std::size_t i) {
    if (i >= s.size()) throw InvalidArgument("graph6 string truncated");
    const int c = static_cast<unsigned char>(s[i]) - 63;
    if (c < 0 || c > 63) throw InvalidArgument("graph6 byte out of range at " + std::to_string(i));
    return c;
  };
  if (s.empty()) throw InvalidArgument("empty graph6 string");
  std::size_t i = 0;
  int n;
  if (static_cast<unsigned char>(s[0]) == 126) {
    if (s.size() > 1 && static_cast<unsigned char>(s[1]) == 126)
      throw CapacityError("graph6 8-byte size form not supported");
    n = (byte(1) << 12) | (byte(2) << 6) | byte(3);
    i = 4;
  } else {
    n = byte(0);
    i = 1;
  }
  Graph g(n);
  long long bit = 0;
  for (int v = 1; v < n; ++v)
    for (int u = 0; u < v; ++u, ++bit) {
      const int c = byte(i + static_cast<std::size_t>(bit / 6));
      if ((c >> (5 - bit % 6)) & 1) g.add_edge(u, v);
    }
  const std::size_t expected = i + static_cast<std::size_t>((bit + 5) / 6);
  if (s.size() != expected)
    throw InvalidArgument("graph6 string has " + std::to_string(s.size()) + " bytes, expected " +
                          std::to_string(expected));
  return g;
}

Graph load_graph_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InvalidArgument("cannot open graph file '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  const std::string text = ss.str();
  std::istringstream lines(text);
  std::string line;
  while (std::getline(lines, line)) {
    auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos) continue;
    const auto last = line.find_last_not_of(" \t\r");
    if (line[first] == '#' || line.find_first_of(" \t", first) < last)
      return parse_edge_list(text);
    return from_graph6(line.substr(first));
  }
  throw InvalidArgument("graph file '" + path + "' is empty");
}

}  // namespace mhgr
