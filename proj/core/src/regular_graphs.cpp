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

#include "mhgr/regular_graphs.hpp"

#include <array>
#include <cstdint>

#include "mhgr/error.hpp"

namespace mhgr {
namespace {

constexpr int kMax = kMaxRegularScanVertices;

// Adjacency rows as bitmasks; n <= 10 fits in a machine word.
struct Small {
  int n = 0;
  std::array<std::uint32_t, kMax> adj{};
};

// Searches for a relabeling whose string beats the identity's. Positions
// are filled in order; column c of the relabeled string is fixed once
// position c is chosen, so columns compare lexicographically as we go.
class CanonChecker {
 public:
  explicit CanonChecker(const Small& g) : g_(g) {}

  bool canonical() {
    used_ = 0;
    return !beats(0);
  }

 private:
  // Column c as a bit string: bit r (r < c) says whether the vertices at
  // positions r and c are adjacent, most significant first.
  std::uint32_t column_identity(int c) const {
    std::uint32_t col = 0;
    for (int r = 0; r < c; ++r) col = (col << 1) | ((g_.adj[c] >> r) & 1U);
    return col;
  }

  bool beats(int c) {
    if (c == g_.n) return false;
    const std::uint32_t target = column_identity(c);
    for (int v = 0; v < g_.n; ++v) {
      if ((used_ >> v) & 1U) continue;
      std::uint32_t col = 0;
      for (int r = 0; r < c; ++r) col = (col << 1) | ((g_.adj[v] >> at_[r]) & 1U);
      if (col > target) return true;
      if (col < target) continue;
      at_[c] = v;
      used_ |= 1U << v;
      const bool b = beats(c + 1);
      used_ &= ~(1U << v);
      if (b) return true;
    }
    return false;
  }

  const Small& g_;
  std::array<int, kMax> at_{};
  std::uint32_t used_ = 0;
};

class Generator {
 public:
  Generator(int n, int k, const std::function<bool(const Graph&)>& visit)
      : n_(n), k_(k), visit_(visit) {}

  bool run() {
    g_.n = 0;
    deg_.fill(0);
    return extend();
  }

 private:
  // g_ holds a canonical graph on g_.n vertices; add vertex j = g_.n.
  bool extend() {
    const int j = g_.n;
    if (j == n_) {
      Graph out(n_);
      for (int u = 0; u < n_; ++u)
        for (int v = u + 1; v < n_; ++v)
          if ((g_.adj[u] >> v) & 1U) out.add_edge(u, v);
      return visit_(out);
    }
    const int remaining_after = n_ - 1 - j;
    for (std::uint32_t nb = 0; nb < (1U << j); ++nb) {
      if (std::popcount(nb) > k_ || k_ - std::popcount(nb) > remaining_after) continue;
      bool ok = true;
      for (int u = 0; u < j && ok; ++u) {
        const int d = deg_[u] + static_cast<int>((nb >> u) & 1U);
        ok = d <= k_ && k_ - d <= remaining_after;
      }
      if (!ok) continue;
      g_.n = j + 1;
      g_.adj[j] = nb;
      for (int u = 0; u < j; ++u)
        if ((nb >> u) & 1U) {
          g_.adj[u] |= 1U << j;
          ++deg_[u];
        }
      deg_[j] = std::popcount(nb);
      bool keep_going = true;
      if (CanonChecker(g_).canonical()) keep_going = extend();
      for (int u = 0; u < j; ++u)
        if ((nb >> u) & 1U) {
          g_.adj[u] &= ~(1U << j);
          --deg_[u];
        }
      deg_[j] = 0;
      g_.adj[j] = 0;
      g_.n = j;
      if (!keep_going) return false;
    }
    return true;
  }

  int n_, k_;
  const std::function<bool(const Graph&)>& visit_;
  Small g_;
  std::array<int, kMax> deg_{};
};

}  // namespace

bool for_each_regular_graph(int n, int k, const std::function<bool(const Graph&)>& visit) {
  if (n < 0 || n > kMax)
    throw CapacityError("regular-graph enumeration supports at most " + std::to_string(kMax) +
                        " vertices, got " + std::to_string(n));
  if (k < 0 || (n > 0 && k >= n) || (n * k) % 2 != 0) return true;
  return Generator(n, k, visit).run();
}

bool is_canonical(const Graph& g) {
  if (g.num_vertices() > kMax) throw CapacityError("canonicity check supports at most 10 vertices");
  Small s;
  s.n = g.num_vertices();
  for (int u = 0; u < s.n; ++u)
    for (int v : g.neighbors(u)) s.adj[u] |= 1U << v;
  return CanonChecker(s).canonical();
}

}  // namespace mhgr
