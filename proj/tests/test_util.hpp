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

// Shared helpers and brute-force oracles for the unit tests.

#ifndef MHGR_TESTS_TEST_UTIL_HPP_
#define MHGR_TESTS_TEST_UTIL_HPP_

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <memory>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "mhgr/group.hpp"
#include "mhgr/group_io.hpp"
#include "mhgr/graph.hpp"
#include "mhgr/mcayley.hpp"

namespace mhgr::testing {

inline std::string data_path(const std::string& rel) { return std::string(MHGR_TEST_DATA) + "/" + rel; }

struct LabeledTable {
  std::string label;
  std::shared_ptr<const Group> group;
};

// The 24 groups of order <= 12, from independently generated tables.
inline std::vector<LabeledTable> small_group_tables() {
  std::vector<LabeledTable> out;
  for (const auto& e : std::filesystem::directory_iterator(data_path("groups"))) {
    if (e.path().extension() != ".json") continue;
    std::ifstream in(e.path());
    std::stringstream ss;
    ss << in.rdbuf();
    const std::string text = ss.str();
    const auto at = text.find("\"label\": \"") + 10;
    out.push_back({text.substr(at, text.find('"', at) - at),
                   std::make_shared<const Group>(group_from_table_json(text))});
  }
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    return a.group->order() != b.group->order() ? a.group->order() < b.group->order() : a.label < b.label;
  });
  return out;
}

inline bool naive_associative(const std::vector<std::vector<int>>& t) {
  const int n = static_cast<int>(t.size());
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c)
        if (t[t[a][b]][c] != t[a][t[b][c]]) return false;
  return true;
}

// Brute-force isomorphism test: images of a generating set are tried
// exhaustively and extended along words.
inline bool isomorphic(const Group& g, const Group& h) {
  if (g.order() != h.order() || g.is_abelian() != h.is_abelian()) return false;
  const int n = g.order();
  const std::vector<Element> gens = greedy_generating_set(g);
  std::vector<Element> img(gens.size(), 0);
  auto extend = [&]() {
    std::vector<Element> phi(n, -1);
    phi[0] = 0;
    std::vector<Element> queue{0};
    for (std::size_t q = 0; q < queue.size(); ++q) {
      const Element x = queue[q];
      for (std::size_t k = 0; k < gens.size(); ++k) {
        const Element y = g.mul(x, gens[k]);
        const Element fy = h.mul(phi[x], img[k]);
        if (phi[y] < 0) {
          phi[y] = fy;
          queue.push_back(y);
        } else if (phi[y] != fy) {
          return false;
        }
      }
    }
    std::vector<char> hit(n, 0);
    for (Element x = 0; x < n; ++x) {
      if (hit[phi[x]]) return false;
      hit[phi[x]] = 1;
    }
    for (Element a = 0; a < n; ++a)
      for (Element b = 0; b < n; ++b)
        if (phi[g.mul(a, b)] != h.mul(phi[a], phi[b])) return false;
    return true;
  };
  auto rec = [&](auto&& self, std::size_t k) -> bool {
    if (k == gens.size()) return extend();
    for (Element y = 0; y < n; ++y) {
      if (h.element_order(y) != g.element_order(gens[k])) continue;
      img[k] = y;
      if (self(self, k + 1)) return true;
    }
    return false;
  };
  return rec(rec, 0);
}

inline Graph random_graph(int n, double p, std::mt19937_64& rng) {
  Graph g(n);
  std::bernoulli_distribution coin(p);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (coin(rng)) g.add_edge(u, v);
  return g;
}

inline ConnectionMatrix random_matrix(std::shared_ptr<const Group> g, int m, std::mt19937_64& rng,
                                      bool with_diagonal) {
  ConnectionMatrix cm(g, m);
  const int n = g->order();
  std::bernoulli_distribution coin(0.35);
  for (int i = 0; i < m; ++i)
    for (int j = i + 1; j < m; ++j) {
      ElementSet s;
      for (Element x = 0; x < n; ++x)
        if (coin(rng)) s.insert(x);
      cm.set(i, j, s);
    }
  if (with_diagonal)
    for (int i = 0; i < m; ++i) {
      ElementSet s;
      for (Element x = 1; x < n; ++x)
        if (coin(rng)) {
          s.insert(x);
          s.insert(g->inv(x));
        }
      cm.set(i, i, s);
    }
  return cm;
}

inline std::shared_ptr<const Group> shared(Group g) { return std::make_shared<const Group>(std::move(g)); }

}  // namespace mhgr::testing

#endif  // MHGR_TESTS_TEST_UTIL_HPP_
