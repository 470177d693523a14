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

#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>
#include <set>

#include "mhgr/autgroup.hpp"
#include "mhgr/error.hpp"
#include "mhgr/regular_graphs.hpp"

namespace mhgr {
namespace {

// Isomorphism classes of k-regular graphs on n vertices by canonical forms
// over all n! relabelings.
int brute_regular_classes(int n, int k) {
  const int pairs = n * (n - 1) / 2;
  std::set<std::vector<char>> classes;
  std::vector<std::pair<int, int>> idx;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) idx.push_back({u, v});
  for (long long mask = 0; mask < (1LL << pairs); ++mask) {
    std::vector<int> deg(n, 0);
    for (int e = 0; e < pairs; ++e)
      if (mask >> e & 1) ++deg[idx[e].first], ++deg[idx[e].second];
    if (std::any_of(deg.begin(), deg.end(), [&](int d) { return d != k; })) continue;
    std::vector<int> p(n);
    std::iota(p.begin(), p.end(), 0);
    std::vector<char> best;
    do {
      std::vector<char> adj(n * n, 0);
      for (int e = 0; e < pairs; ++e)
        if (mask >> e & 1) adj[p[idx[e].first] * n + p[idx[e].second]] = adj[p[idx[e].second] * n + p[idx[e].first]] = 1;
      if (best.empty() || adj < best) best = adj;
    } while (std::next_permutation(p.begin(), p.end()));
    classes.insert(best);
  }
  return static_cast<int>(classes.size());
}

int count(int n, int k) {
  int c = 0;
  for_each_regular_graph(n, k, [&](const Graph& g) {
    EXPECT_EQ(g.regular_degree().value_or(-1), n == 0 ? -1 : k);
    EXPECT_TRUE(is_canonical(g));
    ++c;
    return true;
  });
  return c;
}

TEST(RegularGraphs, PerDegreeCountsMatchBruteForce) {
  for (int n = 1; n <= 7; ++n)
    for (int k = 0; k < n; ++k) EXPECT_EQ(count(n, k), brute_regular_classes(n, k)) << n << " " << k;
}

TEST(RegularGraphs, TotalsMatchKnownSequence) {
  // Regular graphs on n vertices, all degrees, connected or not.
  const int expected[] = {1, 2, 2, 4, 3, 8, 6, 22, 26, 176};
  for (int n = 1; n <= 10; ++n) {
    int total = 0;
    for (int k = 0; k < n; ++k) total += count(n, k);
    EXPECT_EQ(total, expected[n - 1]) << n;
  }
}

TEST(RegularGraphs, AsymmetricOnlyFromTenVertices) {
  for (int n = 1; n <= 10; ++n) {
    int asym = 0;
    for (int k = 0; k < n; ++k)
      for_each_regular_graph(n, k, [&](const Graph& g) {
        asym += automorphisms(g).order == 1;
        return true;
      });
    if (n == 1 || n == 10)
      EXPECT_GT(asym, 0) << n;
    else
      EXPECT_EQ(asym, 0) << n;
  }
}

TEST(RegularGraphs, EarlyStopAndLimits) {
  int seen = 0;
  EXPECT_FALSE(for_each_regular_graph(8, 3, [&](const Graph&) { return ++seen < 2; }));
  EXPECT_EQ(seen, 2);
  EXPECT_EQ(count(5, 3), 0);  // odd degree sum
  EXPECT_THROW(for_each_regular_graph(11, 4, [](const Graph&) { return true; }), CapacityError);
}

}  // namespace
}  // namespace mhgr
