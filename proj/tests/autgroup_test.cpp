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

#include <numeric>
#include <random>

#include "mhgr/autgroup.hpp"
#include "mhgr/catalog.hpp"
#include "mhgr/error.hpp"
#include "test_util.hpp"

namespace mhgr {
namespace {

using testing::random_graph;

Graph petersen() {
  Graph g(10);
  for (int k = 0; k < 5; ++k) {
    g.add_edge(k, (k + 1) % 5);
    g.add_edge(k, k + 5);
    g.add_edge(5 + k, 5 + (k + 2) % 5);
  }
  return g;
}

Graph hypercube(int d) {
  Graph g(1 << d);
  for (int v = 0; v < (1 << d); ++v)
    for (int b = 0; b < d; ++b)
      if (!(v >> b & 1)) g.add_edge(v, v | (1 << b));
  return g;
}

TEST(Automorphisms, MatchBruteForceOnRandomSmallGraphs) {
  std::mt19937_64 rng(2024);
  for (int trial = 0; trial < 400; ++trial) {
    const int n = 1 + static_cast<int>(rng() % 8);
    const double p = (rng() % 9 + 1) / 10.0;
    const Graph g = random_graph(n, p, rng);
    EXPECT_EQ(automorphisms(g).order, brute_force_aut_order(g)) << to_graph6(g);
  }
}

TEST(Automorphisms, KnownGraphs) {
  EXPECT_EQ(automorphisms(petersen()).order, BigInt(120));
  EXPECT_EQ(automorphisms(hypercube(4)).order, BigInt(384));
  EXPECT_EQ(automorphisms(hypercube(6)).order, BigInt(46080));
  EXPECT_EQ(automorphisms(Graph(0)).order, BigInt(1));
  // Empty graph on 25 vertices: 25! needs more than 64 bits.
  EXPECT_EQ(automorphisms(Graph(25)).order.str(), "15511210043330985984000000");
  Graph cyc(12);
  for (int k = 0; k < 12; ++k) cyc.add_edge(k, (k + 1) % 12);
  EXPECT_EQ(automorphisms(cyc).order, BigInt(24));
}

TEST(Automorphisms, GeneratorsAreAutomorphismsAndGenerateTheGroup) {
  std::mt19937_64 rng(77);
  for (int trial = 0; trial < 40; ++trial) {
    const Graph g = random_graph(12 + static_cast<int>(rng() % 10), 0.2, rng);
    const AutResult r = automorphisms(g);
    for (const Perm& s : r.generators) EXPECT_TRUE(g.is_automorphism(s));
    EXPECT_EQ(schreier_sims_order(g.num_vertices(), r.generators), r.order);
    EXPECT_EQ(orbit_labels(g.num_vertices(), r.generators), r.orbit);
  }
}

TEST(Automorphisms, RelabelingInvariance) {
  std::mt19937_64 rng(13);
  for (int trial = 0; trial < 40; ++trial) {
    const Graph g = random_graph(15, 0.3, rng);
    Perm p(15);
    std::iota(p.begin(), p.end(), 0);
    std::shuffle(p.begin(), p.end(), rng);
    EXPECT_EQ(automorphisms(g).order, automorphisms(g.relabeled(p)).order);
  }
  const Graph q = hypercube(5);
  Perm p(32);
  std::iota(p.begin(), p.end(), 0);
  std::shuffle(p.begin(), p.end(), rng);
  EXPECT_EQ(automorphisms(q.relabeled(p)).order, BigInt(3840));
}

TEST(Automorphisms, ColorsAndFixedPoints) {
  const Graph g = petersen();
  AutOptions fixed;
  fixed.fixed = {0};
  EXPECT_EQ(automorphisms(g, fixed).order, BigInt(12));
  AutOptions colors;
  colors.colors = std::vector<int>(10, 0);
  colors.colors[0] = colors.colors[1] = 1;
  // Stabilizer of the edge {0, 1}.
  EXPECT_EQ(automorphisms(g, colors).order, BigInt(8));
}

TEST(Automorphisms, KnownGeneratorsAndEarlyStop) {
  const Graph g = petersen();
  AutOptions opts;
  opts.known = {{1, 2, 3, 4, 0, 6, 7, 8, 9, 5}};
  EXPECT_EQ(automorphisms(g, opts).order, BigInt(120));
  opts.stop_on_new = true;
  EXPECT_TRUE(automorphisms(g, opts).stopped_early);
  AutOptions bad;
  bad.known = {{1, 0, 2, 3, 4, 5, 6, 7, 8, 9}};
  EXPECT_THROW(automorphisms(g, bad), InvalidArgument);
}

TEST(Automorphisms, OrbitsAndStabilizers) {
  const Graph g = Graph::from_edges(5, {{0, 1}, {1, 2}, {2, 3}});  // P4 plus isolated vertex
  const AutResult r = automorphisms(g);
  EXPECT_EQ(r.order, BigInt(2));
  EXPECT_EQ(r.num_orbits(), 3);
  EXPECT_EQ(r.orbit[3], 0);
  EXPECT_EQ(r.orbit[4], 4);
}

TEST(BruteForce, CapsAtNineVertices) {
  EXPECT_THROW(brute_force_aut_order(Graph(10)), CapacityError);
  EXPECT_EQ(brute_force_aut_order(Graph(9)), BigInt(362880));
}

TEST(Verdicts, SmallCyclicExamples) {
  auto g = testing::shared(cyclic(6));
  const auto cm = lookup(*g, 3, CatalogKind::kDirect)->build(g);
  const Verdict v = is_m_hgr(cm);
  EXPECT_TRUE(v.holds) << v.reason;
  EXPECT_EQ(v.aut_order, BigInt(6));
  EXPECT_TRUE(v.regular && v.diagonal_empty && v.orbits_are_parts);
  EXPECT_TRUE(aut_equals_group(cm, build_graph(cm)));

  // T_12 = T_13 = T_23 = {1} in C2: two disjoint triangles.
  auto c2 = testing::shared(cyclic(2));
  ConnectionMatrix sym(c2, 3);
  for (auto [i, j] : {std::pair{0, 1}, {0, 2}, {1, 2}}) sym.set(i, j, ElementSet{0});
  const Verdict w = is_m_hgr(sym);
  EXPECT_FALSE(w.holds);
  EXPECT_EQ(w.aut_order, BigInt(72));
  EXPECT_FALSE(aut_equals_group(sym, build_graph(sym)));
}

TEST(Verdicts, StabilizerFixesNeighborhood) {
  EXPECT_FALSE(stabilizer_fixes_neighborhood(petersen(), 0));
  const Graph path = Graph::from_edges(3, {{0, 1}, {1, 2}});
  EXPECT_TRUE(stabilizer_fixes_neighborhood(path, 0));
  EXPECT_FALSE(stabilizer_fixes_neighborhood(path, 1));
}

}  // namespace
}  // namespace mhgr
