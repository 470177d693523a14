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

#include <random>
#include <set>

#include "mhgr/permutation.hpp"

namespace mhgr {
namespace {

// Closure of the generators by breadth-first multiplication.
std::size_t closure_size(int n, const std::vector<Perm>& gens) {
  std::set<Perm> seen{identity_perm(n)};
  std::vector<Perm> queue{identity_perm(n)};
  for (std::size_t q = 0; q < queue.size(); ++q)
    for (const Perm& s : gens) {
      Perm p = compose(queue[q], s);
      if (seen.insert(p).second) queue.push_back(std::move(p));
    }
  return seen.size();
}

Perm cycle(int n, std::initializer_list<int> pts) {
  Perm p = identity_perm(n);
  const std::vector<int> v(pts);
  for (std::size_t k = 0; k < v.size(); ++k) p[v[k]] = v[(k + 1) % v.size()];
  return p;
}

TEST(Permutation, ComposeAndInverse) {
  const Perm a = cycle(4, {0, 1, 2});
  const Perm b = cycle(4, {2, 3});
  // a then b: 1 -> 2 -> 3.
  EXPECT_EQ(compose(a, b)[1], 3);
  EXPECT_TRUE(is_identity(compose(a, inverse(a))));
  EXPECT_TRUE(is_permutation(a));
  EXPECT_FALSE(is_permutation({0, 0, 1}));
}

TEST(Permutation, SymmetricAndAlternating) {
  long long fact = 1;
  for (int n = 2; n <= 9; ++n) {
    fact *= n;
    std::vector<int> all(n);
    for (int k = 0; k < n; ++k) all[k] = k;
    Perm long_cycle = identity_perm(n);
    for (int k = 0; k < n; ++k) long_cycle[k] = (k + 1) % n;
    EXPECT_EQ(schreier_sims_order(n, {cycle(n, {0, 1}), long_cycle}), BigInt(fact));
    if (n >= 3) {
      std::vector<Perm> three;
      for (int k = 2; k < n; ++k) three.push_back(cycle(n, {0, 1, k}));
      EXPECT_EQ(schreier_sims_order(n, three), BigInt(fact / 2));
    }
  }
  // S_20 exceeds 64 bits.
  Perm c = identity_perm(20);
  for (int k = 0; k < 20; ++k) c[k] = (k + 1) % 20;
  EXPECT_EQ(schreier_sims_order(20, {cycle(20, {0, 1}), c}).str(), "2432902008176640000");
  EXPECT_EQ(schreier_sims_order(5, {}), BigInt(1));
}

TEST(Permutation, RandomSubgroupsMatchClosure) {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 60; ++trial) {
    const int n = 3 + static_cast<int>(rng() % 5);
    std::vector<Perm> gens;
    const int k = 1 + static_cast<int>(rng() % 3);
    for (int g = 0; g < k; ++g) {
      Perm p = identity_perm(n);
      // Sparse permutations give a spread of subgroup sizes.
      const int swaps = 1 + static_cast<int>(rng() % 2);
      for (int s = 0; s < swaps; ++s) std::swap(p[rng() % n], p[rng() % n]);
      gens.push_back(p);
    }
    EXPECT_EQ(schreier_sims_order(n, gens), BigInt(closure_size(n, gens)));
  }
}

TEST(Permutation, OrbitLabels) {
  const auto labels = orbit_labels(6, {cycle(6, {1, 3}), cycle(6, {3, 5})});
  EXPECT_EQ(labels, (std::vector<int>{0, 1, 2, 1, 4, 1}));
}

}  // namespace
}  // namespace mhgr
