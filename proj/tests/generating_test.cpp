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

#include "mhgr/error.hpp"
#include "mhgr/group.hpp"
#include "test_util.hpp"

namespace mhgr {
namespace {

// Smallest k such that some k-subset generates, by trying all subsets.
int brute_rank(const Group& g) {
  const int n = g.order();
  if (n == 1) return 0;
  for (int k = 1; k <= n; ++k) {
    std::vector<Element> pick(k);
    auto rec = [&](auto&& self, int pos, Element from) -> bool {
      if (pos == k) return g.generates(pick);
      for (Element x = from; x < n; ++x) {
        pick[pos] = x;
        if (self(self, pos + 1, x + 1)) return true;
      }
      return false;
    };
    if (rec(rec, 0, 1)) return k;
  }
  return -1;
}

TEST(Generating, MinimalSizeMatchesBruteForce) {
  for (const auto& [label, g] : testing::small_group_tables())
    EXPECT_EQ(minimal_generating_size(*g), brute_rank(*g)) << label;
  EXPECT_EQ(minimal_generating_size(elementary_abelian(2, 4)), 4);
  EXPECT_EQ(minimal_generating_size(elementary_abelian(3, 3)), 3);
  EXPECT_EQ(minimal_generating_size(extraspecial27()), 2);
  EXPECT_EQ(minimal_generating_size(quaternion8()), 2);
}

TEST(Generating, FirstGeneratorHasOrderAtLeastThree) {
  auto check = [](const Group& g, const std::string& label) {
    const GeneratingSet s = minimal_generating_set(g);
    EXPECT_EQ(s.size(), minimal_generating_size(g)) << label;
    EXPECT_TRUE(g.generates(s.elements)) << label;
    if (!is_elementary_abelian_2group(g)) {
      ASSERT_GE(s.size(), 1) << label;
      EXPECT_GE(g.element_order(s.elements[0]), 3) << label;
    }
  };
  for (const auto& [label, g] : testing::small_group_tables()) check(*g, label);
  const Group f[] = {cyclic(2), dihedral(8)};
  check(direct_product(f), "C2xD8");
  // Generated by involutions only.
  check(dihedral(10), "D10");
  const Group f2[] = {dihedral(6), cyclic(2)};
  check(direct_product(f2), "D6xC2");
}

TEST(Generating, ElementaryAbelianTwoGroups) {
  EXPECT_TRUE(is_elementary_abelian_2group(cyclic(1)));
  EXPECT_TRUE(is_elementary_abelian_2group(cyclic(2)));
  EXPECT_TRUE(is_elementary_abelian_2group(elementary_abelian(2, 5)));
  EXPECT_FALSE(is_elementary_abelian_2group(cyclic(4)));
  EXPECT_FALSE(is_elementary_abelian_2group(dihedral(8)));
}

TEST(Generating, PairWithLargeOrder) {
  for (const Group& g : {elementary_abelian(2, 2), elementary_abelian(3, 2), dihedral(6), alternating4(),
                         extraspecial27(), elementary_abelian(2, 3)})
    EXPECT_THROW(pair_with_order_ge4(g), NotFound) << g.descriptor().to_string();
  for (const Group& g : {cyclic(7), dihedral(8), quaternion8(), dihedral(10), cyclic(12)}) {
    const auto [x, y] = pair_with_order_ge4(g);
    EXPECT_GE(g.element_order(x), 4);
    const Element xy[] = {x, y};
    EXPECT_TRUE(g.generates(xy));
  }
}

TEST(Generating, TripleWithLargeOrder) {
  EXPECT_THROW(triple_with_order_ge3(elementary_abelian(2, 3)), NotFound);
  EXPECT_THROW(triple_with_order_ge3(cyclic(6)), InvalidArgument);
  const Group f[] = {elementary_abelian(2, 2), cyclic(4)};
  const Group g = direct_product(f);
  const auto t = triple_with_order_ge3(g);
  EXPECT_GE(g.element_order(t[0]), 3);
  EXPECT_TRUE(g.generates(t));
}

}  // namespace
}  // namespace mhgr
