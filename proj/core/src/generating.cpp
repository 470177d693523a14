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

#include <algorithm>
#include <string>

#include "mhgr/error.hpp"
#include "mhgr/group.hpp"

namespace mhgr {
namespace {

// Depth-first search over increasing index tuples of length t. Elements
// already inside the current subgroup are skipped: adding them cannot help.
bool find_tuple(const Group& g, int t, Element start, std::vector<Element>& cur,
                const ElementSet& sub) {
  if (static_cast<int>(cur.size()) == t) return sub.size() == g.order();
  for (Element e = start; e < g.order(); ++e) {
    if (sub.contains(e)) continue;
    cur.push_back(e);
    ElementSet next = g.subgroup_generated(std::span<const Element>(cur));
    if (find_tuple(g, t, e + 1, cur, next)) return true;
    cur.pop_back();
  }
  return false;
}

void check_capacity(const Group& g) {
  if (g.order() > kMaxGroupOrder)
    throw CapacityError("generating-set search capped at order " +
                        std::to_string(kMaxGroupOrder));
}

}  // namespace

GeneratingSet minimal_generating_set(const Group& g) {
  check_capacity(g);
  GeneratingSet out;
  if (g.order() == 1) return out;
  std::vector<Element> cur;
  ElementSet trivial{0};
  int t = 1;
  for (; t <= kMaxGeneratingSetSize; ++t) {
    cur.clear();
    if (find_tuple(g, t, 1, cur, trivial)) break;
  }
  if (t > kMaxGeneratingSetSize)
    throw CapacityError("d(G) exceeds the supported maximum of " +
                        std::to_string(kMaxGeneratingSetSize));

  if (!is_elementary_abelian_2group(g)) {
    auto big = std::find_if(cur.begin(), cur.end(),
                            [&](Element e) { return g.element_order(e) >= 3; });
    if (big != cur.end()) {
      std::rotate(cur.begin(), big, big + 1);
    } else {
      // All generators are involutions. Two of them fail to commute (else G
      // would be elementary abelian), and their product has order >= 3.
      // Replacing h_i by h_i h_j keeps the generated subgroup.
      bool done = false;
      for (std::size_t i = 0; i < cur.size() && !done; ++i)
        for (std::size_t j = 0; j < cur.size() && !done; ++j) {
          if (i == j) continue;
          Element p = g.mul(cur[i], cur[j]);
          if (g.element_order(p) >= 3) {
            cur.erase(cur.begin() + static_cast<std::ptrdiff_t>(i));
            cur.insert(cur.begin(), p);
            done = true;
          }
        }
    }
  }
  out.elements = std::move(cur);
  return out;
}

int minimal_generating_size(const Group& g) { return minimal_generating_set(g).size(); }

bool is_elementary_abelian_2group(const Group& g) {
  return g.is_abelian() && g.exponent() <= 2;
}

std::pair<Element, Element> pair_with_order_ge4(const Group& g) {
  check_capacity(g);
  for (Element x = 1; x < g.order(); ++x) {
    if (g.element_order(x) < 4) continue;
    for (Element y = 0; y < g.order(); ++y) {
      const std::array<Element, 2> gens{x, y};
      if (g.generates(gens)) return {x, y};
    }
  }
  throw NotFound("no generating pair {x, y} with |x| >= 4");
}

std::array<Element, 3> triple_with_order_ge3(const Group& g) {
  check_capacity(g);
  if (const int d = minimal_generating_size(g); d != 3)
    throw InvalidArgument("generating triple requested for a group with d(G) = " + std::to_string(d));
  for (Element x = 1; x < g.order(); ++x) {
    if (g.element_order(x) < 3) continue;
    const ElementSet hx = g.subgroup_generated(std::span<const Element>(&x, 1));
    for (Element y = 1; y < g.order(); ++y) {
      if (hx.contains(y)) continue;
      const std::array<Element, 2> xy{x, y};
      const ElementSet hxy = g.subgroup_generated(xy);
      for (Element z = y + 1; z < g.order(); ++z) {
        if (hxy.contains(z)) continue;
        const std::array<Element, 3> gens{x, y, z};
        if (g.generates(gens)) return gens;
      }
    }
  }
  throw NotFound("no generating triple {x, y, z} with |x| >= 3");
}

std::vector<Element> greedy_generating_set(const Group& g) {
  std::vector<Element> gens;
  ElementSet sub{0};
  for (Element e = 1; e < g.order(); ++e) {
    if (sub.contains(e)) continue;
    gens.push_back(e);
    sub = g.subgroup_generated(std::span<const Element>(gens));
  }
  return gens;
}

}  // namespace mhgr
