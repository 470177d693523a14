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

#include "mhgr/catalog.hpp"

#include <algorithm>
#include <cctype>
#include <random>

#include "mhgr/autgroup.hpp"
#include "mhgr/error.hpp"

namespace mhgr {

std::string to_string(CatalogKind k) {
  switch (k) {
    case CatalogKind::kDirect: return "direct";
    case CatalogKind::kPgsr3: return "PGSR-3";
    case CatalogKind::kPgsr4: return "PGSR-4";
    case CatalogKind::kPgsr5: return "PGSR-5";
  }
  return "?";
}

int pgsr_parts(CatalogKind k) {
  switch (k) {
    case CatalogKind::kPgsr3: return 3;
    case CatalogKind::kPgsr4: return 4;
    case CatalogKind::kPgsr5: return 5;
    case CatalogKind::kDirect: break;
  }
  return 0;
}

namespace {

using Words = std::vector<std::string>;
using K = CatalogKind;

const Words k1{"1"};
const Words k1x{"1", "x"};
const Words kx{"x"};

// Shared formulas for the four groups C3^2, D6, A4 and X27.
const std::vector<std::string> kRankTwoSmall{"C3^2", "D6", "A4", "X27"};

std::vector<CatalogEntry> make_catalog() {
  std::vector<CatalogEntry> c;
  auto add = [&](std::vector<std::string> groups, int m, K kind, std::string prov,
                 std::vector<CatalogEntry::Cell> cells) -> CatalogEntry& {
    CatalogEntry e;
    e.groups = std::move(groups);
    e.m = m;
    e.kind = kind;
    e.provenance = std::move(prov);
    e.cells = std::move(cells);
    c.push_back(std::move(e));
    return c.back();
  };

  // C2 at 6 <= m <= 9.
  add({"C2"}, 6, K::kDirect, "C2, six parts, valency 5",
      {{1, 2, k1x}, {1, 6, k1x}, {3, 5, k1x}, {4, 6, k1x}, {1, 5, k1}, {2, 3, k1},
       {2, 5, k1}, {3, 6, k1}, {4, 5, k1}, {2, 4, kx}, {3, 4, kx}});
  add({"C2"}, 7, K::kDirect, "C2, seven parts",
      {{1, 2, k1x}, {1, 3, kx}, {1, 7, kx}, {2, 3, kx}, {4, 7, kx}, {5, 6, kx}, {5, 7, kx},
       {6, 7, kx}, {2, 6, k1}, {3, 4, k1}, {3, 5, k1}, {4, 5, k1}, {4, 6, k1}});
  add({"C2"}, 8, K::kDirect, "C2, eight parts",
      {{1, 2, k1x}, {1, 7, k1}, {1, 8, k1}, {3, 4, k1}, {3, 8, k1}, {4, 5, k1}, {4, 6, k1},
       {5, 8, k1}, {2, 3, kx}, {2, 6, kx}, {3, 5, kx}, {4, 7, kx}, {5, 6, kx}, {6, 7, kx},
       {7, 8, kx}});
  add({"C2"}, 9, K::kDirect, "C2, nine parts",
      {{1, 2, k1x}, {8, 9, k1x}, {1, 7, k1}, {1, 9, k1}, {3, 4, k1}, {3, 8, k1}, {4, 5, k1},
       {4, 6, k1}, {5, 9, k1}, {2, 3, kx}, {2, 6, kx}, {3, 5, kx}, {4, 7, kx}, {5, 6, kx},
       {6, 7, kx}, {7, 8, kx}});

  // C3.
  add({"C3"}, 5, K::kDirect, "C3, five parts, unlisted entries empty",
      {{1, 2, k1x}, {1, 3, {"1", "x^-1"}}, {4, 5, {"1", "x^-1"}}, {2, 4, k1}, {2, 5, kx},
       {3, 4, kx}, {3, 5, kx}});
  add({"C3"}, 4, K::kPgsr4, "C3, four-part PGSR as printed",
      {{1, 2, k1x}, {1, 3, k1x}, {1, 4, k1x}, {2, 3, k1x}, {2, 4, {"x", "x^-1"}}, {3, 4, kx}})
      .lift_infeasible = true;
  add({"C3"}, 5, K::kPgsr5, "C3, five-part PGSR as printed",
      {{1, 2, k1x}, {1, 3, k1x}, {2, 3, k1x}, {4, 5, k1x}, {1, 4, k1}, {1, 5, k1},
       {2, 4, {"x^-1"}}, {3, 4, {"x^-1"}}, {2, 5, kx}, {3, 5, kx}})
      .lift_infeasible = true;

  // C4, C5, C6.
  add({"C6"}, 3, K::kDirect, "C6, three parts",
      {{1, 2, {"1", "x^3"}}, {1, 3, {"1", "x^-1"}}, {2, 3, {"x", "x^-1"}}});
  add({"C4", "C5", "C6"}, 4, K::kDirect, "cyclic of order 4 to 6, four parts",
      {{1, 2, k1x}, {1, 3, k1x}, {1, 4, k1}, {2, 3, kx}, {2, 4, {"x", "x^-1"}},
       {3, 4, {"x", "x^-1"}}});
  add({"C4", "C5", "C6"}, 3, K::kPgsr3, "cyclic of order 4 to 6, three-part PGSR",
      {{1, 2, k1x}, {1, 3, {"x", "x^-1"}}, {2, 3, k1}});
  add({"C4", "C5", "C6"}, 4, K::kPgsr4, "cyclic of order 4 to 6, four-part PGSR",
      {{1, 2, k1x}, {1, 3, k1x}, {1, 4, k1}, {2, 3, kx}, {2, 4, {"x", "x^2"}},
       {3, 4, {"x^-1"}}});

  // C2^2.
  add({"C2^2"}, 4, K::kDirect, "C2^2, four parts",
      {{1, 2, k1x}, {2, 3, k1x}, {3, 4, k1x}, {1, 3, kx}, {1, 4, {"x", "y"}}, {2, 4, {"y"}}});
  add({"C2^2"}, 5, K::kDirect, "C2^2, five parts",
      {{1, 2, k1x}, {1, 3, {"x", "y"}}, {2, 3, k1}, {3, 5, k1}, {2, 4, {"y"}},
       {4, 5, {"1", "x", "y"}}});
  add({"C2^2"}, 4, K::kPgsr4, "C2^2, four-part PGSR",
      {{1, 2, k1x}, {2, 3, k1x}, {1, 3, kx}, {3, 4, kx}, {1, 4, {"x", "y"}}, {2, 4, {"y"}}});
  add({"C2^2"}, 5, K::kPgsr5, "C2^2, five-part PGSR as printed",
      {{1, 2, {"1", "x", "y"}}, {1, 3, {"1", "x", "y"}}, {4, 5, {"1", "x", "y"}}, {2, 3, kx},
       {2, 4, kx}, {2, 5, {"xy"}}, {3, 4, {"y"}}, {3, 5, {"y"}}})
      .lift_infeasible = true;

  // C2^3.
  add({"C2^3"}, 3, K::kDirect, "C2^3, three parts",
      {{1, 2, {"1", "x", "z", "xy"}}, {1, 3, {"z", "xy", "xz", "xyz"}},
       {2, 3, {"y", "z", "xy", "xz"}}});
  add({"C2^3"}, 4, K::kDirect, "C2^3, four parts",
      {{1, 2, k1x}, {1, 3, {"x", "z"}}, {1, 4, kx}, {2, 3, kx}, {2, 4, {"x", "y"}},
       {3, 4, {"x", "z"}}});
  add({"C2^3"}, 3, K::kPgsr3, "C2^3, three-part PGSR",
      {{1, 2, {"1", "x", "y"}}, {1, 3, {"1", "xz", "xyz"}}, {2, 3, {"xz", "yz"}}});
  add({"C2^3"}, 4, K::kPgsr4, "C2^3, four-part PGSR",
      {{1, 2, k1x}, {1, 3, {"x", "z"}}, {1, 4, kx}, {2, 3, kx}, {2, 4, {"x", "y"}},
       {3, 4, {"y"}}});

  // C3^2, D6, A4, X27.
  add({"C3^2", "A4", "X27"}, 3, K::kDirect, "C3^2, A4 and X27, three parts",
      {{1, 2, {"1", "x", "y"}}, {1, 3, {"1", "x", "xy"}}, {2, 3, {"1", "x^-1", "yx"}}});
  add(kRankTwoSmall, 4, K::kDirect, "C3^2, D6, A4 and X27, four parts",
      {{1, 2, {"1", "y"}}, {1, 3, k1x}, {2, 4, k1x}, {1, 4, k1}, {2, 3, k1}, {3, 4, {"x", "y"}}});
  add(kRankTwoSmall, 3, K::kPgsr3, "C3^2, D6, A4 and X27, three-part PGSR",
      {{1, 2, {"1", "x", "y"}}, {1, 3, {"1", "x", "xy"}}, {2, 3, {"1", "yx"}}});
  add(kRankTwoSmall, 4, K::kPgsr4, "C3^2, D6, A4 and X27, four-part PGSR",
      {{1, 2, {"1", "y"}}, {1, 3, k1x}, {2, 4, k1x}, {1, 4, k1}, {2, 3, k1}, {3, 4, {"x"}}});

  // Groups with a generating pair {x, y}, |x| >= 4.
  add({kRankLe2Class}, 3, K::kDirect, "two generators, three parts",
      {{1, 2, {"1", "x", "y^-1"}}, {1, 3, {"1", "x", "x^-1"}}, {2, 3, {"x", "x^-1", "y"}}});
  add({kRankLe2Class}, 4, K::kDirect, "two generators, four parts",
      {{1, 2, k1x}, {1, 3, k1x}, {2, 4, k1x}, {1, 4, k1}, {2, 3, k1}, {3, 4, {"x", "y"}}});
  add({kRankLe2Class}, 3, K::kPgsr3, "two generators, three-part PGSR",
      {{1, 2, {"1", "x", "y^-1"}}, {1, 3, {"1", "x", "x^-1"}}, {2, 3, {"x", "x^-1"}}});
  add({kRankLe2Class}, 4, K::kPgsr4, "two generators, four-part PGSR",
      {{1, 2, k1x}, {1, 3, k1x}, {2, 4, k1x}, {1, 4, k1}, {2, 3, k1}, {3, 4, {"y"}}});

  // Groups with a generating triple {x, y, z}, |x| >= 3.
  add({kRank3Class}, 3, K::kDirect, "three generators, three parts",
      {{1, 2, {"1", "x", "x^-1"}}, {1, 3, {"1", "y^-1", "z"}}, {2, 3, {"1", "x^-1", "z"}}});
  add({kRank3Class}, 4, K::kDirect, "three generators, four parts",
      {{1, 2, k1x}, {1, 3, k1x}, {1, 4, k1}, {2, 3, k1}, {2, 4, {"1", "y"}}, {3, 4, {"y", "z"}}});
  add({kRank3Class}, 3, K::kPgsr3, "three generators, three-part PGSR",
      {{1, 2, {"1", "x", "y"}}, {1, 3, {"1", "y", "z"}}, {2, 3, {"1", "z"}}});
  add({kRank3Class}, 4, K::kPgsr4, "three generators, four-part PGSR",
      {{1, 2, k1x}, {1, 3, {"1", "z"}}, {1, 4, k1}, {2, 3, {"x^-1"}}, {2, 4, {"1", "y"}},
       {3, 4, kx}});

  // Replacement lift bases, found by exhaustive search (see tests), for the
  // printed PGSRs above whose valency parameter exceeds |G|.
  {
    auto& e = add({"C3"}, 4, K::kPgsr4, "C3, four-part PGSR with k = 3 (search-derived)",
                  {{1, 2, k1x}, {1, 3, k1}, {1, 4, k1}, {2, 3, k1}, {2, 4, kx}, {3, 4, k1}});
    e.replacement = true;
  }
  {
    auto& e = add({"C3"}, 5, K::kPgsr5, "C3, five-part PGSR with k = 3 (search-derived)",
                  {{1, 2, k1}, {1, 3, k1}, {1, 5, k1x}, {2, 3, kx}, {2, 4, k1}, {2, 5, k1},
                   {3, 4, {"1", "x^-1"}}});
    e.replacement = true;
  }
  {
    auto& e = add({"C2^2"}, 5, K::kPgsr5, "C2^2, five-part PGSR with k = 3 (search-derived)",
                  {{1, 2, k1}, {1, 3, k1}, {1, 5, k1x}, {2, 3, kx}, {2, 4, k1}, {2, 5, k1},
                   {3, 4, {"x", "y"}}});
    e.replacement = true;
  }
  return c;
}

bool satisfies(const Group& g, Element x, int ord) { return g.element_order(x) == ord; }

}  // namespace

const std::vector<CatalogEntry>& catalog_entries() {
  static const std::vector<CatalogEntry> entries = make_catalog();
  return entries;
}

std::string catalog_tag(const Group& g) {
  if (auto s = identify_small_group(g)) return to_string(*s);
  const int d = minimal_generating_size(g);
  if (d <= 2) return kRankLe2Class;
  if (d == 3) return kRank3Class;
  return "";
}

std::optional<CatalogEntry> lookup(const Group& g, int m, CatalogKind kind) {
  const std::string tag = catalog_tag(g);
  if (tag.empty()) return std::nullopt;
  const CatalogEntry* best = nullptr;
  for (const CatalogEntry& e : catalog_entries()) {
    if (e.m != m || e.kind != kind) continue;
    if (std::find(e.groups.begin(), e.groups.end(), tag) == e.groups.end()) continue;
    if (!best || (best->lift_infeasible && !e.lift_infeasible)) best = &e;
  }
  if (!best) return std::nullopt;
  return *best;
}

std::vector<Element> catalog_generators(const Group& g) {
  const std::string tag = catalog_tag(g);
  const int n = g.order();
  auto first_of_order = [&](int ord) {
    for (Element x = 0; x < n; ++x)
      if (satisfies(g, x, ord)) return x;
    throw NotFound("no element of order " + std::to_string(ord));
  };
  auto pair = [&](auto&& ok) -> std::vector<Element> {
    for (Element x = 1; x < n; ++x)
      for (Element y = 1; y < n; ++y) {
        const std::array<Element, 2> gens{x, y};
        if (ok(x, y) && g.generates(gens)) return {x, y};
      }
    throw NotFound("no generating pair matching the presentation of " + tag);
  };
  if (tag.empty()) throw InvalidArgument("no catalog formulas for groups with d(G) >= 4");
  if (tag == "C1") return {};
  if (tag[0] == 'C' && tag.find('^') == std::string::npos) return {first_of_order(n)};
  if (tag == "C2^2")
    return pair([&](Element x, Element y) {
      return satisfies(g, x, 2) && satisfies(g, y, 2) && satisfies(g, g.mul(x, y), 2);
    });
  if (tag == "C3^2")
    return pair([&](Element x, Element y) {
      return satisfies(g, x, 3) && satisfies(g, y, 3) && g.mul(x, y) == g.mul(y, x);
    });
  if (tag == "D6")
    return pair([&](Element x, Element y) {
      return satisfies(g, x, 3) && satisfies(g, y, 2) && satisfies(g, g.mul(x, y), 2);
    });
  if (tag == "A4")
    return pair([&](Element x, Element y) {
      return satisfies(g, x, 3) && satisfies(g, y, 2) && satisfies(g, g.mul(x, y), 3);
    });
  if (tag == "X27")
    return pair([&](Element x, Element y) { return satisfies(g, x, 3) && satisfies(g, y, 3); });
  if (tag == "C2^3") {
    for (Element x = 1; x < n; ++x)
      for (Element y = x + 1; y < n; ++y)
        for (Element z = y + 1; z < n; ++z) {
          const std::array<Element, 3> gens{x, y, z};
          if (g.generates(gens)) return {x, y, z};
        }
    throw NotFound("C2^3 generators");
  }
  if (tag == kRankLe2Class) {
    if (g.is_abelian() && g.exponent() == n && n >= 7) {
      const Element a = first_of_order(n);
      return {a, g.pow(a, 3)};
    }
    auto [x, y] = pair_with_order_ge4(g);
    return {x, y};
  }
  if (tag == kRank3Class) {
    auto t = triple_with_order_ge3(g);
    return {t[0], t[1], t[2]};
  }
  throw InvalidArgument("no generators defined for catalog tag " + tag);
}

Element eval_word(const Group& g, const std::vector<Element>& gens, const std::string& word) {
  if (word == "1") return g.identity();
  Element r = g.identity();
  std::size_t i = 0;
  auto fail = [&](const std::string& what) {
    throw InvalidArgument("word '" + word + "': " + what + " at position " + std::to_string(i));
  };
  while (i < word.size()) {
    const char c = word[i];
    if (c < 'x' || c > 'z') fail("expected x, y or z");
    const std::size_t gi = static_cast<std::size_t>(c - 'x');
    if (gi >= gens.size()) fail("generator not available for this group");
    ++i;
    long long e = 1;
    if (i < word.size() && word[i] == '^') {
      ++i;
      bool neg = false;
      if (i < word.size() && word[i] == '-') {
        neg = true;
        ++i;
      }
      if (i >= word.size() || !std::isdigit(static_cast<unsigned char>(word[i])))
        fail("expected exponent");
      e = 0;
      while (i < word.size() && std::isdigit(static_cast<unsigned char>(word[i])))
        e = e * 10 + (word[i++] - '0');
      if (neg) e = -e;
    }
    r = g.mul(r, g.pow(gens[gi], e));
  }
  return r;
}

ConnectionMatrix CatalogEntry::build(std::shared_ptr<const Group> g) const {
  const std::vector<Element> gens = catalog_generators(*g);
  ConnectionMatrix cm(g, m);
  for (const Cell& cell : cells) {
    ElementSet s;
    for (const std::string& w : cell.words) {
      const Element e = eval_word(*g, gens, w);
      if (s.contains(e))
        throw DiscrepancyError("catalog entry '" + provenance + "': words in T_" +
                               std::to_string(cell.i) + "," + std::to_string(cell.j) +
                               " collide in this group");
      s.insert(e);
    }
    if (!cm.at(cell.i - 1, cell.j - 1).empty())
      throw InvalidArgument("catalog entry '" + provenance + "' lists T_" +
                            std::to_string(cell.i) + "," + std::to_string(cell.j) + " twice");
    cm.set(cell.i - 1, cell.j - 1, s);
  }
  return cm;
}

Graph asymmetric_regular_graph(int m, std::uint64_t seed, int valency) {
  if (m < 10)
    throw InvalidArgument("connected 4-regular asymmetric graphs exist only for m >= 10, got " +
                          std::to_string(m));
  if (valency < 3 || valency >= m || (static_cast<long long>(m) * valency) % 2 != 0)
    throw InvalidArgument("unsupported valency " + std::to_string(valency));
  std::mt19937_64 rng(seed);
  constexpr int kBudget = 100000;
  std::vector<int> stubs;
  for (int attempt = 0; attempt < kBudget; ++attempt) {
    stubs.clear();
    for (int v = 0; v < m; ++v)
      for (int d = 0; d < valency; ++d) stubs.push_back(v);
    std::shuffle(stubs.begin(), stubs.end(), rng);
    Graph g(m);
    bool simple = true;
    for (std::size_t i = 0; i < stubs.size() && simple; i += 2) {
      if (stubs[i] == stubs[i + 1] || g.adjacent(stubs[i], stubs[i + 1])) simple = false;
      else g.add_edge(stubs[i], stubs[i + 1]);
    }
    if (!simple || !g.is_connected()) continue;
    if (automorphisms(g).order == 1) return g;
  }
  throw Error("no asymmetric " + std::to_string(valency) + "-regular graph on " +
              std::to_string(m) + " vertices within " + std::to_string(kBudget) +
              " attempts (seed " + std::to_string(seed) + ")");
}

namespace {

ConnectionMatrix from_template(std::shared_ptr<const Group> g, const Graph& h) {
  ConnectionMatrix cm(std::move(g), h.num_vertices());
  for (auto [u, v] : h.edges()) cm.set(u, v, ElementSet{0});
  return cm;
}

}  // namespace

ConnectionMatrix c2_large_m(int m, std::uint64_t seed) {
  return from_template(std::make_shared<const Group>(cyclic(2)), asymmetric_regular_graph(m, seed));
}

ConnectionMatrix c1_large_m(int m, std::uint64_t seed) {
  return from_template(std::make_shared<const Group>(cyclic(1)), asymmetric_regular_graph(m, seed));
}

}  // namespace mhgr
