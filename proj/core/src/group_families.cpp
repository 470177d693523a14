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
#include <map>
#include <numeric>

#include "mhgr/error.hpp"
#include "mhgr/group.hpp"

namespace mhgr {
namespace {

using Table = std::vector<std::vector<Element>>;

Table make_table(int n) { return Table(n, std::vector<Element>(n, 0)); }

bool is_prime(int p) {
  if (p < 2) return false;
  for (int d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

std::string power_name(const std::string& base, int e) {
  if (e == 0) return "1";
  if (e == 1) return base;
  return base + "^" + std::to_string(e);
}

}  // namespace

Group cyclic(int n) {
  if (n < 1) throw InvalidArgument("cyclic group order must be >= 1");
  if (n > kMaxGroupOrder)
    throw CapacityError("group order " + std::to_string(n) + " exceeds cap");
  Table t = make_table(n);
  std::vector<std::string> names(n);
  for (int a = 0; a < n; ++a) {
    names[a] = power_name("x", a);
    for (int b = 0; b < n; ++b) t[a][b] = (a + b) % n;
  }
  return Group::from_table(std::move(t), std::move(names), GroupDescriptor::cyclic(n));
}

Group elementary_abelian(int p, int k) {
  if (!is_prime(p)) throw InvalidArgument("elementary abelian group needs prime p, got " +
                                          std::to_string(p));
  if (k < 1) throw InvalidArgument("elementary abelian rank must be >= 1");
  long long n = 1;
  for (int i = 0; i < k; ++i) {
    n *= p;
    if (n > kMaxGroupOrder)
      throw CapacityError("C" + std::to_string(p) + "^" + std::to_string(k) +
                          " exceeds the group order cap");
  }
  std::vector<Group> factors(k, cyclic(p));
  Group g = direct_product(factors);
  return Group::from_table(g.table(), g.names(), GroupDescriptor::elem_abelian(p, k));
}

Group dihedral(int order) {
  if (order < 6 || order % 2 != 0)
    throw InvalidArgument("dihedral group order must be even and >= 6, got " +
                          std::to_string(order));
  if (order > kMaxGroupOrder) throw CapacityError("dihedral order exceeds cap");
  const int r = order / 2;
  // x^i y^j sits at index i + r*j; y x y = x^-1.
  Table t = make_table(order);
  std::vector<std::string> names(order);
  for (int a = 0; a < order; ++a) {
    const int i = a % r, j = a / r;
    names[a] = j == 0 ? power_name("x", i) : (i == 0 ? "y" : power_name("x", i) + "y");
    for (int b = 0; b < order; ++b) {
      const int k = b % r, l = b / r;
      const int rot = ((j == 0 ? i + k : i - k) % r + r) % r;
      t[a][b] = rot + r * ((j + l) % 2);
    }
  }
  return Group::from_table(std::move(t), std::move(names), GroupDescriptor::dihedral(order));
}

Group alternating4() {
  std::vector<std::array<int, 4>> perms;
  std::array<int, 4> p{0, 1, 2, 3};
  do {
    int inversions = 0;
    for (int i = 0; i < 4; ++i)
      for (int j = i + 1; j < 4; ++j)
        if (p[i] > p[j]) ++inversions;
    if (inversions % 2 == 0) perms.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  const int n = static_cast<int>(perms.size());
  std::map<std::array<int, 4>, int> index;
  for (int i = 0; i < n; ++i) index[perms[i]] = i;
  Table t = make_table(n);
  std::vector<std::string> names(n);
  for (int a = 0; a < n; ++a) {
    // Cycle notation on points 1..4.
    std::string s;
    std::array<bool, 4> seen{};
    for (int i = 0; i < 4; ++i) {
      if (seen[i] || perms[a][i] == i) continue;
      s += "(";
      for (int j = i; !seen[j]; j = perms[a][j]) {
        seen[j] = true;
        s += std::to_string(j + 1);
      }
      s += ")";
    }
    names[a] = s.empty() ? "1" : s;
    for (int b = 0; b < n; ++b) {
      // Apply a first, then b (left-to-right composition).
      std::array<int, 4> c;
      for (int i = 0; i < 4; ++i) c[i] = perms[b][perms[a][i]];
      t[a][b] = index.at(c);
    }
  }
  return Group::from_table(std::move(t), std::move(names), GroupDescriptor::alternating4());
}

Group quaternion8() {
  // Units 1, i, j, k at 0..3; their negatives at 4..7.
  static constexpr int kUnit[4][4] = {{0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}};
  static constexpr int kSign[4][4] = {{0, 0, 0, 0}, {0, 1, 0, 1}, {0, 1, 1, 0}, {0, 0, 1, 1}};
  Table t = make_table(8);
  for (int a = 0; a < 8; ++a)
    for (int b = 0; b < 8; ++b) {
      const int ua = a % 4, ub = b % 4;
      const int sign = (a / 4 + b / 4 + kSign[ua][ub]) % 2;
      t[a][b] = kUnit[ua][ub] + 4 * sign;
    }
  std::vector<std::string> names{"1", "i", "j", "k", "-1", "-i", "-j", "-k"};
  return Group::from_table(std::move(t), std::move(names), GroupDescriptor::quaternion8());
}

Group extraspecial27() {
  // Heisenberg group mod 3: (a,b,c)(a',b',c') = (a+a', b+b', c+c'+ab').
  Table t = make_table(27);
  std::vector<std::string> names(27);
  auto idx = [](int a, int b, int c) { return 9 * (a % 3) + 3 * (b % 3) + c % 3; };
  for (int u = 0; u < 27; ++u) {
    const int a = u / 9, b = (u / 3) % 3, c = u % 3;
    names[u] = u == 0 ? "1"
                      : "(" + std::to_string(a) + "," + std::to_string(b) + "," +
                            std::to_string(c) + ")";
    for (int v = 0; v < 27; ++v) {
      const int a2 = v / 9, b2 = (v / 3) % 3, c2 = v % 3;
      t[u][v] = idx(a + a2, b + b2, c + c2 + a * b2);
    }
  }
  return Group::from_table(std::move(t), std::move(names), GroupDescriptor::extraspecial27());
}

Group direct_product(std::span<const Group> factors) {
  if (factors.empty()) return cyclic(1);
  long long n = 1;
  for (const Group& f : factors) {
    n *= f.order();
    if (n > kMaxGroupOrder) throw CapacityError("direct product exceeds the group order cap");
  }
  const int k = static_cast<int>(factors.size());
  // Lexicographic tuples, first factor most significant.
  std::vector<int> stride(k, 1);
  for (int i = k - 2; i >= 0; --i) stride[i] = stride[i + 1] * factors[i + 1].order();
  auto coord = [&](int e, int i) { return (e / stride[i]) % factors[i].order(); };
  Table t = make_table(static_cast<int>(n));
  std::vector<std::string> names(n);
  for (int a = 0; a < n; ++a) {
    std::string s = "(";
    for (int i = 0; i < k; ++i) {
      if (i > 0) s += ",";
      s += factors[i].name(coord(a, i));
    }
    names[a] = a == 0 ? "1" : s + ")";
    for (int b = 0; b < n; ++b) {
      int c = 0;
      for (int i = 0; i < k; ++i)
        c += stride[i] * factors[i].mul_unchecked(coord(a, i), coord(b, i));
      t[a][b] = c;
    }
  }
  std::vector<GroupDescriptor> d;
  for (const Group& f : factors) d.push_back(f.descriptor());
  return Group::from_table(std::move(t), std::move(names), GroupDescriptor::product(std::move(d)));
}

Group standard_family(const GroupDescriptor& d) {
  using F = GroupDescriptor::Family;
  switch (d.family) {
    case F::kCyclic:
      return cyclic(d.n);
    case F::kElemAbelian:
      return elementary_abelian(d.p, d.k);
    case F::kDihedral:
      return dihedral(d.n);
    case F::kAlternating4:
      return alternating4();
    case F::kQuaternion8:
      return quaternion8();
    case F::kExtraspecial27:
      return extraspecial27();
    case F::kProduct: {
      std::vector<Group> fs;
      for (const auto& f : d.factors) fs.push_back(standard_family(f));
      return direct_product(fs);
    }
    case F::kCustom:
      break;
  }
  throw InvalidArgument("custom groups cannot be built from a descriptor; supply a table");
}

std::string to_string(SmallGroup s) {
  switch (s) {
    case SmallGroup::kC1: return "C1";
    case SmallGroup::kC2: return "C2";
    case SmallGroup::kC3: return "C3";
    case SmallGroup::kC4: return "C4";
    case SmallGroup::kC5: return "C5";
    case SmallGroup::kC6: return "C6";
    case SmallGroup::kC2x2: return "C2^2";
    case SmallGroup::kC2x3: return "C2^3";
    case SmallGroup::kC3x2: return "C3^2";
    case SmallGroup::kD6: return "D6";
    case SmallGroup::kA4: return "A4";
    case SmallGroup::kX27: return "X27";
  }
  return "?";
}

Group make_small_group(SmallGroup s) {
  switch (s) {
    case SmallGroup::kC1: return cyclic(1);
    case SmallGroup::kC2: return cyclic(2);
    case SmallGroup::kC3: return cyclic(3);
    case SmallGroup::kC4: return cyclic(4);
    case SmallGroup::kC5: return cyclic(5);
    case SmallGroup::kC6: return cyclic(6);
    case SmallGroup::kC2x2: return elementary_abelian(2, 2);
    case SmallGroup::kC2x3: return elementary_abelian(2, 3);
    case SmallGroup::kC3x2: return elementary_abelian(3, 2);
    case SmallGroup::kD6: return dihedral(6);
    case SmallGroup::kA4: return alternating4();
    case SmallGroup::kX27: return extraspecial27();
  }
  throw InvalidArgument("unknown small group tag");
}

std::optional<SmallGroup> identify_small_group(const Group& g) {
  struct Key {
    int order;
    bool abelian;
    std::vector<int> orders;
  };
  static const std::vector<std::pair<SmallGroup, Key>> keys = [] {
    std::vector<std::pair<SmallGroup, Key>> v;
    for (SmallGroup s : kAllSmallGroups) {
      Group h = make_small_group(s);
      v.push_back({s, Key{h.order(), h.is_abelian(), h.element_order_multiset()}});
    }
    return v;
  }();
  const auto orders = g.element_order_multiset();
  for (const auto& [tag, key] : keys) {
    if (key.order == g.order() && key.abelian == g.is_abelian() && key.orders == orders)
      return tag;
  }
  return std::nullopt;
}

}  // namespace mhgr
