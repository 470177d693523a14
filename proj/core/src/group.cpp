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

#include "mhgr/group.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "mhgr/error.hpp"

namespace mhgr {
namespace {

std::string triple_str(Element a, Element b, Element c) {
  std::ostringstream os;
  os << "(" << a << ", " << b << ", " << c << ")";
  return os.str();
}

}  // namespace

bool GroupDescriptor::is_custom() const {
  if (family == Family::kCustom) return true;
  if (family == Family::kProduct)
    return std::any_of(factors.begin(), factors.end(),
                       [](const GroupDescriptor& f) { return f.is_custom(); });
  return false;
}

std::string GroupDescriptor::to_string() const {
  switch (family) {
    case Family::kCyclic:
      return "C" + std::to_string(n);
    case Family::kElemAbelian:
      return "C" + std::to_string(p) + "^" + std::to_string(k);
    case Family::kDihedral:
      return "D" + std::to_string(n);
    case Family::kAlternating4:
      return "A4";
    case Family::kQuaternion8:
      return "Q8";
    case Family::kExtraspecial27:
      return "X27";
    case Family::kProduct: {
      std::string s;
      for (std::size_t i = 0; i < factors.size(); ++i) {
        if (i > 0) s += "x";
        s += factors[i].to_string();
      }
      return s;
    }
    case Family::kCustom:
      break;
  }
  return "custom";
}

Group Group::from_table(std::vector<std::vector<Element>> table,
                        std::vector<std::string> names,
                        GroupDescriptor descriptor) {
  const int n = static_cast<int>(table.size());
  if (n < 1) throw InvalidArgument("group table is empty");
  if (n > kMaxGroupOrder)
    throw CapacityError("group order " + std::to_string(n) + " exceeds cap " +
                        std::to_string(kMaxGroupOrder));
  for (int a = 0; a < n; ++a) {
    if (static_cast<int>(table[a].size()) != n)
      throw InvalidArgument("table row " + std::to_string(a) + " has length " +
                            std::to_string(table[a].size()) + ", expected " +
                            std::to_string(n));
    for (int b = 0; b < n; ++b) {
      if (table[a][b] < 0 || table[a][b] >= n)
        throw InvalidArgument("table entry (" + std::to_string(a) + ", " +
                              std::to_string(b) + ") = " +
                              std::to_string(table[a][b]) + " out of range");
    }
  }
  for (int a = 0; a < n; ++a) {
    if (table[0][a] != a || table[a][0] != a)
      throw InvalidArgument("index 0 is not the identity at element " +
                            std::to_string(a));
  }
  // Latin square.
  std::vector<int> seen(n, -1);
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      Element c = table[a][b];
      if (seen[c] == a)
        throw InvalidArgument("row " + std::to_string(a) +
                              " repeats element " + std::to_string(c));
      seen[c] = a;
    }
  }
  std::fill(seen.begin(), seen.end(), -1);
  for (int b = 0; b < n; ++b) {
    for (int a = 0; a < n; ++a) {
      Element c = table[a][b];
      if (seen[c] == b)
        throw InvalidArgument("column " + std::to_string(b) +
                              " repeats element " + std::to_string(c));
      seen[c] = b;
    }
  }

  // Light's associativity test: with A generating the magma, the operation
  // is associative iff (x a) y = x (a y) for all x, y and every a in A.
  std::vector<Element> magma_gens;
  {
    std::vector<char> in(n, 0);
    std::vector<Element> members;
    auto add = [&](Element e) {
      std::vector<Element> work{e};
      in[e] = 1;
      members.push_back(e);
      while (!work.empty()) {
        Element u = work.back();
        work.pop_back();
        const std::size_t count = members.size();
        for (std::size_t i = 0; i < count; ++i) {
          Element v = members[i];
          for (Element w : {table[u][v], table[v][u]}) {
            if (!in[w]) {
              in[w] = 1;
              members.push_back(w);
              work.push_back(w);
            }
          }
        }
      }
    };
    for (Element e = 0; e < n; ++e) {
      if (!in[e]) {
        magma_gens.push_back(e);
        add(e);
      }
    }
  }
  for (Element a : magma_gens) {
    for (Element x = 0; x < n; ++x) {
      const Element xa = table[x][a];
      for (Element y = 0; y < n; ++y) {
        if (table[xa][y] != table[x][table[a][y]])
          throw InvalidArgument("associativity fails for triple " +
                                triple_str(x, a, y));
      }
    }
  }

  Group g;
  g.n_ = n;
  g.table_.resize(static_cast<std::size_t>(n) * n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      g.table_[static_cast<std::size_t>(a) * n + b] =
          static_cast<std::int16_t>(table[a][b]);
  g.inv_.assign(n, 0);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      if (table[a][b] == 0) g.inv_[a] = b;
  g.orders_.assign(n, 1);
  for (int a = 1; a < n; ++a) {
    int k = 1;
    Element p = a;
    while (p != 0) {
      p = table[p][a];
      ++k;
    }
    g.orders_[a] = k;
  }
  for (int a = 0; a < n && g.abelian_; ++a)
    for (int b = a + 1; b < n; ++b)
      if (table[a][b] != table[b][a]) {
        g.abelian_ = false;
        break;
      }
  if (names.empty()) {
    names.resize(n);
    for (int a = 0; a < n; ++a) names[a] = a == 0 ? "1" : "g" + std::to_string(a);
  }
  if (static_cast<int>(names.size()) != n)
    throw InvalidArgument("expected " + std::to_string(n) + " element names, got " +
                          std::to_string(names.size()));
  g.names_ = std::move(names);
  g.descriptor_ = std::move(descriptor);
  return g;
}

void Group::check(Element a) const {
  if (a < 0 || a >= n_)
    throw InvalidArgument("element index " + std::to_string(a) +
                          " out of range for group of order " + std::to_string(n_));
}

Element Group::mul(Element a, Element b) const {
  check(a);
  check(b);
  return mul_unchecked(a, b);
}

Element Group::inv(Element a) const {
  check(a);
  return inv_[a];
}

int Group::element_order(Element a) const {
  check(a);
  return orders_[a];
}

Element Group::pow(Element a, long long e) const {
  check(a);
  const long long ord = orders_[a];
  e %= ord;
  if (e < 0) e += ord;
  Element r = 0;
  for (long long i = 0; i < e; ++i) r = mul_unchecked(r, a);
  return r;
}

int Group::exponent() const {
  int e = 1;
  for (int o : orders_) e = std::lcm(e, o);
  return e;
}

std::vector<int> Group::element_order_multiset() const {
  std::vector<int> v = orders_;
  std::sort(v.begin(), v.end());
  return v;
}

const std::string& Group::name(Element a) const {
  check(a);
  return names_[a];
}

std::vector<std::vector<Element>> Group::table() const {
  std::vector<std::vector<Element>> t(n_, std::vector<Element>(n_));
  for (int a = 0; a < n_; ++a)
    for (int b = 0; b < n_; ++b) t[a][b] = mul_unchecked(a, b);
  return t;
}

ElementSet Group::subgroup_generated(std::span<const Element> gens) const {
  for (Element g : gens) check(g);
  ElementSet in;
  in.insert(0);
  std::vector<Element> members{0};
  for (std::size_t i = 0; i < members.size(); ++i) {
    for (Element g : gens) {
      Element p = mul_unchecked(members[i], g);
      if (!in.contains(p)) {
        in.insert(p);
        members.push_back(p);
      }
    }
  }
  return in;
}

ElementSet Group::subgroup_generated(const ElementSet& gens) const {
  const auto v = gens.to_vector();
  return subgroup_generated(std::span<const Element>(v));
}

bool Group::generates(std::span<const Element> gens) const {
  return subgroup_generated(gens).size() == n_;
}

ElementSet Group::inverse_set(const ElementSet& s) const {
  ElementSet r;
  s.for_each([&](Element e) {
    check(e);
    r.insert(inv_[e]);
  });
  return r;
}

ElementSet Group::left_translate(Element a, const ElementSet& s) const {
  check(a);
  ElementSet r;
  s.for_each([&](Element e) {
    check(e);
    r.insert(mul_unchecked(a, e));
  });
  return r;
}

ElementSet Group::right_translate(const ElementSet& s, Element a) const {
  check(a);
  ElementSet r;
  s.for_each([&](Element e) {
    check(e);
    r.insert(mul_unchecked(e, a));
  });
  return r;
}

}  // namespace mhgr
