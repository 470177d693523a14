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

#ifndef MHGR_GROUP_HPP_
#define MHGR_GROUP_HPP_

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "mhgr/element_set.hpp"

namespace mhgr {

// Structured family tag. Renders to the command-line grammar
// ("C6", "C2^3", "D6", "A4", "Q8", "X27", "C2^4xC3").
struct GroupDescriptor {
  enum class Family {
    kCyclic,          // n
    kElemAbelian,     // p, k
    kDihedral,        // n is the ORDER of the group
    kAlternating4,
    kQuaternion8,
    kExtraspecial27,  // nonabelian, order 27, exponent 3
    kProduct,         // factors
    kCustom,
  };

  Family family = Family::kCustom;
  int n = 0;
  int p = 0;
  int k = 0;
  std::vector<GroupDescriptor> factors;

  static GroupDescriptor cyclic(int n) { return {Family::kCyclic, n, 0, 0, {}}; }
  static GroupDescriptor elem_abelian(int p, int k) {
    return {Family::kElemAbelian, 0, p, k, {}};
  }
  static GroupDescriptor dihedral(int order) { return {Family::kDihedral, order, 0, 0, {}}; }
  static GroupDescriptor alternating4() { return {Family::kAlternating4, 0, 0, 0, {}}; }
  static GroupDescriptor quaternion8() { return {Family::kQuaternion8, 0, 0, 0, {}}; }
  static GroupDescriptor extraspecial27() { return {Family::kExtraspecial27, 0, 0, 0, {}}; }
  static GroupDescriptor product(std::vector<GroupDescriptor> f) {
    return {Family::kProduct, 0, 0, 0, std::move(f)};
  }
  static GroupDescriptor custom() { return {}; }

  bool is_custom() const;
  std::string to_string() const;
  friend bool operator==(const GroupDescriptor&, const GroupDescriptor&) = default;
};

// A finite group given by its multiplication table. Element 0 is the
// identity. Immutable once constructed; every constructor path goes through
// from_table, which validates the group axioms.
class Group {
 public:
  // Validates: identity at index 0, Latin-square rows and columns, and
  // associativity (Light's test over a generating set of the magma, which is
  // equivalent to the full triple sweep). Throws InvalidArgument naming the
  // offending entry or triple.
  static Group from_table(std::vector<std::vector<Element>> table,
                          std::vector<std::string> names = {},
                          GroupDescriptor descriptor = GroupDescriptor::custom());

  int order() const { return n_; }
  Element identity() const { return 0; }

  Element mul(Element a, Element b) const;
  Element inv(Element a) const;
  int element_order(Element a) const;
  Element pow(Element a, long long e) const;

  // Unchecked table access for hot loops.
  Element mul_unchecked(Element a, Element b) const {
    return table_[static_cast<std::size_t>(a) * n_ + b];
  }
  Element inv_unchecked(Element a) const { return inv_[a]; }

  bool is_abelian() const { return abelian_; }
  int exponent() const;
  // Sorted element orders, one entry per element.
  std::vector<int> element_order_multiset() const;

  const std::string& name(Element a) const;
  const std::vector<std::string>& names() const { return names_; }
  const GroupDescriptor& descriptor() const { return descriptor_; }
  std::vector<std::vector<Element>> table() const;

  // Closure of gens together with the identity.
  ElementSet subgroup_generated(std::span<const Element> gens) const;
  ElementSet subgroup_generated(const ElementSet& gens) const;
  bool generates(std::span<const Element> gens) const;

  ElementSet inverse_set(const ElementSet& s) const;
  ElementSet left_translate(Element a, const ElementSet& s) const;   // a*s
  ElementSet right_translate(const ElementSet& s, Element a) const;  // s*a

  void check(Element a) const;

  friend bool operator==(const Group& a, const Group& b) {
    return a.n_ == b.n_ && a.table_ == b.table_;
  }

 private:
  Group() = default;

  int n_ = 0;
  std::vector<std::int16_t> table_;
  std::vector<Element> inv_;
  std::vector<int> orders_;
  std::vector<std::string> names_;
  GroupDescriptor descriptor_;
  bool abelian_ = true;
};

// ---- Families -------------------------------------------------------------

// Z/nZ; element i is x^i with the generator x at index 1.
Group cyclic(int n);
// C_p^k as lexicographic tuples, first coordinate most significant.
Group elementary_abelian(int p, int k);
// Dihedral group of ORDER n (n even, n >= 6). Element x^i y^j sits at index
// i + (n/2) j, with x the rotation of order n/2 and y a reflection.
Group dihedral(int order);
// Even permutations of {0,1,2,3}, identity first, then lexicographic.
Group alternating4();
// {1,i,j,k,-1,-i,-j,-k} in that order.
Group quaternion8();
// Heisenberg group mod 3: triples (a,b,c) with
// (a,b,c)(a',b',c') = (a+a', b+b', c+c'+ab'), lexicographic order.
Group extraspecial27();
// Direct product on lexicographic tuples, first factor most significant.
Group direct_product(std::span<const Group> factors);

// Builds the group a descriptor names. Rejects odd or small dihedral orders
// and custom descriptors.
Group standard_family(const GroupDescriptor& d);

// ---- Generating sets ------------------------------------------------------

inline constexpr int kMaxGeneratingSetSize = 6;

struct GeneratingSet {
  std::vector<Element> elements;
  int size() const { return static_cast<int>(elements.size()); }
};

// d(G). Exhaustive search over increasing tuples with closure pruning.
// Throws CapacityError above kMaxGroupOrder or when d(G) > 6.
int minimal_generating_size(const Group& g);

// A generating set of size d(G). Unless G is an elementary abelian 2-group,
// the first element has order >= 3: an element of order >= 3 is moved to the
// front, or, if all are involutions, the first pair h_i, h_j with
// |h_i h_j| >= 3 has h_i replaced by h_i h_j (which preserves generation).
GeneratingSet minimal_generating_set(const Group& g);

bool is_elementary_abelian_2group(const Group& g);

// Generating pair {x, y} with |x| >= 4, first in index order. Throws NotFound
// when none exists (C2^2, C3^2, D6, A4, the extraspecial group of order 27,
// and anything that is not 2-generated).
std::pair<Element, Element> pair_with_order_ge4(const Group& g);

// Generating triple with |x| >= 3 for d(G) = 3. Throws NotFound for C2^3 and
// InvalidArgument when d(G) != 3.
std::array<Element, 3> triple_with_order_ge3(const Group& g);

// A small (not necessarily minimal) generating set: greedily adds the least
// element outside the current subgroup.
std::vector<Element> greedy_generating_set(const Group& g);

// ---- The twelve small groups handled by explicit constructions ------------

enum class SmallGroup {
  kC1, kC2, kC3, kC4, kC5, kC6,
  kC2x2,   // C2^2
  kC2x3,   // C2^3
  kC3x2,   // C3^2
  kD6,
  kA4,
  kX27,    // extraspecial 3^{1+2}_+
};

inline constexpr std::array<SmallGroup, 12> kAllSmallGroups = {
    SmallGroup::kC1,   SmallGroup::kC2,   SmallGroup::kC3,   SmallGroup::kC4,
    SmallGroup::kC5,   SmallGroup::kC6,   SmallGroup::kC2x2, SmallGroup::kC2x3,
    SmallGroup::kC3x2, SmallGroup::kD6,   SmallGroup::kA4,   SmallGroup::kX27};

std::string to_string(SmallGroup s);
Group make_small_group(SmallGroup s);

// Identifies membership in the twelve-group set by (order, abelian, sorted
// element orders). Within each order that occurs in the set this triple
// separates the member from every other group of that order.
std::optional<SmallGroup> identify_small_group(const Group& g);

}  // namespace mhgr

#endif  // MHGR_GROUP_HPP_
