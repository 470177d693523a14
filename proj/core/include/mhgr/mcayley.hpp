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

#ifndef MHGR_MCAYLEY_HPP_
#define MHGR_MCAYLEY_HPP_

#include <memory>
#include <string>
#include <vector>

#include "mhgr/element_set.hpp"
#include "mhgr/graph.hpp"
#include "mhgr/group.hpp"

namespace mhgr {

// Part indices in the C++ API are 0-based; serialized forms use 1-based.
struct MatrixEntry {
  int i;
  int j;
  ElementSet elems;
};

class ConnectionMatrix {
 public:
  ConnectionMatrix(std::shared_ptr<const Group> group, int m);

  // Upper entries need i < j; diagonal entries i == j must avoid the identity
  // and be inverse-closed. Lower triangle is filled with inverses.
  static ConnectionMatrix from_entries(std::shared_ptr<const Group> group, int m,
                                       const std::vector<MatrixEntry>& upper,
                                       const std::vector<MatrixEntry>& diagonal = {});

  const Group& group() const { return *group_; }
  const std::shared_ptr<const Group>& group_ptr() const { return group_; }
  int m() const { return m_; }

  const ElementSet& at(int i, int j) const { return sets_[index(i, j)]; }
  // Sets T_ij and T_ji = T_ij^-1.
  void set(int i, int j, const ElementSet& s);

  int valency(int part) const;
  std::vector<int> valencies() const;
  bool diagonal_empty() const;

  // Nonempty entries with i <= j, row-major.
  std::vector<MatrixEntry> upper_entries() const;

  friend bool operator==(const ConnectionMatrix& a, const ConnectionMatrix& b) {
    return *a.group_ == *b.group_ && a.m_ == b.m_ && a.sets_ == b.sets_;
  }

 private:
  std::size_t index(int i, int j) const;

  std::shared_ptr<const Group> group_;
  int m_;
  std::vector<ElementSet> sets_;
};

// Graph on vertices (g, i) with index i*|G| + g; parts are contiguous.
struct LabeledGraph {
  Graph graph;
  int group_order = 0;
  int parts = 0;

  int vertex(Element g, int part) const { return part * group_order + g; }
  int part(int v) const { return v / group_order; }
  Element element(int v) const { return v % group_order; }
};

// Edge set {g_i, (t g)_j : g in G, t in T_ij}.
LabeledGraph build_graph(const ConnectionMatrix& cm);

struct HaarCheck {
  bool ok = false;
  std::string reason;  // first violated condition, empty when ok
};
// Every diagonal set empty and all part valencies equal.
HaarCheck is_m_haar(const ConnectionMatrix& cm);

// (x, i) -> (x g, i).
Perm right_translation(const Group& group, int m, Element g);
std::vector<Perm> right_translations(const Group& group, int m, std::span<const Element> gens);

}  // namespace mhgr

#endif  // MHGR_MCAYLEY_HPP_
