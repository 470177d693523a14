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

#include "mhgr/mcayley.hpp"

#include "mhgr/error.hpp"

namespace mhgr {

ConnectionMatrix::ConnectionMatrix(std::shared_ptr<const Group> group, int m)
    : group_(std::move(group)), m_(m) {
  if (!group_) throw InvalidArgument("connection matrix needs a group");
  if (m < 1) throw InvalidArgument("connection matrix needs m >= 1, got " + std::to_string(m));
  sets_.assign(static_cast<std::size_t>(m) * m, ElementSet{});
}

std::size_t ConnectionMatrix::index(int i, int j) const {
  if (i < 0 || j < 0 || i >= m_ || j >= m_)
    throw InvalidArgument("part index (" + std::to_string(i + 1) + ", " + std::to_string(j + 1) +
                          ") out of range for m = " + std::to_string(m_));
  return static_cast<std::size_t>(i) * m_ + j;
}

void ConnectionMatrix::set(int i, int j, const ElementSet& s) {
  const std::size_t ij = index(i, j);
  s.for_each([&](Element e) { group_->check(e); });
  const ElementSet inv = group_->inverse_set(s);
  if (i == j) {
    if (s.contains(0))
      throw InvalidArgument("identity in diagonal set T_" + std::to_string(i + 1) + "," +
                            std::to_string(i + 1));
    if (inv != s)
      throw InvalidArgument("diagonal set T_" + std::to_string(i + 1) + "," +
                            std::to_string(i + 1) + " is not inverse-closed");
  }
  sets_[ij] = s;
  sets_[index(j, i)] = inv;
}

ConnectionMatrix ConnectionMatrix::from_entries(std::shared_ptr<const Group> group, int m,
                                                const std::vector<MatrixEntry>& upper,
                                                const std::vector<MatrixEntry>& diagonal) {
  ConnectionMatrix cm(std::move(group), m);
  for (const auto& e : upper) {
    if (e.i >= e.j)
      throw InvalidArgument("upper entry (" + std::to_string(e.i + 1) + ", " +
                            std::to_string(e.j + 1) + ") needs i < j");
    cm.set(e.i, e.j, e.elems);
  }
  for (const auto& e : diagonal) {
    if (e.i != e.j) throw InvalidArgument("diagonal entry needs i == j");
    cm.set(e.i, e.j, e.elems);
  }
  return cm;
}

int ConnectionMatrix::valency(int part) const {
  int v = 0;
  for (int j = 0; j < m_; ++j) v += at(part, j).size();
  return v;
}

std::vector<int> ConnectionMatrix::valencies() const {
  std::vector<int> v(m_);
  for (int i = 0; i < m_; ++i) v[i] = valency(i);
  return v;
}

bool ConnectionMatrix::diagonal_empty() const {
  for (int i = 0; i < m_; ++i)
    if (!at(i, i).empty()) return false;
  return true;
}

std::vector<MatrixEntry> ConnectionMatrix::upper_entries() const {
  std::vector<MatrixEntry> out;
  for (int i = 0; i < m_; ++i)
    for (int j = i; j < m_; ++j)
      if (!at(i, j).empty()) out.push_back({i, j, at(i, j)});
  return out;
}

LabeledGraph build_graph(const ConnectionMatrix& cm) {
  const Group& g = cm.group();
  const int n = g.order();
  LabeledGraph lg{Graph(n * cm.m()), n, cm.m()};
  // Each edge appears once from T_ij and once from T_ji; visiting i <= j
  // and letting add_edge drop repeats covers both.
  for (int i = 0; i < cm.m(); ++i)
    for (int j = i; j < cm.m(); ++j)
      cm.at(i, j).for_each([&](Element t) {
        for (Element x = 0; x < n; ++x)
          lg.graph.add_edge(lg.vertex(x, i), lg.vertex(g.mul_unchecked(t, x), j));
      });
  return lg;
}

HaarCheck is_m_haar(const ConnectionMatrix& cm) {
  for (int i = 0; i < cm.m(); ++i)
    if (!cm.at(i, i).empty())
      return {false, "diagonal set T_" + std::to_string(i + 1) + "," + std::to_string(i + 1) +
                         " is nonempty"};
  const int v0 = cm.valency(0);
  for (int i = 1; i < cm.m(); ++i)
    if (cm.valency(i) != v0)
      return {false, "part " + std::to_string(i + 1) + " has valency " +
                         std::to_string(cm.valency(i)) + " but part 1 has " +
                         std::to_string(v0)};
  return {true, ""};
}

Perm right_translation(const Group& group, int m, Element g) {
  group.check(g);
  const int n = group.order();
  Perm p(static_cast<std::size_t>(n) * m);
  for (int i = 0; i < m; ++i)
    for (Element x = 0; x < n; ++x) p[i * n + x] = i * n + group.mul_unchecked(x, g);
  return p;
}

std::vector<Perm> right_translations(const Group& group, int m, std::span<const Element> gens) {
  std::vector<Perm> out;
  for (Element g : gens) out.push_back(right_translation(group, m, g));
  return out;
}

}  // namespace mhgr
