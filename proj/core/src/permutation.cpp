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

#include "mhgr/permutation.hpp"

#include <numeric>

#include "mhgr/error.hpp"

namespace mhgr {

Perm identity_perm(int n) {
  Perm p(n);
  std::iota(p.begin(), p.end(), 0);
  return p;
}

Perm compose(const Perm& a, const Perm& b) {
  Perm c(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) c[i] = b[a[i]];
  return c;
}

Perm inverse(const Perm& p) {
  Perm q(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) q[p[i]] = static_cast<int>(i);
  return q;
}

bool is_identity(const Perm& p) {
  for (std::size_t i = 0; i < p.size(); ++i)
    if (p[i] != static_cast<int>(i)) return false;
  return true;
}

bool is_permutation(const Perm& p) {
  std::vector<char> seen(p.size(), 0);
  for (int x : p) {
    if (x < 0 || x >= static_cast<int>(p.size()) || seen[x]) return false;
    seen[x] = 1;
  }
  return true;
}

std::vector<int> orbit_labels(int n, const std::vector<Perm>& gens) {
  std::vector<int> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (const Perm& g : gens)
    for (int i = 0; i < n; ++i) {
      int a = find(i), b = find(g[i]);
      if (a != b) parent[std::max(a, b)] = std::min(a, b);
    }
  std::vector<int> label(n);
  for (int i = 0; i < n; ++i) label[i] = find(i);
  return label;
}

namespace {

// One level of a stabilizer chain: base point, strong generators fixing all
// earlier base points, and a transversal (coset representatives) for the
// orbit of the base point.
struct Level {
  int base;
  std::vector<Perm> gens;
  std::vector<int> orbit;
  std::vector<Perm> transversal;  // indexed by point; empty when not in orbit
};

class SchreierSims {
 public:
  explicit SchreierSims(int n) : n_(n) {}

  void add_generator(const Perm& g) {
    if (static_cast<int>(g.size()) != n_ || !is_permutation(g))
      throw InvalidArgument("generator is not a permutation of the right degree");
    if (!is_identity(g)) insert(g, 0);
  }

  BigInt order() const {
    BigInt r = 1;
    for (const Level& l : levels_) r *= static_cast<unsigned>(l.orbit.size());
    return r;
  }

 private:
  // Returns the residue after sifting g through levels starting at `from`,
  // and the level at which sifting stopped.
  std::pair<Perm, std::size_t> sift(Perm g, std::size_t from) const {
    for (std::size_t l = from; l < levels_.size(); ++l) {
      const int b = g[levels_[l].base];
      if (levels_[l].transversal[b].empty()) return {g, l};
      g = compose(g, inverse(levels_[l].transversal[b]));
    }
    return {g, levels_.size()};
  }

  void insert(const Perm& g, std::size_t level) {
    auto [h, stop] = sift(g, level);
    if (is_identity(h)) return;
    if (stop == levels_.size()) {
      int moved = 0;
      while (h[moved] == moved) ++moved;
      Level nl;
      nl.base = moved;
      nl.transversal.assign(n_, Perm());
      nl.transversal[moved] = identity_perm(n_);
      nl.orbit.push_back(moved);
      levels_.push_back(std::move(nl));
    }
    // h fixes the base points of levels < stop; add it as a strong generator
    // of level `stop` and of every level between, then extend orbits.
    for (std::size_t l = level; l <= stop; ++l) levels_[l].gens.push_back(h);
    for (std::size_t l = stop + 1; l-- > level;) extend_orbit(l);
  }

  void extend_orbit(std::size_t l) {
    // Breadth-first orbit closure; every new Schreier generator is sifted
    // into the next level.
    // Indexing only: recursive inserts may grow levels_.
    for (std::size_t i = 0; i < levels_[l].orbit.size(); ++i) {
      const int p = levels_[l].orbit[i];
      for (std::size_t gi = 0; gi < levels_[l].gens.size(); ++gi) {
        const Perm s = levels_[l].gens[gi];
        const int q = s[p];
        Perm tq = compose(levels_[l].transversal[p], s);
        if (levels_[l].transversal[q].empty()) {
          levels_[l].transversal[q] = tq;
          levels_[l].orbit.push_back(q);
        } else {
          Perm schreier = compose(tq, inverse(levels_[l].transversal[q]));
          if (!is_identity(schreier)) insert(schreier, l + 1);
        }
      }
    }
  }

  int n_;
  std::vector<Level> levels_;
};

}  // namespace

BigInt schreier_sims_order(int n, const std::vector<Perm>& gens) {
  SchreierSims ss(n);
  for (const Perm& g : gens) ss.add_generator(g);
  return ss.order();
}

}  // namespace mhgr
