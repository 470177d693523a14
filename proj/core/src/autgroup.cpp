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

#include "mhgr/autgroup.hpp"

#include <algorithm>
#include <cstdlib>
#include <deque>
#include <map>
#include <numeric>

#include "mhgr/error.hpp"

namespace mhgr {

int max_vertices() {
  if (const char* env = std::getenv("MHGR_MAX_VERTICES")) {
    char* end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && v > 0 && v <= 1'000'000) return static_cast<int>(v);
  }
  return kDefaultMaxVertices;
}

int AutResult::num_orbits() const {
  int c = 0;
  for (std::size_t v = 0; v < orbit.size(); ++v)
    if (orbit[v] == static_cast<int>(v)) ++c;
  return c;
}

std::vector<std::vector<int>> AutResult::orbits() const {
  std::map<int, std::vector<int>> by_rep;
  for (std::size_t v = 0; v < orbit.size(); ++v) by_rep[orbit[v]].push_back(static_cast<int>(v));
  std::vector<std::vector<int>> out;
  for (auto& [rep, members] : by_rep) out.push_back(std::move(members));
  return out;
}

BigInt AutResult::stabilizer_order(int v) const {
  if (v < 0 || v >= static_cast<int>(orbit.size()))
    throw InvalidArgument("vertex out of range");
  const auto size = std::count(orbit.begin(), orbit.end(), orbit[v]);
  return order / static_cast<unsigned long long>(size);
}

namespace {

// Ordered partition of the vertex set. A cell is identified by the position
// of its first element; cell_end is only meaningful at cell starts.
struct Partition {
  std::vector<int> elems;
  std::vector<int> pos;
  std::vector<int> cell;
  std::vector<int> cell_end;
  int num_cells = 0;

  bool discrete() const { return num_cells == static_cast<int>(elems.size()); }
};

using Trace = std::vector<std::uint64_t>;

std::uint64_t mix(std::uint64_t h, std::uint64_t x) {
  h ^= x + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  return h * 0xff51afd7ed558ccdULL;
}

struct Level {
  Partition before;        // partition at this level, prior to individualizing
  int target = 0;          // start position of the target cell
  std::vector<int> cell;   // target cell members, ascending
  int v = 0;               // vertex individualized on the first path
  Trace trace;             // refinement trace after individualizing v
};

class Engine {
 public:
  Engine(const Graph& g, const AutOptions& opts) : g_(g), opts_(opts), n_(g.num_vertices()) {
    cnt_.assign(n_, 0);
    in_queue_.assign(n_, 0);
  }

  AutResult run();

 private:
  Partition initial_partition(std::vector<int>& starts) const;
  bool refine(Partition& p, std::deque<int> queue, Trace* record, const Trace* expect);
  void individualize(Partition& p, int v, std::deque<int>& queue) const;
  static int target_cell(const Partition& p);
  bool search_from(int level, int w, Perm& found);
  bool dfs(const Partition& p, int level, Perm& found);

  const Graph& g_;
  const AutOptions& opts_;
  int n_;
  std::vector<int> cnt_;
  std::vector<char> in_queue_;
  std::vector<int> touched_;
  std::vector<int> buffer_;
  std::vector<std::pair<std::size_t, std::size_t>> groups_;
  std::vector<Level> levels_;
  std::vector<int> first_leaf_;
  long long nodes_ = 0;
};

Partition Engine::initial_partition(std::vector<int>& starts) const {
  std::vector<long long> key(n_, 0);
  if (!opts_.colors.empty()) {
    if (static_cast<int>(opts_.colors.size()) != n_)
      throw InvalidArgument("color vector length differs from the vertex count");
    for (int v = 0; v < n_; ++v) key[v] = static_cast<long long>(opts_.colors[v]) * (n_ + 1);
  }
  for (std::size_t i = 0; i < opts_.fixed.size(); ++i) {
    const int v = opts_.fixed[i];
    if (v < 0 || v >= n_) throw InvalidArgument("fixed vertex out of range");
    key[v] += static_cast<long long>(i) + 1;
  }
  Partition p;
  p.elems.resize(n_);
  std::iota(p.elems.begin(), p.elems.end(), 0);
  std::stable_sort(p.elems.begin(), p.elems.end(), [&](int a, int b) { return key[a] < key[b]; });
  p.pos.resize(n_);
  p.cell.resize(n_);
  p.cell_end.assign(n_, 0);
  int start = 0;
  for (int i = 0; i < n_; ++i) {
    if (i > 0 && key[p.elems[i]] != key[p.elems[i - 1]]) {
      p.cell_end[start] = i;
      starts.push_back(start);
      start = i;
      ++p.num_cells;
    }
    p.pos[p.elems[i]] = i;
    p.cell[p.elems[i]] = start;
  }
  if (n_ > 0) {
    p.cell_end[start] = n_;
    starts.push_back(start);
    ++p.num_cells;
  }
  return p;
}

void Engine::individualize(Partition& p, int v, std::deque<int>& queue) const {
  const int s = p.cell[v];
  const int e = p.cell_end[s];
  const int pv = p.pos[v];
  std::swap(p.elems[s], p.elems[pv]);
  p.pos[p.elems[pv]] = pv;
  p.pos[v] = s;
  if (e - s > 1) {
    p.cell_end[s] = s + 1;
    p.cell_end[s + 1] = e;
    for (int i = s + 1; i < e; ++i) p.cell[p.elems[i]] = s + 1;
    ++p.num_cells;
  }
  queue.push_back(s);
}

int Engine::target_cell(const Partition& p) {
  int best = -1, best_size = 0;
  const int n = static_cast<int>(p.elems.size());
  for (int s = 0; s < n; s = p.cell_end[s]) {
    const int size = p.cell_end[s] - s;
    if (size > 1 && (best < 0 || size < best_size)) {
      best = s;
      best_size = size;
    }
  }
  return best;
}

// Equitable refinement. Returns false as soon as the event sequence departs
// from `expect`. Events depend only on isomorphism-invariant data (cell
// positions, fragment sizes, neighbor counts).
bool Engine::refine(Partition& p, std::deque<int> queue, Trace* record, const Trace* expect) {
  std::size_t ev = 0;
  bool ok = true;
  auto emit = [&](std::uint64_t h) {
    if (record) record->push_back(h);
    if (expect) {
      if (ev >= expect->size() || (*expect)[ev] != h) ok = false;
    }
    ++ev;
  };
  for (int s : queue) in_queue_[s] = 1;

  while (ok && !queue.empty() && !p.discrete()) {
    const int s = queue.front();
    queue.pop_front();
    in_queue_[s] = 0;
    const int e = p.cell_end[s];
    touched_.clear();
    for (int i = s; i < e; ++i)
      for (int y : g_.neighbors(p.elems[i]))
        if (cnt_[y]++ == 0) touched_.push_back(y);
    std::sort(touched_.begin(), touched_.end(), [&](int a, int b) {
      return p.cell[a] != p.cell[b] ? p.cell[a] < p.cell[b] : cnt_[a] < cnt_[b];
    });

    // Group boundaries are fixed before any cell is split.
    groups_.clear();
    for (std::size_t lo = 0; lo < touched_.size();) {
      std::size_t hi = lo;
      while (hi < touched_.size() && p.cell[touched_[hi]] == p.cell[touched_[lo]]) ++hi;
      groups_.emplace_back(lo, hi);
      lo = hi;
    }
    for (auto [lo, hi] : groups_) {
      if (!ok) break;
      const int cs = p.cell[touched_[lo]];
      const int ce = p.cell_end[cs];
      const int size = ce - cs;
      const int k = static_cast<int>(hi - lo);
      if (size == 1 || (k == size && cnt_[touched_[lo]] == cnt_[touched_[hi - 1]])) continue;
      buffer_.clear();
      if (k < size)
        for (int i = cs; i < ce; ++i)
          if (cnt_[p.elems[i]] == 0) buffer_.push_back(p.elems[i]);
      for (std::size_t t = lo; t < hi; ++t) buffer_.push_back(touched_[t]);

      std::uint64_t h = mix(mix(0x51ed27, static_cast<std::uint64_t>(cs)),
                            static_cast<std::uint64_t>(size));
      int frag_start = cs, largest_start = cs, largest_size = 0, frags = 0;
      const bool was_queued = in_queue_[cs] != 0;
      std::vector<int> frag_starts;
      for (int i = 0; i < size; ++i) {
        const int v = buffer_[i];
        p.elems[cs + i] = v;
        p.pos[v] = cs + i;
        const bool boundary = i + 1 == size || cnt_[buffer_[i + 1]] != cnt_[v];
        if (boundary) {
          const int fe = cs + i + 1;
          p.cell_end[frag_start] = fe;
          for (int j = frag_start; j < fe; ++j) p.cell[p.elems[j]] = frag_start;
          h = mix(mix(h, static_cast<std::uint64_t>(cnt_[v])),
                  static_cast<std::uint64_t>(fe - frag_start));
          if (fe - frag_start > largest_size) {
            largest_size = fe - frag_start;
            largest_start = frag_start;
          }
          frag_starts.push_back(frag_start);
          ++frags;
          frag_start = fe;
        }
      }
      p.num_cells += frags - 1;
      for (int fs : frag_starts) {
        if (was_queued ? fs == cs : fs == largest_start) continue;
        if (!in_queue_[fs]) {
          in_queue_[fs] = 1;
          queue.push_back(fs);
        }
      }
      emit(h);
    }
    for (int y : touched_) cnt_[y] = 0;
  }
  for (int s : queue) in_queue_[s] = 0;
  emit(mix(0xc0ffee, static_cast<std::uint64_t>(p.num_cells)));
  if (expect && ev != expect->size()) ok = false;
  return ok;
}

bool Engine::dfs(const Partition& p, int level, Perm& found) {
  ++nodes_;
  if (level == static_cast<int>(levels_.size())) {
    if (!p.discrete()) return false;
    Perm perm(n_);
    for (int i = 0; i < n_; ++i) perm[first_leaf_[i]] = p.elems[i];
    if (!g_.is_automorphism(perm)) return false;
    found = std::move(perm);
    return true;
  }
  const int t = target_cell(p);
  if (t != levels_[level].target) return false;
  std::vector<int> members(p.elems.begin() + t, p.elems.begin() + p.cell_end[t]);
  std::sort(members.begin(), members.end());
  for (int u : members) {
    Partition child = p;
    std::deque<int> q;
    individualize(child, u, q);
    if (!refine(child, std::move(q), nullptr, &levels_[level].trace)) continue;
    if (dfs(child, level + 1, found)) return true;
  }
  return false;
}

bool Engine::search_from(int level, int w, Perm& found) {
  ++nodes_;
  Partition child = levels_[level].before;
  std::deque<int> q;
  individualize(child, w, q);
  if (!refine(child, std::move(q), nullptr, &levels_[level].trace)) return false;
  return dfs(child, level + 1, found);
}

AutResult Engine::run() {
  AutResult res;
  if (n_ > max_vertices())
    throw CapacityError("graph has " + std::to_string(n_) + " vertices; the automorphism engine cap is " +
                        std::to_string(max_vertices()) + " (set MHGR_MAX_VERTICES to raise it)");
  res.orbit.resize(n_);
  std::iota(res.orbit.begin(), res.orbit.end(), 0);
  if (n_ == 0) return res;

  std::vector<int> starts;
  Partition p = initial_partition(starts);
  refine(p, std::deque<int>(starts.begin(), starts.end()), nullptr, nullptr);
  while (!p.discrete()) {
    Level lv;
    lv.before = p;
    lv.target = target_cell(p);
    lv.cell.assign(p.elems.begin() + lv.target, p.elems.begin() + p.cell_end[lv.target]);
    std::sort(lv.cell.begin(), lv.cell.end());
    lv.v = lv.cell.front();
    std::deque<int> q;
    individualize(p, lv.v, q);
    refine(p, std::move(q), &lv.trace, nullptr);
    levels_.push_back(std::move(lv));
  }
  first_leaf_ = p.elems;
  const int depth = static_cast<int>(levels_.size());
  for (const Level& lv : levels_) res.base.push_back(lv.v);

  // Known automorphisms: verify and sort by how many leading base points
  // they fix.
  std::vector<std::vector<const Perm*>> known_by_depth(depth + 1);
  for (const Perm& k : opts_.known) {
    if (!g_.is_automorphism(k))
      throw InvalidArgument("a supplied known permutation is not an automorphism");
    bool respects = true;
    if (!opts_.colors.empty())
      for (int v = 0; v < n_ && respects; ++v) respects = opts_.colors[k[v]] == opts_.colors[v];
    for (int f : opts_.fixed) respects = respects && k[f] == f;
    if (!respects || is_identity(k)) continue;
    int d = 0;
    while (d < depth && k[levels_[d].v] == levels_[d].v) ++d;
    known_by_depth[d].push_back(&k);
    res.generators.push_back(k);
  }

  std::vector<int> parent(n_);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  auto absorb = [&](const Perm& g) {
    for (int i = 0; i < n_; ++i) {
      int a = find(i), b = find(g[i]);
      if (a != b) parent[std::max(a, b)] = std::min(a, b);
    }
  };

  res.base_orbit_sizes.assign(depth, 1);
  for (int l = depth - 1; l >= 0; --l) {
    for (const Perm* k : known_by_depth[l]) absorb(*k);
    const Level& lv = levels_[l];
    std::vector<int> failed;
    for (int w : lv.cell) {
      if (w == lv.v || find(w) == find(lv.v)) continue;
      const int rw = find(w);
      if (std::any_of(failed.begin(), failed.end(), [&](int f) { return find(f) == rw; })) continue;
      Perm found;
      if (search_from(l, w, found)) {
        absorb(found);
        res.generators.push_back(std::move(found));
        if (opts_.stop_on_new) {
          res.stopped_early = true;
          res.order = 0;
          res.nodes = nodes_;
          res.orbit = orbit_labels(n_, res.generators);
          return res;
        }
      } else {
        failed.push_back(w);
      }
    }
    const int rv = find(lv.v);
    res.base_orbit_sizes[l] = static_cast<int>(
        std::count_if(lv.cell.begin(), lv.cell.end(), [&](int u) { return find(u) == rv; }));
  }
  res.order = 1;
  for (int s : res.base_orbit_sizes) res.order *= s;
  res.orbit = orbit_labels(n_, res.generators);
  res.nodes = nodes_;
  return res;
}

}  // namespace

AutResult automorphisms(const Graph& g, const AutOptions& opts) {
  Engine e(g, opts);
  return e.run();
}

BigInt brute_force_aut_order(const Graph& g) {
  const int n = g.num_vertices();
  if (n > 9) throw CapacityError("brute-force automorphism count is limited to 9 vertices");
  Perm p = identity_perm(n);
  BigInt count = 0;
  do {
    if (g.is_automorphism(p)) ++count;
  } while (std::next_permutation(p.begin(), p.end()));
  return count;
}

namespace {

AutResult graph_automorphisms(const ConnectionMatrix& cm, const LabeledGraph& lg, bool stop_on_new) {
  AutOptions opts;
  const auto gens = greedy_generating_set(cm.group());
  opts.known = right_translations(cm.group(), cm.m(), gens);
  opts.stop_on_new = stop_on_new;
  return automorphisms(lg.graph, opts);
}

Verdict verdict_for(const ConnectionMatrix& cm, bool need_regular) {
  Verdict v;
  const LabeledGraph lg = build_graph(cm);
  const AutResult aut = graph_automorphisms(cm, lg, false);
  v.group_order = cm.group().order();
  v.aut_order = aut.order;
  v.regular = lg.graph.regular_degree().has_value();
  v.diagonal_empty = cm.diagonal_empty();
  v.orbits_are_parts = true;
  for (int x = 0; x < lg.graph.num_vertices(); ++x)
    if (aut.orbit[x] != lg.part(x) * lg.group_order) v.orbits_are_parts = false;

  const HaarCheck haar = is_m_haar(cm);
  if (need_regular && !haar.ok) {
    v.reason = "not m-Haar: " + haar.reason;
  } else if (!v.diagonal_empty) {
    v.reason = "a diagonal set is nonempty";
  } else if (v.aut_order != v.group_order) {
    v.reason = "|Aut| = " + v.aut_order.str() + " differs from |G| = " + std::to_string(v.group_order);
  } else if (!v.orbits_are_parts) {
    v.reason = "automorphism orbits differ from the parts";
  } else {
    v.holds = true;
  }
  return v;
}

}  // namespace

Verdict is_m_hgr(const ConnectionMatrix& cm) { return verdict_for(cm, true); }

Verdict is_m_pgsr(const ConnectionMatrix& cm) { return verdict_for(cm, false); }

bool aut_equals_group(const ConnectionMatrix& cm, const LabeledGraph& lg) {
  const AutResult aut = graph_automorphisms(cm, lg, true);
  return !aut.stopped_early && aut.order == cm.group().order();
}

bool stabilizer_fixes_neighborhood(const Graph& g, int v) {
  if (v < 0 || v >= g.num_vertices()) throw InvalidArgument("vertex out of range");
  AutOptions opts;
  opts.fixed = {v};
  const AutResult stab = automorphisms(g, opts);
  for (const Perm& s : stab.generators)
    for (int u : g.neighbors(v))
      if (s[u] != u) return false;
  return true;
}

}  // namespace mhgr
