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

#include "mhgr/search.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <limits>
#include <thread>

#include "mhgr/autgroup.hpp"
#include "mhgr/error.hpp"
#include "mhgr/group_io.hpp"
#include "mhgr/regular_graphs.hpp"

namespace mhgr {

std::string to_string(SearchMode mode) {
  return mode == SearchMode::kExhaustive ? "exhaustive" : "normalized";
}

namespace {

using Clock = std::chrono::steady_clock;

struct Block {
  int i, j;
};

std::vector<Block> upper_blocks(int m) {
  std::vector<Block> b;
  for (int i = 0; i < m; ++i)
    for (int j = i + 1; j < m; ++j) b.push_back({i, j});
  return b;
}

// A size profile plus the blocks whose sets must contain the identity in
// normalized mode.
struct Profile {
  std::vector<int> sizes;
  std::vector<char> forced;
};

// All size profiles with equal row sums, in lexicographic order of the
// size vector.
std::vector<Profile> regular_profiles(int n, int m, SearchMode mode) {
  const auto blocks = upper_blocks(m);
  const int nb = static_cast<int>(blocks.size());
  // last_block[r]: index of the final block touching row r.
  std::vector<int> last_block(m, -1);
  for (int b = 0; b < nb; ++b) {
    last_block[blocks[b].i] = std::max(last_block[blocks[b].i], b);
    last_block[blocks[b].j] = std::max(last_block[blocks[b].j], b);
  }
  std::vector<Profile> out;
  std::vector<int> sizes(nb, 0), row(m, 0);
  int target = -1;
  auto rec = [&](auto&& self, int b) -> void {
    if (b == nb) {
      Profile p{sizes, std::vector<char>(nb, 0)};
      if (mode == SearchMode::kNormalized) {
        // Breadth-first spanning forest over nonempty blocks.
        std::vector<char> seen(m, 0);
        for (int root = 0; root < m; ++root) {
          if (seen[root]) continue;
          seen[root] = 1;
          std::vector<int> queue{root};
          for (std::size_t q = 0; q < queue.size(); ++q) {
            const int u = queue[q];
            for (int x = 0; x < nb; ++x) {
              if (sizes[x] == 0) continue;
              const int other = blocks[x].i == u ? blocks[x].j : blocks[x].j == u ? blocks[x].i : -1;
              if (other < 0 || seen[other]) continue;
              seen[other] = 1;
              p.forced[x] = 1;
              queue.push_back(other);
            }
          }
        }
      }
      out.push_back(std::move(p));
      return;
    }
    const auto [i, j] = blocks[b];
    for (int s = 0; s <= n; ++s) {
      row[i] += s;
      row[j] += s;
      bool ok = true;
      const int saved = target;
      for (int r : {i, j}) {
        if (target >= 0 && row[r] > target) ok = false;
        if (ok && last_block[r] == b) {
          if (target < 0) target = row[r];
          else if (row[r] != target) ok = false;
        }
      }
      if (ok) {
        sizes[b] = s;
        self(self, b + 1);
      }
      target = saved;
      row[i] -= s;
      row[j] -= s;
      if (target >= 0 && row[i] + s + 1 > target + n) break;
    }
  };
  if (m >= 2) rec(rec, 0);
  return out;
}

double binom(int n, int k) {
  if (k < 0 || k > n) return 0;
  double r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

double profile_count(const Profile& p, int n) {
  double c = 1;
  for (std::size_t b = 0; b < p.sizes.size(); ++b)
    c *= p.forced[b] ? binom(n - 1, p.sizes[b] - 1) : binom(n, p.sizes[b]);
  return c;
}

// Next subset of the same size, in increasing numeric order (Gosper).
std::uint64_t next_subset(std::uint64_t x) {
  const std::uint64_t c = x & (~x + 1);
  const std::uint64_t r = x + c;
  return (((r ^ x) >> 2) / c) | r;
}

struct ProfileResult {
  std::uint64_t regular = 0;
  std::uint64_t examined = 0;
  std::vector<ConnectionMatrix> witnesses;
};

class ProfileWalker {
 public:
  ProfileWalker(std::shared_ptr<const Group> g, int m, const std::vector<Perm>& known,
                bool first_witness)
      : g_(std::move(g)), m_(m), n_(g_->order()), blocks_(upper_blocks(m)), known_(known),
        first_witness_(first_witness) {}

  ProfileResult walk(const Profile& p) {
    res_ = ProfileResult{};
    profile_ = &p;
    masks_.assign(blocks_.size(), 0);
    rec(0);
    return std::move(res_);
  }

 private:
  // Returns false to stop.
  bool rec(std::size_t b) {
    if (b == blocks_.size()) return test();
    const int s = profile_->sizes[b];
    const bool forced = profile_->forced[b] != 0;
    // Forced blocks choose s-1 of the non-identity elements, plus identity.
    const int free_bits = forced ? n_ - 1 : n_;
    const int k = forced ? s - 1 : s;
    const std::uint64_t limit = std::uint64_t{1} << free_bits;
    for (std::uint64_t x = (std::uint64_t{1} << k) - 1; x < limit;
         x = k == 0 ? limit : next_subset(x)) {
      masks_[b] = forced ? (x << 1) | 1U : x;
      if (!rec(b + 1)) return false;
    }
    return true;
  }

  bool test() {
    ++res_.regular;
    ++res_.examined;
    ConnectionMatrix cm(g_, m_);
    for (std::size_t b = 0; b < blocks_.size(); ++b)
      if (masks_[b]) cm.set(blocks_[b].i, blocks_[b].j, ElementSet::from_low_word(masks_[b]));
    const LabeledGraph lg = build_graph(cm);
    AutOptions opts;
    opts.known = known_;
    opts.stop_on_new = true;
    const AutResult aut = automorphisms(lg.graph, opts);
    if (!aut.stopped_early && aut.order == n_) {
      res_.witnesses.push_back(std::move(cm));
      if (first_witness_) return false;
    }
    return true;
  }

  std::shared_ptr<const Group> g_;
  int m_, n_;
  std::vector<Block> blocks_;
  const std::vector<Perm>& known_;
  bool first_witness_;
  const Profile* profile_ = nullptr;
  std::vector<std::uint64_t> masks_;
  ProfileResult res_;
};

std::string describe(const Group& g) {
  const std::string s = group_spec_string(g);
  return s.empty() ? "custom group of order " + std::to_string(g.order()) : s;
}

}  // namespace

double regular_candidate_count(int group_order, int m, SearchMode mode) {
  double total = 0;
  for (const Profile& p : regular_profiles(group_order, m, mode)) total += profile_count(p, group_order);
  return total;
}

SearchReport decide_existence(std::shared_ptr<const Group> g, int m, const SearchOptions& opts) {
  if (m < 2) throw InvalidArgument("search needs m >= 2");
  if (g->order() == 1) {
    SearchReport r = c1_regular_asymmetric_scan(m, opts.first_witness);
    r.mode = opts.mode;
    return r;
  }
  const auto t0 = Clock::now();
  const int n = g->order();
  if (n > 63) throw CapacityError("exhaustive search supports groups of order at most 63");
  const int nb = m * (m - 1) / 2;

  SearchReport report;
  report.group = describe(*g);
  report.m = m;
  report.mode = opts.mode;
  BigInt space = 1;
  space <<= static_cast<unsigned>(n * nb);
  report.assignment_space = space.str();

  const std::vector<Profile> profiles = regular_profiles(n, m, opts.mode);
  double count = 0;
  for (const Profile& p : profiles) count += profile_count(p, n);
  if (count > opts.budget)
    throw CapacityError("search space has " + std::to_string(static_cast<long double>(count)) +
                        " regular candidates, over the budget of " +
                        std::to_string(static_cast<long double>(opts.budget)));

  const auto known = right_translations(*g, m, greedy_generating_set(*g));
  std::vector<ProfileResult> results(profiles.size());
  std::vector<char> done(profiles.size(), 0);
  std::atomic<std::size_t> best{std::numeric_limits<std::size_t>::max()};
  const int workers = std::max(1, opts.workers);

  auto work = [&](int w) {
    ProfileWalker walker(g, m, known, opts.first_witness);
    for (std::size_t p = static_cast<std::size_t>(w); p < profiles.size(); p += workers) {
      if (p > best.load()) break;
      results[p] = walker.walk(profiles[p]);
      done[p] = 1;
      if (opts.first_witness && !results[p].witnesses.empty()) {
        std::size_t cur = best.load();
        while (p < cur && !best.compare_exchange_weak(cur, p)) {
        }
        break;
      }
    }
  };
  if (workers == 1) {
    work(0);
  } else {
    std::vector<std::thread> pool;
    for (int w = 0; w < workers; ++w) pool.emplace_back(work, w);
    for (auto& t : pool) t.join();
  }

  // Merge in profile order; with an early witness only profiles up to the
  // first witnessing one count, which matches a single-worker run.
  const std::size_t stop = best.load();
  for (std::size_t p = 0; p < profiles.size() && p <= stop; ++p) {
    report.regular_candidates += results[p].regular;
    report.candidates_examined += results[p].examined;
    for (auto& w : results[p].witnesses) report.witnesses.push_back(std::move(w));
  }
  report.complete = stop == std::numeric_limits<std::size_t>::max();
  report.wall_time = std::chrono::duration<double>(Clock::now() - t0).count();
  return report;
}

SearchReport c1_regular_asymmetric_scan(int m, bool first_witness) {
  if (m < 1 || m > kMaxRegularScanVertices)
    throw CapacityError("regular asymmetric scan supports 1 <= m <= " +
                        std::to_string(kMaxRegularScanVertices) + ", got " + std::to_string(m));
  const auto t0 = Clock::now();
  auto trivial = std::make_shared<const Group>(cyclic(1));
  SearchReport report;
  report.group = "C1";
  report.m = m;
  BigInt space = 1;
  space <<= static_cast<unsigned>(m * (m - 1) / 2);
  report.assignment_space = space.str();
  bool finished = true;
  for (int k = 0; k < m && finished; ++k) {
    finished = for_each_regular_graph(m, k, [&](const Graph& h) {
      ++report.regular_candidates;
      ++report.candidates_examined;
      if (automorphisms(h).order != 1) return true;
      ConnectionMatrix cm(trivial, m);
      for (auto [u, v] : h.edges()) cm.set(u, v, ElementSet{0});
      report.witnesses.push_back(std::move(cm));
      return !first_witness;
    });
  }
  report.complete = finished;
  report.wall_time = std::chrono::duration<double>(Clock::now() - t0).count();
  return report;
}

}  // namespace mhgr
