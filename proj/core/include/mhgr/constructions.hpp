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

#ifndef MHGR_CONSTRUCTIONS_HPP_
#define MHGR_CONSTRUCTIONS_HPP_

#include <cstdint>
#include <memory>
#include <optional>
#include <string>

#include "mhgr/autgroup.hpp"
#include "mhgr/catalog.hpp"
#include "mhgr/group.hpp"
#include "mhgr/mcayley.hpp"

namespace mhgr {

// For a generating set h_1..h_t, t >= 4:
//   S = {1, h_i : 1 <= i <= t}
//   L = {1, h_1, h_2 h_1^-1, h_i : 3 <= i <= t}
//   R = {1, h_1, h_i h_{i-1}^-1 : 2 <= i <= t}
//   T = {1, h_1, h_i h_{i-1}^-1 : 2 <= i <= t-1}
struct SlrSets {
  ElementSet S, L, R, T;
};
SlrSets slr_sets(const Group& g, const GeneratingSet& gens);

//   M = {1, h_i : 1 <= i <= t-1}
//   N = {h_1h_2h_3h_4, h_1h_3h_4, h_2h_3h_4, h_i h_2 h_1^-1 : 3 <= i <= t}
struct MnSets {
  ElementSet M, N;
};
MnSets mn_sets(const Group& g, const GeneratingSet& gens);

// Need d(G) >= 4. Gamma3 = (S, L, R) is (2t+2)-regular; Sigma3 = (S, L, T)
// is a lift base with k = 2t+1. Gamma4 and Sigma4 are the four-part
// analogues, (3t+3)-regular and k = 3t+2.
ConnectionMatrix gamma3(std::shared_ptr<const Group> g);
ConnectionMatrix sigma3(std::shared_ptr<const Group> g);
ConnectionMatrix gamma4(std::shared_ptr<const Group> g);
ConnectionMatrix sigma4(std::shared_ptr<const Group> g);

// d(G) <= 2 (resp. d(G) = 3), G outside the small catalog groups, m >= 3.
// m = 3, 4: fixed formulas; odd m >= 5: lift3 of the three-part base;
// even m >= 6: lift4 of the four-part base.
ConnectionMatrix rank_le2_construction(std::shared_ptr<const Group> g, int m);
ConnectionMatrix rank3_construction(std::shared_ptr<const Group> g, int m);

// Nonexistence clause for (G, m), m >= 3: 'a' (m = 3: C1..C5, C2^2, D6),
// 'b' (m = 4: C1, C2, C3), 'c' (m = 5: C1, C2), 'd' (6 <= m <= 9: C1).
std::optional<char> exception_clause(const Group& g, int m);

struct SynthesisOutcome {
  std::optional<ConnectionMatrix> witness;
  // catalog, rank<=2, rank3, gamma3, gamma4, lift3, lift4, lift5,
  // large-m-asymmetric; or "nonexistence".
  std::string route;
  std::string detail;     // base used, etc.
  char clause = 0;        // set for nonexistence
  std::optional<Verdict> verdict;  // set when verification ran

  bool exists() const { return witness.has_value(); }
};

// m >= 3. With verify set, runs is_m_hgr on the witness and throws
// VerificationFailure if it does not hold.
SynthesisOutcome synthesize(std::shared_ptr<const Group> g, int m, bool verify,
                            std::uint64_t seed = kDefaultSeed);

}  // namespace mhgr

#endif  // MHGR_CONSTRUCTIONS_HPP_
