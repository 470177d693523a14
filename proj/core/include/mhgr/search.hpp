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

#ifndef MHGR_SEARCH_HPP_
#define MHGR_SEARCH_HPP_

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "mhgr/group.hpp"
#include "mhgr/mcayley.hpp"

namespace mhgr {

enum class SearchMode { kExhaustive, kNormalized };
std::string to_string(SearchMode mode);

struct SearchOptions {
  SearchMode mode = SearchMode::kExhaustive;
  bool first_witness = true;
  int workers = 1;
  double budget = 1e8;  // max matrices passing the regularity filter
};

struct SearchReport {
  std::string group;
  int m = 0;
  SearchMode mode = SearchMode::kExhaustive;
  // Size of the raw assignment space (T_ij)_{i<j}, as a decimal string since
  // it easily exceeds 64 bits.
  std::string assignment_space;
  std::uint64_t candidates_examined = 0;  // matrices whose graph was tested
  std::uint64_t regular_candidates = 0;   // matrices passing the regularity filter
  std::vector<ConnectionMatrix> witnesses;
  bool complete = false;  // enumeration ran to the end
  double wall_time = 0;   // seconds
};

// Enumerates every upper-triangle assignment with empty diagonal whose row
// sums agree (size profiles first, then subsets in bitmask order) and tests
// |Aut| = |G|. Normalized mode forces the identity into the blocks of a
// spanning forest of the profile; relabeling (g, i) -> (b_i g, i) maps T_ij
// to b_j T_ij b_i^-1, so every matrix is isomorphic to a normalized one.
// The trivial group is delegated to c1_regular_asymmetric_scan.
SearchReport decide_existence(std::shared_ptr<const Group> g, int m, const SearchOptions& opts = {});

// Regular asymmetric graphs on m <= 10 vertices, which are exactly the
// m-HGRs of the trivial group.
SearchReport c1_regular_asymmetric_scan(int m, bool first_witness = true);

// Number of matrices the exhaustive filter lets through, without enumerating.
double regular_candidate_count(int group_order, int m, SearchMode mode);

}  // namespace mhgr

#endif  // MHGR_SEARCH_HPP_
