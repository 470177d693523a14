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

#ifndef MHGR_CATALOG_HPP_
#define MHGR_CATALOG_HPP_

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "mhgr/graph.hpp"
#include "mhgr/group.hpp"
#include "mhgr/mcayley.hpp"

namespace mhgr {

enum class CatalogKind { kDirect, kPgsr3, kPgsr4, kPgsr5 };
std::string to_string(CatalogKind k);
// Number of parts of a PGSR kind; 0 for kDirect.
int pgsr_parts(CatalogKind k);

// Group classes outside the twelve small groups that still have fixed
// formulas, parameterized by a generating pair or triple.
inline constexpr const char* kRankLe2Class = "rank<=2";
inline constexpr const char* kRank3Class = "rank3";

struct CatalogEntry {
  std::vector<std::string> groups;  // small-group tags, or one class tag
  int m = 0;                        // parts of the matrix
  CatalogKind kind = CatalogKind::kDirect;
  std::string provenance;
  // Upper entries as words in the generators x, y, z; 1-based part indices.
  struct Cell {
    int i;
    int j;
    std::vector<std::string> words;
  };
  std::vector<Cell> cells;
  // Transcribed entries that are known not to satisfy the lift hypotheses
  // (their valency parameter exceeds |G|). Kept for verification; synthesis
  // uses the replacement entry instead.
  bool lift_infeasible = false;
  bool replacement = false;

  ConnectionMatrix build(std::shared_ptr<const Group> g) const;
};

const std::vector<CatalogEntry>& catalog_entries();

// Tag used for catalog lookup: a small-group name, kRankLe2Class,
// kRank3Class, or empty when no formula applies.
std::string catalog_tag(const Group& g);

// Prefers entries usable for lifting when several share a key.
std::optional<CatalogEntry> lookup(const Group& g, int m, CatalogKind kind);

// Generators named x, y, z in the formulas for g's catalog tag.
std::vector<Element> catalog_generators(const Group& g);

// Evaluates a word such as "1", "x^-1", "xy" or "x^3yz".
Element eval_word(const Group& g, const std::vector<Element>& gens, const std::string& word);

inline constexpr std::uint64_t kDefaultSeed = 20240611;

// Connected 4-regular asymmetric graph on m >= 10 vertices, from seeded
// configuration-model sampling with rejection.
Graph asymmetric_regular_graph(int m, std::uint64_t seed = kDefaultSeed, int valency = 4);

// T_ij = {1} exactly on the edges of asymmetric_regular_graph(m).
ConnectionMatrix c2_large_m(int m, std::uint64_t seed = kDefaultSeed);
ConnectionMatrix c1_large_m(int m, std::uint64_t seed = kDefaultSeed);

}  // namespace mhgr

#endif  // MHGR_CATALOG_HPP_
