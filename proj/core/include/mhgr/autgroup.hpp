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

#ifndef MHGR_AUTGROUP_HPP_
#define MHGR_AUTGROUP_HPP_

#include <optional>
#include <string>
#include <vector>

#include "mhgr/graph.hpp"
#include "mhgr/mcayley.hpp"
#include "mhgr/permutation.hpp"

namespace mhgr {

inline constexpr int kDefaultMaxVertices = 1024;
// kDefaultMaxVertices unless MHGR_MAX_VERTICES is set to a positive integer.
int max_vertices();

struct AutOptions {
  // Automorphisms known in advance (e.g. right translations). Each is checked
  // against the graph; they only speed the search up.
  std::vector<Perm> known;
  // Optional vertex colors that automorphisms must preserve.
  std::vector<int> colors;
  // Vertices to fix pointwise; the result is then their joint stabilizer.
  std::vector<int> fixed;
  // Stop as soon as an automorphism outside the group generated by `known`
  // is found. Sound when `known` generates a semiregular group (its point
  // stabilizers are trivial), which is the case for right translations.
  bool stop_on_new = false;
};

struct AutResult {
  BigInt order = 1;
  std::vector<Perm> generators;  // includes the verified known automorphisms
  std::vector<int> orbit;        // least vertex of each vertex's orbit
  std::vector<int> base;         // vertices individualized along the first path
  std::vector<int> base_orbit_sizes;
  bool stopped_early = false;    // only with AutOptions::stop_on_new
  long long nodes = 0;           // search nodes visited

  int num_orbits() const;
  std::vector<std::vector<int>> orbits() const;
  // |Aut_v| = |Aut| / |v^Aut|.
  BigInt stabilizer_order(int v) const;
};

// Exact automorphism group by equitable refinement with individualization
// and backtracking. Throws CapacityError above max_vertices().
AutResult automorphisms(const Graph& g, const AutOptions& opts = {});

// Full permutation enumeration; at most 9 vertices.
BigInt brute_force_aut_order(const Graph& g);

struct Verdict {
  bool holds = false;
  BigInt aut_order = 0;
  int group_order = 0;
  bool regular = false;
  bool diagonal_empty = false;
  bool orbits_are_parts = false;
  std::string reason;
};

// m-Haar, and |Aut| = |G|. Since the right translations always lie in Aut,
// equality forces Aut to be exactly that semiregular copy of G; the orbit
// partition is compared with the parts as an extra check.
Verdict is_m_hgr(const ConnectionMatrix& cm);
// Empty diagonal and |Aut| = |G|; regularity not required.
Verdict is_m_pgsr(const ConnectionMatrix& cm);

// Quick decision of |Aut| == |G| for search loops: stops at the first
// automorphism outside the right translations.
bool aut_equals_group(const ConnectionMatrix& cm, const LabeledGraph& lg);

// Whether the stabilizer of v fixes each neighbor of v.
bool stabilizer_fixes_neighborhood(const Graph& g, int v);

}  // namespace mhgr

#endif  // MHGR_AUTGROUP_HPP_
