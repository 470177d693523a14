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

#ifndef MHGR_PERMUTATION_HPP_
#define MHGR_PERMUTATION_HPP_

#include <boost/multiprecision/cpp_int.hpp>
#include <vector>

namespace mhgr {

using BigInt = boost::multiprecision::cpp_int;

// A permutation of {0..n-1} stored as its image list: p[i] is the image of i.
using Perm = std::vector<int>;

Perm identity_perm(int n);
// Apply a first, then b.
Perm compose(const Perm& a, const Perm& b);
Perm inverse(const Perm& p);
bool is_identity(const Perm& p);
bool is_permutation(const Perm& p);

// Orbit label per point (the least point of its orbit) under <gens>.
std::vector<int> orbit_labels(int n, const std::vector<Perm>& gens);

// Group order by the Schreier-Sims algorithm. Independent of the graph
// automorphism engine; used to cross-check it.
BigInt schreier_sims_order(int n, const std::vector<Perm>& gens);

}  // namespace mhgr

#endif  // MHGR_PERMUTATION_HPP_
