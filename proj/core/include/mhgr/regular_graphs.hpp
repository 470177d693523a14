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

#ifndef MHGR_REGULAR_GRAPHS_HPP_
#define MHGR_REGULAR_GRAPHS_HPP_

#include <functional>

#include "mhgr/graph.hpp"

namespace mhgr {

inline constexpr int kMaxRegularScanVertices = 10;

// Calls visit once per isomorphism class of k-regular graphs on n vertices
// (n <= 10). Orderly generation: vertices are added one at a time and every
// intermediate graph must be canonical, i.e. its column-major upper-triangle
// adjacency string is maximal over all relabelings. Returning false from
// visit stops the enumeration; the return value says whether it ran to the
// end.
bool for_each_regular_graph(int n, int k, const std::function<bool(const Graph&)>& visit);

// Whether the column-major adjacency string of g is maximal over all
// relabelings.
bool is_canonical(const Graph& g);

}  // namespace mhgr

#endif  // MHGR_REGULAR_GRAPHS_HPP_
