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

#ifndef MHGR_GROUP_IO_HPP_
#define MHGR_GROUP_IO_HPP_

#include <string>
#include <string_view>

#include "mhgr/group.hpp"

namespace mhgr {

// Multiplication-table JSON: {"order": n, "table": [[...]], "names": [...]}.
// "names" is optional. The table is validated as a group.
Group group_from_table_json(std::string_view json_text);
Group load_group_table(const std::string& path);
std::string group_to_table_json(const Group& g);

// Group expressions: factors joined by 'x', each one of
//   Cn      cyclic of order n
//   Cn^k    k-fold power of Cn (elementary abelian when n is prime)
//   Dn      dihedral group of ORDER n (n even, n >= 6): D6 is S3, D8 has order 8
//   Q8 A4 X27  (X27: nonabelian of order 27, exponent 3)
//   @path   multiplication-table JSON file; consumes the rest of the string
// Errors carry the offending position and the expected token.
Group parse_group_spec(std::string_view spec);

// Spec string for a group whose descriptor is not custom; empty otherwise.
std::string group_spec_string(const Group& g);

}  // namespace mhgr

#endif  // MHGR_GROUP_IO_HPP_
