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

#ifndef MHGR_LIFT_HPP_
#define MHGR_LIFT_HPP_

#include <string>

#include "mhgr/mcayley.hpp"

namespace mhgr {

struct LiftSpec {
  ConnectionMatrix base;  // 3, 4 or 5 parts
  int k = 0;
  ElementSet M;  // |M| = k - 1
  ElementSet N;  // |N| = k
};

struct LiftCheck {
  bool ok = false;
  int k = 0;
  std::string failed;  // the violated hypothesis, empty when ok
};

// Checks the lift hypotheses on a base with b in {3, 4, 5} parts: empty
// diagonal; the first b-2 parts have valency k+1 and the last two k;
// 2 <= k <= |G|; every vertex lies on a triangle; and, when check_aut is set,
// |Aut| = |G|.
LiftCheck check_lift_base(const ConnectionMatrix& base, bool check_aut = true);

// k read off the base; M and N are the lexicographically least subsets
// {0..k-2} and {0..k-1}. Throws InvalidArgument naming the failed hypothesis.
LiftSpec make_lift_spec(const ConnectionMatrix& base, bool check_aut = true);

// m-part matrix: the base in parts 1..b, T_{i,i+2} = {1} for b-1 <= i <= m-2,
// T_{i,i+1} = M for b+1 <= i <= m-3 when i+1 has the parity of b, and
// T_{m-1,m} = N. The result is (k+1)-regular.
ConnectionMatrix lift3(const LiftSpec& spec, int m);  // m odd, m >= 5
ConnectionMatrix lift4(const LiftSpec& spec, int m);  // m even, m >= 6
ConnectionMatrix lift5(const LiftSpec& spec, int m);  // m odd, m >= 7
ConnectionMatrix lift(const LiftSpec& spec, int m);   // dispatch on base parts

}  // namespace mhgr

#endif  // MHGR_LIFT_HPP_
