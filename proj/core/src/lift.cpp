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

#include "mhgr/lift.hpp"

#include "mhgr/autgroup.hpp"
#include "mhgr/error.hpp"

namespace mhgr {

LiftCheck check_lift_base(const ConnectionMatrix& base, bool check_aut) {
  LiftCheck c;
  const int b = base.m();
  if (b < 3 || b > 5) {
    c.failed = "base must have 3, 4 or 5 parts, has " + std::to_string(b);
    return c;
  }
  if (!base.diagonal_empty()) {
    c.failed = "base diagonal sets must be empty";
    return c;
  }
  const auto val = base.valencies();
  c.k = val[b - 1];
  for (int i = 0; i < b; ++i) {
    const int want = i < b - 2 ? c.k + 1 : c.k;
    if (val[i] != want) {
      c.failed = "valency pattern: part " + std::to_string(i + 1) + " has valency " +
                 std::to_string(val[i]) + ", expected " + std::to_string(want);
      return c;
    }
  }
  const int n = base.group().order();
  if (c.k < 2 || c.k > n) {
    c.failed = "valency parameter k = " + std::to_string(c.k) + " outside [2, |G| = " +
               std::to_string(n) + "]";
    return c;
  }
  const LabeledGraph lg = build_graph(base);
  for (int v = 0; v < lg.graph.num_vertices(); ++v)
    if (!lg.graph.on_triangle(v)) {
      c.failed = "no triangle through vertex (" + std::to_string(lg.element(v)) + ", " +
                 std::to_string(lg.part(v) + 1) + ")";
      return c;
    }
  if (check_aut && !aut_equals_group(base, lg)) {
    c.failed = "base is not a PGSR: |Aut| exceeds |G|";
    return c;
  }
  c.ok = true;
  return c;
}

LiftSpec make_lift_spec(const ConnectionMatrix& base, bool check_aut) {
  const LiftCheck c = check_lift_base(base, check_aut);
  if (!c.ok) throw InvalidArgument("lift hypothesis failed: " + c.failed);
  LiftSpec s{base, c.k, {}, {}};
  for (Element e = 0; e < c.k; ++e) {
    if (e < c.k - 1) s.M.insert(e);
    s.N.insert(e);
  }
  return s;
}

namespace {

ConnectionMatrix lift_with(const LiftSpec& spec, int m, int b) {
  if (spec.base.m() != b)
    throw InvalidArgument("this lift needs a " + std::to_string(b) + "-part base, got " +
                          std::to_string(spec.base.m()));
  if (spec.M.size() != spec.k - 1 || spec.N.size() != spec.k)
    throw InvalidArgument("|M| must be k-1 and |N| must be k");
  const int min_m = b + 2;
  if (m < min_m || m % 2 != b % 2)
    throw InvalidArgument("lift from " + std::to_string(b) + " parts needs m >= " +
                          std::to_string(min_m) + (b % 2 ? " odd" : " even") + ", got m = " +
                          std::to_string(m));
  ConnectionMatrix cm(spec.base.group_ptr(), m);
  // 1-based indices below match the layout description in the header.
  auto put = [&](int i, int j, const ElementSet& s) { cm.set(i - 1, j - 1, s); };
  for (int i = 1; i <= b; ++i)
    for (int j = i + 1; j <= b; ++j) put(i, j, spec.base.at(i - 1, j - 1));
  const ElementSet one{0};
  for (int i = b - 1; i <= m - 2; ++i) put(i, i + 2, one);
  for (int i = b + 1; i <= m - 3; ++i)
    if ((i + 1) % 2 == b % 2) put(i, i + 1, spec.M);
  put(m - 1, m, spec.N);
  return cm;
}

}  // namespace

ConnectionMatrix lift3(const LiftSpec& spec, int m) { return lift_with(spec, m, 3); }
ConnectionMatrix lift4(const LiftSpec& spec, int m) { return lift_with(spec, m, 4); }
ConnectionMatrix lift5(const LiftSpec& spec, int m) { return lift_with(spec, m, 5); }

ConnectionMatrix lift(const LiftSpec& spec, int m) {
  return lift_with(spec, m, spec.base.m());
}

}  // namespace mhgr
