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

#include "mhgr/constructions.hpp"

#include <vector>

#include "mhgr/error.hpp"
#include "mhgr/lift.hpp"

namespace mhgr {
namespace {

// Builds a set from listed elements, insisting they are pairwise distinct.
ElementSet distinct_set(const Group& g, const std::string& name, const std::vector<Element>& elems,
                        const std::vector<std::string>& labels) {
  ElementSet s;
  for (std::size_t i = 0; i < elems.size(); ++i) {
    if (s.contains(elems[i])) {
      std::size_t j = 0;
      while (elems[j] != elems[i]) ++j;
      throw DiscrepancyError("set " + name + ": " + labels[j] + " and " + labels[i] +
                             " are both " + g.name(elems[i]));
    }
    s.insert(elems[i]);
  }
  return s;
}

std::string h(int i) { return "h" + std::to_string(i); }

void require_t4(const GeneratingSet& gens) {
  if (gens.size() < 4)
    throw InvalidArgument("construction needs a generating set of size t >= 4, got t = " +
                          std::to_string(gens.size()));
}

GeneratingSet gens_for(const Group& g) {
  GeneratingSet gens = minimal_generating_set(g);
  require_t4(gens);
  return gens;
}

}  // namespace

SlrSets slr_sets(const Group& g, const GeneratingSet& gens) {
  require_t4(gens);
  const int t = gens.size();
  auto H = [&](int i) { return gens.elements[i - 1]; };
  auto quot = [&](int i, int j) { return g.mul(H(i), g.inv(H(j))); };  // h_i h_j^-1

  std::vector<Element> s{0}, l{0, H(1), quot(2, 1)}, r{0, H(1)}, tt{0, H(1)};
  std::vector<std::string> sl{"1"}, ll{"1", h(1), h(2) + h(1) + "^-1"}, rl{"1", h(1)},
      tl{"1", h(1)};
  for (int i = 1; i <= t; ++i) {
    s.push_back(H(i));
    sl.push_back(h(i));
  }
  for (int i = 3; i <= t; ++i) {
    l.push_back(H(i));
    ll.push_back(h(i));
  }
  for (int i = 2; i <= t; ++i) {
    r.push_back(quot(i, i - 1));
    rl.push_back(h(i) + h(i - 1) + "^-1");
    if (i <= t - 1) {
      tt.push_back(quot(i, i - 1));
      tl.push_back(rl.back());
    }
  }
  return {distinct_set(g, "S", s, sl), distinct_set(g, "L", l, ll), distinct_set(g, "R", r, rl),
          distinct_set(g, "T", tt, tl)};
}

MnSets mn_sets(const Group& g, const GeneratingSet& gens) {
  require_t4(gens);
  const int t = gens.size();
  auto H = [&](int i) { return gens.elements[i - 1]; };
  auto prod = [&](std::initializer_list<Element> xs) {
    Element r = 0;
    for (Element x : xs) r = g.mul(r, x);
    return r;
  };
  std::vector<Element> m{0};
  std::vector<std::string> ml{"1"};
  for (int i = 1; i <= t - 1; ++i) {
    m.push_back(H(i));
    ml.push_back(h(i));
  }
  std::vector<Element> n{prod({H(1), H(2), H(3), H(4)}), prod({H(1), H(3), H(4)}),
                         prod({H(2), H(3), H(4)})};
  std::vector<std::string> nl{"h1h2h3h4", "h1h3h4", "h2h3h4"};
  for (int i = 3; i <= t; ++i) {
    n.push_back(prod({H(i), H(2), g.inv(H(1))}));
    nl.push_back(h(i) + "h2h1^-1");
  }
  return {distinct_set(g, "M", m, ml), distinct_set(g, "N", n, nl)};
}

ConnectionMatrix gamma3(std::shared_ptr<const Group> g) {
  const SlrSets s = slr_sets(*g, gens_for(*g));
  return ConnectionMatrix::from_entries(g, 3, {{0, 1, s.S}, {0, 2, s.L}, {1, 2, s.R}});
}

ConnectionMatrix sigma3(std::shared_ptr<const Group> g) {
  const SlrSets s = slr_sets(*g, gens_for(*g));
  return ConnectionMatrix::from_entries(g, 3, {{0, 1, s.S}, {0, 2, s.L}, {1, 2, s.T}});
}

ConnectionMatrix gamma4(std::shared_ptr<const Group> g) {
  const GeneratingSet gens = gens_for(*g);
  const SlrSets s = slr_sets(*g, gens);
  const MnSets mn = mn_sets(*g, gens);
  return ConnectionMatrix::from_entries(
      g, 4,
      {{0, 1, s.S}, {0, 3, s.S}, {2, 3, s.S}, {0, 2, s.L}, {1, 2, s.R}, {1, 3, mn.N}});
}

ConnectionMatrix sigma4(std::shared_ptr<const Group> g) {
  const GeneratingSet gens = gens_for(*g);
  const SlrSets s = slr_sets(*g, gens);
  const MnSets mn = mn_sets(*g, gens);
  return ConnectionMatrix::from_entries(
      g, 4,
      {{0, 1, s.S}, {0, 3, s.S}, {0, 2, s.L}, {1, 2, s.R}, {1, 3, mn.N}, {2, 3, mn.M}});
}

namespace {

ConnectionMatrix class_construction(std::shared_ptr<const Group> g, int m, const char* cls) {
  if (m < 3) throw InvalidArgument("m must be >= 3");
  if (catalog_tag(*g) != cls)
    throw InvalidArgument(std::string("group is not in the ") + cls +
                          " class (small catalog groups use their own entries)");
  if (m <= 4) return lookup(*g, m, CatalogKind::kDirect)->build(g);
  const CatalogKind kind = m % 2 ? CatalogKind::kPgsr3 : CatalogKind::kPgsr4;
  return lift(make_lift_spec(lookup(*g, pgsr_parts(kind), kind)->build(g)), m);
}

}  // namespace

ConnectionMatrix rank_le2_construction(std::shared_ptr<const Group> g, int m) {
  return class_construction(std::move(g), m, kRankLe2Class);
}

ConnectionMatrix rank3_construction(std::shared_ptr<const Group> g, int m) {
  return class_construction(std::move(g), m, kRank3Class);
}

std::optional<char> exception_clause(const Group& g, int m) {
  const auto s = identify_small_group(g);
  if (!s) return std::nullopt;
  using SG = SmallGroup;
  switch (m) {
    case 3:
      if (*s == SG::kC1 || *s == SG::kC2 || *s == SG::kC3 || *s == SG::kC4 || *s == SG::kC5 ||
          *s == SG::kC2x2 || *s == SG::kD6)
        return 'a';
      break;
    case 4:
      if (*s == SG::kC1 || *s == SG::kC2 || *s == SG::kC3) return 'b';
      break;
    case 5:
      if (*s == SG::kC1 || *s == SG::kC2) return 'c';
      break;
    default:
      if (m >= 6 && m <= 9 && *s == SG::kC1) return 'd';
  }
  return std::nullopt;
}

namespace {

// Lift from the catalog base of the given kind.
SynthesisOutcome lift_outcome(std::shared_ptr<const Group> g, int m, CatalogKind kind) {
  auto entry = lookup(*g, pgsr_parts(kind), kind);
  if (!entry) throw NotFound("no " + to_string(kind) + " catalog base for this group");
  const LiftSpec spec = make_lift_spec(entry->build(g));
  SynthesisOutcome out;
  out.witness = lift(spec, m);
  out.route = "lift" + std::to_string(pgsr_parts(kind));
  out.detail = entry->provenance;
  return out;
}

SynthesisOutcome small_group_outcome(std::shared_ptr<const Group> g, int m, SmallGroup s,
                                     std::uint64_t seed) {
  SynthesisOutcome out;
  if (auto direct = lookup(*g, m, CatalogKind::kDirect)) {
    out.witness = direct->build(g);
    out.route = "catalog";
    out.detail = direct->provenance;
    return out;
  }
  if (s == SmallGroup::kC1 || s == SmallGroup::kC2) {
    if (m < 10) throw Error("no route for " + to_string(s) + " at m = " + std::to_string(m));
    out.witness = s == SmallGroup::kC1 ? c1_large_m(m, seed) : c2_large_m(m, seed);
    out.route = "large-m-asymmetric";
    out.detail = "4-regular asymmetric template, seed " + std::to_string(seed);
    // The template is built over a fresh group object; rebind to g.
    ConnectionMatrix cm(g, m);
    for (const auto& e : out.witness->upper_entries()) cm.set(e.i, e.j, e.elems);
    out.witness = std::move(cm);
    return out;
  }
  if (m % 2 == 0) return lift_outcome(g, m, CatalogKind::kPgsr4);
  auto three = lookup(*g, 3, CatalogKind::kPgsr3);
  if (three && !three->lift_infeasible) return lift_outcome(g, m, CatalogKind::kPgsr3);
  return lift_outcome(g, m, CatalogKind::kPgsr5);
}

}  // namespace

SynthesisOutcome synthesize(std::shared_ptr<const Group> g, int m, bool verify,
                            std::uint64_t seed) {
  if (m == 2)
    throw InvalidArgument("m = 2 is not handled by synthesis; use the exhaustive search instead");
  if (m < 2) throw InvalidArgument("m must be >= 3, got " + std::to_string(m));

  SynthesisOutcome out;
  if (auto clause = exception_clause(*g, m)) {
    out.route = "nonexistence";
    out.clause = *clause;
    return out;
  }
  if (auto s = identify_small_group(*g)) {
    out = small_group_outcome(g, m, *s, seed);
  } else {
    const int d = minimal_generating_size(*g);
    if (d <= 2) {
      out.witness = rank_le2_construction(g, m);
      out.route = m <= 4 ? "rank<=2" : (m % 2 ? "lift3" : "lift4");
      out.detail = "two-generator formulas";
    } else if (d == 3) {
      out.witness = rank3_construction(g, m);
      out.route = m <= 4 ? "rank3" : (m % 2 ? "lift3" : "lift4");
      out.detail = "three-generator formulas";
    } else if (m == 3) {
      out.witness = gamma3(g);
      out.route = "gamma3";
    } else if (m == 4) {
      out.witness = gamma4(g);
      out.route = "gamma4";
    } else if (m % 2) {
      out.witness = lift3(make_lift_spec(sigma3(g)), m);
      out.route = "lift3";
      out.detail = "Sigma3 base";
    } else {
      out.witness = lift4(make_lift_spec(sigma4(g)), m);
      out.route = "lift4";
      out.detail = "Sigma4 base";
    }
  }
  if (verify) {
    out.verdict = is_m_hgr(*out.witness);
    if (!out.verdict->holds)
      throw VerificationFailure("route " + out.route + " produced a matrix that is not an m-HGR: " +
                                out.verdict->reason);
  }
  return out;
}

}  // namespace mhgr
