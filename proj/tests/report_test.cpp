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

#include <gtest/gtest.h>

#include "mhgr/error.hpp"
#include "mhgr/group_io.hpp"
#include "mhgr/report.hpp"
#include "test_util.hpp"

namespace mhgr {
namespace {

using testing::shared;

Certificate round_trip(const Certificate& c) { return certificate_from_json(to_json(c)); }

std::string replace(std::string s, const std::string& from, const std::string& to) {
  const auto at = s.find(from);
  EXPECT_NE(at, std::string::npos) << from;
  if (at != std::string::npos) s.replace(at, from.size(), to);
  return s;
}

TEST(Certificate, WitnessRoundTrip) {
  auto g = shared(cyclic(6));
  const Certificate c = emit(g, 3, synthesize(g, 3, true));
  EXPECT_EQ(c.kind, CertificateKind::kHgr);
  const std::string text = to_json(c);
  EXPECT_EQ(text.find("\"schema\""), text.find('"'));  // first key
  const Certificate back = certificate_from_json(text);
  EXPECT_EQ(to_json(back), text);
  const ReverifyResult r = reverify(back);
  EXPECT_TRUE(r.ok) << r.message;
}

TEST(Certificate, TamperedAutOrderIsNamed) {
  auto g = shared(cyclic(6));
  const std::string text = to_json(emit(g, 3, synthesize(g, 3, true)));
  const Certificate bad = certificate_from_json(replace(text, "\"aut_order\": 6", "\"aut_order\": 12"));
  const ReverifyResult r = reverify(bad);
  EXPECT_FALSE(r.ok);
  ASSERT_EQ(r.mismatched.size(), 1U);
  EXPECT_EQ(r.mismatched[0], "aut_order");
}

TEST(Certificate, TamperedMatrixIsCaught) {
  auto g = shared(cyclic(6));
  Certificate c = emit(g, 3, synthesize(g, 3, true));
  c.matrix->set(0, 1, ElementSet{0});
  EXPECT_FALSE(reverify(c).ok);
}

TEST(Certificate, ClassifiedNonexistence) {
  auto g = shared(dihedral(6));
  const Certificate c = emit(g, 3, synthesize(g, 3, false));
  EXPECT_EQ(c.kind, CertificateKind::kNonexistenceClassified);
  const std::string text = to_json(c);
  EXPECT_NE(text.find("\"clause\": \"(a)\""), std::string::npos) << text;
  EXPECT_TRUE(reverify(round_trip(c)).ok);
  const Certificate wrong = certificate_from_json(replace(text, "(a)", "(b)"));
  const ReverifyResult r = reverify(wrong);
  EXPECT_FALSE(r.ok);
  EXPECT_EQ(r.mismatched, std::vector<std::string>{"clause"});
  // Same claim for a group that has a witness.
  auto c6 = shared(cyclic(6));
  Certificate lie = c;
  lie.group = c6;
  EXPECT_FALSE(reverify(lie).ok);
}

TEST(Certificate, SearchNonexistence) {
  auto g = shared(elementary_abelian(2, 2));
  const SearchReport rep = decide_existence(g, 3, {});
  const Certificate c = emit(g, rep);
  EXPECT_EQ(c.kind, CertificateKind::kNonexistenceSearch);
  EXPECT_EQ(c.clause, 'a');
  const Certificate back = round_trip(c);
  EXPECT_TRUE(reverify(back).ok);
  const std::string text = replace(to_json(c), "\"regular_candidates\": 346", "\"regular_candidates\": 345");
  const ReverifyResult r = reverify(certificate_from_json(text));
  EXPECT_EQ(r.mismatched, std::vector<std::string>{"regular_candidates"});
}

TEST(Certificate, InlineTableGroup) {
  auto g = shared(load_group_table(testing::data_path("groups/Dic12.json")));
  const Certificate c = emit(g, 4, synthesize(g, 4, true));
  const std::string text = to_json(c);
  EXPECT_NE(text.find("\"table\""), std::string::npos);
  const ReverifyResult r = reverify(certificate_from_json(text));
  EXPECT_TRUE(r.ok) << r.message;
}

TEST(Certificate, LargeAutOrderAsString) {
  auto g = shared(cyclic(2));
  ConnectionMatrix cm(g, 3);
  cm.set(0, 1, ElementSet{0});
  Certificate c;
  c.tool_version = tool_version();
  c.group = g;
  c.m = 3;
  c.kind = CertificateKind::kPgsr;
  c.matrix = cm;
  c.evidence = Evidence{BigInt("100000000000000000000000"), 2, false, true, false};
  const std::string text = to_json(c);
  EXPECT_NE(text.find("\"100000000000000000000000\""), std::string::npos);
  EXPECT_EQ(round_trip(c).evidence->aut_order, c.evidence->aut_order);
  EXPECT_FALSE(reverify(c).ok);
}

TEST(Certificate, MalformedInput) {
  EXPECT_THROW(certificate_from_json("{"), InvalidArgument);
  EXPECT_THROW(certificate_from_json("{\"schema\": 2}"), InvalidArgument);
  EXPECT_THROW(certificate_from_json(R"({"schema": 1, "kind": "HGR", "group": "C6", "m": 3})"), InvalidArgument);
  EXPECT_THROW(certificate_from_json(R"({"schema": 1, "kind": "nope", "group": "C6", "m": 3})"), InvalidArgument);
  EXPECT_THROW(certificate_from_json(R"({"schema": 1, "kind": "HGR", "group": "Y6", "m": 3})"), InvalidArgument);
}

TEST(MatrixJson, RoundTripAndNames) {
  auto g = shared(cyclic(6));
  const ConnectionMatrix cm = *synthesize(g, 3, false).witness;
  EXPECT_EQ(matrix_from_json(matrix_to_json(cm)), cm);
  const ConnectionMatrix named = matrix_from_json(
      R"({"group": "C6", "m": 3, "entries": [{"i": 1, "j": 2, "elems": ["1", "x"]}, {"i": 2, "j": 3, "elems": [0]}]})");
  EXPECT_EQ(named.at(0, 1), (ElementSet{0, 1}));
  EXPECT_EQ(named.at(1, 0), (ElementSet{0, 5}));
  EXPECT_THROW(matrix_from_json(R"({"group": "C6", "m": 3, "entries": [{"i": 2, "j": 1, "elems": [0]}]})"),
               InvalidArgument);
  EXPECT_THROW(matrix_from_json(R"({"group": "C6", "m": 3, "entries": [{"i": 1, "j": 4, "elems": [0]}]})"),
               InvalidArgument);
  EXPECT_THROW(matrix_from_json(R"({"group": "C6", "m": 3, "entries": [{"i": 1, "j": 2, "elems": [6]}]})"),
               InvalidArgument);
  EXPECT_THROW(matrix_from_json(R"({"group": "C6", "m": 3, "entries": [{"i": 1, "j": 1, "elems": [0]}]})"),
               InvalidArgument);
}

TEST(SearchReportJson, Fields) {
  const SearchReport rep = decide_existence(shared(cyclic(2)), 4, {});
  const std::string text = search_report_to_json(rep);
  for (const char* key : {"\"group\"", "\"mode\"", "\"candidates_examined\"", "\"regular_candidates\"",
                          "\"witnesses\"", "\"wall_time\""})
    EXPECT_NE(text.find(key), std::string::npos) << key;
}

}  // namespace
}  // namespace mhgr
