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
#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <fstream>

#include "json.hpp"

namespace {

struct Outcome {
  int code;
  std::string out;
};

Outcome mhgr(const std::string& args) {
  const std::string cmd = std::string(MHGR_CLI) + " " + args + " 2>/dev/null";
  FILE* p = popen(cmd.c_str(), "r");
  Outcome r{-1, ""};
  if (!p) return r;
  std::array<char, 4096> buf;
  std::size_t got;
  while ((got = fread(buf.data(), 1, buf.size(), p)) > 0) r.out.append(buf.data(), got);
  const int status = pclose(p);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

std::string temp(const std::string& name) { return ::testing::TempDir() + "/" + name; }

TEST(Cli, SynthesizeClassifiedNonexistence) {
  const Outcome r = mhgr("synthesize --group D6 -m 3");
  EXPECT_EQ(r.code, 3);
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["kind"], "nonexistence-classified");
  EXPECT_EQ(j["clause"], "(a)");
}

TEST(Cli, SynthesizeWitness) {
  const Outcome r = mhgr("synthesize --group C2^3 -m 3 --verify");
  ASSERT_EQ(r.code, 0);
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["schema"], 1);
  EXPECT_EQ(j["kind"], "HGR");
  EXPECT_EQ(j["evidence"]["aut_order"], 8);
}

TEST(Cli, SynthesizeValency) {
  const Outcome r = mhgr("synthesize --group C5 -m 4 --verify");
  ASSERT_EQ(r.code, 0);
  const auto j = nlohmann::json::parse(r.out);
  std::size_t valency = 0;
  for (const auto& e : j["matrix"]["entries"])
    if (e["i"] == 1 || e["j"] == 1) valency += e["elems"].size();
  EXPECT_EQ(valency, 5U);
}

TEST(Cli, SynthesizeFormats) {
  const Outcome g6 = mhgr("synthesize --group C6 -m 3 --format graph6");
  ASSERT_EQ(g6.code, 0);
  EXPECT_EQ(g6.out[0], 'Q');  // 18 vertices
  const Outcome el = mhgr("synthesize --group C6 -m 3 --format edgelist --out " + temp("c6.edges"));
  EXPECT_EQ(el.code, 0);
  EXPECT_EQ(mhgr("oracle-aut --engine " + temp("c6.edges")).out, "6\n");
}

TEST(Cli, TwoPartsNeedSearch) {
  EXPECT_EQ(mhgr("synthesize --group C6 -m 2").code, 2);
  EXPECT_EQ(mhgr("search --group C2 -m 2").code, 3);
}

TEST(Cli, Errors) {
  EXPECT_EQ(mhgr("synthesize --group Y5 -m 3").code, 1);
  EXPECT_EQ(mhgr("synthesize --group D7 -m 3").code, 1);
  EXPECT_EQ(mhgr("synthesize -m 3").code, 1);
  EXPECT_EQ(mhgr("verify /nonexistent.json").code, 1);
  EXPECT_EQ(mhgr("nosuchcommand").code, 1);
  EXPECT_EQ(mhgr("search --group C12 -m 5").code, 4);
}

TEST(Cli, VerifyMatrix) {
  const Outcome cert = mhgr("synthesize --group C6 -m 3 --out " + temp("c6_cert.json"));
  ASSERT_EQ(cert.code, 0);
  const Outcome v = mhgr("verify " + temp("c6_cert.json"));
  EXPECT_EQ(v.code, 0);
  EXPECT_NE(v.out.find("3-HGR of group of order 6"), std::string::npos) << v.out;
  EXPECT_NE(v.out.find("reverified"), std::string::npos) << v.out;

  // The bare matrix on its own.
  std::ifstream in(temp("c6_cert.json"));
  const auto j = nlohmann::json::parse(in);
  std::ofstream(temp("c6_m3.json")) << j["matrix"].dump();
  const Outcome m = mhgr("verify " + temp("c6_m3.json"));
  EXPECT_EQ(m.code, 0);
  EXPECT_NE(m.out.find("3-HGR of group of order 6"), std::string::npos) << m.out;
}

TEST(Cli, VerifyRejectsTamperedCertificate) {
  const Outcome cert = mhgr("synthesize --group C6 -m 3");
  ASSERT_EQ(cert.code, 0);
  auto j = nlohmann::json::parse(cert.out);
  j["evidence"]["aut_order"] = 12;
  std::ofstream(temp("tampered.json")) << j.dump();
  const Outcome v = mhgr("verify " + temp("tampered.json"));
  EXPECT_EQ(v.code, 3);
  EXPECT_NE(v.out.find("aut_order"), std::string::npos);
}

TEST(Cli, Search) {
  const Outcome r = mhgr("search --group C2 -m 4");
  EXPECT_EQ(r.code, 3);
  EXPECT_NE(r.out.find("no witness"), std::string::npos);
  EXPECT_NE(r.out.find("216 regular candidates"), std::string::npos) << r.out;
  const Outcome w = mhgr("search --group C6 -m 3 --first-witness --workers 2 --json");
  EXPECT_EQ(w.code, 0);
  EXPECT_EQ(nlohmann::json::parse(w.out)["witnesses"].size(), 1U);
  const Outcome n = mhgr("search --group C2^2 -m 3 --mode normalized");
  EXPECT_EQ(n.code, 3);
}

TEST(Cli, CatalogAndOracle) {
  const Outcome c = mhgr("catalog list --check");
  EXPECT_EQ(c.code, 0);
  EXPECT_EQ(c.out.find("FAILED"), std::string::npos);
  EXPECT_NE(c.out.find("lift-infeasible"), std::string::npos);
  std::ofstream(temp("path3.edges")) << "p 3 2\n0 1\n1 2\n";
  EXPECT_EQ(mhgr("oracle-aut " + temp("path3.edges")).out, "2\n");
  std::ofstream(temp("k10.g6")) << "I~~~~~~~w\n";
  EXPECT_EQ(mhgr("oracle-aut " + temp("k10.g6")).code, 4);
}

TEST(Cli, HelpMentionsConventions) {
  const Outcome h = mhgr("--help");
  EXPECT_EQ(h.code, 0);
  EXPECT_NE(h.out.find("ORDER"), std::string::npos);
  EXPECT_NE(h.out.find("MHGR_MAX_VERTICES"), std::string::npos);
}

TEST(Cli, TableGroup) {
  const Outcome r = mhgr(std::string("synthesize --group @") + MHGR_TEST_DATA + "/groups/Dic12.json -m 5 --verify");
  EXPECT_EQ(r.code, 0);
}

}  // namespace
