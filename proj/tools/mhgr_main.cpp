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

// mhgr: synthesize, verify and search for m-Haar graphical representations.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "mhgr/autgroup.hpp"
#include "mhgr/catalog.hpp"
#include "mhgr/constructions.hpp"
#include "mhgr/error.hpp"
#include "mhgr/graph.hpp"
#include "mhgr/group_io.hpp"
#include "mhgr/lift.hpp"
#include "mhgr/report.hpp"
#include "mhgr/search.hpp"

namespace {

// Exit codes are part of the interface.
constexpr int kExitWitness = 0;
constexpr int kExitError = 1;
constexpr int kExitNeedsSearch = 2;
constexpr int kExitNone = 3;
constexpr int kExitCapacity = 4;

constexpr const char* kFooter = R"(Group expressions:
  Cn        cyclic group of order n           C6
  Cp^k      elementary abelian when p prime   C2^3
  Dn        dihedral group of ORDER n         D6 is S3 (order 6), D8 has order 8
  Q8, A4    quaternion, alternating
  X27       nonabelian group of order 27 and exponent 3
  @file     multiplication-table JSON         @tables/dic12.json
  Factors combine with 'x': C2xC4, C2^4xC3, C3xD6.

Environment:
  MHGR_MAX_VERTICES   vertex cap of the automorphism engine (default 1024)

Exit codes: 0 witness, 3 no witness / nonexistence, 2 m = 2, 4 over capacity, 1 error.)";

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw mhgr::InvalidArgument("cannot open '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_output(const std::string& out_path, const std::string& text) {
  if (out_path.empty()) {
    std::cout << text;
    if (!text.empty() && text.back() != '\n') std::cout << '\n';
    return;
  }
  std::ofstream out(out_path);
  if (!out) throw mhgr::InvalidArgument("cannot write '" + out_path + "'");
  out << text;
  if (!text.empty() && text.back() != '\n') out << '\n';
}

std::shared_ptr<const mhgr::Group> group_arg(const std::string& spec) {
  return std::make_shared<const mhgr::Group>(mhgr::parse_group_spec(spec));
}

struct SynthesizeArgs {
  std::string group;
  int m = 0;
  bool verify = false;
  std::string out;
  std::string format = "json";
  std::uint64_t seed = mhgr::kDefaultSeed;
};

int run_synthesize(const SynthesizeArgs& a) {
  if (a.m == 2) {
    std::cerr << "m = 2 lies outside the classification; decide it with\n"
              << "  mhgr search --group " << a.group << " -m 2\n";
    return kExitNeedsSearch;
  }
  if (a.m < 3) throw mhgr::InvalidArgument("-m must be at least 3");
  auto g = group_arg(a.group);
  const mhgr::SynthesisOutcome outcome = mhgr::synthesize(g, a.m, a.verify, a.seed);
  const mhgr::Certificate cert = mhgr::emit(g, a.m, outcome);
  if (!outcome.exists() || a.format == "json") {
    write_output(a.out, mhgr::to_json(cert));
  } else {
    const mhgr::Graph graph = mhgr::build_graph(*outcome.witness).graph;
    write_output(a.out, a.format == "graph6" ? mhgr::to_graph6(graph) : mhgr::to_edge_list(graph));
  }
  if (!outcome.exists()) {
    std::cerr << a.group << " has no " << a.m << "-HGR: clause (" << outcome.clause << ")\n";
    return kExitNone;
  }
  return kExitWitness;
}

void print_evidence(const mhgr::Verdict& v) {
  std::cout << "  aut_order " << v.aut_order.str() << ", group_order " << v.group_order
            << ", regular " << (v.regular ? "yes" : "no") << ", diagonal_empty "
            << (v.diagonal_empty ? "yes" : "no") << ", orbits_are_parts "
            << (v.orbits_are_parts ? "yes" : "no") << '\n';
}

int run_verify(const std::string& path) {
  const std::string text = read_file(path);
  const bool is_certificate = text.find("\"schema\"") != std::string::npos;
  if (is_certificate) {
    const mhgr::Certificate cert = mhgr::certificate_from_json(text);
    const mhgr::ReverifyResult r = mhgr::reverify(cert);
    std::cout << "certificate (" << mhgr::to_string(cert.kind) << "): "
              << (r.ok ? "reverified" : "REJECTED") << ": " << r.message << '\n';
    if (!r.ok) return kExitNone;
    if (!cert.matrix) return cert.kind == mhgr::CertificateKind::kHgr ? kExitWitness : kExitNone;
  }
  const mhgr::ConnectionMatrix cm = mhgr::matrix_from_json(text);
  const int m = cm.m(), n = cm.group().order();
  const mhgr::Verdict hgr = mhgr::is_m_hgr(cm);
  if (hgr.holds) {
    std::cout << m << "-HGR of group of order " << n << '\n';
    print_evidence(hgr);
    return kExitWitness;
  }
  const mhgr::Verdict pgsr = mhgr::is_m_pgsr(cm);
  if (pgsr.holds) {
    std::cout << m << "-PGSR of group of order " << n << " (not an HGR: " << hgr.reason << ")\n";
    print_evidence(pgsr);
    return kExitWitness;
  }
  std::cout << "neither HGR nor PGSR: " << pgsr.reason << '\n';
  print_evidence(pgsr);
  return kExitNone;
}

struct SearchArgs {
  std::string group;
  int m = 0;
  std::string mode = "exhaustive";
  bool first_witness = false;
  int workers = 1;
  double budget = 1e8;
  bool json = false;
  std::string out;
};

int run_search(const SearchArgs& a) {
  auto g = group_arg(a.group);
  mhgr::SearchOptions opts;
  opts.mode = a.mode == "normalized" ? mhgr::SearchMode::kNormalized : mhgr::SearchMode::kExhaustive;
  opts.first_witness = a.first_witness;
  opts.workers = a.workers;
  opts.budget = a.budget;
  const mhgr::SearchReport r = mhgr::decide_existence(g, a.m, opts);
  if (a.json) {
    std::cout << mhgr::search_report_to_json(r) << '\n';
  } else {
    std::printf("%s, m = %d, %s mode: %llu regular candidates of %s assignments, %.3f s\n",
                r.group.c_str(), r.m, mhgr::to_string(r.mode).c_str(),
                static_cast<unsigned long long>(r.regular_candidates), r.assignment_space.c_str(),
                r.wall_time);
    if (r.witnesses.empty())
      std::printf("no witness\n");
    else
      std::printf("%zu witness%s%s\n", r.witnesses.size(), r.witnesses.size() == 1 ? "" : "es",
                  r.complete ? "" : " (stopped at the first)");
  }
  if (!a.out.empty()) write_output(a.out, mhgr::to_json(mhgr::emit(g, r)));
  return r.witnesses.empty() ? kExitNone : kExitWitness;
}

// Representative groups for class-level catalog entries.
std::vector<std::string> representatives(const std::string& tag) {
  if (tag == mhgr::kRankLe2Class) return {"C7", "D8"};
  if (tag == mhgr::kRank3Class) return {"C2^2xC4"};
  return {tag};
}

int run_catalog_list(bool check) {
  int failures = 0;
  for (const mhgr::CatalogEntry& e : mhgr::catalog_entries()) {
    std::string groups;
    for (const auto& t : e.groups) groups += (groups.empty() ? "" : ",") + t;
    std::string status = e.lift_infeasible ? "lift-infeasible" : e.replacement ? "replacement" : "ok";
    if (check) {
      for (const auto& t : e.groups)
        for (const auto& spec : representatives(t)) {
          const mhgr::ConnectionMatrix cm = e.build(group_arg(spec));
          bool good;
          if (e.kind == mhgr::CatalogKind::kDirect) {
            good = mhgr::is_m_hgr(cm).holds;
          } else {
            good = mhgr::is_m_pgsr(cm).holds && (e.lift_infeasible || mhgr::check_lift_base(cm, false).ok);
          }
          if (!good) {
            status += " FAILED(" + spec + ")";
            ++failures;
          }
        }
      if (status.find("FAILED") == std::string::npos) status += " verified";
    }
    std::printf("%-16s m=%d %-6s %-28s %s\n", groups.c_str(), e.m, mhgr::to_string(e.kind).c_str(),
                status.c_str(), e.provenance.c_str());
  }
  return failures ? kExitError : kExitWitness;
}

int run_oracle_aut(const std::string& path, bool engine) {
  const mhgr::Graph g = mhgr::load_graph_file(path);
  if (engine) {
    std::cout << mhgr::automorphisms(g).order.str() << '\n';
  } else {
    if (g.num_vertices() > 9)
      throw mhgr::CapacityError("brute-force oracle handles at most 9 vertices, graph has " +
                                std::to_string(g.num_vertices()));
    std::cout << mhgr::brute_force_aut_order(g).str() << '\n';
  }
  return kExitWitness;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"m-Haar graphical representations of finite groups"};
  app.footer(kFooter);
  app.set_version_flag("--version", mhgr::tool_version());
  app.require_subcommand(1);

  SynthesizeArgs syn;
  auto* synthesize = app.add_subcommand("synthesize", "Build an m-HGR of a group or report why none exists");
  synthesize->add_option("--group", syn.group, "Group expression, e.g. C6, D8, C2^4xC3")->required();
  synthesize->add_option("-m", syn.m, "Number of parts")->required();
  synthesize->add_flag("--verify", syn.verify, "Recompute |Aut| and fail if the witness does not check out");
  synthesize->add_option("--out", syn.out, "Write output to a file instead of stdout");
  synthesize->add_option("--format", syn.format, "Witness output format")
      ->check(CLI::IsMember({"json", "edgelist", "graph6"}));
  synthesize->add_option("--seed", syn.seed, "Seed for randomized routes (large m for C1, C2)");

  std::string verify_path;
  auto* verify = app.add_subcommand("verify", "Check a connection-matrix JSON or a certificate");
  verify->add_option("file", verify_path, "Matrix or certificate JSON")->required();

  SearchArgs se;
  auto* search = app.add_subcommand("search", "Exhaustively decide existence for (G, m)");
  search->add_option("--group", se.group, "Group expression")->required();
  search->add_option("-m", se.m, "Number of parts")->required();
  search->add_option("--mode", se.mode, "exhaustive, or normalized (identity forced along a spanning forest)")
      ->check(CLI::IsMember({"exhaustive", "normalized"}));
  search->add_flag("--first-witness", se.first_witness, "Stop at the first witness");
  search->add_option("--workers", se.workers, "Worker threads")->check(CLI::PositiveNumber);
  search->add_option("--budget", se.budget, "Maximum number of regular candidates");
  search->add_flag("--json", se.json, "Print the search report as JSON");
  search->add_option("--out", se.out, "Write a certificate to this file");

  bool check = false;
  auto* catalog = app.add_subcommand("catalog", "Inspect the built-in constructions");
  catalog->require_subcommand(1);
  auto* list = catalog->add_subcommand("list", "List catalog entries");
  list->add_flag("--check", check, "Verify each entry on its groups");

  std::string graph_path;
  bool engine = false;
  auto* oracle = app.add_subcommand("oracle-aut", "Automorphism group order by brute force (<= 9 vertices)");
  oracle->add_option("file", graph_path, "Edge list or graph6 file")->required();
  oracle->add_flag("--engine", engine, "Use the refinement engine instead");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitError;
  }

  try {
    if (*synthesize) return run_synthesize(syn);
    if (*verify) return run_verify(verify_path);
    if (*search) return run_search(se);
    if (*list) return run_catalog_list(check);
    if (*oracle) return run_oracle_aut(graph_path, engine);
  } catch (const mhgr::CapacityError& e) {
    std::cerr << "capacity: " << e.what() << '\n';
    return kExitCapacity;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitError;
  }
  return kExitError;
}
