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

#include "mhgr/report.hpp"

#include <limits>

#include "json.hpp"
#include "mhgr/autgroup.hpp"
#include "mhgr/error.hpp"
#include "mhgr/group_io.hpp"

#ifndef MHGR_VERSION
#define MHGR_VERSION "0.0.0"
#endif

namespace mhgr {

using Json = nlohmann::ordered_json;

const char* tool_version() { return MHGR_VERSION; }

std::string to_string(CertificateKind k) {
  switch (k) {
    case CertificateKind::kHgr: return "HGR";
    case CertificateKind::kPgsr: return "PGSR";
    case CertificateKind::kNonexistenceSearch: return "nonexistence-search";
    case CertificateKind::kNonexistenceClassified: return "nonexistence-classified";
  }
  return "?";
}

namespace {

CertificateKind kind_from_string(const std::string& s) {
  for (auto k : {CertificateKind::kHgr, CertificateKind::kPgsr, CertificateKind::kNonexistenceSearch,
                 CertificateKind::kNonexistenceClassified})
    if (to_string(k) == s) return k;
  throw InvalidArgument("unknown certificate kind '" + s + "'");
}

Json group_node(const Group& g) {
  const std::string spec = group_spec_string(g);
  if (!spec.empty()) return spec;
  Json t;
  t["order"] = g.order();
  t["table"] = g.table();
  t["names"] = g.names();
  return t;
}

std::shared_ptr<const Group> group_from_node(const Json& node) {
  if (node.is_string()) return std::make_shared<const Group>(parse_group_spec(node.get<std::string>()));
  if (node.is_object()) return std::make_shared<const Group>(group_from_table_json(node.dump()));
  throw InvalidArgument("\"group\" must be a spec string or a table object");
}

Json matrix_node(const ConnectionMatrix& cm) {
  Json j;
  j["group"] = group_node(cm.group());
  j["m"] = cm.m();
  Json entries = Json::array();
  for (const MatrixEntry& e : cm.upper_entries()) {
    Json cell;
    cell["i"] = e.i + 1;
    cell["j"] = e.j + 1;
    cell["elems"] = e.elems.to_vector();
    entries.push_back(std::move(cell));
  }
  j["entries"] = std::move(entries);
  return j;
}

Element element_from_node(const Group& g, const Json& x) {
  if (x.is_number_integer()) {
    const auto v = x.get<long long>();
    if (v < 0 || v >= g.order())
      throw InvalidArgument("element index " + std::to_string(v) + " out of range for group of order " +
                            std::to_string(g.order()));
    return static_cast<Element>(v);
  }
  if (x.is_string()) {
    const auto& names = g.names();
    for (std::size_t k = 0; k < names.size(); ++k)
      if (names[k] == x.get<std::string>()) return static_cast<Element>(k);
    throw InvalidArgument("unknown element name '" + x.get<std::string>() + "'");
  }
  throw InvalidArgument("elements must be table indices or names");
}

ConnectionMatrix matrix_from_node(const Json& j) {
  if (!j.is_object() || !j.contains("group") || !j.contains("m") || !j.contains("entries"))
    throw InvalidArgument("matrix JSON needs \"group\", \"m\" and \"entries\"");
  auto g = group_from_node(j["group"]);
  if (!j["m"].is_number_integer() || j["m"].get<int>() < 1)
    throw InvalidArgument("\"m\" must be a positive integer");
  const int m = j["m"].get<int>();
  std::vector<MatrixEntry> upper, diagonal;
  for (const Json& cell : j["entries"]) {
    if (!cell.contains("i") || !cell.contains("j") || !cell.contains("elems") ||
        !cell["i"].is_number_integer() || !cell["j"].is_number_integer() || !cell["elems"].is_array())
      throw InvalidArgument("each entry needs integer \"i\", \"j\" and an \"elems\" array");
    const int i = cell["i"].get<int>() - 1, k = cell["j"].get<int>() - 1;
    if (i < 0 || k < 0 || i >= m || k >= m)
      throw InvalidArgument("entry (" + std::to_string(i + 1) + "," + std::to_string(k + 1) +
                            ") outside 1.." + std::to_string(m));
    if (i > k) throw InvalidArgument("entries must have i <= j (lower triangle is implied)");
    ElementSet s;
    for (const Json& x : cell["elems"]) s.insert(element_from_node(*g, x));
    (i == k ? diagonal : upper).push_back({i, k, s});
  }
  return ConnectionMatrix::from_entries(g, m, upper, diagonal);
}

Json parse_json(std::string_view text) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw InvalidArgument(std::string("malformed JSON: ") + e.what());
  }
}

Json big_node(const BigInt& v) {
  if (v >= 0 && v <= std::numeric_limits<std::uint64_t>::max()) return static_cast<std::uint64_t>(v);
  return v.str();
}

BigInt big_from_node(const Json& x) {
  if (x.is_number_unsigned() || x.is_number_integer()) return BigInt(x.get<long long>());
  if (x.is_string()) {
    try {
      return BigInt(x.get<std::string>());
    } catch (const std::exception&) {
    }
  }
  throw InvalidArgument("\"aut_order\" must be an integer or a decimal string");
}

Evidence evidence_from(const Verdict& v) {
  return Evidence{v.aut_order, v.group_order, v.regular, v.diagonal_empty, v.orbits_are_parts};
}

}  // namespace

Certificate emit(std::shared_ptr<const Group> g, int m, const SynthesisOutcome& outcome) {
  Certificate c;
  c.tool_version = tool_version();
  c.group = std::move(g);
  c.m = m;
  c.route = outcome.route;
  c.detail = outcome.detail;
  if (!outcome.exists()) {
    c.kind = CertificateKind::kNonexistenceClassified;
    c.clause = outcome.clause;
    return c;
  }
  const Verdict v = outcome.verdict ? *outcome.verdict : is_m_hgr(*outcome.witness);
  if (!v.holds) throw VerificationFailure("witness from route " + outcome.route + " fails: " + v.reason);
  c.kind = CertificateKind::kHgr;
  c.matrix = outcome.witness;
  c.evidence = evidence_from(v);
  return c;
}

Certificate emit(std::shared_ptr<const Group> g, const SearchReport& report) {
  Certificate c;
  c.tool_version = tool_version();
  c.group = std::move(g);
  c.m = report.m;
  c.route = "search";
  c.search = SearchStats{to_string(report.mode), report.assignment_space, report.candidates_examined,
                         report.regular_candidates, report.complete};
  if (report.witnesses.empty()) {
    if (!report.complete) throw InvalidArgument("an incomplete search cannot certify nonexistence");
    c.kind = CertificateKind::kNonexistenceSearch;
    if (const auto clause = exception_clause(*c.group, c.m)) c.clause = *clause;
    return c;
  }
  const Verdict v = is_m_hgr(report.witnesses.front());
  if (!v.holds) throw VerificationFailure("search witness fails: " + v.reason);
  c.kind = CertificateKind::kHgr;
  c.matrix = report.witnesses.front();
  c.evidence = evidence_from(v);
  return c;
}

std::string to_json(const Certificate& cert, int indent) {
  Json j;
  j["schema"] = kCertificateSchema;
  j["tool_version"] = cert.tool_version;
  j["kind"] = to_string(cert.kind);
  j["group"] = group_node(*cert.group);
  j["m"] = cert.m;
  j["route"] = cert.route;
  if (cert.clause) j["clause"] = std::string("(") + cert.clause + ")";
  if (!cert.detail.empty()) j["detail"] = cert.detail;
  if (cert.matrix) j["matrix"] = matrix_node(*cert.matrix);
  if (cert.evidence) {
    const Evidence& e = *cert.evidence;
    Json ev;
    ev["aut_order"] = big_node(e.aut_order);
    ev["group_order"] = e.group_order;
    ev["regular"] = e.regular;
    ev["diagonal_empty"] = e.diagonal_empty;
    ev["orbits_are_parts"] = e.orbits_are_parts;
    j["evidence"] = std::move(ev);
  }
  if (cert.search) {
    const SearchStats& s = *cert.search;
    Json sj;
    sj["mode"] = s.mode;
    sj["assignment_space"] = s.assignment_space;
    sj["candidates_examined"] = s.candidates_examined;
    sj["regular_candidates"] = s.regular_candidates;
    sj["complete"] = s.complete;
    j["search"] = std::move(sj);
  }
  return j.dump(indent);
}

Certificate certificate_from_json(std::string_view text) {
  const Json j = parse_json(text);
  if (!j.is_object()) throw InvalidArgument("certificate must be a JSON object");
  if (!j.contains("schema") || j["schema"] != kCertificateSchema)
    throw InvalidArgument("unsupported certificate schema (expected " + std::to_string(kCertificateSchema) + ")");
  try {
    Certificate c;
    c.tool_version = j.value("tool_version", "");
    c.kind = kind_from_string(j.at("kind").get<std::string>());
    c.group = group_from_node(j.at("group"));
    c.m = j.at("m").get<int>();
    c.route = j.value("route", "");
    c.detail = j.value("detail", "");
    if (j.contains("clause")) {
      const std::string s = j["clause"].get<std::string>();
      if (s.size() != 3 || s[0] != '(' || s[2] != ')') throw InvalidArgument("clause must look like \"(a)\"");
      c.clause = s[1];
    }
    if (j.contains("matrix")) {
      c.matrix = matrix_from_node(j["matrix"]);
      if (c.matrix->group() != *c.group || c.matrix->m() != c.m)
        throw InvalidArgument("embedded matrix disagrees with the certificate's group or m");
    }
    if (j.contains("evidence")) {
      const Json& ev = j["evidence"];
      Evidence e;
      e.aut_order = big_from_node(ev.at("aut_order"));
      e.group_order = ev.at("group_order").get<int>();
      e.regular = ev.at("regular").get<bool>();
      e.diagonal_empty = ev.at("diagonal_empty").get<bool>();
      e.orbits_are_parts = ev.at("orbits_are_parts").get<bool>();
      c.evidence = e;
    }
    if (j.contains("search")) {
      const Json& sj = j["search"];
      SearchStats s;
      s.mode = sj.at("mode").get<std::string>();
      s.assignment_space = sj.value("assignment_space", "");
      s.candidates_examined = sj.at("candidates_examined").get<std::uint64_t>();
      s.regular_candidates = sj.at("regular_candidates").get<std::uint64_t>();
      s.complete = sj.at("complete").get<bool>();
      c.search = s;
    }
    if ((c.kind == CertificateKind::kHgr || c.kind == CertificateKind::kPgsr) && (!c.matrix || !c.evidence))
      throw InvalidArgument(to_string(c.kind) + " certificate needs \"matrix\" and \"evidence\"");
    return c;
  } catch (const Json::exception& e) {
    throw InvalidArgument(std::string("malformed certificate: ") + e.what());
  }
}

ReverifyResult reverify(const Certificate& cert) {
  ReverifyResult r;
  auto mismatch = [&](const std::string& field, const std::string& claimed, const std::string& actual) {
    r.mismatched.push_back(field);
    if (!r.message.empty()) r.message += "; ";
    r.message += field + ": certificate says " + claimed + ", recomputed " + actual;
  };
  auto b = [](bool x) { return std::string(x ? "true" : "false"); };

  switch (cert.kind) {
    case CertificateKind::kHgr:
    case CertificateKind::kPgsr: {
      if (!cert.matrix || !cert.evidence) {
        r.message = "certificate carries no matrix or evidence";
        return r;
      }
      const bool hgr = cert.kind == CertificateKind::kHgr;
      const Verdict v = hgr ? is_m_hgr(*cert.matrix) : is_m_pgsr(*cert.matrix);
      const Evidence& e = *cert.evidence;
      if (e.aut_order != v.aut_order) mismatch("aut_order", e.aut_order.str(), v.aut_order.str());
      if (e.group_order != v.group_order)
        mismatch("group_order", std::to_string(e.group_order), std::to_string(v.group_order));
      if (e.regular != v.regular) mismatch("regular", b(e.regular), b(v.regular));
      if (e.diagonal_empty != v.diagonal_empty) mismatch("diagonal_empty", b(e.diagonal_empty), b(v.diagonal_empty));
      if (e.orbits_are_parts != v.orbits_are_parts)
        mismatch("orbits_are_parts", b(e.orbits_are_parts), b(v.orbits_are_parts));
      if (r.mismatched.empty() && !v.holds) {
        r.message = "evidence reproduces but the matrix is not an m-" + to_string(cert.kind) + ": " + v.reason;
        return r;
      }
      break;
    }
    case CertificateKind::kNonexistenceClassified: {
      const auto clause = exception_clause(*cert.group, cert.m);
      const std::string claimed = cert.clause ? std::string(1, cert.clause) : "none";
      const std::string actual = clause ? std::string(1, *clause) : "none";
      if (claimed != actual || !clause) mismatch("clause", claimed, actual);
      break;
    }
    case CertificateKind::kNonexistenceSearch: {
      if (!cert.search) {
        r.message = "certificate carries no search statistics";
        return r;
      }
      SearchOptions opts;
      opts.mode = cert.search->mode == "normalized" ? SearchMode::kNormalized : SearchMode::kExhaustive;
      const SearchReport rep = decide_existence(cert.group, cert.m, opts);
      if (!rep.witnesses.empty()) mismatch("witnesses", "0", "at least 1");
      if (rep.regular_candidates != cert.search->regular_candidates)
        mismatch("regular_candidates", std::to_string(cert.search->regular_candidates),
                 std::to_string(rep.regular_candidates));
      if (rep.candidates_examined != cert.search->candidates_examined)
        mismatch("candidates_examined", std::to_string(cert.search->candidates_examined),
                 std::to_string(rep.candidates_examined));
      break;
    }
  }
  r.ok = r.mismatched.empty();
  if (r.ok) r.message = "all evidence reproduces";
  return r;
}

std::string matrix_to_json(const ConnectionMatrix& cm, int indent) { return matrix_node(cm).dump(indent); }

ConnectionMatrix matrix_from_json(std::string_view text) {
  const Json j = parse_json(text);
  // A certificate is accepted too; its embedded matrix is used.
  if (j.is_object() && j.contains("schema")) {
    if (!j.contains("matrix")) throw InvalidArgument("certificate has no embedded matrix");
    return matrix_from_node(j["matrix"]);
  }
  return matrix_from_node(j);
}

std::string search_report_to_json(const SearchReport& report, int indent) {
  Json j;
  j["group"] = report.group;
  j["m"] = report.m;
  j["mode"] = to_string(report.mode);
  j["assignment_space"] = report.assignment_space;
  j["candidates_examined"] = report.candidates_examined;
  j["regular_candidates"] = report.regular_candidates;
  j["complete"] = report.complete;
  j["wall_time"] = report.wall_time;
  Json w = Json::array();
  for (const ConnectionMatrix& cm : report.witnesses) w.push_back(matrix_node(cm));
  j["witnesses"] = std::move(w);
  return j.dump(indent);
}

}  // namespace mhgr
