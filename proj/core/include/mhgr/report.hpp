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

#ifndef MHGR_REPORT_HPP_
#define MHGR_REPORT_HPP_

#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "mhgr/constructions.hpp"
#include "mhgr/mcayley.hpp"
#include "mhgr/permutation.hpp"
#include "mhgr/search.hpp"

namespace mhgr {

inline constexpr int kCertificateSchema = 1;

const char* tool_version();

enum class CertificateKind { kHgr, kPgsr, kNonexistenceSearch, kNonexistenceClassified };
std::string to_string(CertificateKind k);

struct Evidence {
  BigInt aut_order = 0;
  int group_order = 0;
  bool regular = false;
  bool diagonal_empty = false;
  bool orbits_are_parts = false;
};

struct SearchStats {
  std::string mode;
  std::string assignment_space;
  std::uint64_t candidates_examined = 0;
  std::uint64_t regular_candidates = 0;
  bool complete = false;
};

struct Certificate {
  std::string tool_version;
  std::shared_ptr<const Group> group;
  int m = 0;
  CertificateKind kind = CertificateKind::kHgr;
  std::string route;
  char clause = 0;  // 'a'..'d' for classified nonexistence
  std::string detail;
  std::optional<ConnectionMatrix> matrix;
  std::optional<Evidence> evidence;
  std::optional<SearchStats> search;
};

// Witness outcomes are verified here when synthesize ran without verification.
Certificate emit(std::shared_ptr<const Group> g, int m, const SynthesisOutcome& outcome);
// HGR certificate for the first witness, otherwise nonexistence-search.
Certificate emit(std::shared_ptr<const Group> g, const SearchReport& report);

std::string to_json(const Certificate& cert, int indent = 2);
Certificate certificate_from_json(std::string_view text);

struct ReverifyResult {
  bool ok = false;
  std::vector<std::string> mismatched;  // evidence field names
  std::string message;
};

// Rebuilds everything from the certificate alone: the graph from the
// embedded matrix, the classification clause, or the search counts.
ReverifyResult reverify(const Certificate& cert);

// {"group": ..., "m": m, "entries": [{"i": 1, "j": 2, "elems": [...]}, ...]}
// Parts are 1-based. Elements are table indices, or names on input.
std::string matrix_to_json(const ConnectionMatrix& cm, int indent = 2);
ConnectionMatrix matrix_from_json(std::string_view text);

std::string search_report_to_json(const SearchReport& report, int indent = 2);

}  // namespace mhgr

#endif  // MHGR_REPORT_HPP_
