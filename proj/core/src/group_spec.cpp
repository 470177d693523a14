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

#include <cctype>

#include "mhgr/error.hpp"
#include "mhgr/group_io.hpp"

namespace mhgr {
namespace {

bool is_prime(int p) {
  if (p < 2) return false;
  for (int d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

class SpecParser {
 public:
  explicit SpecParser(std::string_view s) : s_(s) {}

  Group parse() {
    if (s_.empty()) fail("a group factor");
    std::vector<Group> factors;
    factors.push_back(factor());
    while (pos_ < s_.size()) {
      if (s_[pos_] != 'x') fail("'x' or end of input");
      ++pos_;
      factors.push_back(factor());
    }
    if (factors.size() == 1) return std::move(factors.front());
    return direct_product(factors);
  }

 private:
  [[noreturn]] void fail(const std::string& expected) const {
    std::string found = pos_ < s_.size() ? "'" + std::string(1, s_[pos_]) + "'" : "end of input";
    throw InvalidArgument("group spec '" + std::string(s_) + "': at position " +
                          std::to_string(pos_) + ": expected " + expected + ", found " + found);
  }

  bool accept(std::string_view tok) {
    if (s_.substr(pos_, tok.size()) == tok) {
      pos_ += tok.size();
      return true;
    }
    return false;
  }

  int number() {
    const std::size_t start = pos_;
    long long v = 0;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
      v = v * 10 + (s_[pos_] - '0');
      if (v > 1'000'000) fail("a number of reasonable size");
      ++pos_;
    }
    if (pos_ == start) fail("a number");
    return static_cast<int>(v);
  }

  Group factor() {
    if (accept("Q8")) return quaternion8();
    if (accept("A4")) return alternating4();
    if (accept("X27")) return extraspecial27();
    if (accept("@")) {
      std::string path(s_.substr(pos_));
      if (path.empty()) fail("a file path");
      pos_ = s_.size();
      return load_group_table(path);
    }
    if (accept("D")) {
      const std::size_t at = pos_;
      const int n = number();
      if (n < 6 || n % 2 != 0) {
        pos_ = at;
        fail("an even dihedral ORDER >= 6 (D6 is S3, D8 has order 8)");
      }
      return dihedral(n);
    }
    if (accept("C")) {
      const std::size_t at = pos_;
      const int n = number();
      if (n < 1) {
        pos_ = at;
        fail("a cyclic order >= 1");
      }
      if (!accept("^")) return cyclic(n);
      const int k = number();
      if (k < 1) fail("an exponent >= 1");
      if (k == 1) return cyclic(n);
      if (is_prime(n)) return elementary_abelian(n, k);
      std::vector<Group> copies(k, cyclic(n));
      return direct_product(copies);
    }
    fail("one of C, D, Q8, A4, X27, @");
  }

  std::string_view s_;
  std::size_t pos_ = 0;
};

}  // namespace

Group parse_group_spec(std::string_view spec) { return SpecParser(spec).parse(); }

std::string group_spec_string(const Group& g) {
  if (g.descriptor().is_custom()) return "";
  return g.descriptor().to_string();
}

}  // namespace mhgr
