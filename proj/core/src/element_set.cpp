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

#include "mhgr/element_set.hpp"

namespace mhgr {

Element ElementSet::next(Element from) const {
  if (from < 0) from = 0;
  if (from >= kMaxGroupOrder) return -1;
  int w = from >> 6;
  std::uint64_t bits = words_[w] & (~std::uint64_t{0} << (from & 63));
  while (true) {
    if (bits != 0) return w * 64 + std::countr_zero(bits);
    if (++w == kWords) return -1;
    bits = words_[w];
  }
}

std::vector<Element> ElementSet::to_vector() const {
  std::vector<Element> out;
  out.reserve(size());
  for_each([&](Element e) { out.push_back(e); });
  return out;
}

std::strong_ordering operator<=>(const ElementSet& a, const ElementSet& b) {
  Element x = a.first();
  Element y = b.first();
  while (x >= 0 && y >= 0) {
    if (x != y) return x <=> y;
    x = a.next(x + 1);
    y = b.next(y + 1);
  }
  if (x < 0 && y < 0) return std::strong_ordering::equal;
  return x < 0 ? std::strong_ordering::less : std::strong_ordering::greater;
}

}  // namespace mhgr
