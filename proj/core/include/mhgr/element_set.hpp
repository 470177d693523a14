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

#ifndef MHGR_ELEMENT_SET_HPP_
#define MHGR_ELEMENT_SET_HPP_

#include <array>
#include <bit>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <vector>

namespace mhgr {

using Element = std::int32_t;

inline constexpr int kMaxGroupOrder = 512;

// Fixed-width bitmask over element indices [0, kMaxGroupOrder).
class ElementSet {
 public:
  static constexpr int kWords = kMaxGroupOrder / 64;

  constexpr ElementSet() = default;
  ElementSet(std::initializer_list<Element> elems) {
    for (Element e : elems) insert(e);
  }
  static ElementSet from_vector(const std::vector<Element>& elems) {
    ElementSet s;
    for (Element e : elems) s.insert(e);
    return s;
  }

  bool contains(Element e) const {
    return (words_[e >> 6] >> (e & 63)) & 1U;
  }
  void insert(Element e) { words_[e >> 6] |= std::uint64_t{1} << (e & 63); }
  void erase(Element e) { words_[e >> 6] &= ~(std::uint64_t{1} << (e & 63)); }

  int size() const {
    int c = 0;
    for (auto w : words_) c += std::popcount(w);
    return c;
  }
  bool empty() const {
    for (auto w : words_)
      if (w != 0) return false;
    return true;
  }

  // Smallest member >= from, or -1.
  Element next(Element from) const;
  Element first() const { return next(0); }

  std::vector<Element> to_vector() const;

  ElementSet& operator|=(const ElementSet& o) {
    for (int i = 0; i < kWords; ++i) words_[i] |= o.words_[i];
    return *this;
  }
  ElementSet& operator&=(const ElementSet& o) {
    for (int i = 0; i < kWords; ++i) words_[i] &= o.words_[i];
    return *this;
  }
  friend ElementSet operator|(ElementSet a, const ElementSet& b) { return a |= b; }
  friend ElementSet operator&(ElementSet a, const ElementSet& b) { return a &= b; }

  // Low 64 bits; only meaningful for groups of order <= 64.
  std::uint64_t low_word() const { return words_[0]; }
  static ElementSet from_low_word(std::uint64_t w) {
    ElementSet s;
    s.words_[0] = w;
    return s;
  }

  friend bool operator==(const ElementSet&, const ElementSet&) = default;
  // Orders by the sorted member list, lexicographically.
  friend std::strong_ordering operator<=>(const ElementSet& a, const ElementSet& b);

  template <typename F>
  void for_each(F&& f) const {
    for (int w = 0; w < kWords; ++w) {
      std::uint64_t bits = words_[w];
      while (bits != 0) {
        int b = std::countr_zero(bits);
        f(static_cast<Element>(w * 64 + b));
        bits &= bits - 1;
      }
    }
  }

 private:
  std::array<std::uint64_t, kWords> words_{};
};

}  // namespace mhgr

#endif  // MHGR_ELEMENT_SET_HPP_
