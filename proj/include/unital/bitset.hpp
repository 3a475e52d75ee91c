// Copyright 2026 The Unital Authors
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

#ifndef UNITAL_BITSET_HPP_
#define UNITAL_BITSET_HPP_

#include <bit>
#include <cstddef>
#include <cstdint>
#include <vector>

namespace unital {

// Fixed-width dynamic bitset over 64-bit words. Width is set at construction;
// binary operations require equal widths.
class Bitset {
 public:
  static constexpr int kNone = -1;

  Bitset() = default;
  explicit Bitset(int size)
      : size_(size), words_((static_cast<std::size_t>(size) + 63) / 64, 0) {}

  int size() const { return size_; }

  void set(int i) { words_[i >> 6] |= Bit(i); }
  void reset(int i) { words_[i >> 6] &= ~Bit(i); }
  bool test(int i) const { return (words_[i >> 6] & Bit(i)) != 0; }

  void clear() {
    for (auto& w : words_) w = 0;
  }

  int count() const {
    int c = 0;
    for (auto w : words_) c += std::popcount(w);
    return c;
  }

  bool none() const {
    for (auto w : words_)
      if (w != 0) return false;
    return true;
  }
  bool any() const { return !none(); }

  bool intersects(const Bitset& other) const {
    for (std::size_t k = 0; k < words_.size(); ++k)
      if ((words_[k] & other.words_[k]) != 0) return true;
    return false;
  }

  int intersection_count(const Bitset& other) const {
    int c = 0;
    for (std::size_t k = 0; k < words_.size(); ++k)
      c += std::popcount(words_[k] & other.words_[k]);
    return c;
  }

  bool is_subset_of(const Bitset& other) const {
    for (std::size_t k = 0; k < words_.size(); ++k)
      if ((words_[k] & ~other.words_[k]) != 0) return false;
    return true;
  }

  // Index of the lowest set bit at or after `from`, or kNone.
  int next(int from) const {
    if (from >= size_) return kNone;
    std::size_t k = static_cast<std::size_t>(from) >> 6;
    std::uint64_t w = words_[k] & (~std::uint64_t{0} << (from & 63));
    while (true) {
      if (w != 0) return static_cast<int>(k * 64 + std::countr_zero(w));
      if (++k == words_.size()) return kNone;
      w = words_[k];
    }
  }
  int first() const { return next(0); }

  template <typename Fn>
  void for_each(Fn&& fn) const {
    for (std::size_t k = 0; k < words_.size(); ++k) {
      std::uint64_t w = words_[k];
      while (w != 0) {
        fn(static_cast<int>(k * 64 + std::countr_zero(w)));
        w &= w - 1;
      }
    }
  }

  std::vector<int> to_vector() const {
    std::vector<int> out;
    out.reserve(static_cast<std::size_t>(count()));
    for_each([&](int i) { out.push_back(i); });
    return out;
  }

  static Bitset from_indices(int size, const std::vector<int>& indices) {
    Bitset b(size);
    for (int i : indices) b.set(i);
    return b;
  }

  Bitset& operator&=(const Bitset& o) {
    for (std::size_t k = 0; k < words_.size(); ++k) words_[k] &= o.words_[k];
    return *this;
  }
  Bitset& operator|=(const Bitset& o) {
    for (std::size_t k = 0; k < words_.size(); ++k) words_[k] |= o.words_[k];
    return *this;
  }
  // Set difference.
  Bitset& operator-=(const Bitset& o) {
    for (std::size_t k = 0; k < words_.size(); ++k) words_[k] &= ~o.words_[k];
    return *this;
  }

  friend Bitset operator&(Bitset a, const Bitset& b) { return a &= b; }
  friend Bitset operator|(Bitset a, const Bitset& b) { return a |= b; }
  friend Bitset operator-(Bitset a, const Bitset& b) { return a -= b; }
  friend bool operator==(const Bitset&, const Bitset&) = default;

 private:
  static std::uint64_t Bit(int i) { return std::uint64_t{1} << (i & 63); }

  int size_ = 0;
  std::vector<std::uint64_t> words_;
};

}  // namespace unital

#endif  // UNITAL_BITSET_HPP_
