// Copyright 2026 The Multiplicity Authors.
//
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

#ifndef MULTIPLICITY_EDGE_MASK_HPP_
#define MULTIPLICITY_EDGE_MASK_HPP_

#include <array>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <functional>

namespace multiplicity {

inline constexpr int kMaxPoints = 22;
inline constexpr int kMaxEdges = kMaxPoints * (kMaxPoints - 1) / 2;

// Fixed-width set over the C(n,2) candidate segments of a point set.
class EdgeMask {
 public:
  static constexpr int kWords = 4;
  static constexpr int kBits = 64 * kWords;
  static_assert(kMaxEdges <= kBits);

  constexpr EdgeMask() = default;

  static EdgeMask first_n(int count) {
    EdgeMask m;
    for (int w = 0; w < kWords && count > 0; ++w, count -= 64)
      m.words_[w] = count >= 64 ? ~std::uint64_t{0} : ((std::uint64_t{1} << count) - 1);
    return m;
  }

  void set(int i) { words_[i >> 6] |= std::uint64_t{1} << (i & 63); }
  void reset(int i) { words_[i >> 6] &= ~(std::uint64_t{1} << (i & 63)); }
  bool test(int i) const { return (words_[i >> 6] >> (i & 63)) & 1U; }

  bool any() const {
    return (words_[0] | words_[1] | words_[2] | words_[3]) != 0;
  }
  bool none() const { return !any(); }
  int count() const {
    int c = 0;
    for (auto w : words_) c += std::popcount(w);
    return c;
  }
  // Lowest member, or -1.
  int first() const {
    for (int w = 0; w < kWords; ++w)
      if (words_[w]) return 64 * w + std::countr_zero(words_[w]);
    return -1;
  }
  // Lowest member strictly above i, or -1.
  int next(int i) const {
    ++i;
    if (i >= kBits) return -1;
    int w = i >> 6;
    std::uint64_t cur = words_[w] & (~std::uint64_t{0} << (i & 63));
    while (true) {
      if (cur) return 64 * w + std::countr_zero(cur);
      if (++w == kWords) return -1;
      cur = words_[w];
    }
  }
  template <class F>
  void for_each(F&& f) const {
    for (int w = 0; w < kWords; ++w)
      for (std::uint64_t cur = words_[w]; cur; cur &= cur - 1)
        f(64 * w + std::countr_zero(cur));
  }

  bool intersects(const EdgeMask& o) const {
    for (int w = 0; w < kWords; ++w)
      if (words_[w] & o.words_[w]) return true;
    return false;
  }
  bool is_subset_of(const EdgeMask& o) const {
    for (int w = 0; w < kWords; ++w)
      if (words_[w] & ~o.words_[w]) return false;
    return true;
  }
  EdgeMask without(const EdgeMask& o) const {
    EdgeMask r;
    for (int w = 0; w < kWords; ++w) r.words_[w] = words_[w] & ~o.words_[w];
    return r;
  }

  EdgeMask& operator&=(const EdgeMask& o) {
    for (int w = 0; w < kWords; ++w) words_[w] &= o.words_[w];
    return *this;
  }
  EdgeMask& operator|=(const EdgeMask& o) {
    for (int w = 0; w < kWords; ++w) words_[w] |= o.words_[w];
    return *this;
  }
  friend EdgeMask operator&(EdgeMask a, const EdgeMask& b) { return a &= b; }
  friend EdgeMask operator|(EdgeMask a, const EdgeMask& b) { return a |= b; }
  friend bool operator==(const EdgeMask&, const EdgeMask&) = default;
  friend auto operator<=>(const EdgeMask&, const EdgeMask&) = default;

  std::size_t hash() const {
    std::size_t h = 0;
    for (auto w : words_) h = h * 0x9E3779B97F4A7C15ULL + std::hash<std::uint64_t>{}(w);
    return h;
  }

 private:
  std::array<std::uint64_t, kWords> words_{};
};

struct EdgeMaskHash {
  std::size_t operator()(const EdgeMask& m) const { return m.hash(); }
};

}  // namespace multiplicity

#endif  // MULTIPLICITY_EDGE_MASK_HPP_
