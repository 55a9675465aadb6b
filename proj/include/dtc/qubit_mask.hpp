// Copyright 2026 The dtc Authors
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

#pragma once

#include <array>
#include <bit>
#include <compare>
#include <cstddef>
#include <cstdint>

namespace dtc {

// Fixed-width bit set over qubits; bit q - 1 stands for qubit q. Compares as an
// unsigned integer.
class QubitMask {
 public:
  static constexpr int kWords = 4;
  static constexpr int kBits = 64 * kWords;

  constexpr QubitMask() = default;
  constexpr QubitMask(std::uint64_t low) : words_{low, 0, 0, 0} {}  // NOLINT

  static constexpr QubitMask bit(int q) {
    QubitMask m;
    m.words_[static_cast<std::size_t>(q / 64)] = std::uint64_t{1} << (q % 64);
    return m;
  }

  // Bits 0 .. n-1.
  static constexpr QubitMask first(int n) {
    QubitMask m;
    for (int w = 0; w < kWords; ++w) {
      const int fill = n - 64 * w;
      if (fill >= 64) m.words_[w] = ~std::uint64_t{0};
      else if (fill > 0) m.words_[w] = (std::uint64_t{1} << fill) - 1;
    }
    return m;
  }

  constexpr bool test(int q) const {
    return (words_[static_cast<std::size_t>(q / 64)] >> (q % 64)) & 1U;
  }
  constexpr void set(int q) { words_[static_cast<std::size_t>(q / 64)] |= std::uint64_t{1} << (q % 64); }
  constexpr void flip(int q) { words_[static_cast<std::size_t>(q / 64)] ^= std::uint64_t{1} << (q % 64); }

  constexpr bool any() const { return (words_[0] | words_[1] | words_[2] | words_[3]) != 0; }
  constexpr bool none() const { return !any(); }

  constexpr int count() const {
    int c = 0;
    for (auto w : words_) c += std::popcount(w);
    return c;
  }

  // Index of the lowest / highest set bit, -1 when empty.
  constexpr int lowest() const {
    for (int w = 0; w < kWords; ++w)
      if (words_[w] != 0) return 64 * w + std::countr_zero(words_[w]);
    return -1;
  }
  constexpr int highest() const {
    for (int w = kWords - 1; w >= 0; --w)
      if (words_[w] != 0) return 64 * w + 63 - std::countl_zero(words_[w]);
    return -1;
  }

  // Low 64 bits; state-vector code only handles n <= 30.
  constexpr std::uint64_t low() const { return words_[0]; }
  constexpr std::uint64_t word(int w) const { return words_[static_cast<std::size_t>(w)]; }

  constexpr QubitMask& operator&=(const QubitMask& o) {
    for (int w = 0; w < kWords; ++w) words_[w] &= o.words_[w];
    return *this;
  }
  constexpr QubitMask& operator|=(const QubitMask& o) {
    for (int w = 0; w < kWords; ++w) words_[w] |= o.words_[w];
    return *this;
  }
  constexpr QubitMask& operator^=(const QubitMask& o) {
    for (int w = 0; w < kWords; ++w) words_[w] ^= o.words_[w];
    return *this;
  }
  friend constexpr QubitMask operator&(QubitMask a, const QubitMask& b) { return a &= b; }
  friend constexpr QubitMask operator|(QubitMask a, const QubitMask& b) { return a |= b; }
  friend constexpr QubitMask operator^(QubitMask a, const QubitMask& b) { return a ^= b; }
  friend constexpr QubitMask operator~(QubitMask a) {
    for (auto& w : a.words_) w = ~w;
    return a;
  }

  friend constexpr bool operator==(const QubitMask&, const QubitMask&) = default;
  friend constexpr std::strong_ordering operator<=>(const QubitMask& a, const QubitMask& b) {
    for (int w = kWords - 1; w >= 0; --w) {
      if (a.words_[w] != b.words_[w]) return a.words_[w] <=> b.words_[w];
    }
    return std::strong_ordering::equal;
  }

 private:
  std::array<std::uint64_t, kWords> words_{};
};

constexpr int popcount(const QubitMask& m) { return m.count(); }

}  // namespace dtc
