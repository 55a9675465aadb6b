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

#include <bit>
#include <cstdint>
#include <span>
#include <vector>

#include "dtc/pauli.hpp"

namespace dtc {

// Sign-free Pauli as a 2n-bit vector over GF(2): x bits in `x`, z bits in `z`.
struct SymplecticVector {
  QubitMask x;
  QubitMask z;

  bool is_zero() const { return x.none() && z.none(); }
  SymplecticVector& operator^=(const SymplecticVector& o) {
    x ^= o.x;
    z ^= o.z;
    return *this;
  }
  friend SymplecticVector operator^(SymplecticVector a, const SymplecticVector& b) { return a ^= b; }
  friend bool operator==(const SymplecticVector&, const SymplecticVector&) = default;

  static constexpr int kHalf = QubitMask::kBits;

  // Bit index in [0, 2 * kHalf): x bits first, then z bits.
  bool test(int bit) const { return bit < kHalf ? x.test(bit) : z.test(bit - kHalf); }
  void flip(int bit) {
    if (bit < kHalf) x.flip(bit);
    else z.flip(bit - kHalf);
  }
  // Highest set bit, or -1 for the zero vector.
  int leading_bit() const {
    if (z.any()) return kHalf + z.highest();
    return x.highest();
  }
};

inline SymplecticVector to_symplectic(const PauliOperator& p) { return {p.x, p.z}; }

inline int symplectic_product(const SymplecticVector& a, const SymplecticVector& b) {
  return (popcount(a.x & b.z) + popcount(a.z & b.x)) & 1;
}

// Incremental row-echelon basis of a GF(2) subspace of symplectic vectors.
class Gf2Basis {
 public:
  Gf2Basis() = default;
  explicit Gf2Basis(std::span<const PauliOperator> generators);

  // Returns true when v was independent of the current span (and was added).
  bool insert(SymplecticVector v);
  SymplecticVector reduce(SymplecticVector v) const;
  bool contains(const SymplecticVector& v) const { return reduce(v).is_zero(); }
  int rank() const { return static_cast<int>(rows_.size()); }

 private:
  std::vector<SymplecticVector> rows_;  // sorted by leading bit, descending
};

int symplectic_rank(std::span<const PauliOperator> ops);

// Basis of {v : <v, s> = 0 for every s in `ops`} over n qubits. Vectors are
// produced in order of their free coordinate (x coordinates first), so for a CSS
// generator set the pure-X vectors precede the pure-Z ones and no vector mixes.
std::vector<SymplecticVector> symplectic_complement(std::span<const PauliOperator> ops, int n);

}  // namespace dtc
