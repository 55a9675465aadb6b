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
#include <string>
#include <string_view>

#include "dtc/qubit_mask.hpp"
#include "dtc/state.hpp"

namespace dtc {

inline constexpr int kMaxQubits = QubitMask::kBits;

// n-qubit Pauli operator i^phase * X^x * Z^z in the symplectic bit-mask form.
// Bit i of a mask refers to qubit i+1. A Y on qubit i has both mask bits set;
// the factor i that makes it Hermitian lives in `phase`.
struct PauliOperator {
  int n = 0;
  QubitMask x;
  QubitMask z;
  std::uint8_t phase = 0;

  static PauliOperator identity(int n);
  // Product of letters (X, Y, Z) on the masked qubits, with Y = iXZ.
  static PauliOperator from_masks(int n, QubitMask x, QubitMask z);

  bool is_identity() const { return x.none() && z.none() && phase == 0; }
  bool is_x_type() const { return z.none(); }
  bool is_z_type() const { return x.none(); }

  friend bool operator==(const PauliOperator&, const PauliOperator&) = default;
};

QubitMask qubit_mask(int n);

// Factors such as "X1Y3Z4", optionally prefixed by "-", "i" or "-i"; "I" is the identity.
PauliOperator parse_pauli(std::string_view text, int n);

// Factors in ascending qubit order. Operators that are not a plain product of
// letters get a "-", "i" or "-i" prefix.
std::string to_string(const PauliOperator& op);

PauliOperator multiply(const PauliOperator& a, const PauliOperator& b);
inline PauliOperator operator*(const PauliOperator& a, const PauliOperator& b) {
  return multiply(a, b);
}
// Multiplies the operator by i^k.
PauliOperator times_i_pow(PauliOperator op, int k);

bool commutes(const PauliOperator& a, const PauliOperator& b);

inline int weight(const PauliOperator& a) { return popcount(a.x | a.z); }

bool is_hermitian(const PauliOperator& a);

PureState apply(const PauliOperator& a, const PureState& s);

// i^phase * (-1)^{|z & b|}: the coefficient picked up by basis state b.
Complex basis_phase(const PauliOperator& a, std::uint64_t b);

}  // namespace dtc
