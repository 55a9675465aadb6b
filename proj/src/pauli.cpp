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

#include "dtc/pauli.hpp"

#include <algorithm>
#include <array>
#include <stdexcept>

namespace dtc {
namespace {

void check_n(int n) {
  if (n < 0 || n > kMaxQubits) {
    throw std::invalid_argument("qubit count must be in 0.." + std::to_string(kMaxQubits));
  }
}

void check_same_n(const PauliOperator& a, const PauliOperator& b) {
  if (a.n != b.n) {
    throw std::invalid_argument("Pauli operators act on different qubit counts (" +
                                std::to_string(a.n) + " vs " + std::to_string(b.n) + ")");
  }
}

constexpr std::array<Complex, 4> kIPowers = {Complex{1, 0}, Complex{0, 1}, Complex{-1, 0},
                                             Complex{0, -1}};

}  // namespace

QubitMask qubit_mask(int n) { return QubitMask::first(n); }

PauliOperator PauliOperator::identity(int n) {
  check_n(n);
  return PauliOperator{n, 0, 0, 0};
}

PauliOperator PauliOperator::from_masks(int n, QubitMask x, QubitMask z) {
  check_n(n);
  if (((x | z) & ~qubit_mask(n)).any()) throw std::invalid_argument("mask has bits beyond n");
  return PauliOperator{n, x, z, static_cast<std::uint8_t>(popcount(x & z) & 3)};
}

PauliOperator parse_pauli(std::string_view text, int n) {
  check_n(n);
  QubitMask x;
  QubitMask z;
  std::size_t pos = 0;
  int prefix = 0;
  if (pos < text.size() && text[pos] == '-') {
    prefix = 2;
    ++pos;
  }
  if (pos < text.size() && text[pos] == 'i') {
    prefix += 1;
    ++pos;
  }
  if (text.substr(pos) == "I") return times_i_pow(PauliOperator::identity(n), prefix);
  if (pos == text.size()) throw std::invalid_argument("empty Pauli string");
  while (pos < text.size()) {
    const char letter = text[pos];
    if (letter != 'X' && letter != 'Y' && letter != 'Z') {
      throw std::invalid_argument("unknown Pauli letter '" + std::string(1, letter) + "' in \"" +
                                  std::string(text) + "\"");
    }
    ++pos;
    const std::size_t digits_begin = pos;
    long index = 0;
    while (pos < text.size() && text[pos] >= '0' && text[pos] <= '9') {
      index = std::min<long>(index * 10 + (text[pos] - '0'), kMaxQubits + 1);
      ++pos;
    }
    if (pos == digits_begin) {
      throw std::invalid_argument("missing qubit index after '" + std::string(1, letter) + "'");
    }
    if (index < 1 || index > n) {
      throw std::invalid_argument("qubit index " + std::to_string(index) + " out of range 1.." +
                                  std::to_string(n));
    }
    const int bit = static_cast<int>(index - 1);
    if (x.test(bit) || z.test(bit)) {
      throw std::invalid_argument("qubit index " + std::to_string(index) + " repeated");
    }
    if (letter != 'Z') x.set(bit);
    if (letter != 'X') z.set(bit);
  }
  return times_i_pow(PauliOperator::from_masks(n, x, z), prefix);
}

std::string to_string(const PauliOperator& op) {
  static constexpr std::array<const char*, 4> kPrefix = {"", "i", "-", "-i"};
  const int relative = (op.phase - popcount(op.x & op.z)) & 3;
  std::string out = kPrefix[static_cast<std::size_t>(relative)];
  for (int i = 0; i < op.n; ++i) {
    const bool has_x = op.x.test(i);
    const bool has_z = op.z.test(i);
    if (!has_x && !has_z) continue;
    out += has_x ? (has_z ? 'Y' : 'X') : 'Z';
    out += std::to_string(i + 1);
  }
  if (op.x.none() && op.z.none()) out += 'I';
  return out;
}

PauliOperator multiply(const PauliOperator& a, const PauliOperator& b) {
  check_same_n(a, b);
  // Z^{z_a} X^{x_b} = (-1)^{|z_a & x_b|} X^{x_b} Z^{z_a}
  const int phase = a.phase + b.phase + 2 * popcount(a.z & b.x);
  return PauliOperator{a.n, a.x ^ b.x, a.z ^ b.z, static_cast<std::uint8_t>(phase & 3)};
}

PauliOperator times_i_pow(PauliOperator op, int k) {
  op.phase = static_cast<std::uint8_t>((op.phase + (k % 4) + 4) & 3);
  return op;
}

bool commutes(const PauliOperator& a, const PauliOperator& b) {
  check_same_n(a, b);
  return ((popcount(a.x & b.z) + popcount(a.z & b.x)) & 1) == 0;
}

bool is_hermitian(const PauliOperator& a) {
  return ((a.phase - popcount(a.x & a.z)) & 1) == 0;
}

Complex basis_phase(const PauliOperator& a, std::uint64_t b) {
  const int k = a.phase + 2 * (std::popcount(a.z.low() & b) & 1);
  return kIPowers[static_cast<std::size_t>(k & 3)];
}

PureState apply(const PauliOperator& a, const PureState& s) {
  if (a.n != s.n) {
    throw std::invalid_argument("operator acts on " + std::to_string(a.n) +
                                " qubits but the state has " + std::to_string(s.n));
  }
  PureState out = PureState::zeros(s.n);
  const auto dim = static_cast<std::uint64_t>(s.dimension());
  for (std::uint64_t b = 0; b < dim; ++b) {
    const Complex amp = s.amplitudes[static_cast<Eigen::Index>(b)];
    if (amp == Complex{}) continue;
    out.amplitudes[static_cast<Eigen::Index>(b ^ a.x.low())] = basis_phase(a, b) * amp;
  }
  return out;
}

}  // namespace dtc
