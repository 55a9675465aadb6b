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

#include <complex>
#include <cstdint>

#include <Eigen/Dense>

namespace dtc {

using Complex = std::complex<double>;
using Amplitudes = Eigen::VectorXcd;

// Dense state vector over the 2^n computational basis states. Basis index bit i
// holds the value of qubit i+1 (qubit 1 is the least significant bit).
struct PureState {
  int n = 0;
  Amplitudes amplitudes;

  PureState() = default;
  PureState(int qubits, Amplitudes amps);

  static PureState basis(int qubits, std::uint64_t index);
  static PureState zeros(int qubits);

  std::size_t dimension() const { return static_cast<std::size_t>(amplitudes.size()); }
  double norm_squared() const { return amplitudes.squaredNorm(); }
};

// Basis-state label in qubit order, e.g. index 0b000101 on 6 qubits -> "101000".
std::string ket_label(std::uint64_t index, int n);

Complex inner_product(const PureState& bra, const PureState& ket);

}  // namespace dtc
