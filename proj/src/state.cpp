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

#include "dtc/state.hpp"

#include <stdexcept>
#include <string>

namespace dtc {

PureState::PureState(int qubits, Amplitudes amps) : n(qubits), amplitudes(std::move(amps)) {
  if (qubits < 0 || qubits > 30) throw std::invalid_argument("dense state supports 0..30 qubits");
  if (amplitudes.size() != (Eigen::Index{1} << qubits)) {
    throw std::invalid_argument("amplitude vector length is not 2^n");
  }
}

PureState PureState::zeros(int qubits) {
  if (qubits < 0 || qubits > 30) throw std::invalid_argument("dense state supports 0..30 qubits");
  return PureState(qubits, Amplitudes::Zero(Eigen::Index{1} << qubits));
}

PureState PureState::basis(int qubits, std::uint64_t index) {
  PureState s = zeros(qubits);
  if (index >= s.dimension()) throw std::out_of_range("basis index out of range");
  s.amplitudes[static_cast<Eigen::Index>(index)] = 1.0;
  return s;
}

std::string ket_label(std::uint64_t index, int n) {
  std::string out(static_cast<std::size_t>(n), '0');
  for (int i = 0; i < n; ++i) {
    if ((index >> i) & 1U) out[static_cast<std::size_t>(i)] = '1';
  }
  return out;
}

Complex inner_product(const PureState& bra, const PureState& ket) {
  if (bra.n != ket.n) throw std::invalid_argument("inner product of states with different n");
  return bra.amplitudes.dot(ket.amplitudes);
}

}  // namespace dtc
