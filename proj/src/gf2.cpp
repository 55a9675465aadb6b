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

#include "dtc/gf2.hpp"

#include <algorithm>

namespace dtc {

Gf2Basis::Gf2Basis(std::span<const PauliOperator> generators) {
  for (const auto& g : generators) insert(to_symplectic(g));
}

SymplecticVector Gf2Basis::reduce(SymplecticVector v) const {
  for (const auto& row : rows_) {
    if (v.test(row.leading_bit())) v ^= row;
  }
  return v;
}

bool Gf2Basis::insert(SymplecticVector v) {
  v = reduce(v);
  if (v.is_zero()) return false;
  const int lead = v.leading_bit();
  const auto at = std::find_if(rows_.begin(), rows_.end(),
                               [lead](const SymplecticVector& r) { return r.leading_bit() < lead; });
  rows_.insert(at, v);
  return true;
}

int symplectic_rank(std::span<const PauliOperator> ops) { return Gf2Basis(ops).rank(); }

std::vector<SymplecticVector> symplectic_complement(std::span<const PauliOperator> ops, int n) {
  // Column c < n is the x bit of qubit c, column n + c the z bit. A constraint row
  // for s has s.z in the x columns and s.x in the z columns.
  const int cols = 2 * n;
  auto column_bit = [n](int c) { return c < n ? c : SymplecticVector::kHalf + (c - n); };

  std::vector<SymplecticVector> rows;
  rows.reserve(ops.size());
  for (const auto& s : ops) rows.push_back({s.z, s.x});

  std::vector<int> pivot_cols;
  std::size_t r = 0;
  for (int c = 0; c < cols && r < rows.size(); ++c) {
    const int bit = column_bit(c);
    std::size_t sel = r;
    while (sel < rows.size() && !rows[sel].test(bit)) ++sel;
    if (sel == rows.size()) continue;
    std::swap(rows[r], rows[sel]);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (i != r && rows[i].test(bit)) rows[i] ^= rows[r];
    }
    pivot_cols.push_back(c);
    ++r;
  }

  std::vector<SymplecticVector> kernel;
  std::size_t next_pivot = 0;
  for (int f = 0; f < cols; ++f) {
    if (next_pivot < pivot_cols.size() && pivot_cols[next_pivot] == f) {
      ++next_pivot;
      continue;
    }
    SymplecticVector v;
    v.flip(column_bit(f));
    for (std::size_t i = 0; i < pivot_cols.size(); ++i) {
      if (rows[i].test(column_bit(f))) v.flip(column_bit(pivot_cols[i]));
    }
    kernel.push_back(v);
  }
  return kernel;
}

}  // namespace dtc
