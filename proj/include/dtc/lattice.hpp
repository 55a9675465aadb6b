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

#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "dtc/pauli.hpp"

namespace dtc {

// Planar point stored exactly: x = a / 2, y = b * sqrt(3) / 2. In these units the
// rhombus-tile qubit lattice is triangular with unit spacing, and nearest
// neighbours sit at offsets (+-2, 0) and (+-1, +-1).
struct ScaledPoint {
  int a = 0;
  int b = 0;
  friend auto operator<=>(const ScaledPoint&, const ScaledPoint&) = default;
  double x() const { return a / 2.0; }
  double y() const;
};

struct LatticeLayout {
  std::vector<ScaledPoint> data;
  std::vector<ScaledPoint> x_ancilla;
  std::vector<ScaledPoint> z_ancilla;
  // 0-based data-qubit indices measured by each ancilla, ascending.
  std::vector<std::vector<int>> x_adjacency;
  std::vector<std::vector<int>> z_adjacency;

  friend bool operator==(const LatticeLayout&, const LatticeLayout&) = default;
};

struct LogicalPair {
  PauliOperator x;
  PauliOperator z;
  friend bool operator==(const LogicalPair&, const LogicalPair&) = default;
};

struct CodeParameters {
  int n = 0;
  int k = 0;
  int d = 0;
  friend bool operator==(const CodeParameters&, const CodeParameters&) = default;
};

struct CodeSpec {
  int n = 0;
  std::vector<PauliOperator> stabilizers;
  std::vector<LogicalPair> logical_pairs;
  std::optional<LatticeLayout> layout;
  std::optional<CodeParameters> declared;

  friend bool operator==(const CodeSpec&, const CodeSpec&) = default;
};

struct FamilyParameters {
  int n = 0;
  int m = 0;
  int k = 0;
  int d = 0;
  friend bool operator==(const FamilyParameters&, const FamilyParameters&) = default;
};

// One copy of the six-data-qubit unit, addressed by column and unit row.
struct UnitCell {
  int column = 0;
  int row = 0;
  friend auto operator<=>(const UnitCell&, const UnitCell&) = default;
};

// Throws std::invalid_argument when a stabilizer has the wrong qubit count,
// two stabilizers anticommute, or a logical operator has the wrong qubit count.
void validate(const CodeSpec& code);
bool is_css(const CodeSpec& code);

CodeSpec build_unit();
// unit | two_horizontal | two_vertical | grid_2x2
CodeSpec build_named(std::string_view name);

// Replicates the unit over `cells` and merges the stabilizers of ancillae shared
// by neighbouring cells into one union-support operator. Every column must
// occupy unit rows 0..r-1 without gaps. Data qubits are numbered column-major
// (columns left to right, then rows top to bottom, then left to right).
CodeSpec stack_cells(std::span<const UnitCell> cells);

CodeSpec stack_grid(int p);
CodeSpec stack_l_shape(int v, int h, bool fill_matrix);

FamilyParameters family_parameters(int p);

// Coordinates from the placement formulas, clipped to the region covered by
// `cells`, with adjacency taken from nearest-neighbour geometry.
LatticeLayout layout_for_cells(std::span<const UnitCell> cells);
LatticeLayout layout_coordinates(int p);

std::vector<UnitCell> grid_cells(int p);
std::vector<UnitCell> l_shape_cells(int v, int h, bool fill_matrix);

}  // namespace dtc
