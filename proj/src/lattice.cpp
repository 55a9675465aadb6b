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

#include "dtc/lattice.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <tuple>

#include "dtc/gf2.hpp"

namespace dtc {
namespace {

struct NamedListing {
  std::string_view name;
  int n;
  std::vector<std::string_view> stabilizers;
  std::vector<std::pair<std::string_view, std::string_view>> logicals;
  CodeParameters declared;
  std::vector<UnitCell> cells;
};

// Transcribed stabilizer and logical-operator listings of the four drawn
// structures. two_horizontal carries the merged operator Z2Z4Z6Z7Z9Z11 at the
// shared Z-ancilla; the printed listing keeps only Z2Z4Z6, which anticommutes
// with its own logical X2X7.
const std::vector<NamedListing>& named_listings() {
  static const std::vector<NamedListing> listings = {
      {"unit",
       6,
       {"X1X2X3X4", "X3X4X5X6", "Z1Z3Z5", "Z2Z4Z6"},
       {{"X1X3", "Z1Z4Z6"}, {"X4X6", "Z2Z4Z5"}},
       {6, 2, 2},
       {{0, 0}}},
      {"two_horizontal",
       12,
       {"X1X2X3X4", "X3X4X5X6", "X7X8X9X10", "X9X10X11X12", "Z1Z3Z5", "Z2Z4Z6Z7Z9Z11",
        "Z8Z10Z12"},
       {{"X2X6", "Z1Z4Z6"},
        {"X4X6", "Z1Z4Z5"},
        {"X7X11", "Z8Z9Z11"},
        {"X9X11", "Z8Z9Z12"},
        {"X2X7", "Z2Z4Z6"}},
       {12, 5, 2},
       {{0, 0}, {1, 0}}},
      {"two_vertical",
       10,
       {"X1X2X3X4", "X3X4X5X6X7X8", "X7X8X9X10", "Z1Z3Z5", "Z2Z4Z6", "Z5Z7Z9", "Z6Z8Z10"},
       {{"X2X6X8", "Z1Z4Z8Z9"}, {"X2X6X10", "Z5Z7Z10"}, {"X4X6X8", "Z2Z3Z6"}},
       {10, 3, 3},
       {{0, 0}, {0, 1}}},
      {"grid_2x2",
       20,
       {"X1X2X3X4", "X3X4X5X6X7X8", "X7X8X9X10", "X11X12X13X14", "X13X14X15X16X17X18",
        "X17X18X19X20", "Z1Z3Z5", "Z2Z4Z6Z11Z13Z15", "Z5Z7Z9", "Z6Z8Z10Z15Z17Z19", "Z12Z14Z16",
        "Z16Z18Z20"},
       {{"X1X5X9", "Z1Z3Z7Z10"},
        {"X3X5X7", "Z1Z3Z8Z9"},
        {"X4X6X17", "Z1Z4Z8Z9"},
        {"X2X6X17", "Z2Z3Z7Z10"},
        {"X6X11X19", "Z15Z18Z19"},
        {"X11X15X19", "Z12Z13Z15"},
        {"X6X11X17", "Z11Z13Z18Z19"},
        {"X14X16X20", "Z12Z13Z16"}},
       {20, 8, 3},
       {{0, 0}, {0, 1}, {1, 0}, {1, 1}}},
  };
  return listings;
}

CodeSpec from_listing(const NamedListing& listing) {
  CodeSpec code;
  code.n = listing.n;
  for (auto s : listing.stabilizers) code.stabilizers.push_back(parse_pauli(s, listing.n));
  for (auto [x, z] : listing.logicals) {
    code.logical_pairs.push_back({parse_pauli(x, listing.n), parse_pauli(z, listing.n)});
  }
  code.declared = listing.declared;
  code.layout = layout_for_cells(listing.cells);
  return code;
}

std::vector<int> support_indices(QubitMask mask) {
  std::vector<int> out;
  for (int q = mask.lowest(); q >= 0; mask.flip(q), q = mask.lowest()) out.push_back(q);
  return out;
}

bool support_less(const QubitMask& a, const QubitMask& b) {
  return support_indices(a) < support_indices(b);
}

std::map<int, int> column_heights(std::span<const UnitCell> cells) {
  if (cells.empty()) throw std::invalid_argument("structure needs at least one unit cell");
  std::map<int, std::set<int>> rows;
  for (const auto& c : cells) {
    if (c.column < 0 || c.row < 0) throw std::invalid_argument("unit cell indices must be >= 0");
    if (!rows[c.column].insert(c.row).second) throw std::invalid_argument("duplicate unit cell");
  }
  std::map<int, int> heights;
  int expected_column = 0;
  for (const auto& [column, set] : rows) {
    if (column != expected_column++) throw std::invalid_argument("unit-cell columns must be 0..c-1");
    const int height = static_cast<int>(set.size());
    if (*set.rbegin() != height - 1) {
      throw std::invalid_argument("unit cells of a column must occupy rows 0..r-1");
    }
    heights[column] = height;
  }
  return heights;
}

int cell_column_of(const ScaledPoint& p) {
  // Data columns span a in [6c - 2, 6c + 2].
  return (p.a + 3) / 6;
}

constexpr std::array<std::pair<int, int>, 6> kNeighbourOffsets = {
    {{-2, 0}, {2, 0}, {-1, -1}, {1, -1}, {-1, 1}, {1, 1}}};

}  // namespace

double ScaledPoint::y() const { return b * std::sqrt(3.0) / 2.0; }

void validate(const CodeSpec& code) {
  if (code.n < 1 || code.n > kMaxQubits) throw std::invalid_argument("code needs 1.." + std::to_string(kMaxQubits) + " qubits");
  for (const auto& s : code.stabilizers) {
    if (s.n != code.n) throw std::invalid_argument("stabilizer qubit count differs from code n");
  }
  for (std::size_t i = 0; i < code.stabilizers.size(); ++i) {
    for (std::size_t j = i + 1; j < code.stabilizers.size(); ++j) {
      if (!commutes(code.stabilizers[i], code.stabilizers[j])) {
        throw std::invalid_argument("stabilizers " + to_string(code.stabilizers[i]) + " and " +
                                    to_string(code.stabilizers[j]) + " anticommute");
      }
    }
  }
  for (const auto& pair : code.logical_pairs) {
    if (pair.x.n != code.n || pair.z.n != code.n) {
      throw std::invalid_argument("logical operator qubit count differs from code n");
    }
  }
}

bool is_css(const CodeSpec& code) {
  return std::all_of(code.stabilizers.begin(), code.stabilizers.end(),
                     [](const PauliOperator& s) { return s.is_x_type() || s.is_z_type(); });
}

CodeSpec build_unit() { return from_listing(named_listings().front()); }

CodeSpec build_named(std::string_view name) {
  for (const auto& listing : named_listings()) {
    if (listing.name == name) return from_listing(listing);
  }
  throw std::invalid_argument("unknown named code '" + std::string(name) +
                              "' (expected unit, two_horizontal, two_vertical or grid_2x2)");
}

CodeSpec stack_cells(std::span<const UnitCell> cells) {
  const auto heights = column_heights(cells);

  std::map<int, int> offset;
  int n = 0;
  for (const auto& [column, height] : heights) {
    offset[column] = n;
    n += 2 * (2 * height + 1);
  }
  if (n > kMaxQubits) throw std::invalid_argument("structure exceeds " + std::to_string(kMaxQubits) + " data qubits");

  auto qubit = [&](int column, int data_row, int side) {
    return QubitMask::bit(offset.at(column) + 2 * data_row + side);
  };

  // Ancilla keys: X ancillae by (column, data row), Z ancillae by (boundary
  // between columns, unit row). Cells sharing a key merge their supports.
  std::map<std::pair<int, int>, QubitMask> x_support;
  std::map<std::pair<int, int>, QubitMask> z_support;
  for (const auto& cell : cells) {
    const int c = cell.column;
    const int top = 2 * cell.row;
    x_support[{c, top}] |= qubit(c, top, 0) | qubit(c, top, 1) | qubit(c, top + 1, 0) |
                           qubit(c, top + 1, 1);
    x_support[{c, top + 2}] |= qubit(c, top + 1, 0) | qubit(c, top + 1, 1) |
                               qubit(c, top + 2, 0) | qubit(c, top + 2, 1);
    for (int side = 0; side < 2; ++side) {
      z_support[{c + side, cell.row}] |=
          qubit(c, top, side) | qubit(c, top + 1, side) | qubit(c, top + 2, side);
    }
  }

  std::vector<QubitMask> xs;
  std::vector<QubitMask> zs;
  for (const auto& [key, mask] : x_support) xs.push_back(mask);
  for (const auto& [key, mask] : z_support) zs.push_back(mask);
  std::sort(xs.begin(), xs.end(), support_less);
  std::sort(zs.begin(), zs.end(), support_less);

  CodeSpec code;
  code.n = n;
  for (const auto& m : xs) code.stabilizers.push_back(PauliOperator::from_masks(n, m, {}));
  for (const auto& m : zs) code.stabilizers.push_back(PauliOperator::from_masks(n, {}, m));
  code.layout = layout_for_cells(cells);

  for (const auto& listing : named_listings()) {
    CodeSpec named = from_listing(listing);
    if (named.n == code.n && named.stabilizers == code.stabilizers) {
      code.logical_pairs = named.logical_pairs;
      break;
    }
  }
  return code;
}

std::vector<UnitCell> grid_cells(int p) {
  if (p < 1) throw std::invalid_argument("grid size p must be >= 1");
  std::vector<UnitCell> cells;
  for (int c = 0; c < p; ++c) {
    for (int r = 0; r < p; ++r) cells.push_back({c, r});
  }
  return cells;
}

std::vector<UnitCell> l_shape_cells(int v, int h, bool fill_matrix) {
  if (v < 0 || h < 0) throw std::invalid_argument("stacking counts v, h must be >= 0");
  const int tall = 2 * (v + 1);
  std::vector<UnitCell> cells;
  for (int c = 0; c <= h; ++c) {
    const int height = (c == 0 || fill_matrix) ? tall : 2;
    for (int r = 0; r < height; ++r) cells.push_back({c, r});
  }
  return cells;
}

CodeSpec stack_grid(int p) {
  CodeSpec code = stack_cells(grid_cells(p));
  const FamilyParameters f = family_parameters(p);
  code.declared = CodeParameters{f.n, f.k, f.d};
  return code;
}

CodeSpec stack_l_shape(int v, int h, bool fill_matrix) {
  CodeSpec code = stack_cells(l_shape_cells(v, h, fill_matrix));
  const int vh = fill_matrix ? v * h : 0;
  code.declared = CodeParameters{10 + 8 * v + 10 * h + 8 * vh, 3 + 2 * v + 5 * h + 4 * vh, v + 3};
  return code;
}

FamilyParameters family_parameters(int p) {
  if (p < 1) throw std::invalid_argument("grid size p must be >= 1");
  return {2 * p * (2 * p + 1), 2 * p * (p + 1), 2 * p * p, 2 + p / 2};
}

LatticeLayout layout_for_cells(std::span<const UnitCell> cells) {
  column_heights(cells);
  int max_column = 0;
  int max_row = 0;
  for (const auto& c : cells) {
    max_column = std::max(max_column, c.column);
    max_row = std::max(max_row, c.row);
  }
  auto in_cell = [](const UnitCell& c, const ScaledPoint& p) {
    return p.a >= 6 * c.column - 3 && p.a <= 6 * c.column + 3 && p.b >= 2 * c.row &&
           p.b <= 2 * c.row + 2;
  };
  auto inside = [&](const ScaledPoint& p) {
    return std::any_of(cells.begin(), cells.end(),
                       [&](const UnitCell& c) { return in_cell(c, p); });
  };
  // Rhombus edges only join points of a common tile.
  auto share_cell = [&](const ScaledPoint& p, const ScaledPoint& q) {
    return std::any_of(cells.begin(), cells.end(),
                       [&](const UnitCell& c) { return in_cell(c, p) && in_cell(c, q); });
  };

  std::set<ScaledPoint> x_anc;
  std::set<ScaledPoint> z_anc;
  std::set<ScaledPoint> data;
  auto add_mirrored = [&](std::set<ScaledPoint>& into, int a, int b) {
    for (int sa : {-1, 1}) {
      for (int sb : {-1, 1}) {
        const ScaledPoint p{sa * a, sb * b};
        if (inside(p)) into.insert(p);
      }
    }
  };
  const int p_max = max_column + 2;
  const int q_max = max_row + 2;
  for (int p = 0; p <= 3 * p_max; ++p) {
    for (int q = 0; q <= 2 * q_max; ++q) {
      add_mirrored(x_anc, 6 * p, 2 * q);              // (+-3p, +-q sqrt3)
      add_mirrored(z_anc, 6 * p + 3, 2 * q + 1);      // (+-3(p+1/2), +-sqrt3 (q+1/2))
      if (p >= 1 && p % 3 != 0) add_mirrored(data, 2 * p, 2 * q);  // (+-p, +-q sqrt3)
      if (p >= 1 && q >= 1 && (2 * p - 1) % 3 != 0) {
        add_mirrored(data, 2 * p - 1, 2 * q - 1);     // (+-(2p-1)/2, +-sqrt3 (q-1/2))
      }
    }
  }

  LatticeLayout layout;
  layout.data.assign(data.begin(), data.end());
  std::sort(layout.data.begin(), layout.data.end(), [](const ScaledPoint& l, const ScaledPoint& r) {
    return std::tuple(cell_column_of(l), l.b, l.a) < std::tuple(cell_column_of(r), r.b, r.a);
  });
  std::map<ScaledPoint, int> index;
  for (std::size_t i = 0; i < layout.data.size(); ++i) index[layout.data[i]] = static_cast<int>(i);

  auto neighbours = [&](const ScaledPoint& anc) {
    std::vector<int> out;
    for (auto [da, db] : kNeighbourOffsets) {
      const ScaledPoint p{anc.a + da, anc.b + db};
      auto it = index.find(p);
      if (it != index.end() && share_cell(anc, p)) out.push_back(it->second);
    }
    std::sort(out.begin(), out.end());
    return out;
  };
  auto place = [&](const std::set<ScaledPoint>& ancillae, std::vector<ScaledPoint>& coords,
                   std::vector<std::vector<int>>& adjacency) {
    std::vector<std::pair<std::vector<int>, ScaledPoint>> rows;
    for (const auto& anc : ancillae) {
      auto adj = neighbours(anc);
      if (!adj.empty()) rows.emplace_back(std::move(adj), anc);
    }
    std::sort(rows.begin(), rows.end());
    for (auto& [adj, anc] : rows) {
      coords.push_back(anc);
      adjacency.push_back(std::move(adj));
    }
  };
  place(x_anc, layout.x_ancilla, layout.x_adjacency);
  place(z_anc, layout.z_ancilla, layout.z_adjacency);
  return layout;
}

LatticeLayout layout_coordinates(int p) { return layout_for_cells(grid_cells(p)); }

}  // namespace dtc
