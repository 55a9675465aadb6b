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

#include <gtest/gtest.h>

#include <string>
#include <vector>

#include "dtc/engine.hpp"
#include "dtc/gf2.hpp"
#include "dtc/lattice.hpp"

namespace dtc {
namespace {

// "101000" -> basis index, qubit 1 leftmost.
std::uint64_t index_of(const std::string& label) {
  std::uint64_t b = 0;
  for (std::size_t i = 0; i < label.size(); ++i) {
    if (label[i] == '1') b |= std::uint64_t{1} << i;
  }
  return b;
}

Amplitudes expected_state(int n, const std::vector<std::string>& labels, double amplitude) {
  Amplitudes v = Amplitudes::Zero(std::int64_t{1} << n);
  for (const auto& l : labels) v[static_cast<Eigen::Index>(index_of(l))] = amplitude;
  return v;
}

CodeSpec code_from(int n, std::initializer_list<const char*> stabilizers) {
  CodeSpec code;
  code.n = n;
  for (const char* s : stabilizers) code.stabilizers.push_back(parse_pauli(s, n));
  return code;
}

// Dense state-vector projection, independent of the sparse codeword builder.
PureState projected_zero(const CodeSpec& code) {
  PureState v = PureState::basis(code.n, 0);
  for (const auto& s : code.stabilizers) {
    v.amplitudes = (v.amplitudes + apply(s, v).amplitudes).eval();
  }
  v.amplitudes.normalize();
  return v;
}

CodeSpec perfect_five() {
  return code_from(5, {"X1Z2Z3X4", "X2Z3Z4X5", "X1X3Z4Z5", "Z1X2X4Z5"});
}

CodeSpec steane() {
  return code_from(7, {"X4X5X6X7", "X2X3X6X7", "X1X3X5X7", "Z4Z5Z6Z7", "Z2Z3Z6Z7", "Z1Z3Z5Z7"});
}

TEST(Codewords, UnitZeroIsExact) {
  const auto zero = codeword_zero(build_unit());
  const auto expected = expected_state(6, {"000000", "001111", "111100", "110011"}, 0.5);
  for (Eigen::Index i = 0; i < expected.size(); ++i) EXPECT_EQ(zero.amplitudes[i], expected[i]);
}

TEST(Codewords, UnitOneIsExact) {
  const auto code = build_unit();
  const LogicalSet logicals{code.logical_pairs};
  const auto one = logical_basis_state(code, logicals, "10");
  const auto expected = expected_state(6, {"101000", "100111", "010100", "011011"}, 0.5);
  for (Eigen::Index i = 0; i < expected.size(); ++i) EXPECT_EQ(one.amplitudes[i], expected[i]);
  EXPECT_EQ(logical_basis_state(code, logicals, "00").amplitudes, codeword_zero(code).amplitudes);
  const auto both = apply(parse_pauli("X1X3", 6) * parse_pauli("X4X6", 6), codeword_zero(code));
  EXPECT_EQ(logical_basis_state(code, logicals, "11").amplitudes, both.amplitudes);
  EXPECT_THROW(logical_basis_state(code, logicals, "1"), std::invalid_argument);
}

TEST(Codewords, SingleQubitZ) {
  const auto zero = codeword_zero(code_from(1, {"Z1"}));
  EXPECT_EQ(zero.amplitudes, expected_state(1, {"0"}, 1.0));
}

TEST(Codewords, SignedSeedRejected) {
  EXPECT_THROW(codeword_zero(code_from(2, {"-Z1"})), std::domain_error);
}

TEST(Codewords, MatchDenseProjection) {
  for (const auto& code : {build_unit(), build_named("two_horizontal"),
                           build_named("two_vertical"), perfect_five(), steane()}) {
    const auto sparse = codeword_zero(code);
    const auto dense = projected_zero(code);
    EXPECT_LT((sparse.amplitudes - dense.amplitudes).norm(), 1e-12);
  }
  const auto tv = codeword_zero(build_named("two_vertical"));
  int terms = 0;
  for (Eigen::Index i = 0; i < tv.amplitudes.size(); ++i) {
    if (tv.amplitudes[i] != Complex{}) {
      ++terms;
      EXPECT_EQ(tv.amplitudes[i], Complex(1.0 / std::sqrt(8.0), 0.0));
    }
  }
  EXPECT_EQ(terms, 8);
}

TEST(Codewords, StabilizersFixEveryBasisState) {
  for (const auto& code : {build_unit(), build_named("two_vertical"), build_named("grid_2x2")}) {
    const LogicalSet logicals{code.logical_pairs};
    const int k = logicals.k();
    std::vector<PureState> basis;
    for (int word = 0; word < (1 << std::min(k, 3)); ++word) {
      std::string bits(static_cast<std::size_t>(k), '0');
      for (int i = 0; i < std::min(k, 3); ++i) {
        if ((word >> i) & 1) bits[static_cast<std::size_t>(i)] = '1';
      }
      basis.push_back(logical_basis_state(code, logicals, bits));
      EXPECT_NEAR(basis.back().norm_squared(), 1.0, 1e-12);
      for (const auto& s : code.stabilizers) {
        EXPECT_LT((apply(s, basis.back()).amplitudes - basis.back().amplitudes).norm(), 1e-12);
      }
    }
    for (std::size_t i = 0; i < basis.size(); ++i) {
      for (std::size_t j = 0; j < basis.size(); ++j) {
        EXPECT_NEAR(std::abs(inner_product(basis[i], basis[j])), i == j ? 1.0 : 0.0, 1e-12);
      }
    }
  }
}

TEST(Codewords, CosetInvariance) {
  const auto code = build_named("two_vertical");
  const LogicalSet logicals{code.logical_pairs};
  const auto reference = logical_basis_state(code, logicals, "100");
  for (const auto& s : code.stabilizers) {
    LogicalSet shifted = logicals;
    shifted.pairs[0].x = shifted.pairs[0].x * s;
    if (!is_hermitian(shifted.pairs[0].x)) continue;
    EXPECT_LT((logical_basis_state(code, shifted, "100").amplitudes - reference.amplitudes).norm(),
              1e-12)
        << to_string(s);
  }
}

TEST(LogicalSets, TranscribedPairsAreValid) {
  for (const char* name : {"unit", "two_horizontal", "two_vertical", "grid_2x2"}) {
    const auto code = build_named(name);
    const auto report = verify_logical_set(code, LogicalSet{code.logical_pairs});
    EXPECT_TRUE(report.valid()) << name << ": " << report.violations.size() << " violations";
    EXPECT_EQ(static_cast<int>(code.logical_pairs.size()),
              code.n - symplectic_rank(code.stabilizers));
  }
}

TEST(LogicalSets, StabilizerAsLogicalIsFlagged) {
  const auto code = build_unit();
  const LogicalSet bad{{{parse_pauli("X1X3", 6), parse_pauli("Z1Z3Z5", 6)}}};
  const auto report = verify_logical_set(code, bad);
  EXPECT_FALSE(report.valid());
  bool flagged_membership = false;
  bool flagged_pair = false;
  for (const auto& v : report.violations) {
    if (v.subject == "Z1Z3Z5" && v.condition == "lies in the stabilizer group") {
      flagged_membership = true;
    }
    if (v.condition == "partners commute instead of anticommuting") flagged_pair = true;
  }
  EXPECT_TRUE(flagged_membership);
  EXPECT_TRUE(flagged_pair);
}

TEST(LogicalSets, FoundSetsAreValidAndMinimal) {
  for (const auto& code : {build_unit(), build_named("two_horizontal"), build_named("two_vertical"),
                           build_named("grid_2x2"), perfect_five(), steane()}) {
    const auto found = find_logical_set(code);
    EXPECT_EQ(found.k(), code.n - symplectic_rank(code.stabilizers));
    EXPECT_TRUE(verify_logical_set(code, found).valid());
    EXPECT_TRUE(found.certified_minimal);
  }
  // Z1Z4Z6 times the stabilizer Z2Z4Z6 is Z1Z2, so the minimum in that coset is 2.
  const auto unit = find_logical_set(build_unit());
  ASSERT_EQ(unit.k(), 2);
  for (const auto& pair : unit.pairs) {
    EXPECT_EQ(weight(pair.x), 2);
    EXPECT_EQ(weight(pair.z), 2);
  }
  EXPECT_EQ(find_logical_set(build_named("two_vertical")).k(), 3);
}

TEST(LogicalSets, BareQubit) {
  CodeSpec bare;
  bare.n = 1;
  const auto found = find_logical_set(bare);
  ASSERT_EQ(found.k(), 1);
  EXPECT_EQ(to_string(found.pairs[0].x), "X1");
  EXPECT_EQ(to_string(found.pairs[0].z), "Z1");
}

TEST(LogicalSets, DependentGeneratorsRejected) {
  EXPECT_THROW(find_logical_set(code_from(3, {"Z1Z2", "Z2Z3", "Z1Z3"})), std::invalid_argument);
}

TEST(Distance, KnownCodes) {
  const auto five = perfect_five();
  EXPECT_EQ(distance_symplectic(five, 4).distance, 3);
  EXPECT_EQ(distance_kl_oracle(five, find_logical_set(five), 4).distance, 3);
  const auto seven = steane();
  EXPECT_EQ(distance_symplectic(seven, 4).distance, 3);
  EXPECT_EQ(distance_kl_oracle(seven, find_logical_set(seven), 4).distance, 3);
  const auto repetition = code_from(3, {"Z1Z2", "Z2Z3"});
  EXPECT_EQ(distance_symplectic(repetition, 4).distance, 1);
  const auto none = distance_symplectic(five, 2);
  EXPECT_FALSE(none.distance);
  EXPECT_FALSE(none.witness);
}

TEST(Distance, NamedCodesBothMethods) {
  for (const char* name : {"unit", "two_horizontal", "two_vertical", "grid_2x2"}) {
    const auto code = build_named(name);
    const auto sym = distance_symplectic(code, 4);
    const auto kl = distance_kl_oracle(code, LogicalSet{code.logical_pairs}, 4);
    ASSERT_TRUE(sym.distance) << name;
    EXPECT_EQ(sym.distance, kl.distance) << name;
    EXPECT_EQ(sym.witness, kl.witness) << name;
    // Z1Z2 commutes with every stabilizer here and is outside the group.
    EXPECT_EQ(*sym.distance, 2) << name;
    EXPECT_EQ(to_string(*sym.witness), "Z1Z2") << name;
  }
}

TEST(Distance, WitnessActsNontriviallyOnCodeSpace) {
  const auto code = build_named("two_vertical");
  const auto z12 = parse_pauli("Z1Z2", code.n);
  for (const auto& s : code.stabilizers) EXPECT_TRUE(commutes(z12, s));
  const LogicalSet logicals{code.logical_pairs};
  std::vector<Complex> diagonal;
  for (const char* bits : {"000", "100", "010", "001"}) {
    const auto psi = logical_basis_state(code, logicals, bits);
    diagonal.push_back(inner_product(psi, apply(z12, psi)));
  }
  bool differs = false;
  for (const auto& d : diagonal) differs |= std::abs(d - diagonal[0]) > 1e-9;
  EXPECT_TRUE(differs);
}

TEST(Distance, ThreadCountInvariant) {
  const auto grid = stack_grid(3);
  const auto one = distance_symplectic(grid, 3, 1);
  for (int threads : {2, 3, 8}) EXPECT_EQ(distance_symplectic(grid, 3, threads), one);
  const auto code = build_named("grid_2x2");
  const LogicalSet logicals{code.logical_pairs};
  const auto kl = distance_kl_oracle(code, logicals, 3, 1);
  EXPECT_EQ(distance_kl_oracle(code, logicals, 3, 4), kl);
  const auto five = perfect_five();
  EXPECT_EQ(distance_symplectic(five, 4, 3), distance_symplectic(five, 4, 1));
}

TEST(Distance, KlOracleLimit) {
  const auto grid = stack_grid(3);
  EXPECT_THROW(distance_kl_oracle(grid, LogicalSet{}, 3), InfeasibleRequest);
}

TEST(Verify, ExitCodes) {
  VerifyOptions options;
  options.kl = true;
  const auto unit = verify_code(build_unit(), options);
  EXPECT_EQ(unit.exit_code(), 0);
  EXPECT_EQ(unit.distance->distance, 2);
  EXPECT_EQ(unit.distance_kl->distance, 2);

  auto claimed = build_unit();
  claimed.declared->d = 3;
  EXPECT_EQ(verify_code(claimed, options).exit_code(), 1);

  auto seven = steane();
  seven.declared = CodeParameters{7, 1, 3};
  EXPECT_EQ(verify_code(seven, options).exit_code(), 0);
  options.w_max = 2;
  EXPECT_EQ(verify_code(seven, options).exit_code(), 2);

  seven.declared = CodeParameters{7, 2, 3};
  EXPECT_EQ(verify_code(seven, options).exit_code(), 1);
}

TEST(Verify, ReportsCommutationFailure) {
  const auto report = verify_code(code_from(2, {"X1", "Z1"}), VerifyOptions{});
  EXPECT_FALSE(report.commuting);
  EXPECT_NE(report.exit_code(), 0);
}

}  // namespace
}  // namespace dtc
