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
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "dtc/lattice.hpp"
#include "dtc/pauli.hpp"
#include "dtc/state.hpp"

namespace dtc {

// A request that is well formed but too large for the chosen method.
class InfeasibleRequest : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline constexpr int kMaxKlQubits = 20;
inline constexpr int kMaxLogicalSearchQubits = 24;
inline constexpr int kMaxExhaustiveCosetQubits = 20;
inline constexpr int kMaxExhaustiveCosetGenerators = 24;
inline constexpr double kKlTolerance = 1e-10;

struct LogicalSet {
  std::vector<LogicalPair> pairs;
  // False when some representative was only greedily reduced.
  bool certified_minimal = true;

  int k() const { return static_cast<int>(pairs.size()); }
};

// Sparse amplitude list, sorted by basis index.
struct SparseState {
  int n = 0;
  std::vector<std::pair<std::uint64_t, Complex>> terms;
};

// Normalized prod_i (I + P_i) |0...0>, kept sparse.
SparseState sparse_codeword_zero(const CodeSpec& code);
SparseState apply(const PauliOperator& op, const SparseState& s);
PureState to_dense(const SparseState& s);

PureState codeword_zero(const CodeSpec& code);
// `bits` is a string of '0'/'1' of length k; bit i selects logical X of pair i.
PureState logical_basis_state(const CodeSpec& code, const LogicalSet& logicals,
                              std::string_view bits);

struct LogicalViolation {
  std::string subject;
  std::string condition;
  friend bool operator==(const LogicalViolation&, const LogicalViolation&) = default;
};

struct LogicalReport {
  std::vector<LogicalViolation> violations;
  bool valid() const { return violations.empty(); }
};

LogicalReport verify_logical_set(const CodeSpec& code, const LogicalSet& logicals);

// Complete set of k = n - m anticommuting pairs. Representatives are reduced to
// minimum weight within their stabilizer coset.
LogicalSet find_logical_set(const CodeSpec& code);

struct DistanceResult {
  int w_max = 0;
  std::optional<int> distance;  // empty means "> w_max"
  std::optional<PauliOperator> witness;

  friend bool operator==(const DistanceResult&, const DistanceResult&) = default;
};

// Minimum weight of a Pauli with zero syndrome that is not in the stabilizer
// group. Candidates are visited weight-major, then by support set, then by
// letters (X < Y < Z); the witness is the first hit in that order regardless of
// `threads`.
DistanceResult distance_symplectic(const CodeSpec& code, int w_max, int threads = 1);

// Minimum weight Pauli E whose codeword matrix <psi_i|E|psi_j> is not a multiple
// of the identity, over the 2^k logical basis states built from `logicals`.
DistanceResult distance_kl_oracle(const CodeSpec& code, const LogicalSet& logicals, int w_max,
                                  int threads = 1);

struct VerifyOptions {
  int w_max = 4;
  bool kl = false;
  int threads = 1;
};

struct VerificationReport {
  int n = 0;
  int m = 0;
  bool commuting = false;
  bool css = false;
  int rank = 0;
  int k = 0;
  std::optional<DistanceResult> distance;
  std::optional<DistanceResult> distance_kl;
  std::string logical_source;  // "transcribed", "computed" or empty
  std::optional<LogicalReport> logical_report;
  std::optional<CodeParameters> declared;
  std::vector<std::string> mismatches;
  std::vector<std::string> infeasible;

  // 0: every declared claim confirmed, 1: a claim is contradicted, 2: some
  // claim could not be checked with the requested limits.
  int exit_code() const;
};

VerificationReport verify_code(const CodeSpec& code, const VerifyOptions& options);

}  // namespace dtc
