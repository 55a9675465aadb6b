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

#include <array>
#include <cstdint>
#include <span>
#include <string_view>
#include <vector>

#include "dtc/engine.hpp"
#include "dtc/lattice.hpp"
#include "dtc/pauli.hpp"
#include "dtc/state.hpp"

namespace dtc {

inline constexpr int kMaxDephasingQubits = 14;
inline constexpr int kMaxCodeSpaceGenerators = 16;
inline constexpr double kRealnessTolerance = 1e-10;

enum class DephasingKind { global, local };

std::string_view to_string(DephasingKind kind);
DephasingKind parse_dephasing_kind(std::string_view text);

// Gaussian delta-correlated sigma_z noise. `convention` scales the decay
// exponent (and the Monte Carlo phase variance) and defaults to 1.
struct NoiseModel {
  DephasingKind kind = DephasingKind::global;
  double gamma = 0.0;
  double convention = 1.0;
};

struct ObservableRecord {
  double t = 0.0;
  double r_x = 0.0;
  double r_y = 0.0;
  double r_z = 0.0;
  double p_x = 0.0;
  double p_y = 0.0;
  double p_z = 0.0;

  std::array<double, 6> values() const { return {r_x, r_y, r_z, p_x, p_y, p_z}; }
};

struct MonteCarloRecord {
  ObservableRecord mean;
  std::array<double, 6> standard_error{};
};

// Number of qubits in |0> minus the number in |1>.
inline int magnetization(std::uint64_t basis, int n) { return n - 2 * std::popcount(basis); }

PureState prepare_logical_state(double theta, double phi, const PureState& zero_l,
                                const PureState& one_l);

// Factor multiplying rho_{ab} after averaging over the noise up to time t.
double decoherence_factor(std::uint64_t a, std::uint64_t b, int n, const NoiseModel& model,
                          double t);

// Tr[rho' op] for rho' the noise-averaged |state><state|, without forming rho'.
Complex dephased_pauli_expectation(const PureState& state, const PauliOperator& op,
                                   const NoiseModel& model, double t);

enum class CodeSpaceNormalization { register_dimension, projector };

struct PauliTerm {
  double coefficient = 0.0;
  PauliOperator op;
};

// prod_i (I + P_i) expanded into its 2^m Pauli terms, scaled by 2^-n (register_dimension) or
// 2^-m (projector).
std::vector<PauliTerm> code_space_operator(const CodeSpec& code,
                                           CodeSpaceNormalization normalization);

// Logical X, Y = i Z X and Z of the designated pair (0-based index).
std::array<PauliOperator, 3> logical_frame(const LogicalSet& logicals, int pair_index);

struct LogicalQubitSetup {
  PureState zero_l;
  PureState one_l;
  std::array<PauliOperator, 3> frame;
  std::vector<PauliTerm> code_space;
};

LogicalQubitSetup make_logical_qubit(const CodeSpec& code, const LogicalSet& logicals,
                                     int pair_index = 0);

std::vector<ObservableRecord> bloch_and_leakage(const CodeSpec& code, const LogicalSet& logicals,
                                                double theta, double phi, const NoiseModel& model,
                                                std::span<const double> t_grid,
                                                int pair_index = 0);

// The closed-form unit-code expressions for global and local dephasing.
ObservableRecord closed_form(DephasingKind kind, double theta, double phi, double gamma, double t);

struct MonteCarloOptions {
  std::int64_t samples = 0;
  std::uint64_t seed = 0;
  int threads = 1;
};

struct AnglePair {
  double theta = 0.0;
  double phi = 0.0;
};

// Averages pure-state observables over sampled accumulated phases, one shared
// draw (global) or one per qubit (local), each Normal(0, convention * gamma * t).
// All angle pairs reuse the same draws; results do not depend on `threads`.
std::vector<MonteCarloRecord> monte_carlo_oracle(const CodeSpec& code, const LogicalSet& logicals,
                                                 std::span<const AnglePair> angles,
                                                 const NoiseModel& model, double t,
                                                 const MonteCarloOptions& options,
                                                 int pair_index = 0);

MonteCarloRecord monte_carlo_oracle(const CodeSpec& code, const LogicalSet& logicals, double theta,
                                    double phi, const NoiseModel& model, double t,
                                    const MonteCarloOptions& options, int pair_index = 0);

// Counter-based normal deviate for (seed, sample, draw).
double counter_normal(std::uint64_t seed, std::uint64_t sample, std::uint64_t draw);

}  // namespace dtc
