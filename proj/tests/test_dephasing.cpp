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

#include <cmath>
#include <numbers>
#include <vector>

#include "dtc/dephasing.hpp"
#include "dtc/engine.hpp"
#include "dtc/lattice.hpp"

namespace dtc {
namespace {

constexpr double kPi = std::numbers::pi;

const std::vector<double> kThetas = {0, kPi / 4, kPi / 2, 3 * kPi / 4, kPi};
const std::vector<double> kPhis = {0, kPi / 3, kPi / 2, kPi, 3 * kPi / 2};
const std::vector<double> kGammaT = {0, 0.1, 0.5, 1, 5};

struct UnitFixture {
  CodeSpec code = build_unit();
  LogicalSet logicals{code.logical_pairs};
};

ObservableRecord engine_at(const UnitFixture& u, DephasingKind kind, double theta, double phi,
                           double gamma_t, double convention = 1.0) {
  const std::vector<double> grid = {1.0};
  return bloch_and_leakage(u.code, u.logicals, theta, phi, NoiseModel{kind, gamma_t, convention},
                           grid)
      .front();
}

TEST(Decoherence, Factors) {
  const NoiseModel global{DephasingKind::global, 0.7};
  const NoiseModel local{DephasingKind::local, 0.7};
  EXPECT_EQ(decoherence_factor(5, 5, 6, global, 3.0), 1.0);
  EXPECT_EQ(decoherence_factor(5, 5, 6, local, 3.0), 1.0);
  // 000000 vs 001111: magnetization 6 vs -2.
  EXPECT_NEAR(decoherence_factor(0, 0b111100, 6, global, 1.0), std::exp(-8 * 0.7), 1e-15);
  // 000000 vs 110000 (qubits 5,6): difference 4.
  EXPECT_NEAR(decoherence_factor(0, 0b110000, 6, global, 1.0), std::exp(-2 * 0.7), 1e-15);
  EXPECT_NEAR(decoherence_factor(0, 0b110000, 6, local, 1.0), std::exp(-0.7), 1e-15);
  EXPECT_NEAR(decoherence_factor(0, 0b110000, 6, NoiseModel{DephasingKind::local, 0.7, 2.0}, 1.0),
              std::exp(-1.4), 1e-15);
  EXPECT_EQ(magnetization(0, 6), 6);
  EXPECT_EQ(magnetization(0b111111, 6), -6);
}

TEST(Decoherence, Monotone) {
  for (auto kind : {DephasingKind::global, DephasingKind::local}) {
    for (std::uint64_t b = 0; b < 64; ++b) {
      double previous = 1.0;
      for (double t = 0; t <= 5; t += 0.25) {
        const double c = decoherence_factor(0b000101, b, 6, NoiseModel{kind, 0.3}, t);
        EXPECT_LE(c, previous);
        EXPECT_GT(c, 0.0);
        previous = c;
      }
      EXPECT_LE(decoherence_factor(0, b, 6, NoiseModel{kind, 0.6}, 1.0),
                decoherence_factor(0, b, 6, NoiseModel{kind, 0.3}, 1.0));
    }
  }
}

TEST(LogicalState, Preparation) {
  UnitFixture u;
  const auto zero = codeword_zero(u.code);
  const auto one = logical_basis_state(u.code, u.logicals, "10");
  EXPECT_LT((prepare_logical_state(0, 1.3, zero, one).amplitudes - zero.amplitudes).norm(), 1e-15);
  EXPECT_LT((prepare_logical_state(kPi, 0, zero, one).amplitudes - one.amplitudes).norm(), 1e-15);
  const auto plus_i = prepare_logical_state(kPi / 2, kPi / 2, zero, one);
  const Complex a0 = inner_product(zero, plus_i);
  const Complex a1 = inner_product(one, plus_i);
  EXPECT_NEAR(std::abs(a0), std::abs(a1), 1e-15);
  EXPECT_NEAR(std::abs(a1 / a0 - Complex(0, 1)), 0.0, 1e-15);
  EXPECT_THROW(prepare_logical_state(0.3, 0.1, zero, zero), std::invalid_argument);
}

TEST(CodeSpace, Expansion) {
  const auto unit = build_unit();
  const auto dimension = code_space_operator(unit, CodeSpaceNormalization::register_dimension);
  const auto projector = code_space_operator(unit, CodeSpaceNormalization::projector);
  ASSERT_EQ(dimension.size(), 16U);
  ASSERT_EQ(projector.size(), 16U);
  for (const auto& t : dimension) EXPECT_EQ(t.coefficient, 1.0 / 64);
  for (const auto& t : projector) EXPECT_EQ(t.coefficient, 1.0 / 16);

  CodeSpec bare;
  bare.n = 2;
  const auto single = code_space_operator(bare, CodeSpaceNormalization::projector);
  ASSERT_EQ(single.size(), 1U);
  EXPECT_EQ(single[0].coefficient, 1.0);
  EXPECT_TRUE(single[0].op.is_identity());
}

// P^2 == P, checked by applying the expansion to random states.
TEST(CodeSpace, ProjectorIsIdempotent) {
  for (const auto& code : {build_unit(), build_named("two_vertical"), build_named("two_horizontal")}) {
    const auto terms = code_space_operator(code, CodeSpaceNormalization::projector);
    auto project = [&](const PureState& s) {
      Amplitudes out = Amplitudes::Zero(s.amplitudes.size());
      for (const auto& t : terms) out += t.coefficient * apply(t.op, s).amplitudes;
      return PureState(s.n, out);
    };
    Amplitudes v = Amplitudes::Random(std::int64_t{1} << code.n);
    const PureState s(code.n, v);
    const auto once = project(s);
    const auto twice = project(once);
    EXPECT_LT((once.amplitudes - twice.amplitudes).norm(), 1e-10);
    const auto zero = codeword_zero(code);
    EXPECT_LT((project(zero).amplitudes - zero.amplitudes).norm(), 1e-12);
  }
}

TEST(Engine, GlobalMatchesClosedFormOnGrid) {
  UnitFixture u;
  for (double theta : kThetas)
    for (double phi : kPhis)
      for (double gt : kGammaT) {
        const auto e = engine_at(u, DephasingKind::global, theta, phi, gt).values();
        const auto c = closed_form(DephasingKind::global, theta, phi, gt, 1.0).values();
        for (int i = 0; i < 6; ++i) ASSERT_NEAR(e[i], c[i], 1e-12) << theta << " " << phi << " " << gt;
      }
}

TEST(Engine, SpecExamples) {
  UnitFixture u;
  for (double gt : kGammaT) {
    const auto r = engine_at(u, DephasingKind::global, kPi / 2, 0, gt);
    EXPECT_NEAR(r.r_x, 0.5 * (1 + std::exp(-2 * gt)), 1e-12);
  }
  const auto limit = closed_form(DephasingKind::global, 1.1, 0.4, 1.0, 200.0);
  EXPECT_NEAR(limit.r_x, 0.5 * std::sin(1.1) * std::cos(0.4), 1e-15);
  EXPECT_NEAR(limit.p_x, 3.0 / 32 * std::sin(1.1) * std::cos(0.4), 1e-15);
  const auto local_limit = closed_form(DephasingKind::local, 1.1, 0.4, 1.0, 200.0);
  EXPECT_NEAR(local_limit.p_x, 0.0, 1e-15);
  EXPECT_NEAR(local_limit.p_y, 0.0, 1e-15);
  EXPECT_NEAR(closed_form(DephasingKind::local, 1.1, 0.4, 1.0, 0.0).p_z, std::cos(1.1) / 4, 1e-15);
}

TEST(Engine, QuarterPrefactorAtTimeZero) {
  UnitFixture u;
  for (auto kind : {DephasingKind::global, DephasingKind::local})
    for (double theta : kThetas)
      for (double phi : kPhis) {
        const std::vector<double> zero_t = {0.0};
        const auto r =
            bloch_and_leakage(u.code, u.logicals, theta, phi, NoiseModel{kind, 2.0}, zero_t).front();
        EXPECT_NEAR(r.p_x, r.r_x / 4, 1e-12);
        EXPECT_NEAR(r.p_y, r.r_y / 4, 1e-12);
        EXPECT_NEAR(r.p_z, r.r_z / 4, 1e-12);
        EXPECT_NEAR(r.r_x, std::sin(theta) * std::cos(phi), 1e-12);
        EXPECT_NEAR(r.r_y, -std::sin(theta) * std::sin(phi), 1e-12);
        EXPECT_NEAR(r.r_z, std::cos(theta), 1e-12);
      }
}

TEST(Engine, LogicalZIsTimeInvariant) {
  UnitFixture u;
  const std::vector<double> grid = {0, 0.3, 1, 4, 20};
  for (auto kind : {DephasingKind::global, DephasingKind::local}) {
    for (double theta : kThetas) {
      const auto recs = bloch_and_leakage(u.code, u.logicals, theta, 0.7, NoiseModel{kind, 1.3}, grid);
      for (const auto& r : recs) EXPECT_NEAR(r.r_z, recs.front().r_z, 1e-12);
    }
  }
}

TEST(Engine, GammaZeroIsConstant) {
  UnitFixture u;
  const std::vector<double> grid = {0, 1, 10};
  const auto recs =
      bloch_and_leakage(u.code, u.logicals, 0.9, 2.1, NoiseModel{DephasingKind::local, 0.0}, grid);
  for (const auto& r : recs) {
    for (int i = 0; i < 6; ++i) EXPECT_EQ(r.values()[i], recs.front().values()[i]);
  }
}

TEST(Engine, LocalFirstPrinciplesRates) {
  UnitFixture u;
  // X1X3 flips two qubits: each contributes e^{-gamma t / 2}.
  const auto r = engine_at(u, DephasingKind::local, kPi / 2, 0, 0.8);
  EXPECT_NEAR(r.r_x, std::exp(-0.8), 1e-12);
  const auto doubled = engine_at(u, DephasingKind::local, 0.7, 0.4, 0.3, 2.0);
  const auto closed = closed_form(DephasingKind::local, 0.7, 0.4, 1.0, 0.3);
  EXPECT_NEAR(doubled.r_x, closed.r_x, 1e-12);
  EXPECT_NEAR(doubled.r_y, closed.r_y, 1e-12);
  EXPECT_NEAR(doubled.r_z, closed.r_z, 1e-12);
}

TEST(Engine, DensePauliExpectationAtTimeZero) {
  UnitFixture u;
  const auto zero = codeword_zero(u.code);
  const auto one = logical_basis_state(u.code, u.logicals, "10");
  const auto psi = prepare_logical_state(1.0, 0.5, zero, one);
  for (const char* op : {"X1X3", "Z1Z4Z6", "Y1Z2X3", "X4X6"}) {
    const auto p = parse_pauli(op, 6);
    const Complex direct = inner_product(psi, apply(p, psi));
    const Complex dephased = dephased_pauli_expectation(psi, p, NoiseModel{DephasingKind::global, 3}, 0);
    EXPECT_LT(std::abs(direct - dephased), 1e-14) << op;
  }
}

TEST(Engine, LargerCodes) {
  const auto code = build_named("two_vertical");
  const LogicalSet logicals{code.logical_pairs};
  const std::vector<double> grid = {0.0, 0.5};
  for (int pair = 0; pair < 3; ++pair) {
    const auto recs = bloch_and_leakage(code, logicals, 0.8, 0.3,
                                        NoiseModel{DephasingKind::global, 1.0}, grid, pair);
    EXPECT_NEAR(recs[0].r_z, std::cos(0.8), 1e-12);
    EXPECT_NEAR(recs[1].r_z, std::cos(0.8), 1e-12);
  }
  EXPECT_THROW(bloch_and_leakage(stack_grid(2), LogicalSet{stack_grid(2).logical_pairs}, 0.1, 0.1,
                                 NoiseModel{}, grid),
               InfeasibleRequest);
}

TEST(MonteCarlo, GammaZeroIsExact) {
  UnitFixture u;
  const auto mc = monte_carlo_oracle(u.code, u.logicals, 0.9, 2.1,
                                     NoiseModel{DephasingKind::local, 0.0}, 1.0, {1000, 7, 1});
  const auto e = engine_at(u, DephasingKind::local, 0.9, 2.1, 0.0);
  for (int i = 0; i < 6; ++i) {
    EXPECT_NEAR(mc.mean.values()[i], e.values()[i], 1e-14);
    EXPECT_NEAR(mc.standard_error[i], 0.0, 1e-14);
  }
}

TEST(MonteCarlo, AgreesWithEngine) {
  UnitFixture u;
  for (auto kind : {DephasingKind::global, DephasingKind::local}) {
    for (double gt : {0.1, 1.0}) {
      const auto mc = monte_carlo_oracle(u.code, u.logicals, 1.2, 0.5, NoiseModel{kind, gt}, 1.0,
                                         {200000, 11, 1});
      const auto e = engine_at(u, kind, 1.2, 0.5, gt);
      for (int i = 0; i < 6; ++i) {
        EXPECT_LE(std::abs(mc.mean.values()[i] - e.values()[i]), 4 * mc.standard_error[i] + 1e-12)
            << to_string(kind) << " observable " << i;
      }
    }
  }
}

TEST(MonteCarlo, ThreadAndBatchInvariant) {
  UnitFixture u;
  const NoiseModel model{DephasingKind::local, 0.6};
  const auto one = monte_carlo_oracle(u.code, u.logicals, 1.2, 0.5, model, 1.0, {20000, 3, 1});
  for (int threads : {2, 4, 7}) {
    const auto many = monte_carlo_oracle(u.code, u.logicals, 1.2, 0.5, model, 1.0, {20000, 3, threads});
    for (int i = 0; i < 6; ++i) {
      EXPECT_EQ(many.mean.values()[i], one.mean.values()[i]);
      EXPECT_EQ(many.standard_error[i], one.standard_error[i]);
    }
  }
  const std::vector<AnglePair> angles = {{0.3, 0.1}, {1.2, 0.5}};
  const auto batch = monte_carlo_oracle(u.code, u.logicals, angles, model, 1.0, {20000, 3, 2});
  for (int i = 0; i < 6; ++i) EXPECT_EQ(batch[1].mean.values()[i], one.mean.values()[i]);
}

TEST(MonteCarlo, CounterStreamIsStandardNormal) {
  double sum = 0;
  double sum2 = 0;
  const int count = 200000;
  for (int i = 0; i < count; ++i) {
    const double z = counter_normal(42, static_cast<std::uint64_t>(i), 3);
    sum += z;
    sum2 += z * z;
  }
  EXPECT_NEAR(sum / count, 0.0, 0.01);
  EXPECT_NEAR(sum2 / count, 1.0, 0.01);
  EXPECT_EQ(counter_normal(1, 2, 3), counter_normal(1, 2, 3));
  EXPECT_NE(counter_normal(1, 2, 3), counter_normal(2, 2, 3));
}

}  // namespace
}  // namespace dtc
