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

#include "dtc/dephasing.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numbers>
#include <stdexcept>
#include <string>
#include <thread>

namespace dtc {
namespace {

void check_model(const NoiseModel& model, double t) {
  if (!(model.gamma >= 0.0)) throw std::invalid_argument("noise strength gamma must be >= 0");
  if (!(model.convention > 0.0)) throw std::invalid_argument("convention multiplier must be > 0");
  if (!(t >= 0.0)) throw std::invalid_argument("time must be >= 0");
}

double real_part_checked(Complex value, const char* what) {
  if (std::abs(value.imag()) > kRealnessTolerance) {
    throw std::logic_error(std::string(what) + " has imaginary part " +
                           std::to_string(value.imag()));
  }
  return value.real();
}

std::uint64_t mix64(std::uint64_t z) {
  z += 0x9e3779b97f4a7c15ULL;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

// Two independent standard normals for (seed, sample, pair).
std::pair<double, double> normal_pair(std::uint64_t seed, std::uint64_t sample,
                                      std::uint64_t pair) {
  const std::uint64_t key = mix64(seed ^ mix64(sample ^ mix64(pair)));
  const std::uint64_t b1 = mix64(key);
  const std::uint64_t b2 = mix64(key ^ 0x5851f42d4c957f2dULL);
  const double u1 = static_cast<double>((b1 >> 11) + 1) * 0x1.0p-53;  // (0, 1]
  const double u2 = static_cast<double>(b2 >> 11) * 0x1.0p-53;        // [0, 1)
  const double r = std::sqrt(-2.0 * std::log(u1));
  const double angle = 2.0 * std::numbers::pi * u2;
  return {r * std::cos(angle), r * std::sin(angle)};
}

struct RunningStats {
  double count = 0;
  double mean = 0;
  double m2 = 0;

  void add(double x) {
    count += 1;
    const double delta = x - mean;
    mean += delta / count;
    m2 += delta * (x - mean);
  }
  void merge(const RunningStats& o) {
    if (o.count == 0) return;
    const double total = count + o.count;
    const double delta = o.mean - mean;
    mean += delta * o.count / total;
    m2 += o.m2 + delta * delta * count * o.count / total;
    count = total;
  }
  double standard_error() const {
    if (count < 2) return 0.0;
    return std::sqrt(m2 / (count - 1) / count);
  }
};

struct SparseEntry {
  std::uint32_t row;
  std::uint32_t col;
  Complex value;
};

}  // namespace

std::string_view to_string(DephasingKind kind) {
  return kind == DephasingKind::global ? "global" : "local";
}

DephasingKind parse_dephasing_kind(std::string_view text) {
  if (text == "global") return DephasingKind::global;
  if (text == "local") return DephasingKind::local;
  throw std::invalid_argument("dephasing kind must be global or local, got '" + std::string(text) +
                              "'");
}

PureState prepare_logical_state(double theta, double phi, const PureState& zero_l,
                                const PureState& one_l) {
  if (zero_l.n != one_l.n) throw std::invalid_argument("logical states differ in qubit count");
  constexpr double tol = 1e-12;
  if (std::abs(zero_l.norm_squared() - 1.0) > tol || std::abs(one_l.norm_squared() - 1.0) > tol ||
      std::abs(inner_product(zero_l, one_l)) > tol) {
    throw std::invalid_argument("logical basis states are not orthonormal");
  }
  const Complex a = std::cos(theta / 2);
  const Complex b = std::polar(std::sin(theta / 2), phi);
  return PureState(zero_l.n, a * zero_l.amplitudes + b * one_l.amplitudes);
}

double decoherence_factor(std::uint64_t a, std::uint64_t b, int n, const NoiseModel& model,
                          double t) {
  check_model(model, t);
  if (model.kind == DephasingKind::global) {
    const double dm = magnetization(a, n) - magnetization(b, n);
    return std::exp(-model.convention * dm * dm * model.gamma * t / 8.0);
  }
  const double hamming = std::popcount(a ^ b);
  return std::exp(-model.convention * hamming * model.gamma * t / 2.0);
}

Complex dephased_pauli_expectation(const PureState& state, const PauliOperator& op,
                                   const NoiseModel& model, double t) {
  if (op.n != state.n) throw std::invalid_argument("operator and state qubit counts differ");
  check_model(model, t);
  // Factors only depend on a small integer (magnetization difference or Hamming
  // distance), so tabulate them.
  std::vector<double> factor(static_cast<std::size_t>(2 * state.n + 1));
  for (std::size_t i = 0; i < factor.size(); ++i) {
    const double v = static_cast<double>(i);
    factor[i] = model.kind == DephasingKind::global
                    ? std::exp(-model.convention * v * v * model.gamma * t / 8.0)
                    : std::exp(-model.convention * v * model.gamma * t / 2.0);
  }
  const auto& psi = state.amplitudes;
  Complex total{};
  const auto dim = static_cast<std::uint64_t>(state.dimension());
  for (std::uint64_t a = 0; a < dim; ++a) {
    const Complex amp = psi[static_cast<Eigen::Index>(a)];
    if (amp == Complex{}) continue;
    const std::uint64_t b = a ^ op.x.low();
    const Complex partner = psi[static_cast<Eigen::Index>(b)];
    if (partner == Complex{}) continue;
    const int key = model.kind == DephasingKind::global
                        ? std::abs(magnetization(a, state.n) - magnetization(b, state.n))
                        : std::popcount(a ^ b);
    total += std::conj(partner) * basis_phase(op, a) * amp * factor[static_cast<std::size_t>(key)];
  }
  return total;
}

std::vector<PauliTerm> code_space_operator(const CodeSpec& code,
                                           CodeSpaceNormalization normalization) {
  const auto m = code.stabilizers.size();
  if (m > kMaxCodeSpaceGenerators) {
    throw InfeasibleRequest("code-space expansion needs at most " +
                            std::to_string(kMaxCodeSpaceGenerators) + " stabilizers");
  }
  const double coefficient = normalization == CodeSpaceNormalization::register_dimension
                                 ? std::ldexp(1.0, -code.n)
                                 : std::ldexp(1.0, -static_cast<int>(m));
  std::vector<PauliTerm> terms;
  terms.reserve(std::size_t{1} << m);
  for (std::uint64_t subset = 0; subset < (std::uint64_t{1} << m); ++subset) {
    PauliOperator product = PauliOperator::identity(code.n);
    for (std::size_t i = 0; i < m; ++i) {
      if ((subset >> i) & 1U) product = product * code.stabilizers[i];
    }
    terms.push_back({coefficient, product});
  }
  return terms;
}

std::array<PauliOperator, 3> logical_frame(const LogicalSet& logicals, int pair_index) {
  if (pair_index < 0 || pair_index >= logicals.k()) {
    throw std::out_of_range("logical pair index " + std::to_string(pair_index + 1) +
                            " out of range 1.." + std::to_string(logicals.k()));
  }
  const auto& pair = logicals.pairs[static_cast<std::size_t>(pair_index)];
  return {pair.x, times_i_pow(pair.z * pair.x, 1), pair.z};
}

LogicalQubitSetup make_logical_qubit(const CodeSpec& code, const LogicalSet& logicals,
                                     int pair_index) {
  if (code.n > kMaxDephasingQubits) {
    throw InfeasibleRequest("dephasing analysis supports n <= " +
                            std::to_string(kMaxDephasingQubits));
  }
  const auto report = verify_logical_set(code, logicals);
  if (!report.valid()) {
    throw std::invalid_argument("logical operators fail verification: " +
                                report.violations.front().subject + " " +
                                report.violations.front().condition);
  }
  LogicalQubitSetup setup;
  setup.frame = logical_frame(logicals, pair_index);
  setup.zero_l = codeword_zero(code);
  setup.one_l = apply(setup.frame[0], setup.zero_l);
  setup.code_space = code_space_operator(code, CodeSpaceNormalization::register_dimension);
  return setup;
}

std::vector<ObservableRecord> bloch_and_leakage(const CodeSpec& code, const LogicalSet& logicals,
                                                double theta, double phi, const NoiseModel& model,
                                                std::span<const double> t_grid, int pair_index) {
  const auto setup = make_logical_qubit(code, logicals, pair_index);
  const PureState psi = prepare_logical_state(theta, phi, setup.zero_l, setup.one_l);

  std::array<std::vector<PauliTerm>, 3> leakage_ops;
  for (std::size_t l = 0; l < 3; ++l) {
    for (const auto& term : setup.code_space) {
      leakage_ops[l].push_back({term.coefficient, setup.frame[l] * term.op});
    }
  }

  const auto identity = PauliOperator::identity(code.n);
  std::vector<ObservableRecord> out;
  out.reserve(t_grid.size());
  for (double t : t_grid) {
    const Complex trace = dephased_pauli_expectation(psi, identity, model, t);
    if (std::abs(trace - 1.0) > 1e-12) throw std::logic_error("dephased state lost its trace");

    ObservableRecord rec;
    rec.t = t;
    std::array<double, 3> r{};
    std::array<double, 3> p{};
    for (std::size_t l = 0; l < 3; ++l) {
      r[l] = real_part_checked(dephased_pauli_expectation(psi, setup.frame[l], model, t),
                               "logical Bloch coordinate");
      Complex leak{};
      for (const auto& term : leakage_ops[l]) {
        leak += term.coefficient * dephased_pauli_expectation(psi, term.op, model, t);
      }
      p[l] = real_part_checked(leak, "leakage observable");
    }
    rec.r_x = r[0];
    rec.r_y = r[1];
    rec.r_z = r[2];
    rec.p_x = p[0];
    rec.p_y = p[1];
    rec.p_z = p[2];
    out.push_back(rec);
  }
  return out;
}

ObservableRecord closed_form(DephasingKind kind, double theta, double phi, double gamma, double t) {
  const double e2 = std::exp(-2.0 * gamma * t);
  const double e8 = std::exp(-8.0 * gamma * t);
  const double st = std::sin(theta);
  const double ct = std::cos(theta);
  const double cp = std::cos(phi);
  const double sp = std::sin(phi);
  ObservableRecord rec;
  rec.t = t;
  if (kind == DephasingKind::global) {
    rec.r_x = 0.5 * (1 + e2) * st * cp;
    rec.r_y = -0.5 * (1 + e2) * st * sp;
    rec.r_z = ct;
    rec.p_x = (3 + 4 * e2 + e8) / 32.0 * st * cp;
    rec.p_y = -(3 + 4 * e2 + e8) / 32.0 * st * sp;
    rec.p_z = (1 + 9 * ct - 4 * e2 * (1 - ct) + 3 * e8 * (1 + ct)) / 64.0;
  } else {
    rec.r_x = e2 * st * cp;
    rec.r_y = -e2 * st * sp;
    rec.r_z = ct;
    rec.p_x = (e2 + e8) / 8.0 * st * cp;
    rec.p_y = -(e2 + e8) / 8.0 * st * sp;
    rec.p_z = (1 + 3 * e8) / 16.0 * ct;
  }
  return rec;
}

double counter_normal(std::uint64_t seed, std::uint64_t sample, std::uint64_t draw) {
  const auto [a, b] = normal_pair(seed, sample, draw / 2);
  return draw % 2 == 0 ? a : b;
}

std::vector<MonteCarloRecord> monte_carlo_oracle(const CodeSpec& code, const LogicalSet& logicals,
                                                 std::span<const AnglePair> angles,
                                                 const NoiseModel& model, double t,
                                                 const MonteCarloOptions& options,
                                                 int pair_index) {
  check_model(model, t);
  if (options.samples < 1) throw std::invalid_argument("Monte Carlo needs at least one sample");
  const auto setup = make_logical_qubit(code, logicals, pair_index);
  const int n = code.n;

  // Restrict everything to the basis states carrying logical amplitude; the
  // diagonal noise never leaves that set.
  std::vector<std::uint64_t> support;
  std::map<std::uint64_t, std::uint32_t> position;
  for (std::uint64_t a = 0; a < setup.zero_l.dimension(); ++a) {
    const auto i = static_cast<Eigen::Index>(a);
    if (setup.zero_l.amplitudes[i] != Complex{} || setup.one_l.amplitudes[i] != Complex{}) {
      position[a] = static_cast<std::uint32_t>(support.size());
      support.push_back(a);
    }
  }
  const std::size_t s = support.size();
  std::vector<Complex> zero(s);
  std::vector<Complex> one(s);
  for (std::size_t i = 0; i < s; ++i) {
    zero[i] = setup.zero_l.amplitudes[static_cast<Eigen::Index>(support[i])];
    one[i] = setup.one_l.amplitudes[static_cast<Eigen::Index>(support[i])];
  }

  // Observables 0..2: logical X, Y, Z. 3..5: the same times the code-space operator.
  std::array<std::vector<SparseEntry>, 6> observables;
  auto restrict_terms = [&](const std::vector<PauliTerm>& terms) {
    std::map<std::pair<std::uint32_t, std::uint32_t>, Complex> merged;
    for (const auto& term : terms) {
      for (std::size_t c = 0; c < s; ++c) {
        const auto it = position.find(support[c] ^ term.op.x.low());
        if (it == position.end()) continue;
        merged[{it->second, static_cast<std::uint32_t>(c)}] +=
            term.coefficient * basis_phase(term.op, support[c]);
      }
    }
    std::vector<SparseEntry> out;
    for (const auto& [rc, v] : merged) {
      if (v != Complex{}) out.push_back({rc.first, rc.second, v});
    }
    return out;
  };
  for (std::size_t l = 0; l < 3; ++l) {
    observables[l] = restrict_terms({{1.0, setup.frame[l]}});
    std::vector<PauliTerm> leak;
    for (const auto& term : setup.code_space) {
      leak.push_back({term.coefficient, setup.frame[l] * term.op});
    }
    observables[3 + l] = restrict_terms(leak);
  }

  struct AngleWeights {
    double cc, ss;
    Complex cs_e, cs_ebar;
  };
  std::vector<AngleWeights> weights;
  for (const auto& ang : angles) {
    const double c = std::cos(ang.theta / 2);
    const double sn = std::sin(ang.theta / 2);
    const Complex e = std::polar(1.0, ang.phi);
    weights.push_back({c * c, sn * sn, c * sn * e, c * sn * std::conj(e)});
  }

  const double variance = model.convention * model.gamma * t;
  const double sigma = std::sqrt(variance);
  const std::size_t stats_per_chunk = angles.size() * 6;
  constexpr std::int64_t kChunk = 4096;
  const std::int64_t chunks = (options.samples + kChunk - 1) / kChunk;
  std::vector<RunningStats> chunk_stats(static_cast<std::size_t>(chunks) * stats_per_chunk);

  auto run_chunk = [&](std::int64_t chunk) {
    RunningStats* stats = chunk_stats.data() + static_cast<std::size_t>(chunk) * stats_per_chunk;
    std::vector<Complex> qubit_phase(static_cast<std::size_t>(n));
    std::vector<Complex> u0(s);
    std::vector<Complex> u1(s);
    const std::int64_t begin = chunk * kChunk;
    const std::int64_t end = std::min(options.samples, begin + kChunk);
    for (std::int64_t sample = begin; sample < end; ++sample) {
      const auto id = static_cast<std::uint64_t>(sample);
      if (model.kind == DephasingKind::global) {
        const double angle = sigma * normal_pair(options.seed, id, 0).first;
        for (std::size_t i = 0; i < s; ++i) {
          const Complex ph = std::polar(1.0, -0.5 * angle * magnetization(support[i], n));
          u0[i] = zero[i] * ph;
          u1[i] = one[i] * ph;
        }
      } else {
        for (int q = 0; q < n; q += 2) {
          const auto [g0, g1] = normal_pair(options.seed, id, static_cast<std::uint64_t>(q / 2));
          qubit_phase[static_cast<std::size_t>(q)] = std::polar(1.0, -0.5 * sigma * g0);
          if (q + 1 < n) qubit_phase[static_cast<std::size_t>(q + 1)] = std::polar(1.0, -0.5 * sigma * g1);
        }
        for (std::size_t i = 0; i < s; ++i) {
          Complex ph{1.0, 0.0};
          for (int q = 0; q < n; ++q) {
            const Complex e = qubit_phase[static_cast<std::size_t>(q)];
            ph *= ((support[i] >> q) & 1U) ? std::conj(e) : e;
          }
          u0[i] = zero[i] * ph;
          u1[i] = one[i] * ph;
        }
      }
      for (std::size_t k = 0; k < 6; ++k) {
        Complex g00{}, g01{}, g10{}, g11{};
        for (const auto& e : observables[k]) {
          const Complex c0 = std::conj(u0[e.row]);
          const Complex c1 = std::conj(u1[e.row]);
          const Complex v0 = e.value * u0[e.col];
          const Complex v1 = e.value * u1[e.col];
          g00 += c0 * v0;
          g01 += c0 * v1;
          g10 += c1 * v0;
          g11 += c1 * v1;
        }
        for (std::size_t a = 0; a < weights.size(); ++a) {
          const auto& w = weights[a];
          const double value =
              (w.cc * g00 + w.ss * g11 + w.cs_e * g01 + w.cs_ebar * g10).real();
          stats[a * 6 + k].add(value);
        }
      }
    }
  };

  const int workers = static_cast<int>(std::clamp<std::int64_t>(options.threads, 1, chunks));
  if (workers == 1) {
    for (std::int64_t c = 0; c < chunks; ++c) run_chunk(c);
  } else {
    std::vector<std::thread> pool;
    for (int w = 0; w < workers; ++w) {
      pool.emplace_back([&, w] {
        for (std::int64_t c = w; c < chunks; c += workers) run_chunk(c);
      });
    }
    for (auto& th : pool) th.join();
  }

  std::vector<MonteCarloRecord> out(angles.size());
  for (std::size_t a = 0; a < angles.size(); ++a) {
    std::array<RunningStats, 6> total{};
    for (std::int64_t c = 0; c < chunks; ++c) {
      for (std::size_t k = 0; k < 6; ++k) {
        total[k].merge(chunk_stats[static_cast<std::size_t>(c) * stats_per_chunk + a * 6 + k]);
      }
    }
    auto& rec = out[a];
    rec.mean.t = t;
    rec.mean.r_x = total[0].mean;
    rec.mean.r_y = total[1].mean;
    rec.mean.r_z = total[2].mean;
    rec.mean.p_x = total[3].mean;
    rec.mean.p_y = total[4].mean;
    rec.mean.p_z = total[5].mean;
    for (std::size_t k = 0; k < 6; ++k) rec.standard_error[k] = total[k].standard_error();
  }
  return out;
}

MonteCarloRecord monte_carlo_oracle(const CodeSpec& code, const LogicalSet& logicals, double theta,
                                    double phi, const NoiseModel& model, double t,
                                    const MonteCarloOptions& options, int pair_index) {
  const AnglePair angle{theta, phi};
  return monte_carlo_oracle(code, logicals, std::span<const AnglePair>(&angle, 1), model, t,
                            options, pair_index)
      .front();
}

}  // namespace dtc
