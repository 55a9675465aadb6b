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

#include "dtc/engine.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <cmath>
#include <map>
#include <span>
#include <thread>

#include "dtc/gf2.hpp"

namespace dtc {
namespace {

constexpr std::array<char, 3> kLetters = {'X', 'Y', 'Z'};

void require_independent(const CodeSpec& code) {
  const int rank = symplectic_rank(code.stabilizers);
  const int m = static_cast<int>(code.stabilizers.size());
  if (rank != m) {
    throw std::invalid_argument("stabilizer generators are dependent: rank " +
                                std::to_string(rank) + " of " + std::to_string(m));
  }
}

// Visits every weight-w support whose smallest qubit is `first`, in
// lexicographic order, and for each support every letter assignment in
// lexicographic order (X < Y < Z, first qubit most significant). Stops as soon as
// `visit(x, z)` returns true.
template <typename Visit>
bool enumerate_from(int n, int w, int first, Visit& visit) {
  std::array<int, kMaxQubits> support{};
  for (int i = 0; i < w; ++i) support[static_cast<std::size_t>(i)] = first + i;
  if (support[static_cast<std::size_t>(w - 1)] >= n) return false;
  while (true) {
    std::array<int, kMaxQubits> letters{};
    while (true) {
      QubitMask x;
      QubitMask z;
      for (int i = 0; i < w; ++i) {
        const int q = support[static_cast<std::size_t>(i)];
        const int letter = letters[static_cast<std::size_t>(i)];
        if (letter <= 1) x.set(q);
        if (letter >= 1) z.set(q);
      }
      if (visit(x, z)) return true;
      int pos = w - 1;
      while (pos >= 0 && letters[static_cast<std::size_t>(pos)] == 2) {
        letters[static_cast<std::size_t>(pos)] = 0;
        --pos;
      }
      if (pos < 0) break;
      ++letters[static_cast<std::size_t>(pos)];
    }
    int pos = w - 1;
    while (pos >= 1 && support[static_cast<std::size_t>(pos)] == n - w + pos) --pos;
    if (pos < 1) break;
    ++support[static_cast<std::size_t>(pos)];
    for (int i = pos + 1; i < w; ++i) {
      support[static_cast<std::size_t>(i)] = support[static_cast<std::size_t>(i - 1)] + 1;
    }
  }
  return false;
}

// Runs the weight-w search with the candidate space split by smallest support
// qubit. Each partition is scanned in order, so the lowest partition holding a
// hit yields the same witness for any thread count.
template <typename MakeChecker>
std::optional<PauliOperator> search_weight(int n, int w, int threads, MakeChecker make_checker) {
  const int partitions = n - w + 1;
  if (partitions <= 0) return std::nullopt;
  std::vector<std::optional<std::pair<QubitMask, QubitMask>>> hits(
      static_cast<std::size_t>(partitions));
  std::atomic<int> best{partitions};

  auto worker = [&](int t, int stride) {
    auto check = make_checker();
    for (int first = t; first < partitions; first += stride) {
      if (first > best.load()) break;
      auto visit = [&](const QubitMask& x, const QubitMask& z) {
        if (!check(x, z)) return false;
        hits[static_cast<std::size_t>(first)] = std::pair{x, z};
        return true;
      };
      if (enumerate_from(n, w, first, visit)) {
        int current = best.load();
        while (first < current && !best.compare_exchange_weak(current, first)) {
        }
        break;
      }
    }
  };

  const int workers = std::clamp(threads, 1, partitions);
  if (workers == 1) {
    worker(0, 1);
  } else {
    std::vector<std::thread> pool;
    for (int t = 0; t < workers; ++t) pool.emplace_back(worker, t, workers);
    for (auto& th : pool) th.join();
  }
  for (const auto& hit : hits) {
    if (hit) return PauliOperator::from_masks(n, hit->first, hit->second);
  }
  return std::nullopt;
}

template <typename MakeChecker>
DistanceResult search_distance(int n, int w_max, int threads, MakeChecker make_checker) {
  if (w_max < 1) throw std::invalid_argument("w_max must be >= 1");
  DistanceResult result;
  result.w_max = w_max;
  for (int w = 1; w <= std::min(w_max, n); ++w) {
    if (auto witness = search_weight(n, w, threads, make_checker)) {
      result.distance = w;
      result.witness = *witness;
      return result;
    }
  }
  return result;
}

std::string pair_label(const char* kind, std::size_t i) {
  return std::string(kind) + std::to_string(i + 1);
}

PauliOperator minimize_exhaustive(const PauliOperator& rep, std::span<const PauliOperator> stabs) {
  QubitMask x = rep.x;
  QubitMask z = rep.z;
  QubitMask best_x = x;
  QubitMask best_z = z;
  int best_weight = popcount(x | z);
  const std::uint64_t count = std::uint64_t{1} << stabs.size();
  // Gray-code walk over all stabilizer products; generators listed first are
  // toggled first, so ties resolve toward products of early generators.
  for (std::uint64_t i = 1; i < count; ++i) {
    const auto& s = stabs[static_cast<std::size_t>(std::countr_zero(i))];
    x ^= s.x;
    z ^= s.z;
    const int wgt = popcount(x | z);
    if (wgt < best_weight) {
      best_weight = wgt;
      best_x = x;
      best_z = z;
    }
  }
  return PauliOperator::from_masks(rep.n, best_x, best_z);
}

PauliOperator minimize_greedy(PauliOperator rep, std::span<const PauliOperator> stabs) {
  bool improved = true;
  while (improved) {
    improved = false;
    for (const auto& s : stabs) {
      const auto next = PauliOperator::from_masks(rep.n, rep.x ^ s.x, rep.z ^ s.z);
      if (weight(next) < weight(rep)) {
        rep = next;
        improved = true;
      }
    }
  }
  return rep;
}

}  // namespace

SparseState sparse_codeword_zero(const CodeSpec& code) {
  validate(code);
  if (code.n > 64) throw InfeasibleRequest("codeword expansion supports n <= 64");
  for (const auto& s : code.stabilizers) {
    if (s.is_z_type() && basis_phase(s, 0) != Complex{1, 0}) {
      throw std::domain_error("stabilizer " + to_string(s) +
                              " has eigenvalue other than +1 on |0...0>");
    }
  }
  std::map<std::uint64_t, Complex> amps{{0, Complex{1, 0}}};
  for (const auto& s : code.stabilizers) {
    std::map<std::uint64_t, Complex> next = amps;
    for (const auto& [b, a] : amps) next[b ^ s.x.low()] += basis_phase(s, b) * a;
    std::erase_if(next, [](const auto& kv) { return kv.second == Complex{}; });
    amps = std::move(next);
  }
  if (amps.empty()) throw std::domain_error("code-space projector annihilates |0...0>");
  double norm2 = 0;
  for (const auto& [b, a] : amps) norm2 += std::norm(a);
  const double scale = 1.0 / std::sqrt(norm2);
  SparseState out{code.n, {}};
  out.terms.reserve(amps.size());
  for (const auto& [b, a] : amps) out.terms.emplace_back(b, a * scale);
  return out;
}

SparseState apply(const PauliOperator& op, const SparseState& s) {
  if (op.n != s.n) throw std::invalid_argument("operator and state qubit counts differ");
  SparseState out{s.n, {}};
  out.terms.reserve(s.terms.size());
  for (const auto& [b, a] : s.terms) out.terms.emplace_back(b ^ op.x.low(), basis_phase(op, b) * a);
  std::sort(out.terms.begin(), out.terms.end(),
            [](const auto& l, const auto& r) { return l.first < r.first; });
  return out;
}

PureState to_dense(const SparseState& s) {
  PureState out = PureState::zeros(s.n);
  for (const auto& [b, a] : s.terms) out.amplitudes[static_cast<Eigen::Index>(b)] = a;
  return out;
}

PureState codeword_zero(const CodeSpec& code) { return to_dense(sparse_codeword_zero(code)); }

namespace {

SparseState sparse_logical_state(const SparseState& zero, const LogicalSet& logicals,
                                 std::uint64_t bits) {
  SparseState s = zero;
  for (int i = 0; i < logicals.k(); ++i) {
    if ((bits >> i) & 1U) s = apply(logicals.pairs[static_cast<std::size_t>(i)].x, s);
  }
  return s;
}

}  // namespace

PureState logical_basis_state(const CodeSpec& code, const LogicalSet& logicals,
                              std::string_view bits) {
  if (static_cast<int>(bits.size()) != logicals.k()) {
    throw std::invalid_argument("logical bit string has length " + std::to_string(bits.size()) +
                                " but k = " + std::to_string(logicals.k()));
  }
  std::uint64_t mask = 0;
  for (std::size_t i = 0; i < bits.size(); ++i) {
    if (bits[i] == '1') mask |= std::uint64_t{1} << i;
    else if (bits[i] != '0') throw std::invalid_argument("logical bit string must be 0/1");
  }
  return to_dense(sparse_logical_state(sparse_codeword_zero(code), logicals, mask));
}

LogicalReport verify_logical_set(const CodeSpec& code, const LogicalSet& logicals) {
  LogicalReport report;
  auto add = [&](std::string subject, std::string condition) {
    report.violations.push_back({std::move(subject), std::move(condition)});
  };
  for (const auto& pair : logicals.pairs) {
    if (pair.x.n != code.n || pair.z.n != code.n) {
      add(to_string(pair.x) + "/" + to_string(pair.z), "acts on the wrong number of qubits");
      return report;
    }
  }
  const Gf2Basis group(code.stabilizers);
  for (std::size_t i = 0; i < logicals.pairs.size(); ++i) {
    for (const PauliOperator* op : {&logicals.pairs[i].x, &logicals.pairs[i].z}) {
      for (const auto& s : code.stabilizers) {
        if (!commutes(*op, s)) add(to_string(*op), "anticommutes with stabilizer " + to_string(s));
      }
      if (group.contains(to_symplectic(*op))) add(to_string(*op), "lies in the stabilizer group");
    }
  }
  for (std::size_t i = 0; i < logicals.pairs.size(); ++i) {
    const auto& a = logicals.pairs[i];
    if (commutes(a.x, a.z)) {
      add(pair_label("X", i) + "=" + to_string(a.x) + ", " + pair_label("Z", i) + "=" +
              to_string(a.z),
          "partners commute instead of anticommuting");
    }
    for (std::size_t j = 0; j < logicals.pairs.size(); ++j) {
      if (i == j) continue;
      const auto& b = logicals.pairs[j];
      if (!commutes(a.x, b.z)) {
        add(pair_label("X", i) + "=" + to_string(a.x) + ", " + pair_label("Z", j) + "=" +
                to_string(b.z),
            "operators of different pairs anticommute");
      }
      if (j > i && !commutes(a.x, b.x)) {
        add(pair_label("X", i) + ", " + pair_label("X", j), "logical X operators anticommute");
      }
      if (j > i && !commutes(a.z, b.z)) {
        add(pair_label("Z", i) + ", " + pair_label("Z", j), "logical Z operators anticommute");
      }
    }
  }
  return report;
}

LogicalSet find_logical_set(const CodeSpec& code) {
  validate(code);
  if (code.n > kMaxLogicalSearchQubits) {
    throw InfeasibleRequest("logical-operator search supports n <= " +
                            std::to_string(kMaxLogicalSearchQubits));
  }
  require_independent(code);

  Gf2Basis span(code.stabilizers);
  std::vector<SymplecticVector> candidates;
  for (const auto& v : symplectic_complement(code.stabilizers, code.n)) {
    if (span.insert(v)) candidates.push_back(v);
  }

  std::vector<std::pair<SymplecticVector, SymplecticVector>> raw_pairs;
  while (!candidates.empty()) {
    const SymplecticVector v = candidates.front();
    const auto partner = std::find_if(candidates.begin() + 1, candidates.end(),
                                      [&](const auto& w) { return symplectic_product(v, w) == 1; });
    if (partner == candidates.end()) {
      throw std::logic_error("normalizer quotient is degenerate; stabilizers are not isotropic");
    }
    const SymplecticVector w = *partner;
    candidates.erase(partner);
    candidates.erase(candidates.begin());
    for (auto& u : candidates) {
      const int with_w = symplectic_product(u, w);
      const int with_v = symplectic_product(u, v);
      if (with_w) u ^= v;
      if (with_v) u ^= w;
    }
    raw_pairs.emplace_back(v, w);
  }

  LogicalSet set;
  const bool exhaustive = code.n <= kMaxExhaustiveCosetQubits &&
                          code.stabilizers.size() <= kMaxExhaustiveCosetGenerators;
  set.certified_minimal = exhaustive;
  for (const auto& [v, w] : raw_pairs) {
    const auto x = PauliOperator::from_masks(code.n, v.x, v.z);
    const auto z = PauliOperator::from_masks(code.n, w.x, w.z);
    if (exhaustive) {
      set.pairs.push_back({minimize_exhaustive(x, code.stabilizers),
                           minimize_exhaustive(z, code.stabilizers)});
    } else {
      set.pairs.push_back(
          {minimize_greedy(x, code.stabilizers), minimize_greedy(z, code.stabilizers)});
    }
  }
  return set;
}

DistanceResult distance_symplectic(const CodeSpec& code, int w_max, int threads) {
  validate(code);
  require_independent(code);
  const int n = code.n;
  const Gf2Basis group(code.stabilizers);

  // syndrome[q][letter]: bit i set when that single-qubit Pauli anticommutes with
  // stabilizer i.
  std::vector<std::array<QubitMask, 3>> syndrome(static_cast<std::size_t>(n));
  for (int q = 0; q < n; ++q) {
    for (int l = 0; l < 3; ++l) {
      const QubitMask bit = QubitMask::bit(q);
      const PauliOperator single =
          PauliOperator::from_masks(n, l <= 1 ? bit : QubitMask{}, l >= 1 ? bit : QubitMask{});
      QubitMask syn;
      for (std::size_t i = 0; i < code.stabilizers.size(); ++i) {
        if (!commutes(single, code.stabilizers[i])) syn.set(static_cast<int>(i));
      }
      syndrome[static_cast<std::size_t>(q)][static_cast<std::size_t>(l)] = syn;
    }
  }

  auto make_checker = [&]() {
    return [&](const QubitMask& x, const QubitMask& z) {
      QubitMask syn;
      QubitMask support = x | z;
      for (int q = support.lowest(); q >= 0; support.flip(q), q = support.lowest()) {
        const int letter = x.test(q) ? (z.test(q) ? 1 : 0) : 2;
        syn ^= syndrome[static_cast<std::size_t>(q)][static_cast<std::size_t>(letter)];
      }
      return syn.none() && !group.contains({x, z});
    };
  };
  return search_distance(n, w_max, threads, make_checker);
}

DistanceResult distance_kl_oracle(const CodeSpec& code, const LogicalSet& logicals, int w_max,
                                  int threads) {
  validate(code);
  const int n = code.n;
  if (n > kMaxKlQubits) {
    throw InfeasibleRequest("Knill-Laflamme oracle supports n <= " + std::to_string(kMaxKlQubits));
  }
  const int k = logicals.k();
  const std::size_t basis_size = std::size_t{1} << k;
  const SparseState zero = sparse_codeword_zero(code);
  std::vector<SparseState> codewords;
  codewords.reserve(basis_size);
  for (std::size_t j = 0; j < basis_size; ++j) {
    codewords.push_back(sparse_logical_state(zero, logicals, j));
  }

  // Compressed lookup: which codewords have weight on each computational basis state.
  const std::size_t dim = std::size_t{1} << n;
  std::vector<std::uint32_t> start(dim + 1, 0);
  for (const auto& cw : codewords) {
    for (const auto& [b, a] : cw.terms) ++start[b + 1];
  }
  for (std::size_t b = 0; b < dim; ++b) start[b + 1] += start[b];
  std::vector<std::pair<std::uint32_t, Complex>> entries(start[dim]);
  {
    std::vector<std::uint32_t> fill(start.begin(), start.end() - 1);
    for (std::size_t j = 0; j < codewords.size(); ++j) {
      for (const auto& [b, a] : codewords[j].terms) {
        entries[fill[b]++] = {static_cast<std::uint32_t>(j), std::conj(a)};
      }
    }
  }

  // True when <psi_i|E|psi_j> is not c * identity.
  auto make_checker = [&]() {
    return [&, column = std::vector<Complex>(basis_size), touched = std::vector<std::uint32_t>()](
               const QubitMask& x, const QubitMask& z) mutable {
      const auto op = PauliOperator::from_masks(n, x, z);
      std::optional<Complex> diagonal;
      bool violated = false;
      for (std::size_t j = 0; j < basis_size && !violated; ++j) {
        for (const auto& [b, a] : codewords[j].terms) {
          const std::uint64_t image = b ^ op.x.low();
          const Complex value = basis_phase(op, b) * a;
          for (auto e = start[image]; e < start[image + 1]; ++e) {
            const auto [i, conj_amp] = entries[e];
            if (column[i] == Complex{}) touched.push_back(i);
            column[i] += conj_amp * value;
          }
        }
        for (auto i : touched) {
          if (i == j) continue;
          if (std::abs(column[i]) > kKlTolerance) violated = true;
        }
        const Complex d = column[j];
        if (!diagonal) diagonal = d;
        else if (std::abs(d - *diagonal) > kKlTolerance) violated = true;
        for (auto i : touched) column[i] = Complex{};
        touched.clear();
      }
      return violated;
    };
  };

  {
    auto identity_check = make_checker();
    if (identity_check(0, 0)) {
      throw std::logic_error("logical basis states are not orthonormal");
    }
    double norm_error = 0;
    for (const auto& cw : codewords) {
      double norm2 = 0;
      for (const auto& [b, a] : cw.terms) norm2 += std::norm(a);
      norm_error = std::max(norm_error, std::abs(norm2 - 1.0));
    }
    if (norm_error > kKlTolerance) throw std::logic_error("logical basis states are not normalized");
  }
  return search_distance(n, w_max, threads, make_checker);
}

int VerificationReport::exit_code() const {
  if (!mismatches.empty()) return 1;
  if (!infeasible.empty()) return 2;
  return 0;
}

VerificationReport verify_code(const CodeSpec& code, const VerifyOptions& options) {
  VerificationReport report;
  report.n = code.n;
  report.m = static_cast<int>(code.stabilizers.size());
  report.declared = code.declared;
  report.css = is_css(code);
  report.commuting = true;
  for (std::size_t i = 0; i < code.stabilizers.size() && report.commuting; ++i) {
    for (std::size_t j = i + 1; j < code.stabilizers.size(); ++j) {
      if (!commutes(code.stabilizers[i], code.stabilizers[j])) {
        report.commuting = false;
        report.mismatches.push_back("stabilizers " + to_string(code.stabilizers[i]) + " and " +
                                    to_string(code.stabilizers[j]) + " anticommute");
        break;
      }
    }
  }
  report.rank = symplectic_rank(code.stabilizers);
  report.k = code.n - report.rank;
  if (report.rank != report.m) {
    report.mismatches.push_back("stabilizer generators are dependent: rank " +
                                std::to_string(report.rank) + " of " + std::to_string(report.m));
  }
  if (code.declared) {
    if (code.declared->n != code.n) {
      report.mismatches.push_back("declared n=" + std::to_string(code.declared->n) +
                                  " but the code has " + std::to_string(code.n) + " qubits");
    }
    if (code.declared->k != report.k) {
      report.mismatches.push_back("declared k=" + std::to_string(code.declared->k) +
                                  " but n - rank = " + std::to_string(report.k));
    }
  }
  if (!report.commuting || report.rank != report.m) return report;

  LogicalSet transcribed{code.logical_pairs, false};
  if (!code.logical_pairs.empty()) {
    report.logical_report = verify_logical_set(code, transcribed);
    if (!report.logical_report->valid()) {
      report.mismatches.push_back("transcribed logical operators violate " +
                                  std::to_string(report.logical_report->violations.size()) +
                                  " condition(s)");
    }
  }

  report.distance = distance_symplectic(code, options.w_max, options.threads);

  if (options.kl) {
    if (code.n > kMaxKlQubits) {
      report.infeasible.push_back("Knill-Laflamme oracle needs n <= " +
                                  std::to_string(kMaxKlQubits));
    } else {
      LogicalSet logicals;
      if (report.logical_report && report.logical_report->valid() &&
          transcribed.k() == report.k) {
        logicals = transcribed;
        report.logical_source = "transcribed";
      } else {
        logicals = find_logical_set(code);
        report.logical_source = "computed";
      }
      report.distance_kl = distance_kl_oracle(code, logicals, options.w_max, options.threads);
      if (report.distance_kl->distance != report.distance->distance) {
        report.mismatches.push_back("symplectic and Knill-Laflamme distances disagree");
      }
    }
  }

  if (code.declared) {
    const int d = code.declared->d;
    if (report.distance->distance) {
      if (*report.distance->distance != d) {
        report.mismatches.push_back("declared d=" + std::to_string(d) + " but a weight-" +
                                    std::to_string(*report.distance->distance) +
                                    " logical exists: " + to_string(*report.distance->witness));
      }
    } else if (d <= options.w_max) {
      report.mismatches.push_back("declared d=" + std::to_string(d) +
                                  " but no logical of weight <= " + std::to_string(options.w_max));
    } else {
      report.infeasible.push_back("declared d=" + std::to_string(d) + " exceeds --w-max " +
                                  std::to_string(options.w_max));
    }
  }
  return report;
}

}  // namespace dtc
