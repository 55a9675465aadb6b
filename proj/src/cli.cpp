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

#include "dtc/cli.hpp"

#include <chrono>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <CLI11.hpp>

#include "dtc/code_io.hpp"
#include "dtc/dephasing.hpp"
#include "dtc/engine.hpp"
#include "dtc/gf2.hpp"
#include "dtc/lattice.hpp"

namespace dtc {
namespace {

class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct Output {
  std::string path;  // empty: stdout
  std::vector<std::string> inputs;
  Json parameters = Json::object();
};

void emit(const Output& target, const std::string& command, const std::string& payload,
          std::ostream& out, std::chrono::steady_clock::time_point started) {
  if (target.path.empty()) {
    out << payload;
    return;
  }
  {
    std::ofstream file(target.path, std::ios::binary);
    if (!file) throw std::runtime_error("cannot write " + target.path);
    file << payload;
  }
  const double seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - started).count();
  Json manifest;
  manifest["command"] = command;
  manifest["parameters"] = target.parameters;
  manifest["version"] = kVersion;
  manifest["inputs"] = target.inputs;
  manifest["outputs"] = Json::array({target.path});
  manifest["wall_clock_seconds"] = seconds;
  std::ofstream file(target.path + ".manifest.json", std::ios::binary);
  file << manifest.dump(2) << "\n";
}

CodeSpec load_code_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("cannot open code file " + path);
  Json j;
  try {
    j = Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw UsageError("malformed JSON in " + path + ": " + e.what());
  }
  try {
    return code_from_json(j);
  } catch (const std::exception& e) {
    throw UsageError("invalid code in " + path + ": " + e.what());
  }
}

CodeSpec load_code_or_target(const std::string& spec) {
  if (std::filesystem::is_regular_file(spec)) return load_code_file(spec);
  try {
    return build_target(spec);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
}

std::vector<double> parse_grid(const std::string& text) {
  std::vector<std::string> parts;
  std::stringstream ss(text);
  for (std::string part; std::getline(ss, part, ':');) parts.push_back(part);
  if (parts.size() != 3) throw UsageError("--t-grid expects start:stop:steps");
  double start = 0;
  double stop = 0;
  long steps = 0;
  try {
    std::size_t used = 0;
    start = std::stod(parts[0], &used);
    if (used != parts[0].size()) throw std::invalid_argument("start");
    stop = std::stod(parts[1], &used);
    if (used != parts[1].size()) throw std::invalid_argument("stop");
    steps = std::stol(parts[2], &used);
    if (used != parts[2].size()) throw std::invalid_argument("steps");
  } catch (const std::exception&) {
    throw UsageError("cannot parse --t-grid '" + text + "'");
  }
  if (steps < 0 || start < 0 || stop < start || (steps == 0 && stop != start)) {
    throw UsageError("invalid --t-grid '" + text + "': need 0 <= start <= stop and steps >= 0");
  }
  std::vector<double> grid;
  for (long i = 0; i <= steps; ++i) {
    grid.push_back(steps == 0 ? start : start + (stop - start) * static_cast<double>(i) / steps);
  }
  return grid;
}

LogicalSet logicals_for(const CodeSpec& code) {
  LogicalSet transcribed{code.logical_pairs, false};
  if (!code.logical_pairs.empty() && verify_logical_set(code, transcribed).valid() &&
      transcribed.k() == code.n - symplectic_rank(code.stabilizers)) {
    return transcribed;
  }
  return find_logical_set(code);
}

int cmd_build(const std::string& target, const Output& output, std::ostream& out,
              std::chrono::steady_clock::time_point started) {
  CodeSpec code;
  try {
    code = build_target(target);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  emit(output, "build", code_to_json(code).dump(2) + "\n", out, started);
  return kExitOk;
}

int cmd_verify(const std::string& path, const VerifyOptions& options, const Output& output,
               std::ostream& out, std::chrono::steady_clock::time_point started) {
  const CodeSpec code = load_code_file(path);
  const VerificationReport report = verify_code(code, options);
  emit(output, "verify", report_to_json(report).dump(2) + "\n", out, started);
  return report.exit_code();
}

struct DephaseArgs {
  std::string code;
  std::string kind;
  double theta = 0;
  double phi = 0;
  double gamma = 0;
  double convention = 1;
  std::string t_grid;
  std::int64_t mc_samples = 0;
  std::optional<std::uint64_t> seed;
  int pair = 1;
  int threads = 1;
};

int cmd_dephase(const DephaseArgs& a, const Output& output, std::ostream& out,
                std::chrono::steady_clock::time_point started) {
  DephasingKind kind;
  try {
    kind = parse_dephasing_kind(a.kind);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  if (a.mc_samples < 0) throw UsageError("--mc-samples must be >= 0");
  if (a.mc_samples > 0 && !a.seed) throw UsageError("--seed is required when --mc-samples > 0");
  if (a.gamma < 0) throw UsageError("--gamma must be >= 0");
  if (a.convention <= 0) throw UsageError("--convention must be > 0");
  const auto grid = parse_grid(a.t_grid);
  const CodeSpec code = load_code_or_target(a.code);
  if (code.n > kMaxDephasingQubits) {
    throw InfeasibleRequest("dephasing analysis supports n <= " +
                            std::to_string(kMaxDephasingQubits));
  }
  const LogicalSet logicals = logicals_for(code);
  const NoiseModel model{kind, a.gamma, a.convention};
  const int pair_index = a.pair - 1;

  const auto engine = bloch_and_leakage(code, logicals, a.theta, a.phi, model, grid, pair_index);
  std::string csv = sweep_csv_header() + "\n";
  for (std::size_t i = 0; i < grid.size(); ++i) {
    SweepRow row{a.gamma, a.theta, a.phi, kind, "engine", engine[i], std::nullopt};
    csv += sweep_csv_line(row) + "\n";
    row.source = "closed_form";
    row.record = closed_form(kind, a.theta, a.phi, a.gamma, grid[i]);
    csv += sweep_csv_line(row) + "\n";
    if (a.mc_samples > 0) {
      const auto mc = monte_carlo_oracle(code, logicals, a.theta, a.phi, model, grid[i],
                                         {a.mc_samples, *a.seed, a.threads}, pair_index);
      row.source = "monte_carlo";
      row.record = mc.mean;
      row.standard_error = mc.standard_error;
      csv += sweep_csv_line(row) + "\n";
    }
  }
  emit(output, "dephase", csv, out, started);
  return kExitOk;
}

int cmd_family(int p_max, int verify_max_n, int threads, const Output& output, std::ostream& out,
               std::chrono::steady_clock::time_point started) {
  if (p_max < 1) throw UsageError("--p-max must be >= 1");
  std::string csv = "p,n,m,k,d_declared,rate,verified,d_verified\n";
  int status = kExitOk;
  for (int p = 1; p <= p_max; ++p) {
    const FamilyParameters f = family_parameters(p);
    csv += std::to_string(p) + "," + std::to_string(f.n) + "," + std::to_string(f.m) + "," +
           std::to_string(f.k) + "," + std::to_string(f.d) + "," +
           format_double(static_cast<double>(f.k) / f.n) + ",";
    if (f.n <= verify_max_n) {
      const CodeSpec code = stack_grid(p);
      const int rank = symplectic_rank(code.stabilizers);
      const auto dist = distance_symplectic(code, f.d, threads);
      const bool counts_ok = code.n == f.n && static_cast<int>(code.stabilizers.size()) == f.m &&
                             rank == f.m;
      const bool distance_ok = dist.distance && *dist.distance == f.d;
      if (!counts_ok || !distance_ok) status = kExitMismatch;
      csv += "yes," + (dist.distance ? std::to_string(*dist.distance) : ">" + std::to_string(f.d));
    } else {
      csv += "no,";
    }
    csv += "\n";
  }
  emit(output, "family", csv, out, started);
  return status;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  const auto started = std::chrono::steady_clock::now();
  CLI::App app{"Rhombus-tile surface-code toolkit", "dtc"};
  app.require_subcommand(1);
  app.set_version_flag("--version", kVersion);

  Output output;
  std::string target;
  auto* build = app.add_subcommand("build", "Emit a code as JSON");
  build->add_option("target", target,
                    "unit | two_horizontal | two_vertical | grid_2x2 | grid:<p> | "
                    "lshape:<v>,<h>[,matrix]")
      ->required();
  build->add_option("--out", output.path, "Write to file instead of stdout");

  std::string code_path;
  VerifyOptions verify_options;
  auto* verify = app.add_subcommand("verify", "Check declared [[n,k,d]] and logical operators");
  verify->add_option("code", code_path, "CodeSpec JSON file")->required();
  verify->add_option("--w-max", verify_options.w_max, "Largest weight searched")
      ->check(CLI::PositiveNumber);
  verify->add_flag("--kl", verify_options.kl, "Also run the Knill-Laflamme oracle (n <= 20)");
  verify->add_option("--threads", verify_options.threads)->check(CLI::PositiveNumber);
  verify->add_option("--out", output.path);

  DephaseArgs dephase_args;
  auto* dephase = app.add_subcommand("dephase", "Sweep logical observables under dephasing");
  dephase->add_option("--code", dephase_args.code, "Build target or CodeSpec JSON file")
      ->required();
  dephase->add_option("--kind", dephase_args.kind, "global | local")->required();
  dephase->add_option("--theta", dephase_args.theta)->required();
  dephase->add_option("--phi", dephase_args.phi)->required();
  dephase->add_option("--gamma", dephase_args.gamma)->required();
  dephase->add_option("--t-grid", dephase_args.t_grid, "start:stop:steps")->required();
  dephase->add_option("--mc-samples", dephase_args.mc_samples);
  dephase->add_option("--seed", dephase_args.seed);
  dephase->add_option("--convention", dephase_args.convention, "Decay exponent multiplier");
  dephase->add_option("--pair", dephase_args.pair, "Logical pair used as the Bloch frame (1-based)")
      ->check(CLI::PositiveNumber);
  dephase->add_option("--threads", dephase_args.threads)->check(CLI::PositiveNumber);
  dephase->add_option("--out", output.path);

  int p_max = 0;
  int verify_max_n = 42;
  int family_threads = 1;
  auto* family = app.add_subcommand("family", "Tabulate the p x p family parameters");
  family->add_option("--p-max", p_max)->required();
  family->add_option("--verify-max-n", verify_max_n, "Verify distances for rows with n <= this");
  family->add_option("--threads", family_threads)->check(CLI::PositiveNumber);
  family->add_option("--out", output.path);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForVersion&) {
    out << kVersion << "\n";
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "dtc: " << e.what() << "\n";
    return kExitUsage;
  }

  for (auto* sub : app.get_subcommands()) {
    for (const auto* opt : sub->get_options()) {
      if (opt->count() > 0 && opt->get_name() != "--help") {
        const auto name = opt->get_name().empty() ? opt->get_name() : opt->get_name();
        output.parameters[name] = opt->as<std::string>();
      }
    }
  }

  try {
    if (*build) return cmd_build(target, output, out, started);
    if (*verify) {
      output.inputs = {code_path};
      return cmd_verify(code_path, verify_options, output, out, started);
    }
    if (*dephase) return cmd_dephase(dephase_args, output, out, started);
    if (*family) return cmd_family(p_max, verify_max_n, family_threads, output, out, started);
  } catch (const UsageError& e) {
    err << "dtc: " << e.what() << "\n";
    return kExitUsage;
  } catch (const InfeasibleRequest& e) {
    err << "dtc: " << e.what() << "\n";
    return kExitInfeasible;
  } catch (const std::exception& e) {
    err << "dtc: " << e.what() << "\n";
    return kExitMismatch;
  }
  return kExitUsage;
}

}  // namespace dtc
