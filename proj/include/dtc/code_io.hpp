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

#include <string>
#include <string_view>

#include <json.hpp>

#include "dtc/dephasing.hpp"
#include "dtc/engine.hpp"
#include "dtc/lattice.hpp"

namespace dtc {

using Json = nlohmann::ordered_json;

Json code_to_json(const CodeSpec& code);
// Rebuilds layout adjacency from the coordinates. Throws std::invalid_argument on
// schema violations.
CodeSpec code_from_json(const Json& j);

Json report_to_json(const VerificationReport& report);

// Shortest decimal that round-trips to the same double.
std::string format_double(double value);

// unit | two_horizontal | two_vertical | grid_2x2 | grid:<p> | lshape:<v>,<h>[,matrix]
CodeSpec build_target(std::string_view target);

struct SweepRow {
  double gamma = 0.0;
  double theta = 0.0;
  double phi = 0.0;
  DephasingKind kind = DephasingKind::global;
  std::string source;  // engine | closed_form | monte_carlo
  ObservableRecord record;
  std::optional<std::array<double, 6>> standard_error;
};

std::string sweep_csv_header();
std::string sweep_csv_line(const SweepRow& row);

}  // namespace dtc
