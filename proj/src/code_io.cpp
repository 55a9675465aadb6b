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

#include "dtc/code_io.hpp"

#include <algorithm>
#include <array>
#include <charconv>
#include <map>
#include <stdexcept>

namespace dtc {
namespace {

Json point_list(const std::vector<ScaledPoint>& points) {
  Json arr = Json::array();
  for (const auto& p : points) arr.push_back(Json::array({p.a, p.b}));
  return arr;
}

std::vector<ScaledPoint> read_points(const Json& arr, const char* field) {
  if (!arr.is_array()) throw std::invalid_argument(std::string("layout.") + field + " must be an array");
  std::vector<ScaledPoint> out;
  for (const auto& p : arr) {
    if (!p.is_array() || p.size() != 2 || !p[0].is_number_integer() || !p[1].is_number_integer()) {
      throw std::invalid_argument(std::string("layout.") + field + " entries must be [int, int]");
    }
    out.push_back({p[0].get<int>(), p[1].get<int>()});
  }
  return out;
}

std::vector<std::vector<int>> adjacency_for(const std::vector<ScaledPoint>& ancillae,
                                            const std::vector<ScaledPoint>& data) {
  std::map<ScaledPoint, int> index;
  for (std::size_t i = 0; i < data.size(); ++i) index[data[i]] = static_cast<int>(i);
  static constexpr std::array<std::pair<int, int>, 6> offsets = {
      {{-2, 0}, {2, 0}, {-1, -1}, {1, -1}, {-1, 1}, {1, 1}}};
  std::vector<std::vector<int>> out;
  for (const auto& anc : ancillae) {
    std::vector<int> adj;
    for (auto [da, db] : offsets) {
      if (auto it = index.find({anc.a + da, anc.b + db}); it != index.end()) adj.push_back(it->second);
    }
    std::sort(adj.begin(), adj.end());
    out.push_back(std::move(adj));
  }
  return out;
}

int parse_int(std::string_view text, const char* what) {
  int value = 0;
  const auto* end = text.data() + text.size();
  const auto [ptr, ec] = std::from_chars(text.data(), end, value);
  if (ec != std::errc{} || ptr != end) {
    throw std::invalid_argument(std::string("cannot parse ") + what + " from '" +
                                std::string(text) + "'");
  }
  return value;
}

}  // namespace

Json code_to_json(const CodeSpec& code) {
  Json j;
  j["n"] = code.n;
  Json stabs = Json::array();
  for (const auto& s : code.stabilizers) stabs.push_back(to_string(s));
  j["stabilizers"] = std::move(stabs);
  Json pairs = Json::array();
  for (const auto& p : code.logical_pairs) pairs.push_back(Json::array({to_string(p.x), to_string(p.z)}));
  j["logical_pairs"] = std::move(pairs);
  if (code.declared) {
    j["declared"] = Json::array({code.declared->n, code.declared->k, code.declared->d});
  } else {
    j["declared"] = nullptr;
  }
  if (code.layout) {
    j["layout"] = Json{{"data", point_list(code.layout->data)},
                       {"x_ancilla", point_list(code.layout->x_ancilla)},
                       {"z_ancilla", point_list(code.layout->z_ancilla)}};
  }
  return j;
}

CodeSpec code_from_json(const Json& j) {
  if (!j.is_object()) throw std::invalid_argument("code JSON must be an object");
  if (!j.contains("n") || !j["n"].is_number_integer()) throw std::invalid_argument("missing integer field n");
  if (!j.contains("stabilizers") || !j["stabilizers"].is_array()) {
    throw std::invalid_argument("missing array field stabilizers");
  }
  CodeSpec code;
  code.n = j["n"].get<int>();
  if (code.n < 1 || code.n > kMaxQubits) throw std::invalid_argument("n must be in 1.." + std::to_string(kMaxQubits));
  for (const auto& s : j["stabilizers"]) {
    if (!s.is_string()) throw std::invalid_argument("stabilizers must be operator strings");
    code.stabilizers.push_back(parse_pauli(s.get<std::string>(), code.n));
  }
  if (j.contains("logical_pairs") && !j["logical_pairs"].is_null()) {
    for (const auto& p : j["logical_pairs"]) {
      if (!p.is_array() || p.size() != 2 || !p[0].is_string() || !p[1].is_string()) {
        throw std::invalid_argument("logical_pairs entries must be [string, string]");
      }
      code.logical_pairs.push_back(
          {parse_pauli(p[0].get<std::string>(), code.n), parse_pauli(p[1].get<std::string>(), code.n)});
    }
  }
  if (j.contains("declared") && !j["declared"].is_null()) {
    const auto& d = j["declared"];
    if (!d.is_array() || d.size() != 3) throw std::invalid_argument("declared must be [n, k, d]");
    code.declared = CodeParameters{d[0].get<int>(), d[1].get<int>(), d[2].get<int>()};
  }
  if (j.contains("layout") && !j["layout"].is_null()) {
    const auto& l = j["layout"];
    LatticeLayout layout;
    layout.data = read_points(l.at("data"), "data");
    layout.x_ancilla = read_points(l.at("x_ancilla"), "x_ancilla");
    layout.z_ancilla = read_points(l.at("z_ancilla"), "z_ancilla");
    layout.x_adjacency = adjacency_for(layout.x_ancilla, layout.data);
    layout.z_adjacency = adjacency_for(layout.z_ancilla, layout.data);
    code.layout = std::move(layout);
  }
  validate(code);
  return code;
}

Json report_to_json(const VerificationReport& report) {
  Json j;
  j["commuting"] = report.commuting;
  j["rank"] = report.rank;
  j["k"] = report.k;
  if (report.distance && report.distance->distance) {
    j["distance"] = *report.distance->distance;
    j["witness"] = to_string(*report.distance->witness);
  } else {
    j["distance"] = nullptr;
    j["witness"] = nullptr;
  }
  Json violations = Json::array();
  if (report.logical_report) {
    for (const auto& v : report.logical_report->violations) {
      violations.push_back(Json{{"subject", v.subject}, {"condition", v.condition}});
    }
  }
  j["logical_violations"] = std::move(violations);
  j["n"] = report.n;
  j["m"] = report.m;
  j["css"] = report.css;
  j["w_max"] = report.distance ? Json(report.distance->w_max) : Json(nullptr);
  if (report.distance_kl) {
    j["distance_kl"] = report.distance_kl->distance ? Json(*report.distance_kl->distance) : Json(nullptr);
    j["kl_witness"] =
        report.distance_kl->witness ? Json(to_string(*report.distance_kl->witness)) : Json(nullptr);
    j["kl_logicals"] = report.logical_source;
  }
  if (report.declared) {
    j["declared"] = Json::array({report.declared->n, report.declared->k, report.declared->d});
  } else {
    j["declared"] = nullptr;
  }
  j["mismatches"] = report.mismatches;
  j["infeasible"] = report.infeasible;
  j["confirmed"] = report.exit_code() == 0;
  return j;
}

std::string format_double(double value) {
  std::array<char, 64> buf{};
  const auto [ptr, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), value);
  if (ec != std::errc{}) throw std::runtime_error("float formatting failed");
  return std::string(buf.data(), ptr);
}

CodeSpec build_target(std::string_view target) {
  if (target == "unit" || target == "two_horizontal" || target == "two_vertical" ||
      target == "grid_2x2") {
    return build_named(target);
  }
  if (target.starts_with("grid:")) {
    return stack_grid(parse_int(target.substr(5), "grid size"));
  }
  if (target.starts_with("lshape:")) {
    std::string_view rest = target.substr(7);
    std::vector<std::string_view> parts;
    while (true) {
      const auto comma = rest.find(',');
      parts.push_back(rest.substr(0, comma));
      if (comma == std::string_view::npos) break;
      rest = rest.substr(comma + 1);
    }
    if (parts.size() < 2 || parts.size() > 3 || (parts.size() == 3 && parts[2] != "matrix")) {
      throw std::invalid_argument("lshape target is lshape:<v>,<h>[,matrix]");
    }
    return stack_l_shape(parse_int(parts[0], "v"), parse_int(parts[1], "h"), parts.size() == 3);
  }
  throw std::invalid_argument("unknown build target '" + std::string(target) + "'");
}

std::string sweep_csv_header() {
  return "t,gamma,theta,phi,kind,source,r_x,r_y,r_z,p_x,p_y,p_z,"
         "se_r_x,se_r_y,se_r_z,se_p_x,se_p_y,se_p_z";
}

std::string sweep_csv_line(const SweepRow& row) {
  std::string line = format_double(row.record.t) + "," + format_double(row.gamma) + "," +
                     format_double(row.theta) + "," + format_double(row.phi) + "," +
                     std::string(to_string(row.kind)) + "," + row.source;
  for (double v : row.record.values()) line += "," + format_double(v);
  for (std::size_t i = 0; i < 6; ++i) {
    line += ",";
    if (row.standard_error) line += format_double((*row.standard_error)[i]);
  }
  return line;
}

}  // namespace dtc
