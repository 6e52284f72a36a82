// Copyright 2026 The Fermloc Authors.
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

#include "fermloc/json_io.hpp"

#include <cstdint>
#include <stdexcept>
#include <string>

#include "json.hpp"

namespace fermloc {

namespace {

using nlohmann::json;

std::string pattern_to_str(const PauliPattern& p, int n_qubits) {
  std::string out;
  for (int q = 0; q < n_qubits; ++q) {
    const std::uint64_t bit = std::uint64_t{1} << (q & 63);
    const bool x = p.x[static_cast<std::size_t>(q) >> 6] & bit;
    const bool z = p.z[static_cast<std::size_t>(q) >> 6] & bit;
    if (!x && !z) continue;
    if (!out.empty()) out += ' ';
    out += x ? (z ? 'Y' : 'X') : 'Z';
    out += std::to_string(q);
  }
  return out.empty() ? "I" : out;
}

// Flushes -0.0 so serialized coefficients don't depend on sign-of-zero.
double unsigned_zero(double v) { return v + 0.0; }

json pauli_terms_json(const PauliSum& op) {
  json arr = json::array();
  for (const auto& [pattern, coeff] : op.terms()) {
    arr.push_back(
        {{"coeff", {unsigned_zero(coeff.real()), unsigned_zero(coeff.imag())}},
         {"pauli", pattern_to_str(pattern, op.n_qubits())}});
  }
  return arr;
}

json mode_map_json(const AuxPlacement& aux) {
  json arr = json::array();
  const Placement& pl = aux.placement;
  for (int q = 0; q < pl.n_qubits(); ++q) {
    const int m = pl.qubit_to_mode[q];
    json entry = {{"qubit", q}, {"mode", m}};
    if (aux.is_aux(m)) {
      entry["kind"] = "aux";
      entry["host"] = aux.aux_host[m - aux.n_original];
    } else {
      entry["kind"] = "original";
    }
    arr.push_back(std::move(entry));
  }
  return arr;
}

json bare_mode_map_json(const Placement& pl) {
  json arr = json::array();
  for (int q = 0; q < pl.n_qubits(); ++q) {
    arr.push_back({{"qubit", q},
                   {"mode", pl.qubit_to_mode[q]},
                   {"kind", "original"}});
  }
  return arr;
}

const char* phase_word(int power) {
  switch (power & 3) {
    case 0:
      return "+1";
    case 1:
      return "+i";
    case 2:
      return "-1";
    default:
      return "-i";
  }
}

json stats_json(const std::map<std::string, TermClassStats>& stats,
                const PauliSum& op) {
  json classes = json::object();
  for (const auto& [name, s] : stats) {
    json hist = json::array();
    for (const auto& [weight, count] : s.weight_histogram) {
      hist.push_back({weight, count});
    }
    classes[name] = {{"count", s.count},
                     {"max_weight", s.max_weight},
                     {"mean_weight", s.mean_weight()},
                     {"weight_histogram", std::move(hist)}};
  }
  return {{"classes", std::move(classes)},
          {"max_weight", op.max_weight()},
          {"n_strings", op.terms().size()}};
}

json stabilizers_json(const std::vector<Stabilizer>& stabs) {
  json arr = json::array();
  for (const Stabilizer& s : stabs) {
    json entry = {{"edge", {s.coupling.edge.a, s.coupling.edge.b}},
                  {"terms", pauli_terms_json(s.op)}};
    try {
      const PauliString str = s.single_string();
      entry["pauli"] = str.pattern_str();
      entry["phase"] = phase_word(str.phase_power());
    } catch (const std::domain_error&) {
      // A gauge off the right-angle grid has no single-string form.
    }
    arr.push_back(std::move(entry));
  }
  return arr;
}

}  // namespace

std::string encoded_to_json(const EncodedHamiltonian& encoded, int indent) {
  const json j = {{"n_qubits", encoded.n_qubits()},
                  {"n_original_modes", encoded.layout.placement.n_original},
                  {"n_aux_modes",
                   static_cast<int>(encoded.layout.placement.aux_host.size())},
                  {"mode_map", mode_map_json(encoded.layout.placement)},
                  {"stabilizers", stabilizers_json(encoded.stabilizers)},
                  {"terms", pauli_terms_json(encoded.op)},
                  {"stats", stats_json(encoded.stats, encoded.op)}};
  return j.dump(indent);
}

std::string jw_encoded_to_json(const FermionHamiltonian& h,
                               const PauliSum& op, const Placement& placement,
                               const LinearOrder& order, int indent) {
  const std::map<std::string, TermClassStats> stats =
      jw_stats(h, placement, order);
  const json j = {{"n_qubits", placement.n_qubits()},
                  {"n_original_modes", h.n_modes},
                  {"n_aux_modes", 0},
                  {"mode_map", bare_mode_map_json(placement)},
                  {"stabilizers", json::array()},
                  {"terms", pauli_terms_json(op)},
                  {"stats", stats_json(stats, op)}};
  return j.dump(indent);
}

std::string layout_to_json(const EncodingLayout& layout, int indent) {
  json nonlocal = json::array();
  for (const Edge& e : layout.nonlocal) nonlocal.push_back({e.a, e.b});
  json couplings = json::array();
  for (const Coupling& c : layout.couplings.couplings) {
    couplings.push_back({{"edge", {c.edge.a, c.edge.b}},
                         {"anchors", {c.anchor_lo, c.anchor_hi}},
                         {"aux", {c.aux_lo, c.aux_hi}},
                         {"theta", {c.theta_lo, c.theta_hi}}});
  }
  json aux_counts = json::array();
  for (const auto& hosted : layout.placement.host_aux) {
    aux_counts.push_back(hosted.size());
  }
  const json j = {
      {"order", layout.order.sequence},
      {"n_original", layout.placement.n_original},
      {"n_aux", static_cast<int>(layout.placement.aux_host.size())},
      {"n_qubits", layout.n_qubits()},
      {"nonlocal_degree", nonlocal_degree(layout.graph, layout.order)},
      {"aux_counts", std::move(aux_counts)},
      {"nonlocal_edges", std::move(nonlocal)},
      {"mode_map", mode_map_json(layout.placement)},
      {"couplings", std::move(couplings)}};
  return j.dump(indent);
}

std::string stats_to_json(const std::map<std::string, TermClassStats>& stats,
                          const PauliSum& op, int indent) {
  return stats_json(stats, op).dump(indent);
}

std::string report_to_json(const VerificationReport& report, int indent) {
  json checks = json::array();
  for (const CheckResult& c : report.checks) {
    const char* status = c.status == CheckStatus::kPass   ? "pass"
                         : c.status == CheckStatus::kFail ? "fail"
                                                          : "skip";
    checks.push_back({{"name", c.name},
                      {"status", status},
                      {"detail", c.detail},
                      {"measured", c.measured},
                      {"threshold", c.threshold}});
  }
  const json j = {{"passed", report.passed()}, {"checks", std::move(checks)}};
  return j.dump(indent);
}

}  // namespace fermloc
