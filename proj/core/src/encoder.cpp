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

#include "fermloc/encoder.hpp"

#include <cmath>
#include <complex>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace fermloc {

namespace {

double snapped(double v) {
  if (std::abs(v) <= 1e-15) return 0.0;
  if (std::abs(v - 1.0) <= 1e-15) return 1.0;
  if (std::abs(v + 1.0) <= 1e-15) return -1.0;
  return v;
}

}  // namespace

PauliSum quadrature(int mode, double theta, const Placement& placement) {
  const int q = placement.qubit_of(mode);
  const int n = placement.n_qubits();
  const double c = snapped(std::cos(theta));
  const double s = snapped(std::sin(theta));
  std::vector<std::pair<int, char>> chain;
  chain.reserve(static_cast<std::size_t>(q) + 1);
  for (int i = 0; i < q; ++i) chain.emplace_back(i, 'Z');
  PauliSum out = PauliSum::zero(n);
  if (c != 0.0) {
    auto letters = chain;
    letters.emplace_back(q, 'X');
    out += PauliSum::of(PauliString::from_letters(n, letters), c);
  }
  if (s != 0.0) {
    auto letters = chain;
    letters.emplace_back(q, 'Y');
    out += PauliSum::of(PauliString::from_letters(n, letters), -s);
  }
  return out;
}

PauliString Stabilizer::single_string() const {
  const auto& terms = op.terms();
  if (terms.size() != 1) {
    throw std::domain_error(
        "stabilizer spreads over several Pauli strings for this gauge");
  }
  const auto& [pattern, coeff] = *terms.begin();
  const int n = op.n_qubits();
  std::vector<std::pair<int, char>> letters;
  for (int q = 0; q < n; ++q) {
    const std::uint64_t bit = std::uint64_t{1} << (q & 63);
    const bool x = pattern.x[static_cast<std::size_t>(q) >> 6] & bit;
    const bool z = pattern.z[static_cast<std::size_t>(q) >> 6] & bit;
    if (x && z) {
      letters.emplace_back(q, 'Y');
    } else if (x) {
      letters.emplace_back(q, 'X');
    } else if (z) {
      letters.emplace_back(q, 'Z');
    }
  }
  const PauliString bare = PauliString::from_letters(n, letters);
  static constexpr std::complex<double> kPhases[4] = {
      {1.0, 0.0}, {0.0, 1.0}, {-1.0, 0.0}, {0.0, -1.0}};
  for (int k = 0; k < 4; ++k) {
    if (std::abs(coeff - kPhases[k]) <= 1e-9) return bare.with_phase_power(k);
  }
  throw std::domain_error("stabilizer coefficient is not a unit phase");
}

std::vector<Stabilizer> build_stabilizers(const EncodingLayout& layout) {
  const Placement& pl = layout.placement.placement;
  std::vector<Stabilizer> out;
  out.reserve(layout.couplings.couplings.size());
  for (const Coupling& c : layout.couplings.couplings) {
    // The earlier factor carries the perpendicular raw letter: the later
    // factor's Z chain rotates it onto the intended endpoint letter.
    PauliSum op = quadrature(c.aux_lo, c.theta_lo + M_PI_2, pl) *
                  quadrature(c.aux_hi, c.theta_hi, pl);
    op *= std::complex<double>(0.0, 1.0);
    out.push_back(Stabilizer{c, std::move(op)});
  }
  return out;
}

void TermClassStats::record(int weight) {
  ++count;
  if (weight > max_weight) max_weight = weight;
  weight_sum += weight;
  ++weight_histogram[weight];
}

double TermClassStats::mean_weight() const {
  return count == 0 ? 0.0
                    : static_cast<double>(weight_sum) /
                          static_cast<double>(count);
}

std::string term_class_name(TermClass c) {
  switch (c) {
    case TermClass::kIdentity:
      return "identity";
    case TermClass::kNumber:
      return "number";
    case TermClass::kHopLocal:
      return "hop_local";
    case TermClass::kHopNonlocal:
      return "hop_nonlocal";
    case TermClass::kTwoBody:
      return "two_body";
  }
  throw std::logic_error("unknown term class");
}

TermClass classify_term(const LadderTerm& term, const LinearOrder& order) {
  const auto& f = term.factors;
  if (f.empty()) return TermClass::kIdentity;
  if (f.size() == 2) {
    if (f[0].mode == f[1].mode) return TermClass::kNumber;
    return order.adjacent(f[0].mode, f[1].mode) ? TermClass::kHopLocal
                                                : TermClass::kHopNonlocal;
  }
  return TermClass::kTwoBody;
}

PauliSum encode_pair(const LadderOperator& first, const LadderOperator& second,
                     const EncodingLayout& layout,
                     const std::vector<Stabilizer>& stabilizers) {
  const Placement& pl = layout.placement.placement;
  const int n = pl.n_qubits();
  if (first.mode == second.mode) {
    if (first.creation == second.creation) return PauliSum::zero(n);
    // Chains cancel on a same-mode pair, leaving a projector on the host.
    const int q = pl.qubit_of(first.mode);
    const double zsign = first.creation ? -0.5 : 0.5;
    PauliSum out = PauliSum::identity(n, 0.5);
    out += PauliSum::of(PauliString::single(n, q, 'Z'), zsign);
    return out;
  }
  PauliSum out = jw_ladder(first, pl) * jw_ladder(second, pl);
  if (layout.order.adjacent(first.mode, second.mode)) return out;
  const Edge e = Edge::normalized(first.mode, second.mode);
  for (const Stabilizer& s : stabilizers) {
    if (s.coupling.edge == e) return out * s.op;
  }
  throw std::invalid_argument("no stabilizer covers the nonlocal pair (" +
                              std::to_string(e.a) + "," + std::to_string(e.b) +
                              ")");
}

PauliSum encode_term(const LadderTerm& term, const EncodingLayout& layout,
                     const std::vector<Stabilizer>& stabilizers) {
  const int n = layout.n_qubits();
  PauliSum out = PauliSum::zero(n);
  for (const PairedTerm& piece : pair_factors(term, layout.order)) {
    PauliSum acc = PauliSum::identity(n, piece.coefficient);
    for (const auto& pair : piece.pairs) {
      acc = acc * encode_pair(pair[0], pair[1], layout, stabilizers);
    }
    out += acc;
  }
  return out;
}

std::map<std::string, TermClassStats> jw_stats(const FermionHamiltonian& h,
                                               const Placement& placement,
                                               const LinearOrder& order) {
  std::map<std::string, TermClassStats> stats;
  for (const LadderTerm& term : h.terms) {
    PauliSum t = jw_term(term, placement);
    t.prune(kDefaultPruneTol);
    stats[term_class_name(classify_term(term, order))].record(t.max_weight());
  }
  return stats;
}

EncodedHamiltonian encode_hamiltonian(const FermionHamiltonian& h,
                                      const EncodingLayout& layout,
                                      double prune_tol) {
  h.validate();
  EncodedHamiltonian out;
  out.layout = layout;
  out.stabilizers = build_stabilizers(layout);
  out.op = PauliSum::zero(layout.n_qubits());
  for (const LadderTerm& term : h.terms) {
    PauliSum encoded = encode_term(term, layout, out.stabilizers);
    encoded.prune(prune_tol);
    out.stats[term_class_name(classify_term(term, layout.order))].record(
        encoded.max_weight());
    out.op += encoded;
  }
  out.op.prune(prune_tol);
  return out;
}

}  // namespace fermloc
