// Copyright 2026 The Fermloc Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "fermloc/jw.hpp"

#include <stdexcept>

namespace fermloc {

Placement Placement::from_order(const std::vector<int>& qubit_to_mode) {
  Placement p;
  p.qubit_to_mode = qubit_to_mode;
  const int n = static_cast<int>(qubit_to_mode.size());
  p.mode_to_qubit.assign(n, -1);
  for (int q = 0; q < n; ++q) {
    const int mode = qubit_to_mode[q];
    if (mode < 0 || mode >= n || p.mode_to_qubit[mode] != -1) {
      throw std::invalid_argument("placement order is not a permutation");
    }
    p.mode_to_qubit[mode] = q;
  }
  return p;
}

Placement Placement::natural(int n_modes) {
  std::vector<int> order(n_modes);
  for (int i = 0; i < n_modes; ++i) order[i] = i;
  return from_order(order);
}

int Placement::qubit_of(int mode) const {
  if (mode < 0 || mode >= static_cast<int>(mode_to_qubit.size())) {
    throw std::invalid_argument("mode not covered by placement");
  }
  return mode_to_qubit[mode];
}

PauliSum jw_ladder(const LadderOperator& op, const Placement& placement) {
  const int q = placement.qubit_of(op.mode);
  const int n = placement.n_qubits();
  std::vector<std::pair<int, char>> chain;
  chain.reserve(static_cast<std::size_t>(q) + 1);
  for (int i = 0; i < q; ++i) chain.emplace_back(i, 'Z');
  chain.emplace_back(q, 'X');
  PauliSum out = PauliSum::of(PauliString::from_letters(n, chain), 0.5);
  chain.back().second = 'Y';
  const std::complex<double> y_coeff(0.0, op.creation ? -0.5 : 0.5);
  out.add(PauliString::from_letters(n, chain), y_coeff);
  return out;
}

PauliSum jw_term(const LadderTerm& term, const Placement& placement) {
  PauliSum out = PauliSum::identity(placement.n_qubits(), term.coefficient);
  for (const auto& f : term.factors) out = out * jw_ladder(f, placement);
  return out;
}

PauliSum jw_encode(const FermionHamiltonian& h, const Placement& placement,
                   double tol) {
  h.validate();
  PauliSum out(placement.n_qubits());
  for (const auto& term : h.terms) out += jw_term(term, placement);
  out.prune(tol);
  return out;
}

}  // namespace fermloc
