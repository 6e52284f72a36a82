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

#pragma once

#include "fermloc/fermion.hpp"
#include "fermloc/pauli.hpp"

namespace fermloc {

/// Assignment of fermionic modes (original plus any auxiliary) to qubits.
/// qubit_to_mode lists the mode held by each qubit in ascending qubit order;
/// mode ids must form a permutation of 0..n-1.
struct Placement {
  std::vector<int> qubit_to_mode;
  std::vector<int> mode_to_qubit;

  static Placement from_order(const std::vector<int>& qubit_to_mode);
  static Placement natural(int n_modes);

  int n_qubits() const { return static_cast<int>(qubit_to_mode.size()); }
  int qubit_of(int mode) const;
};

/// Jordan-Wigner image of a single ladder operator: a Z chain over every
/// qubit placed before the mode's qubit, times (X + iY)/2 for annihilation
/// or (X - iY)/2 for creation.
PauliSum jw_ladder(const LadderOperator& op, const Placement& placement);

/// Product of the JW images of the term's factors, scaled by the
/// coefficient.
PauliSum jw_term(const LadderTerm& term, const Placement& placement);

/// Sum over all terms, pruned at tol.
PauliSum jw_encode(const FermionHamiltonian& h, const Placement& placement,
                   double tol = kDefaultPruneTol);

}  // namespace fermloc
