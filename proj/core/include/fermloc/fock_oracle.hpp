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

#include <Eigen/Dense>

#include "fermloc/fermion.hpp"

namespace fermloc {

/// Basis convention shared by everything downstream: Fock basis index equals
/// the occupation bitstring with mode 0 as the least significant bit.

/// Accumulates coefficient * factors acting on `in` into `out`, both of
/// dimension 2^n_modes. Factors apply right to left.
void apply_fock_term(const LadderTerm& term, int n_modes,
                     const Eigen::VectorXcd& in, Eigen::VectorXcd& out);

/// Matrix-free row action of the whole Hamiltonian; works at any mode count
/// whose state vector fits in memory.
Eigen::VectorXcd apply_fock_operator(const FermionHamiltonian& h,
                                     const Eigen::VectorXcd& in);

/// Dense 2^n x 2^n matrix of the Hamiltonian. Guarded by max_modes (default
/// 12); use apply_fock_operator beyond that.
Eigen::MatrixXcd build_fock_matrix(const FermionHamiltonian& h,
                                   int max_modes = 12);

}  // namespace fermloc
