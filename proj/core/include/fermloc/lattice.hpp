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

// Stock model Hamiltonians used by the command line and the test suites.

#ifndef FERMLOC_LATTICE_HPP_
#define FERMLOC_LATTICE_HPP_

#include "fermloc/fermion.hpp"
#include "fermloc/layout.hpp"

namespace fermloc {

// Complete hopping graph on four modes: -t (a^_p a_q + a^_q a_p) for p < q.
FermionHamiltonian generate_k4(double t = 1.0);

// Open chain with nearest-neighbor hopping.
FermionHamiltonian generate_chain(int n_modes, double t = 1.0);

// Spinless rows x cols grid: nearest-neighbor hopping at -t plus a
// density-density interaction u n_p n_q on every lattice edge.  Mode ids
// are row major; LinearOrder::snake(rows, cols) is the matching backbone.
FermionHamiltonian generate_hubbard(int rows, int cols, double t = 1.0,
                                    double u = 2.0);

}  // namespace fermloc

#endif  // FERMLOC_LATTICE_HPP_
