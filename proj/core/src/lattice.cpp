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

#include "fermloc/lattice.hpp"

#include <stdexcept>
#include <utility>
#include <vector>

namespace fermloc {

namespace {

void add_hop(FermionHamiltonian& h, int p, int q, double t) {
  h.terms.push_back({{-t, 0.0},
                     {LadderOperator{p, true}, LadderOperator{q, false}}});
  h.terms.push_back({{-t, 0.0},
                     {LadderOperator{q, true}, LadderOperator{p, false}}});
}

}  // namespace

FermionHamiltonian generate_k4(double t) {
  FermionHamiltonian h;
  h.n_modes = 4;
  for (int p = 0; p < 4; ++p) {
    for (int q = p + 1; q < 4; ++q) {
      add_hop(h, p, q, t);
    }
  }
  return h;
}

FermionHamiltonian generate_chain(int n_modes, double t) {
  if (n_modes < 1) throw std::invalid_argument("chain needs a positive size");
  FermionHamiltonian h;
  h.n_modes = n_modes;
  for (int p = 0; p + 1 < n_modes; ++p) {
    add_hop(h, p, p + 1, t);
  }
  return h;
}

FermionHamiltonian generate_hubbard(int rows, int cols, double t, double u) {
  if (rows < 1 || cols < 1) {
    throw std::invalid_argument("grid needs positive extents");
  }
  FermionHamiltonian h;
  h.n_modes = rows * cols;
  std::vector<std::pair<int, int>> edges;
  for (int r = 0; r < rows; ++r) {
    for (int c = 0; c < cols; ++c) {
      const int at = r * cols + c;
      if (c + 1 < cols) edges.emplace_back(at, at + 1);
      if (r + 1 < rows) edges.emplace_back(at, at + cols);
    }
  }
  for (const auto& [p, q] : edges) {
    add_hop(h, p, q, t);
  }
  if (u != 0.0) {
    for (const auto& [p, q] : edges) {
      h.terms.push_back({{u, 0.0},
                         {LadderOperator{p, true}, LadderOperator{p, false},
                          LadderOperator{q, true}, LadderOperator{q, false}}});
    }
  }
  return h;
}

}  // namespace fermloc
