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

#include "fermloc/fock_oracle.hpp"

#include <stdexcept>

namespace fermloc {

void apply_fock_term(const LadderTerm& term, int n_modes,
                     const Eigen::VectorXcd& in, Eigen::VectorXcd& out) {
  const Eigen::Index dim = Eigen::Index(1) << n_modes;
  if (in.size() != dim || out.size() != dim) {
    throw std::invalid_argument("state dimension mismatch in apply_fock_term");
  }
  for (Eigen::Index n = 0; n < dim; ++n) {
    if (in[n] == std::complex<double>(0.0, 0.0)) continue;
    FockState state{n_modes, static_cast<std::uint64_t>(n)};
    int sign = 1;
    bool alive = true;
    for (auto it = term.factors.rbegin(); it != term.factors.rend(); ++it) {
      auto action = apply_ladder(*it, state);
      if (!action) {
        alive = false;
        break;
      }
      sign *= action->sign;
      state = action->state;
    }
    if (!alive) continue;
    out[static_cast<Eigen::Index>(state.bits)] +=
        term.coefficient * double(sign) * in[n];
  }
}

Eigen::VectorXcd apply_fock_operator(const FermionHamiltonian& h,
                                     const Eigen::VectorXcd& in) {
  h.validate();
  Eigen::VectorXcd out = Eigen::VectorXcd::Zero(in.size());
  for (const auto& term : h.terms) apply_fock_term(term, h.n_modes, in, out);
  return out;
}

Eigen::MatrixXcd build_fock_matrix(const FermionHamiltonian& h,
                                   int max_modes) {
  if (h.n_modes > max_modes) {
    throw std::invalid_argument(
        "mode count exceeds the dense oracle limit; raise max_modes or use "
        "apply_fock_operator");
  }
  h.validate();
  const Eigen::Index dim = Eigen::Index(1) << h.n_modes;
  Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(dim, dim);
  Eigen::VectorXcd basis = Eigen::VectorXcd::Zero(dim);
  Eigen::VectorXcd column = Eigen::VectorXcd::Zero(dim);
  for (Eigen::Index n = 0; n < dim; ++n) {
    basis.setZero();
    basis[n] = 1.0;
    column.setZero();
    for (const auto& term : h.terms) {
      apply_fock_term(term, h.n_modes, basis, column);
    }
    m.col(n) = column;
  }
  return m;
}

}  // namespace fermloc
