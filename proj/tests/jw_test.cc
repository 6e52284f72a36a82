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

#include <complex>

#include <gtest/gtest.h>
#include <Eigen/Dense>

#include "fermloc/fock_oracle.hpp"
#include "fermloc/statevec.hpp"

namespace fermloc {
namespace {

using Complex = std::complex<double>;

LadderOperator cr(int mode) { return {mode, true}; }
LadderOperator an(int mode) { return {mode, false}; }

// Dense matrix of a qubit operator, columns via the matrix-free action.
Eigen::MatrixXcd qubit_matrix(const PauliSum& op) {
  const Eigen::Index dim = Eigen::Index(1) << op.n_qubits();
  Eigen::MatrixXcd m(dim, dim);
  for (Eigen::Index col = 0; col < dim; ++col)
    m.col(col) = act(op, basis_state(op.n_qubits(), col));
  return m;
}

TEST(JwLadder, SingleModeMatrices) {
  const Placement p = Placement::natural(1);
  // In the basis {|0>, |1>}: annihilation maps |1> to |0>.
  Eigen::MatrixXcd a = qubit_matrix(jw_ladder(an(0), p));
  EXPECT_LT(std::abs(a(0, 1) - 1.0), 1e-15);
  EXPECT_LT(std::abs(a(0, 0)) + std::abs(a(1, 0)) + std::abs(a(1, 1)), 1e-15);

  Eigen::MatrixXcd ad = qubit_matrix(jw_ladder(cr(0), p));
  EXPECT_LT((ad - a.adjoint()).cwiseAbs().maxCoeff(), 1e-15);
}

TEST(JwLadder, ZChainCoversEarlierQubits) {
  const Placement p = Placement::natural(3);
  const PauliSum a2 = jw_ladder(an(2), p);
  ASSERT_EQ(a2.size(), 2u);
  // 0.5 X2 Z1 Z0 + 0.5i Y2 Z1 Z0.
  EXPECT_EQ(a2.coefficient(PauliString::from_letters(
                3, {{0, 'Z'}, {1, 'Z'}, {2, 'X'}})),
            Complex(0.5, 0.0));
  EXPECT_EQ(a2.coefficient(PauliString::from_letters(
                3, {{0, 'Z'}, {1, 'Z'}, {2, 'Y'}})),
            Complex(0.0, 0.5));
}

TEST(JwLadder, PlacementReordersChain) {
  // Mode 2 on qubit 0: no chain. Mode 0 on qubit 2: chain over qubits 0, 1.
  const Placement p = Placement::from_order({2, 1, 0});
  const PauliSum a2 = jw_ladder(an(2), p);
  EXPECT_EQ(a2.coefficient(PauliString::single(3, 0, 'X')), Complex(0.5, 0.0));
  const PauliSum a0 = jw_ladder(an(0), p);
  EXPECT_EQ(a0.coefficient(PauliString::from_letters(
                3, {{0, 'Z'}, {1, 'Z'}, {2, 'X'}})),
            Complex(0.5, 0.0));
}

TEST(JwTerm, NumberOperatorIsHalfOneMinusZ) {
  const Placement p = Placement::natural(2);
  const PauliSum n1 = jw_term(LadderTerm(1.0, {cr(1), an(1)}), p);
  EXPECT_EQ(n1.coefficient(PauliString::identity(2)), Complex(0.5, 0.0));
  EXPECT_EQ(n1.coefficient(PauliString::single(2, 1, 'Z')), Complex(-0.5, 0.0));
  EXPECT_EQ(n1.size(), 2u);
}

TEST(JwTerm, HopMatchesHandExpansion) {
  // a^dag_0 a_1 = (X0 X1 + Y0 Y1 + i X0 Y1 - i Y0 X1)/4.
  const Placement p = Placement::natural(2);
  const PauliSum hop = jw_term(LadderTerm(1.0, {cr(0), an(1)}), p);
  const auto XX = PauliString::from_letters(2, {{0, 'X'}, {1, 'X'}});
  const auto YY = PauliString::from_letters(2, {{0, 'Y'}, {1, 'Y'}});
  const auto XY = PauliString::from_letters(2, {{0, 'X'}, {1, 'Y'}});
  const auto YX = PauliString::from_letters(2, {{0, 'Y'}, {1, 'X'}});
  EXPECT_EQ(hop.coefficient(XX), Complex(0.25, 0.0));
  EXPECT_EQ(hop.coefficient(YY), Complex(0.25, 0.0));
  EXPECT_EQ(hop.coefficient(XY), Complex(0.0, 0.25));
  EXPECT_EQ(hop.coefficient(YX), Complex(0.0, -0.25));
}

TEST(JwEncode, MatchesFockOracleOnNaturalPlacement) {
  // Chain hops plus an interaction; the JW image on the natural placement
  // must reproduce the Fock matrix entry for entry.
  FermionHamiltonian h{4, {}};
  for (int k = 0; k + 1 < 4; ++k) {
    h.terms.emplace_back(-1.0, std::vector<LadderOperator>{cr(k), an(k + 1)});
    h.terms.emplace_back(-1.0, std::vector<LadderOperator>{cr(k + 1), an(k)});
  }
  h.terms.emplace_back(0.5, std::vector<LadderOperator>{cr(0), an(0), cr(2), an(2)});
  const Placement p = Placement::natural(4);
  const Eigen::MatrixXcd qubit = qubit_matrix(jw_encode(h, p));
  const Eigen::MatrixXcd fock = build_fock_matrix(h);
  EXPECT_LT((qubit - fock).cwiseAbs().maxCoeff(), 1e-13);
}

TEST(JwEncode, AnticommutationOnRegister) {
  const Placement p = Placement::natural(3);
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) {
      const PauliSum ai = jw_ladder(an(i), p);
      const PauliSum adj = jw_ladder(cr(j), p);
      PauliSum anti = ai * adj + adj * ai;
      anti.prune(1e-14);
      if (i == j) {
        EXPECT_EQ(anti.size(), 1u);
        EXPECT_EQ(anti.coefficient(PauliString::identity(3)),
                  Complex(1.0, 0.0));
      } else {
        EXPECT_TRUE(anti.empty()) << i << " " << j;
      }
    }
  }
}

}  // namespace
}  // namespace fermloc
