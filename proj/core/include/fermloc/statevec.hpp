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

// Dense state-vector simulation of encoded registers: stabilized vacuum
// construction, projective and measured state preparation, and brute-force
// equivalence checks against the Fock-space oracle.

#ifndef FERMLOC_STATEVEC_HPP_
#define FERMLOC_STATEVEC_HPP_

#include <complex>
#include <cstdint>
#include <vector>

#include <Eigen/Dense>

#include "fermloc/encoder.hpp"
#include "fermloc/fermion.hpp"
#include "fermloc/jw.hpp"
#include "fermloc/layout.hpp"
#include "fermloc/pauli.hpp"

namespace fermloc {

using StateVector = Eigen::VectorXcd;

// Hard cap on simulated register width; one amplitude vector at the cap is
// a quarter gigabyte.
inline constexpr int kMaxSimQubits = 24;

StateVector basis_state(int n_qubits, std::uint64_t index);

// Matrix-free Pauli action on an amplitude vector.
StateVector act(const PauliString& s, const StateVector& v);
StateVector act(const PauliSum& op, const StateVector& v);

std::complex<double> expectation(const PauliSum& op, const StateVector& v);

// |<a|b>| for unit vectors.
double fidelity(const StateVector& a, const StateVector& b);

// Projective vacuum: the product of (1 + M)/sqrt(2) over all coupling
// stabilizers applied to the all-zeros register.  Throws std::runtime_error
// if the result is not a unit vector stabilized by every M (which happens
// only for coupling sets the planner would not emit, e.g. unbroken loops).
StateVector vacuum_state(const EncodingLayout& layout,
                         const std::vector<Stabilizer>& stabilizers,
                         double tol = 1e-9);

// Auxiliary qubits whose Z flip repairs a -1 outcome on the given coupling:
// the smaller shore of the aux-sharing forest cut at that coupling (ties go
// to the lower-endpoint shore).
std::vector<int> correction_qubits(const EncodingLayout& layout,
                                   int coupling_index);

struct MeasuredPrepResult {
  StateVector state;
  std::vector<int> outcomes;                   // +1 or -1 per coupling
  std::vector<std::vector<int>> corrections;   // qubits flipped per coupling
};

// Prepares the vacuum by measuring each coupling stabilizer in canonical
// order on the all-zeros register, applying the Z correction after every
// -1 outcome.  Outcomes are Born sampled from `seed`.
MeasuredPrepResult measured_prepare(const EncodingLayout& layout,
                                    const std::vector<Stabilizer>& stabilizers,
                                    std::uint64_t seed, double tol = 1e-9);

// Same, but with the outcome of every measurement dictated by `outcomes`
// (+1 or -1 per coupling).  Outcomes with zero branch probability throw.
MeasuredPrepResult measured_prepare_forced(
    const EncodingLayout& layout, const std::vector<Stabilizer>& stabilizers,
    const std::vector<int>& outcomes, double tol = 1e-9);

// Applies the register images of the creation operators for the occupied
// modes to `base`, highest mode id first.
StateVector prepare_fock_register(const Placement& placement,
                                  const FockState& occ,
                                  const StateVector& base);

// Occupied-state preparation on top of the projective vacuum.
StateVector prepare_fock(const EncodingLayout& layout,
                         const std::vector<Stabilizer>& stabilizers,
                         const FockState& occ, double tol = 1e-9);

// Constant-depth variant: X on each occupied host plus a Z on every
// auxiliary whose right-of-host occupation parity is odd.  Agrees with
// prepare_fock up to a global sign.
StateVector fast_prepare_fock(const EncodingLayout& layout,
                              const std::vector<Stabilizer>& stabilizers,
                              const FockState& occ);

// Probability of outcomes (s, t) = (+1/-1, +1/-1) when the endpoint letter
// operators of `c` are measured jointly at its two auxiliary qubits.
double joint_letter_probability(const StateVector& v, const Coupling& c,
                                const Placement& placement, int s, int t);

// <v_row| op |v_col> over a prepared basis.
Eigen::MatrixXcd restricted_matrix(const PauliSum& op,
                                   const std::vector<StateVector>& basis);

struct Tolerances {
  double state = 1e-12;
  double matrix = 1e-10;
  double eig = 1e-9;
};

struct EquivalenceReport {
  int fock_dim = 0;
  int n_qubits = 0;
  double gram_dev = 0.0;      // max |<m|n> - delta_mn|
  double matrix_dev = 0.0;    // max entry of |restricted - Fock oracle|
  double spectrum_dev = 0.0;  // max sorted-eigenvalue difference

  bool pass(const Tolerances& tol) const {
    return gram_dev <= tol.state && matrix_dev <= tol.matrix &&
           spectrum_dev <= tol.eig;
  }
};

// Prepares every occupation state, then compares Gram matrix, restricted
// matrix elements, and spectra against the Fock-space oracle.
EquivalenceReport equivalence_check(const FermionHamiltonian& h,
                                    const EncodedHamiltonian& encoded);

// Same comparison for a bare Jordan-Wigner register.
EquivalenceReport equivalence_check_jw(const FermionHamiltonian& h,
                                       const PauliSum& op,
                                       const Placement& placement);

}  // namespace fermloc

#endif  // FERMLOC_STATEVEC_HPP_
