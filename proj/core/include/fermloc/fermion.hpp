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

#include <complex>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace fermloc {

/// One creation (a^dag_mode) or annihilation (a_mode) operator.
struct LadderOperator {
  int mode = 0;
  bool creation = false;

  bool operator==(const LadderOperator&) const = default;
  std::string str() const;
};

/// coefficient * factors[0] * factors[1] * ..., operators applied
/// right-to-left as usual for operator products.
struct LadderTerm {
  std::complex<double> coefficient{1.0, 0.0};
  std::vector<LadderOperator> factors;

  LadderTerm() = default;
  LadderTerm(std::complex<double> c, std::vector<LadderOperator> f)
      : coefficient(c), factors(std::move(f)) {}

  /// Conjugate coefficient, factors reversed with flags flipped.
  LadderTerm adjoint() const;
  bool operator==(const LadderTerm&) const = default;
  std::string str() const;
};

struct FermionHamiltonian {
  int n_modes = 0;
  std::vector<LadderTerm> terms;

  /// Throws std::invalid_argument when a factor references a mode outside
  /// [0, n_modes).
  void validate() const;
};

/// Occupation-number basis state; bit j of bits is the occupation of mode j.
struct FockState {
  int n_modes = 0;
  std::uint64_t bits = 0;

  bool occupied(int mode) const { return (bits >> mode) & 1; }
  int total_occupation() const;
  bool operator==(const FockState&) const = default;
};

struct LadderAction {
  int sign = 1;  // +1 or -1
  FockState state;
};

/// Applies one ladder operator to a basis state. Empty when the state is
/// annihilated; otherwise the sign is (-1)^(number of occupied modes below
/// op.mode).
std::optional<LadderAction> apply_ladder(const LadderOperator& op,
                                         const FockState& state);

/// Rewrites the term as an equivalent sum with creation operators first
/// (modes ascending) followed by annihilation operators (modes descending),
/// generating contraction terms from each a a^dag swap. Terms containing a
/// repeated identical operator are dropped as zero.
std::vector<LadderTerm> normal_order(const LadderTerm& term);

/// Rewrites the term as an equivalent sum whose leading term carries the
/// factors in the order given by target (a permutation of the term's factor
/// multiset); contraction terms are reordered to the induced suborder.
std::vector<LadderTerm> reorder_like(const LadderTerm& term,
                                     const std::vector<LadderOperator>& target);

/// Combines terms with identical factor sequences; drops coefficients with
/// magnitude <= tol.
std::vector<LadderTerm> merge_terms(const std::vector<LadderTerm>& terms,
                                    double tol = 0.0);

/// Appends the Hermitian conjugate of every term whose conjugate factor
/// sequence is not already present. Idempotent up to coefficient merging.
FermionHamiltonian hermitian_closure(const FermionHamiltonian& h);

}  // namespace fermloc
