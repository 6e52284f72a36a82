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

// Auxiliary-mode encoding: dresses nonlocal hopping terms with coupling
// stabilizers so every encoded term acts on a contiguous patch of qubits.

#ifndef FERMLOC_ENCODER_HPP_
#define FERMLOC_ENCODER_HPP_

#include <map>
#include <string>
#include <vector>

#include "fermloc/fermion.hpp"
#include "fermloc/jw.hpp"
#include "fermloc/layout.hpp"
#include "fermloc/pauli.hpp"

namespace fermloc {

// Majorana-type quadrature of the auxiliary mode `mode` at angle theta,
// mapped onto qubits: a Z chain over all earlier qubits ending in
// cos(theta) X - sin(theta) Y on the mode's own qubit.  Cosines and sines
// within 1e-15 of a grid point are snapped so right-angle gauges produce
// single Pauli strings with exact unit coefficients.
PauliSum quadrature(int mode, double theta, const Placement& placement);

// One coupling's stabilizer.  `op` squares to the identity and commutes
// with every encoded term; for right-angle gauges it is a single string.
struct Stabilizer {
  Coupling coupling;
  PauliSum op;

  // The stabilizer as one signed Pauli string.  Throws std::domain_error
  // if the gauge angles spread it over more than one string.
  PauliString single_string() const;
};

std::vector<Stabilizer> build_stabilizers(const EncodingLayout& layout);

// Per-class tallies of encoded term weights.
struct TermClassStats {
  long count = 0;
  int max_weight = 0;
  long weight_sum = 0;
  std::map<int, long> weight_histogram;

  void record(int weight);
  double mean_weight() const;
};

enum class TermClass { kIdentity, kNumber, kHopLocal, kHopNonlocal, kTwoBody };

std::string term_class_name(TermClass c);

// Classifies a term by its paired structure under `order`.
TermClass classify_term(const LadderTerm& term, const LinearOrder& order);

struct EncodedHamiltonian {
  EncodingLayout layout;
  std::vector<Stabilizer> stabilizers;
  PauliSum op;
  std::map<std::string, TermClassStats> stats;

  int n_qubits() const { return layout.n_qubits(); }
};

// Encodes one creation/annihilation pair.  Adjacent and same-mode pairs map
// to bare ladder products on the enlarged register; nonlocal pairs are
// multiplied by their edge's stabilizer.
PauliSum encode_pair(const LadderOperator& first, const LadderOperator& second,
                     const EncodingLayout& layout,
                     const std::vector<Stabilizer>& stabilizers);

PauliSum encode_term(const LadderTerm& term, const EncodingLayout& layout,
                     const std::vector<Stabilizer>& stabilizers);

// Full pipeline over a planned layout.  Terms are normal ordered, paired,
// encoded, and accumulated; coefficients below `prune_tol` are dropped.
EncodedHamiltonian encode_hamiltonian(const FermionHamiltonian& h,
                                      const EncodingLayout& layout,
                                      double prune_tol = kDefaultPruneTol);

// Per-class weight statistics of the bare Jordan-Wigner images of h's
// terms, classified against `order`.
std::map<std::string, TermClassStats> jw_stats(const FermionHamiltonian& h,
                                               const Placement& placement,
                                               const LinearOrder& order);

}  // namespace fermloc

#endif  // FERMLOC_ENCODER_HPP_
