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

#include <array>
#include <complex>
#include <stdexcept>
#include <vector>

#include "fermloc/fermion.hpp"
#include "fermloc/jw.hpp"

namespace fermloc {

/// Raised when auxiliary slots, letter constraints or loop re-anchoring
/// cannot satisfy the requested layout.
class InfeasibleLayoutError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Unordered pair of original modes, normalized to a < b.
struct Edge {
  int a = 0;
  int b = 0;

  static Edge normalized(int u, int v) {
    if (u == v) throw std::invalid_argument("degenerate edge");
    return u < v ? Edge{u, v} : Edge{v, u};
  }
  auto operator<=>(const Edge&) const = default;
};

/// Linear backbone order of the original modes. position[mode] is the index
/// of the mode within sequence.
struct LinearOrder {
  std::vector<int> sequence;
  std::vector<int> position;

  static LinearOrder natural(int n_modes);
  /// Row-major site ids visited row by row, alternating direction.
  static LinearOrder snake(int rows, int cols);
  static LinearOrder from_sequence(const std::vector<int>& sequence);

  int n_modes() const { return static_cast<int>(sequence.size()); }
  bool adjacent(int u, int v) const;
  /// Next mode along the backbone, or -1 past the end.
  int successor(int mode) const;
};

struct InteractionGraph {
  int n_modes = 0;
  std::vector<Edge> edges;  // sorted, unique

  bool has_edge(Edge e) const;
  int degree(int mode) const;
};

/// One two-operator factor grouping of a ladder term: coefficient includes
/// the reordering sign; pairs multiply left to right.
struct PairedTerm {
  std::complex<double> coefficient{0.0, 0.0};
  std::vector<std::array<LadderOperator, 2>> pairs;
};

/// Normal-orders the term and greedily groups each resulting factor sequence
/// into two-operator factors: same-mode partners first, then for each
/// leftmost unpaired operator the partner that keeps the factor backbone
/// local if possible, preferring opposite ladder type and small order
/// distance. Throws on odd factor counts.
std::vector<PairedTerm> pair_factors(const LadderTerm& term,
                                     const LinearOrder& order);

/// Interaction graph: one edge per distinct-mode factor pair produced by
/// pair_factors across all terms.
InteractionGraph build_graph(const FermionHamiltonian& h,
                             const LinearOrder& order);
InteractionGraph build_graph(const FermionHamiltonian& h);

/// Per-mode count of incident graph edges that are not backbone-adjacent
/// under the order.
std::vector<int> nonlocal_degree(const InteractionGraph& g,
                                 const LinearOrder& order);

/// Pure backbone degree (2 in the bulk, 1 at the chain ends).
std::vector<int> backbone_degree(const LinearOrder& order);

/// Non-backbone edges sorted by (position of earlier endpoint, position of
/// later endpoint); this is the canonical coupling order used for slot,
/// letter and gauge assignment.
std::vector<Edge> nonlocal_edges(const InteractionGraph& g,
                                 const LinearOrder& order);

/// Auxiliary modes attached to hosts, with the interleaved qubit placement
/// (each host followed by its auxiliaries, hosts in backbone order).
/// Auxiliary mode ids start at n_original and follow the backbone order.
struct AuxPlacement {
  int n_original = 0;
  std::vector<std::vector<int>> host_aux;  // per original mode
  std::vector<int> aux_host;               // indexed by aux id - n_original
  Placement placement;

  static AuxPlacement build(const LinearOrder& order,
                            const std::vector<int>& aux_counts);

  int total_modes() const {
    return n_original + static_cast<int>(aux_host.size());
  }
  int host_of(int aux_mode) const;
  bool is_aux(int mode) const { return mode >= n_original; }
};

/// ceil(nonlocal_degree / 2) auxiliaries per mode.
AuxPlacement place_aux(const InteractionGraph& g, const LinearOrder& order);

/// A stabilized coupling serving one non-local edge. The anchors are the
/// modes whose auxiliaries carry the endpoint letters; anchor_lo equals the
/// order-earlier edge endpoint unless loop breaking re-anchored it to a
/// backbone successor. theta_* are the final endpoint letter angles,
/// letter(theta) = cos(theta) X - sin(theta) Y, so 0 is X and -pi/2 is Y.
struct Coupling {
  Edge edge;
  int anchor_lo = -1;
  int anchor_hi = -1;
  int aux_lo = -1;
  int aux_hi = -1;
  double theta_lo = 0.0;
  double theta_hi = 0.0;
};

struct CouplingAssignment {
  std::vector<Coupling> couplings;  // canonical edge order

  const Coupling* find(Edge e) const;
};

/// Packs couplings onto auxiliary slots (at most two per auxiliary) and
/// assigns endpoint letters: two couplings meeting an auxiliary from the
/// same side get orthogonal letters, from opposite sides the same letter,
/// and an unconstrained coupling uses X at the earlier endpoint and repeats
/// its earlier letter at the later one. Slot pairs are chosen so couplings
/// avoid closing loops in the slot-sharing graph whenever the hosts offer a
/// loop-free pair. gauge, when given, supplies two angles per edge in
/// canonical edge order and is checked against the same constraints.
CouplingAssignment assign_couplings(const AuxPlacement& placement,
                                    const std::vector<Edge>& nonlocal,
                                    const LinearOrder& order,
                                    const std::vector<double>* gauge = nullptr);

/// Everything the encoder needs about a planned register.
struct EncodingLayout {
  LinearOrder order;
  InteractionGraph graph;
  std::vector<Edge> nonlocal;
  AuxPlacement placement;
  CouplingAssignment couplings;

  int n_qubits() const { return placement.placement.n_qubits(); }
};

/// Breaks cycles in the slot-sharing graph (vertices the auxiliary modes,
/// edges the couplings) by re-anchoring the lexicographically smallest
/// still-movable edge of each cycle from its earlier anchor to the backbone
/// successor, growing auxiliary capacity there when needed, and reassigning
/// slots and letters. A loop-free slot graph is what measured state
/// preparation corrections rely on.
void break_loops(EncodingLayout& layout,
                 const std::vector<double>* gauge = nullptr,
                 int max_rounds = 1024);

/// build_graph + place_aux + assign_couplings + break_loops.
EncodingLayout plan_layout(const FermionHamiltonian& h,
                           const LinearOrder& order,
                           const std::vector<double>* gauge = nullptr);

}  // namespace fermloc
