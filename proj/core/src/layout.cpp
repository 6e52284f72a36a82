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

#include "fermloc/layout.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <set>
#include <string>

namespace fermloc {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kAngleTol = 1e-9;

// Angle distance helpers for letter(theta) = cos X - sin Y. Letters agree up
// to sign when the angle difference is a multiple of pi, and are orthogonal
// at odd multiples of pi/2.
bool letters_equal(double t1, double t2) {
  return std::abs(std::sin(t1 - t2)) <= kAngleTol;
}
bool letters_orthogonal(double t1, double t2) {
  return std::abs(std::cos(t1 - t2)) <= kAngleTol;
}

}  // namespace

LinearOrder LinearOrder::natural(int n_modes) {
  std::vector<int> seq(n_modes);
  for (int i = 0; i < n_modes; ++i) seq[i] = i;
  return from_sequence(seq);
}

LinearOrder LinearOrder::snake(int rows, int cols) {
  if (rows < 1 || cols < 1) throw std::invalid_argument("empty lattice");
  std::vector<int> seq;
  seq.reserve(static_cast<std::size_t>(rows) * cols);
  for (int r = 0; r < rows; ++r) {
    if (r % 2 == 0) {
      for (int c = 0; c < cols; ++c) seq.push_back(r * cols + c);
    } else {
      for (int c = cols - 1; c >= 0; --c) seq.push_back(r * cols + c);
    }
  }
  return from_sequence(seq);
}

LinearOrder LinearOrder::from_sequence(const std::vector<int>& sequence) {
  LinearOrder order;
  order.sequence = sequence;
  const int n = static_cast<int>(sequence.size());
  order.position.assign(n, -1);
  for (int i = 0; i < n; ++i) {
    const int mode = sequence[i];
    if (mode < 0 || mode >= n || order.position[mode] != -1) {
      throw std::invalid_argument("order is not a permutation of the modes");
    }
    order.position[mode] = i;
  }
  return order;
}

bool LinearOrder::adjacent(int u, int v) const {
  return std::abs(position.at(u) - position.at(v)) == 1;
}

int LinearOrder::successor(int mode) const {
  const int pos = position.at(mode);
  if (pos + 1 >= n_modes()) return -1;
  return sequence[pos + 1];
}

bool InteractionGraph::has_edge(Edge e) const {
  return std::binary_search(edges.begin(), edges.end(), e);
}

int InteractionGraph::degree(int mode) const {
  int d = 0;
  for (const auto& e : edges) d += (e.a == mode || e.b == mode);
  return d;
}

std::vector<PairedTerm> pair_factors(const LadderTerm& term,
                                     const LinearOrder& order) {
  if (term.factors.size() % 2 != 0) {
    throw std::invalid_argument(
        "odd ladder operator count; only parity-conserving terms are "
        "encodable");
  }
  std::vector<PairedTerm> out;
  for (const LadderTerm& nt : normal_order(term)) {
    const auto& fs = nt.factors;
    const int k = static_cast<int>(fs.size());
    std::vector<int> partner(k, -1);
    std::vector<std::array<int, 2>> pair_indices;

    // Same-mode partners are free: no auxiliary coupling needed.
    for (int i = 0; i < k; ++i) {
      if (partner[i] != -1) continue;
      for (int j = i + 1; j < k; ++j) {
        if (partner[j] == -1 && fs[j].mode == fs[i].mode) {
          partner[i] = j;
          partner[j] = i;
          pair_indices.push_back({i, j});
          break;
        }
      }
    }
    // Remaining operators: keep the factor backbone-local when possible,
    // preferring an opposite-type partner close in the order.
    for (int i = 0; i < k; ++i) {
      if (partner[i] != -1) continue;
      int best = -1;
      std::array<int, 4> best_key{};
      for (int j = i + 1; j < k; ++j) {
        if (partner[j] != -1) continue;
        const int dist = std::abs(order.position.at(fs[i].mode) -
                                  order.position.at(fs[j].mode));
        const std::array<int, 4> key = {
            dist == 1 ? 0 : 1,
            fs[j].creation != fs[i].creation ? 0 : 1,
            dist,
            j,
        };
        if (best == -1 || key < best_key) {
          best = j;
          best_key = key;
        }
      }
      if (best == -1) {
        throw std::logic_error("unpaired operator after greedy pairing");
      }
      partner[i] = best;
      partner[best] = i;
      pair_indices.push_back({i, best});
    }

    std::sort(pair_indices.begin(), pair_indices.end(),
              [](const auto& p, const auto& q) { return p[0] < q[0]; });
    std::vector<int> target;
    target.reserve(k);
    for (const auto& [i, j] : pair_indices) {
      target.push_back(i);
      target.push_back(j);
    }
    // All factors are distinct after normal ordering, so regrouping is a pure
    // permutation; the sign is its parity.
    int inversions = 0;
    for (int i = 0; i < k; ++i) {
      for (int j = i + 1; j < k; ++j) inversions += target[i] > target[j];
    }
    PairedTerm pt;
    pt.coefficient = (inversions % 2 == 0) ? nt.coefficient : -nt.coefficient;
    for (const auto& [i, j] : pair_indices) {
      pt.pairs.push_back({fs[i], fs[j]});
    }
    out.push_back(std::move(pt));
  }
  return out;
}

InteractionGraph build_graph(const FermionHamiltonian& h,
                             const LinearOrder& order) {
  h.validate();
  if (order.n_modes() != h.n_modes) {
    throw std::invalid_argument("order does not cover the Hamiltonian modes");
  }
  std::set<Edge> edges;
  for (const auto& term : h.terms) {
    for (const auto& pt : pair_factors(term, order)) {
      for (const auto& pair : pt.pairs) {
        if (pair[0].mode != pair[1].mode) {
          edges.insert(Edge::normalized(pair[0].mode, pair[1].mode));
        }
      }
    }
  }
  InteractionGraph g;
  g.n_modes = h.n_modes;
  g.edges.assign(edges.begin(), edges.end());
  return g;
}

InteractionGraph build_graph(const FermionHamiltonian& h) {
  return build_graph(h, LinearOrder::natural(h.n_modes));
}

std::vector<int> nonlocal_degree(const InteractionGraph& g,
                                 const LinearOrder& order) {
  std::vector<int> d(g.n_modes, 0);
  for (const auto& e : g.edges) {
    if (!order.adjacent(e.a, e.b)) {
      ++d[e.a];
      ++d[e.b];
    }
  }
  return d;
}

std::vector<int> backbone_degree(const LinearOrder& order) {
  const int n = order.n_modes();
  std::vector<int> d(n, 0);
  for (int i = 0; i < n; ++i) {
    const int mode = order.sequence[i];
    d[mode] = (i == 0 || i == n - 1) ? (n > 1 ? 1 : 0) : 2;
  }
  return d;
}

std::vector<Edge> nonlocal_edges(const InteractionGraph& g,
                                 const LinearOrder& order) {
  std::vector<Edge> out;
  for (const auto& e : g.edges) {
    if (!order.adjacent(e.a, e.b)) out.push_back(e);
  }
  std::sort(out.begin(), out.end(), [&order](const Edge& x, const Edge& y) {
    const int xe = std::min(order.position[x.a], order.position[x.b]);
    const int xl = std::max(order.position[x.a], order.position[x.b]);
    const int ye = std::min(order.position[y.a], order.position[y.b]);
    const int yl = std::max(order.position[y.a], order.position[y.b]);
    return std::tie(xe, xl) < std::tie(ye, yl);
  });
  return out;
}

AuxPlacement AuxPlacement::build(const LinearOrder& order,
                                 const std::vector<int>& aux_counts) {
  AuxPlacement ap;
  ap.n_original = order.n_modes();
  ap.host_aux.assign(ap.n_original, {});
  int next_id = ap.n_original;
  std::vector<int> qubit_order;
  for (int pos = 0; pos < ap.n_original; ++pos) {
    const int host = order.sequence[pos];
    qubit_order.push_back(host);
    for (int k = 0; k < aux_counts.at(host); ++k) {
      ap.host_aux[host].push_back(next_id);
      ap.aux_host.push_back(host);
      qubit_order.push_back(next_id);
      ++next_id;
    }
  }
  ap.placement = Placement::from_order(qubit_order);
  return ap;
}

int AuxPlacement::host_of(int aux_mode) const {
  if (!is_aux(aux_mode) || aux_mode >= total_modes()) {
    throw std::invalid_argument("not an auxiliary mode");
  }
  return aux_host[aux_mode - n_original];
}

AuxPlacement place_aux(const InteractionGraph& g, const LinearOrder& order) {
  const std::vector<int> d = nonlocal_degree(g, order);
  std::vector<int> counts(d.size());
  for (std::size_t i = 0; i < d.size(); ++i) counts[i] = (d[i] + 1) / 2;
  return AuxPlacement::build(order, counts);
}

const Coupling* CouplingAssignment::find(Edge e) const {
  for (const auto& c : couplings) {
    if (c.edge == e) return &c;
  }
  return nullptr;
}

namespace {

// Union-find over auxiliary slots; couplings sharing a slot are connected.
struct SlotForest {
  std::vector<int> parent;

  explicit SlotForest(int n) : parent(n) {
    for (int i = 0; i < n; ++i) parent[i] = i;
  }
  int find(int v) {
    while (parent[v] != v) v = parent[v] = parent[parent[v]];
    return v;
  }
  void unite(int a, int b) { parent[find(a)] = find(b); }
};

// Slot packing and letter assignment for couplings whose anchors are already
// fixed. Couplings must arrive in canonical edge order. Slot pairs that keep
// the slot-sharing graph a forest are preferred; a coupling whose every free
// slot pair would close a loop is packed anyway and left for break_loops.
CouplingAssignment assign_anchored(const AuxPlacement& placement,
                                   std::vector<Coupling> couplings,
                                   const LinearOrder& order,
                                   const std::vector<double>* gauge) {
  if (gauge && gauge->size() != 2 * couplings.size()) {
    throw std::invalid_argument("gauge list must hold two angles per edge");
  }
  struct SlotUse {
    int coupling = -1;
    bool lo_side = false;
    double theta = 0.0;
  };
  const int n_aux = placement.total_modes() - placement.n_original;
  std::vector<std::vector<SlotUse>> residents(n_aux);
  SlotForest forest(n_aux);

  auto free_slots = [&](int host) {
    std::vector<int> out;
    for (int aux : placement.host_aux.at(host)) {
      if (residents[aux - placement.n_original].size() < 2) out.push_back(aux);
    }
    if (out.empty()) {
      throw InfeasibleLayoutError("no free auxiliary slot at mode " +
                                  std::to_string(host));
    }
    return out;
  };

  auto default_perp = [](double theta) {
    // Stay inside {X, Y} when defaulting.
    return letters_equal(theta, 0.0) ? -kPi / 2 : 0.0;
  };

  for (std::size_t i = 0; i < couplings.size(); ++i) {
    Coupling& c = couplings[i];
    const std::vector<int> lo_options = free_slots(c.anchor_lo);
    const std::vector<int> hi_options = free_slots(c.anchor_hi);
    c.aux_lo = lo_options.front();
    c.aux_hi = hi_options.front();
    [&] {
      for (int lo : lo_options) {
        for (int hi : hi_options) {
          if (forest.find(lo - placement.n_original) !=
              forest.find(hi - placement.n_original)) {
            c.aux_lo = lo;
            c.aux_hi = hi;
            return;
          }
        }
      }
    }();
    forest.unite(c.aux_lo - placement.n_original,
                 c.aux_hi - placement.n_original);

    auto assign_end = [&](bool lo_side) {
      const int aux = lo_side ? c.aux_lo : c.aux_hi;
      auto& uses = residents[aux - placement.n_original];
      const SlotUse* other = uses.empty() ? nullptr : &uses.front();
      double theta;
      if (gauge) {
        theta = (*gauge)[2 * i + (lo_side ? 0 : 1)];
        if (other) {
          const bool same_side = other->lo_side == lo_side;
          const bool ok = same_side ? letters_orthogonal(theta, other->theta)
                                    : letters_equal(theta, other->theta);
          if (!ok) {
            throw InfeasibleLayoutError(
                "gauge angles violate the shared-auxiliary letter "
                "constraints at mode " +
                std::to_string(lo_side ? c.anchor_lo : c.anchor_hi));
          }
        }
      } else if (other) {
        if (other->lo_side == lo_side) {
          // Same side: orthogonal letter. Prefer repeating this coupling's
          // earlier letter when it already satisfies the constraint.
          if (!lo_side && letters_orthogonal(c.theta_lo, other->theta)) {
            theta = c.theta_lo;
          } else {
            theta = default_perp(other->theta);
          }
        } else {
          theta = other->theta;
        }
      } else {
        theta = lo_side ? 0.0 : c.theta_lo;
      }
      if (lo_side) {
        c.theta_lo = theta;
      } else {
        c.theta_hi = theta;
      }
      uses.push_back({static_cast<int>(i), lo_side, theta});
    };
    assign_end(true);
    assign_end(false);
  }
  return CouplingAssignment{std::move(couplings)};
}

std::vector<Coupling> anchored_from_edges(const std::vector<Edge>& nonlocal,
                                          const LinearOrder& order) {
  std::vector<Coupling> couplings;
  couplings.reserve(nonlocal.size());
  for (const Edge& e : nonlocal) {
    Coupling c;
    c.edge = e;
    const bool a_first = order.position.at(e.a) < order.position.at(e.b);
    c.anchor_lo = a_first ? e.a : e.b;
    c.anchor_hi = a_first ? e.b : e.a;
    couplings.push_back(c);
  }
  return couplings;
}

// Returns the coupling indices of one cycle in the slot-sharing graph whose
// vertices are the auxiliary modes, or an empty list when that graph is a
// forest. Parallel couplings count as a two-cycle.
std::vector<int> find_cycle(const std::vector<Coupling>& couplings,
                            const AuxPlacement& placement) {
  struct Arc {
    int to;
    int coupling;
  };
  const int n_aux = placement.total_modes() - placement.n_original;
  std::vector<std::vector<Arc>> adj(n_aux);
  for (std::size_t i = 0; i < couplings.size(); ++i) {
    const auto& c = couplings[i];
    const int lo = c.aux_lo - placement.n_original;
    const int hi = c.aux_hi - placement.n_original;
    adj[lo].push_back({hi, static_cast<int>(i)});
    adj[hi].push_back({lo, static_cast<int>(i)});
  }
  std::vector<int> state(n_aux, 0);  // 0 new, 1 on path, 2 done
  std::vector<int> path_vertex;
  std::vector<int> path_coupling;

  for (int root = 0; root < n_aux; ++root) {
    if (state[root] != 0) continue;
    struct Frame {
      int vertex;
      int in_coupling;
      std::size_t next_arc = 0;
    };
    std::vector<Frame> stack{{root, -1}};
    path_vertex.clear();
    path_coupling.clear();
    while (!stack.empty()) {
      const int vertex = stack.back().vertex;
      const int in_coupling = stack.back().in_coupling;
      if (stack.back().next_arc == 0) {
        state[vertex] = 1;
        path_vertex.push_back(vertex);
        path_coupling.push_back(in_coupling);
      }
      bool descended = false;
      while (stack.back().next_arc < adj[vertex].size()) {
        const Arc arc = adj[vertex][stack.back().next_arc++];
        if (arc.coupling == in_coupling) continue;
        if (state[arc.to] == 1) {
          // Back edge: the cycle runs from arc.to along the path to vertex.
          std::vector<int> cycle{arc.coupling};
          for (std::size_t k = path_vertex.size(); k-- > 0;) {
            if (path_vertex[k] == arc.to) break;
            cycle.push_back(path_coupling[k]);
          }
          return cycle;
        }
        if (state[arc.to] == 0) {
          stack.push_back({arc.to, arc.coupling});
          descended = true;
          break;
        }
      }
      if (descended) continue;
      state[vertex] = 2;
      path_vertex.pop_back();
      path_coupling.pop_back();
      stack.pop_back();
    }
  }
  return {};
}

}  // namespace

CouplingAssignment assign_couplings(const AuxPlacement& placement,
                                    const std::vector<Edge>& nonlocal,
                                    const LinearOrder& order,
                                    const std::vector<double>* gauge) {
  return assign_anchored(placement, anchored_from_edges(nonlocal, order),
                         order, gauge);
}

void break_loops(EncodingLayout& layout, const std::vector<double>* gauge,
                 int max_rounds) {
  const std::vector<int> base_degree =
      nonlocal_degree(layout.graph, layout.order);
  for (int round = 0; round < max_rounds; ++round) {
    const std::vector<int> cycle =
        find_cycle(layout.couplings.couplings, layout.placement);
    if (cycle.empty()) return;
    // Smallest edge on the cycle whose low anchor can still move toward its
    // far endpoint.
    int chosen = -1;
    for (int idx : cycle) {
      const Coupling& cc = layout.couplings.couplings[idx];
      const int succ = layout.order.successor(cc.anchor_lo);
      if (succ == -1 || succ == cc.anchor_hi) continue;
      if (chosen == -1 ||
          cc.edge < layout.couplings.couplings[chosen].edge) {
        chosen = idx;
      }
    }
    if (chosen == -1) {
      throw InfeasibleLayoutError(
          "cannot re-anchor any coupling of a residual loop past its far "
          "endpoint");
    }
    Coupling& c = layout.couplings.couplings[chosen];
    c.anchor_lo = layout.order.successor(c.anchor_lo);

    // Re-anchoring can demand a slot where the base placement has none.
    std::vector<int> counts(layout.order.n_modes(), 0);
    for (std::size_t i = 0; i < counts.size(); ++i) {
      counts[i] = (base_degree[i] + 1) / 2;
    }
    std::vector<int> anchored(layout.order.n_modes(), 0);
    for (const auto& cc : layout.couplings.couplings) {
      ++anchored[cc.anchor_lo];
      ++anchored[cc.anchor_hi];
    }
    for (std::size_t i = 0; i < counts.size(); ++i) {
      counts[i] = std::max(counts[i], (anchored[i] + 1) / 2);
    }
    layout.placement = AuxPlacement::build(layout.order, counts);
    std::vector<Coupling> anchors = layout.couplings.couplings;
    for (auto& cc : anchors) {
      cc.aux_lo = cc.aux_hi = -1;
      cc.theta_lo = cc.theta_hi = 0.0;
    }
    layout.couplings =
        assign_anchored(layout.placement, std::move(anchors), layout.order,
                        gauge);
  }
  throw InfeasibleLayoutError("loop breaking did not converge");
}

EncodingLayout plan_layout(const FermionHamiltonian& h,
                           const LinearOrder& order,
                           const std::vector<double>* gauge) {
  EncodingLayout layout;
  layout.order = order;
  layout.graph = build_graph(h, order);
  layout.nonlocal = nonlocal_edges(layout.graph, order);
  layout.placement = place_aux(layout.graph, order);
  layout.couplings =
      assign_couplings(layout.placement, layout.nonlocal, order, gauge);
  break_loops(layout, gauge);
  return layout;
}

}  // namespace fermloc
