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

#include "fermloc/statevec.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <complex>
#include <cstdint>
#include <functional>
#include <random>
#include <stdexcept>
#include <utility>
#include <vector>

#include "fermloc/fock_oracle.hpp"

namespace fermloc {

namespace {

using Complex = std::complex<double>;

constexpr Complex kPhases[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};

std::uint64_t word0(const std::vector<std::uint64_t>& words) {
  return words.empty() ? 0 : words[0];
}

void check_width(int n_qubits, const StateVector& v) {
  if (n_qubits < 0 || n_qubits > kMaxSimQubits) {
    throw std::invalid_argument("register too wide to simulate");
  }
  if (v.size() != (Eigen::Index{1} << n_qubits)) {
    throw std::invalid_argument("state vector size does not match register");
  }
}

double snapped(double v) {
  if (std::abs(v) <= 1e-15) return 0.0;
  if (std::abs(v - 1.0) <= 1e-15) return 1.0;
  if (std::abs(v + 1.0) <= 1e-15) return -1.0;
  return v;
}

// cos(theta) X - sin(theta) Y on one qubit, as an operator on n qubits.
PauliSum endpoint_letter(int n_qubits, int qubit, double theta) {
  const double c = snapped(std::cos(theta));
  const double s = snapped(std::sin(theta));
  PauliSum out = PauliSum::zero(n_qubits);
  if (c != 0.0) {
    out += PauliSum::of(PauliString::single(n_qubits, qubit, 'X'), c);
  }
  if (s != 0.0) {
    out += PauliSum::of(PauliString::single(n_qubits, qubit, 'Y'), -s);
  }
  return out;
}

}  // namespace

StateVector basis_state(int n_qubits, std::uint64_t index) {
  if (n_qubits < 0 || n_qubits > kMaxSimQubits) {
    throw std::invalid_argument("register too wide to simulate");
  }
  if (index >> n_qubits != 0) {
    throw std::invalid_argument("basis index out of range");
  }
  StateVector v = StateVector::Zero(Eigen::Index{1} << n_qubits);
  v[static_cast<Eigen::Index>(index)] = 1.0;
  return v;
}

StateVector act(const PauliString& s, const StateVector& v) {
  check_width(s.n_qubits(), v);
  const std::uint64_t xm = word0(s.pattern().x);
  const std::uint64_t zm = word0(s.pattern().z);
  const int y_count = std::popcount(xm & zm);
  const Complex base = kPhases[(s.phase_power() + y_count) & 3];
  StateVector out(v.size());
  for (std::uint64_t idx = 0; idx < static_cast<std::uint64_t>(v.size());
       ++idx) {
    const double sign = (std::popcount(idx & zm) & 1) ? -1.0 : 1.0;
    out[static_cast<Eigen::Index>(idx ^ xm)] =
        base * sign * v[static_cast<Eigen::Index>(idx)];
  }
  return out;
}

StateVector act(const PauliSum& op, const StateVector& v) {
  check_width(op.n_qubits(), v);
  StateVector out = StateVector::Zero(v.size());
  for (const auto& [pattern, coeff] : op.terms()) {
    const std::uint64_t xm = word0(pattern.x);
    const std::uint64_t zm = word0(pattern.z);
    const Complex base = coeff * kPhases[std::popcount(xm & zm) & 3];
    for (std::uint64_t idx = 0; idx < static_cast<std::uint64_t>(v.size());
         ++idx) {
      const double sign = (std::popcount(idx & zm) & 1) ? -1.0 : 1.0;
      out[static_cast<Eigen::Index>(idx ^ xm)] +=
          base * sign * v[static_cast<Eigen::Index>(idx)];
    }
  }
  return out;
}

std::complex<double> expectation(const PauliSum& op, const StateVector& v) {
  return v.dot(act(op, v));
}

double fidelity(const StateVector& a, const StateVector& b) {
  return std::abs(a.dot(b));
}

StateVector vacuum_state(const EncodingLayout& layout,
                         const std::vector<Stabilizer>& stabilizers,
                         double tol) {
  const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
  StateVector v = basis_state(layout.n_qubits(), 0);
  for (const Stabilizer& s : stabilizers) {
    v = (v + act(s.op, v)) * inv_sqrt2;
  }
  if (std::abs(v.norm() - 1.0) > tol) {
    throw std::runtime_error(
        "projective vacuum is not normalized; the couplings likely loop");
  }
  for (const Stabilizer& s : stabilizers) {
    if ((act(s.op, v) - v).lpNorm<Eigen::Infinity>() > tol) {
      throw std::runtime_error("projective vacuum is not stabilized");
    }
  }
  return v;
}

std::vector<int> correction_qubits(const EncodingLayout& layout,
                                   int coupling_index) {
  const auto& couplings = layout.couplings.couplings;
  if (coupling_index < 0 ||
      coupling_index >= static_cast<int>(couplings.size())) {
    throw std::invalid_argument("coupling index out of range");
  }
  // Aux-sharing graph: vertices are auxiliary modes, edges are couplings.
  const int n_aux = static_cast<int>(layout.placement.aux_host.size());
  const int base = layout.placement.n_original;
  std::vector<std::vector<std::pair<int, int>>> adj(n_aux);
  for (int j = 0; j < static_cast<int>(couplings.size()); ++j) {
    const int lo = couplings[j].aux_lo - base;
    const int hi = couplings[j].aux_hi - base;
    adj[lo].emplace_back(hi, j);
    adj[hi].emplace_back(lo, j);
  }
  auto shore = [&](int start) {
    std::vector<int> seen;
    std::vector<bool> mark(n_aux, false);
    std::vector<int> queue{start};
    mark[start] = true;
    while (!queue.empty()) {
      const int at = queue.back();
      queue.pop_back();
      seen.push_back(at);
      for (const auto& [to, via] : adj[at]) {
        if (via == coupling_index || mark[to]) continue;
        mark[to] = true;
        queue.push_back(to);
      }
    }
    return seen;
  };
  const Coupling& c = couplings[coupling_index];
  std::vector<int> lo_shore = shore(c.aux_lo - base);
  std::vector<int> hi_shore = shore(c.aux_hi - base);
  for (int a : hi_shore) {
    if (a == c.aux_lo - base) {
      throw std::runtime_error(
          "coupling loop prevents a local measurement correction");
    }
  }
  const std::vector<int>& side =
      lo_shore.size() <= hi_shore.size() ? lo_shore : hi_shore;
  std::vector<int> qubits;
  qubits.reserve(side.size());
  for (int a : side) {
    qubits.push_back(layout.placement.placement.qubit_of(a + base));
  }
  std::sort(qubits.begin(), qubits.end());
  return qubits;
}

namespace {

MeasuredPrepResult measured_core(
    const EncodingLayout& layout, const std::vector<Stabilizer>& stabilizers,
    const std::function<bool(int, double)>& take_plus, double tol) {
  MeasuredPrepResult result;
  StateVector v = basis_state(layout.n_qubits(), 0);
  for (int i = 0; i < static_cast<int>(stabilizers.size()); ++i) {
    const StateVector w = act(stabilizers[i].op, v);
    StateVector branch = 0.5 * (v + w);
    double p = branch.squaredNorm();
    if (take_plus(i, p)) {
      if (p <= tol) {
        throw std::domain_error("forced +1 outcome has zero probability");
      }
      v = branch / std::sqrt(p);
      result.outcomes.push_back(1);
      result.corrections.emplace_back();
      continue;
    }
    branch = 0.5 * (v - w);
    p = branch.squaredNorm();
    if (p <= tol) {
      throw std::domain_error("forced -1 outcome has zero probability");
    }
    v = branch / std::sqrt(p);
    std::vector<int> qubits = correction_qubits(layout, i);
    std::uint64_t zmask = 0;
    for (int q : qubits) zmask |= std::uint64_t{1} << q;
    for (std::uint64_t idx = 0; idx < static_cast<std::uint64_t>(v.size());
         ++idx) {
      if (std::popcount(idx & zmask) & 1) {
        v[static_cast<Eigen::Index>(idx)] = -v[static_cast<Eigen::Index>(idx)];
      }
    }
    result.outcomes.push_back(-1);
    result.corrections.push_back(std::move(qubits));
  }
  for (const Stabilizer& s : stabilizers) {
    if ((act(s.op, v) - v).lpNorm<Eigen::Infinity>() > tol) {
      throw std::runtime_error("measured state escaped the stabilized space");
    }
  }
  result.state = std::move(v);
  return result;
}

}  // namespace

MeasuredPrepResult measured_prepare(const EncodingLayout& layout,
                                    const std::vector<Stabilizer>& stabilizers,
                                    std::uint64_t seed, double tol) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  return measured_core(
      layout, stabilizers,
      [&](int, double p_plus) { return unit(rng) < p_plus; }, tol);
}

MeasuredPrepResult measured_prepare_forced(
    const EncodingLayout& layout, const std::vector<Stabilizer>& stabilizers,
    const std::vector<int>& outcomes, double tol) {
  if (outcomes.size() != stabilizers.size()) {
    throw std::invalid_argument("one outcome required per coupling");
  }
  for (int o : outcomes) {
    if (o != 1 && o != -1) {
      throw std::invalid_argument("outcomes must be +1 or -1");
    }
  }
  return measured_core(
      layout, stabilizers, [&](int i, double) { return outcomes[i] == 1; },
      tol);
}

StateVector prepare_fock_register(const Placement& placement,
                                  const FockState& occ,
                                  const StateVector& base) {
  if (occ.n_modes > static_cast<int>(placement.mode_to_qubit.size())) {
    throw std::invalid_argument("occupation refers to unplaced modes");
  }
  StateVector v = base;
  for (int m = occ.n_modes - 1; m >= 0; --m) {
    if (!occ.occupied(m)) continue;
    v = act(jw_ladder(LadderOperator{m, true}, placement), v);
  }
  return v;
}

StateVector prepare_fock(const EncodingLayout& layout,
                         const std::vector<Stabilizer>& stabilizers,
                         const FockState& occ, double tol) {
  if (occ.n_modes != layout.placement.n_original) {
    throw std::invalid_argument("occupation does not match the register");
  }
  StateVector v = prepare_fock_register(layout.placement.placement, occ,
                                        vacuum_state(layout, stabilizers, tol));
  if (std::abs(v.norm() - 1.0) > tol) {
    throw std::runtime_error("occupied state preparation lost norm");
  }
  return v;
}

StateVector fast_prepare_fock(const EncodingLayout& layout,
                              const std::vector<Stabilizer>& stabilizers,
                              const FockState& occ) {
  if (occ.n_modes != layout.placement.n_original) {
    throw std::invalid_argument("occupation does not match the register");
  }
  const Placement& pl = layout.placement.placement;
  const LinearOrder& order = layout.order;
  StateVector v = vacuum_state(layout, stabilizers);
  std::uint64_t xmask = 0;
  for (int m = 0; m < occ.n_modes; ++m) {
    if (occ.occupied(m)) xmask |= std::uint64_t{1} << pl.qubit_of(m);
  }
  std::uint64_t zmask = 0;
  const int base = layout.placement.n_original;
  for (int a = 0; a < static_cast<int>(layout.placement.aux_host.size());
       ++a) {
    const int host_pos = order.position[layout.placement.aux_host[a]];
    int parity = 0;
    for (int m = 0; m < occ.n_modes; ++m) {
      if (occ.occupied(m) && order.position[m] > host_pos) parity ^= 1;
    }
    if (parity) zmask |= std::uint64_t{1} << pl.qubit_of(a + base);
  }
  StateVector out(v.size());
  for (std::uint64_t idx = 0; idx < static_cast<std::uint64_t>(v.size());
       ++idx) {
    const double sign = (std::popcount(idx & zmask) & 1) ? -1.0 : 1.0;
    out[static_cast<Eigen::Index>(idx ^ xmask)] =
        sign * v[static_cast<Eigen::Index>(idx)];
  }
  return out;
}

double joint_letter_probability(const StateVector& v, const Coupling& c,
                                const Placement& placement, int s, int t) {
  if ((s != 1 && s != -1) || (t != 1 && t != -1)) {
    throw std::invalid_argument("outcomes must be +1 or -1");
  }
  const int n = placement.n_qubits();
  auto projector = [&](int mode, double theta, int outcome) {
    PauliSum p = PauliSum::identity(n, 0.5);
    PauliSum letter = endpoint_letter(n, placement.qubit_of(mode), theta);
    letter *= Complex(0.5 * outcome, 0.0);
    p += letter;
    return p;
  };
  const StateVector w =
      act(projector(c.aux_hi, c.theta_hi, t),
            act(projector(c.aux_lo, c.theta_lo, s), v));
  return w.squaredNorm();
}

Eigen::MatrixXcd restricted_matrix(const PauliSum& op,
                                   const std::vector<StateVector>& basis) {
  const Eigen::Index dim = static_cast<Eigen::Index>(basis.size());
  Eigen::MatrixXcd a(dim, dim);
  for (Eigen::Index col = 0; col < dim; ++col) {
    const StateVector w = act(op, basis[col]);
    for (Eigen::Index row = 0; row < dim; ++row) {
      a(row, col) = basis[row].dot(w);
    }
  }
  return a;
}

namespace {

// Prepared occupation states touch at most 2^(couplings) amplitudes, so the
// basis is held sparsely and the restricted matrix is assembled through a
// scratch buffer instead of full-width Pauli applications.
struct SparseVec {
  std::vector<std::pair<std::uint64_t, Complex>> entries;  // index ascending
};

SparseVec sparsify(const StateVector& v) {
  SparseVec out;
  for (Eigen::Index idx = 0; idx < v.size(); ++idx) {
    if (v[idx] != 0.0) {
      out.entries.emplace_back(static_cast<std::uint64_t>(idx), v[idx]);
    }
  }
  return out;
}

EquivalenceReport compare_bases(const FermionHamiltonian& h,
                                const PauliSum& op,
                                const std::vector<SparseVec>& basis,
                                int n_qubits) {
  EquivalenceReport report;
  report.fock_dim = static_cast<int>(basis.size());
  report.n_qubits = n_qubits;
  for (std::size_t m = 0; m < basis.size(); ++m) {
    for (std::size_t k = 0; k < basis.size(); ++k) {
      Complex g = 0.0;
      auto a = basis[m].entries.begin();
      auto b = basis[k].entries.begin();
      while (a != basis[m].entries.end() && b != basis[k].entries.end()) {
        if (a->first < b->first) {
          ++a;
        } else if (b->first < a->first) {
          ++b;
        } else {
          g += std::conj(a->second) * b->second;
          ++a;
          ++b;
        }
      }
      const double dev = std::abs(g - (m == k ? 1.0 : 0.0));
      if (dev > report.gram_dev) report.gram_dev = dev;
    }
  }
  const Eigen::MatrixXcd fock = build_fock_matrix(h);
  const Eigen::Index dim = static_cast<Eigen::Index>(basis.size());
  Eigen::MatrixXcd restricted(dim, dim);
  StateVector buffer = StateVector::Zero(Eigen::Index{1} << n_qubits);
  std::vector<std::uint64_t> touched;
  for (Eigen::Index col = 0; col < dim; ++col) {
    for (const auto& [pattern, coeff] : op.terms()) {
      const std::uint64_t xm = word0(pattern.x);
      const std::uint64_t zm = word0(pattern.z);
      const Complex base = coeff * kPhases[std::popcount(xm & zm) & 3];
      for (const auto& [idx, amp] : basis[col].entries) {
        const double sign = (std::popcount(idx & zm) & 1) ? -1.0 : 1.0;
        const std::uint64_t target = idx ^ xm;
        buffer[static_cast<Eigen::Index>(target)] += base * sign * amp;
        touched.push_back(target);
      }
    }
    for (Eigen::Index row = 0; row < dim; ++row) {
      Complex val = 0.0;
      for (const auto& [idx, amp] : basis[row].entries) {
        val += std::conj(amp) * buffer[static_cast<Eigen::Index>(idx)];
      }
      restricted(row, col) = val;
    }
    for (std::uint64_t t : touched) buffer[static_cast<Eigen::Index>(t)] = 0.0;
    touched.clear();
  }
  report.matrix_dev = (restricted - fock).cwiseAbs().maxCoeff();
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> ef(fock,
                                                     Eigen::EigenvaluesOnly);
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> er(restricted,
                                                     Eigen::EigenvaluesOnly);
  report.spectrum_dev =
      (ef.eigenvalues() - er.eigenvalues()).cwiseAbs().maxCoeff();
  return report;
}

}  // namespace

EquivalenceReport equivalence_check(const FermionHamiltonian& h,
                                    const EncodedHamiltonian& encoded) {
  h.validate();
  if (h.n_modes != encoded.layout.placement.n_original) {
    throw std::invalid_argument("encoded register does not match the input");
  }
  const StateVector vac =
      vacuum_state(encoded.layout, encoded.stabilizers);
  const std::uint64_t dim = std::uint64_t{1} << h.n_modes;
  std::vector<SparseVec> basis;
  basis.reserve(dim);
  for (std::uint64_t bits = 0; bits < dim; ++bits) {
    basis.push_back(
        sparsify(prepare_fock_register(encoded.layout.placement.placement,
                                       FockState{h.n_modes, bits}, vac)));
  }
  return compare_bases(h, encoded.op, basis, encoded.n_qubits());
}

EquivalenceReport equivalence_check_jw(const FermionHamiltonian& h,
                                       const PauliSum& op,
                                       const Placement& placement) {
  h.validate();
  const StateVector zero = basis_state(placement.n_qubits(), 0);
  const std::uint64_t dim = std::uint64_t{1} << h.n_modes;
  std::vector<SparseVec> basis;
  basis.reserve(dim);
  for (std::uint64_t bits = 0; bits < dim; ++bits) {
    basis.push_back(sparsify(
        prepare_fock_register(placement, FockState{h.n_modes, bits}, zero)));
  }
  return compare_bases(h, op, basis, placement.n_qubits());
}

}  // namespace fermloc
