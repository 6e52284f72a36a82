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

#include "fermloc/fermion.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <map>
#include <sstream>
#include <stdexcept>

namespace fermloc {

std::string LadderOperator::str() const {
  return std::to_string(mode) + (creation ? "^" : "");
}

LadderTerm LadderTerm::adjoint() const {
  LadderTerm out;
  out.coefficient = std::conj(coefficient);
  out.factors.reserve(factors.size());
  for (auto it = factors.rbegin(); it != factors.rend(); ++it) {
    out.factors.push_back({it->mode, !it->creation});
  }
  return out;
}

std::string LadderTerm::str() const {
  std::ostringstream out;
  out << "(" << coefficient.real() << "," << coefficient.imag() << ")";
  for (const auto& f : factors) out << " " << f.str();
  return out.str();
}

void FermionHamiltonian::validate() const {
  for (const auto& t : terms) {
    for (const auto& f : t.factors) {
      if (f.mode < 0 || f.mode >= n_modes) {
        throw std::invalid_argument("ladder operator mode out of range: " +
                                    f.str());
      }
    }
  }
}

int FockState::total_occupation() const {
  return std::popcount(bits & ((n_modes >= 64) ? ~0ULL : ((1ULL << n_modes) - 1)));
}

std::optional<LadderAction> apply_ladder(const LadderOperator& op,
                                         const FockState& state) {
  if (op.mode < 0 || op.mode >= state.n_modes) {
    throw std::invalid_argument("mode out of range in apply_ladder");
  }
  const std::uint64_t bit = 1ULL << op.mode;
  const bool occ = state.bits & bit;
  if (op.creation == occ) return std::nullopt;
  const std::uint64_t below = state.bits & (bit - 1);
  LadderAction action;
  action.sign = (std::popcount(below) % 2 == 0) ? 1 : -1;
  action.state = {state.n_modes, state.bits ^ bit};
  return action;
}

namespace {

// Sorts a factor sequence into the order induced by `precedes` using adjacent
// transpositions. Swapping distinct-mode operators (or same mode, same flag)
// flips the sign; swapping a_j a_j^dag (either orientation) additionally
// emits the contraction term with both operators removed.
std::vector<LadderTerm> sort_with_algebra(
    const LadderTerm& input,
    const std::function<bool(const LadderOperator&, const LadderOperator&)>&
        precedes) {
  std::vector<LadderTerm> out;
  std::vector<LadderTerm> work{input};
  while (!work.empty()) {
    LadderTerm t = std::move(work.back());
    work.pop_back();
    bool swapped = true;
    while (swapped) {
      swapped = false;
      for (std::size_t i = 0; i + 1 < t.factors.size(); ++i) {
        LadderOperator& a = t.factors[i];
        LadderOperator& b = t.factors[i + 1];
        if (!precedes(b, a)) continue;
        if (a.mode == b.mode && a.creation != b.creation) {
          LadderTerm contraction;
          contraction.coefficient = t.coefficient;
          contraction.factors.reserve(t.factors.size() - 2);
          for (std::size_t j = 0; j < t.factors.size(); ++j) {
            if (j != i && j != i + 1) contraction.factors.push_back(t.factors[j]);
          }
          work.push_back(std::move(contraction));
        }
        std::swap(a, b);
        t.coefficient = -t.coefficient;
        swapped = true;
      }
    }
    // A sorted sequence with two identical adjacent operators is zero.
    bool zero = false;
    for (std::size_t i = 0; i + 1 < t.factors.size(); ++i) {
      if (t.factors[i] == t.factors[i + 1]) {
        zero = true;
        break;
      }
    }
    if (!zero) out.push_back(std::move(t));
  }
  std::reverse(out.begin(), out.end());
  return out;
}

}  // namespace

std::vector<LadderTerm> normal_order(const LadderTerm& term) {
  auto precedes = [](const LadderOperator& a, const LadderOperator& b) {
    if (a.creation != b.creation) return a.creation;
    if (a.creation) return a.mode < b.mode;
    return a.mode > b.mode;
  };
  return sort_with_algebra(term, precedes);
}

std::vector<LadderTerm> reorder_like(const LadderTerm& term,
                                     const std::vector<LadderOperator>& target) {
  auto rank = [&target](const LadderOperator& op) {
    for (std::size_t i = 0; i < target.size(); ++i) {
      if (target[i] == op) return i;
    }
    throw std::invalid_argument("target is not a permutation of the factors");
  };
  auto precedes = [&rank](const LadderOperator& a, const LadderOperator& b) {
    return rank(a) < rank(b);
  };
  return sort_with_algebra(term, precedes);
}

std::vector<LadderTerm> merge_terms(const std::vector<LadderTerm>& terms,
                                    double tol) {
  std::map<std::vector<std::pair<int, bool>>, std::complex<double>> merged;
  std::vector<std::vector<std::pair<int, bool>>> order;
  for (const auto& t : terms) {
    std::vector<std::pair<int, bool>> key;
    key.reserve(t.factors.size());
    for (const auto& f : t.factors) key.emplace_back(f.mode, f.creation);
    auto [it, inserted] = merged.try_emplace(key, t.coefficient);
    if (inserted) {
      order.push_back(key);
    } else {
      it->second += t.coefficient;
    }
  }
  std::vector<LadderTerm> out;
  for (const auto& key : order) {
    const std::complex<double> c = merged.at(key);
    if (std::abs(c) <= tol) continue;
    LadderTerm t;
    t.coefficient = c;
    for (const auto& [mode, creation] : key) t.factors.push_back({mode, creation});
    out.push_back(std::move(t));
  }
  return out;
}

FermionHamiltonian hermitian_closure(const FermionHamiltonian& h) {
  FermionHamiltonian out;
  out.n_modes = h.n_modes;
  out.terms = merge_terms(h.terms, 0.0);
  auto factor_key = [](const std::vector<LadderOperator>& fs) {
    std::vector<std::pair<int, bool>> key;
    key.reserve(fs.size());
    for (const auto& f : fs) key.emplace_back(f.mode, f.creation);
    return key;
  };
  std::map<std::vector<std::pair<int, bool>>, bool> present;
  for (const auto& t : out.terms) present[factor_key(t.factors)] = true;
  const std::size_t n = out.terms.size();
  for (std::size_t i = 0; i < n; ++i) {
    const LadderTerm adj = out.terms[i].adjoint();
    if (adj == out.terms[i]) continue;
    const auto key = factor_key(adj.factors);
    if (present.count(key)) continue;
    present[key] = true;
    out.terms.push_back(adj);
  }
  return out;
}

}  // namespace fermloc
