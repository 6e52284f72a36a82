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

#include "fermloc/pauli.hpp"

#include <bit>
#include <cmath>
#include <cstdio>
#include <sstream>
#include <stdexcept>

namespace fermloc {

namespace {

std::size_t words_for(int n_qubits) {
  return static_cast<std::size_t>((n_qubits + 63) / 64);
}

int popcount_and(const std::vector<std::uint64_t>& a,
                 const std::vector<std::uint64_t>& b) {
  int total = 0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    total += std::popcount(a[i] & b[i]);
  }
  return total;
}

const std::complex<double> kIPowers[4] = {
    {1.0, 0.0}, {0.0, 1.0}, {-1.0, 0.0}, {0.0, -1.0}};

}  // namespace

PauliString::PauliString(int n_qubits)
    : n_qubits_(n_qubits), phase_power_(0) {
  if (n_qubits < 0) throw std::invalid_argument("negative qubit count");
  pattern_.x.assign(words_for(n_qubits), 0);
  pattern_.z.assign(words_for(n_qubits), 0);
}

PauliString PauliString::identity(int n_qubits) {
  return PauliString(n_qubits);
}

PauliString PauliString::single(int n_qubits, int qubit, char letter) {
  return from_letters(n_qubits, {{qubit, letter}});
}

PauliString PauliString::from_letters(
    int n_qubits, const std::vector<std::pair<int, char>>& letters,
    int phase_power) {
  PauliString s(n_qubits);
  for (const auto& [qubit, letter] : letters) {
    if (qubit < 0 || qubit >= n_qubits) {
      throw std::invalid_argument("qubit index out of range");
    }
    const std::size_t w = static_cast<std::size_t>(qubit) / 64;
    const std::uint64_t bit = 1ULL << (qubit % 64);
    if ((s.pattern_.x[w] | s.pattern_.z[w]) & bit) {
      throw std::invalid_argument("duplicate qubit in letter list");
    }
    switch (letter) {
      case 'X': s.pattern_.x[w] |= bit; break;
      case 'Y': s.pattern_.x[w] |= bit; s.pattern_.z[w] |= bit; break;
      case 'Z': s.pattern_.z[w] |= bit; break;
      default: throw std::invalid_argument("letter must be X, Y or Z");
    }
  }
  s.phase_power_ = ((phase_power % 4) + 4) % 4;
  return s;
}

std::complex<double> PauliString::phase() const {
  return kIPowers[phase_power_];
}

bool PauliString::x_bit(int qubit) const {
  return (pattern_.x[static_cast<std::size_t>(qubit) / 64] >> (qubit % 64)) & 1;
}

bool PauliString::z_bit(int qubit) const {
  return (pattern_.z[static_cast<std::size_t>(qubit) / 64] >> (qubit % 64)) & 1;
}

char PauliString::letter_at(int qubit) const {
  const bool x = x_bit(qubit), z = z_bit(qubit);
  if (x && z) return 'Y';
  if (x) return 'X';
  if (z) return 'Z';
  return 'I';
}

int PauliString::weight() const {
  int total = 0;
  for (std::size_t i = 0; i < pattern_.x.size(); ++i) {
    total += std::popcount(pattern_.x[i] | pattern_.z[i]);
  }
  return total;
}

bool PauliString::is_identity_pattern() const { return weight() == 0; }

PauliString PauliString::adjoint() const {
  // Letters are Hermitian; only the i^k prefactor conjugates.
  PauliString s = *this;
  s.phase_power_ = (4 - phase_power_) % 4;
  return s;
}

PauliString PauliString::with_phase_power(int k) const {
  PauliString s = *this;
  s.phase_power_ = ((k % 4) + 4) % 4;
  return s;
}

std::string PauliString::pattern_str() const {
  std::ostringstream out;
  bool first = true;
  for (int q = 0; q < n_qubits_; ++q) {
    const char letter = letter_at(q);
    if (letter == 'I') continue;
    if (!first) out << ' ';
    out << letter << q;
    first = false;
  }
  if (first) return "I";
  return out.str();
}

std::string PauliString::str() const {
  static const char* kPrefix[4] = {"+", "+i", "-", "-i"};
  return std::string(kPrefix[phase_power_]) + " " + pattern_str();
}

PauliString operator*(const PauliString& a, const PauliString& b) {
  if (a.n_qubits_ != b.n_qubits_) {
    throw std::invalid_argument("qubit count mismatch in Pauli product");
  }
  PauliString out(a.n_qubits_);
  // Per word: letter(x,z) = i^{xz} X^x Z^z, so the product picks up
  // i^{x1z1 + x2z2 + 2*z1x2 - x3z3} on top of the two input phases.
  int k = a.phase_power_ + b.phase_power_;
  k += popcount_and(a.pattern_.x, a.pattern_.z);
  k += popcount_and(b.pattern_.x, b.pattern_.z);
  k += 2 * popcount_and(a.pattern_.z, b.pattern_.x);
  for (std::size_t i = 0; i < out.pattern_.x.size(); ++i) {
    out.pattern_.x[i] = a.pattern_.x[i] ^ b.pattern_.x[i];
    out.pattern_.z[i] = a.pattern_.z[i] ^ b.pattern_.z[i];
  }
  k += 3 * popcount_and(out.pattern_.x, out.pattern_.z);
  out.phase_power_ = k % 4;
  return out;
}

bool commutes(const PauliString& a, const PauliString& b) {
  if (a.n_qubits_ != b.n_qubits_) {
    throw std::invalid_argument("qubit count mismatch in commutation test");
  }
  const int form = popcount_and(a.pattern_.x, b.pattern_.z) +
                   popcount_and(a.pattern_.z, b.pattern_.x);
  return (form % 2) == 0;
}

PauliSum::PauliSum(int n_qubits) : n_qubits_(n_qubits) {
  if (n_qubits < 0) throw std::invalid_argument("negative qubit count");
}

PauliSum PauliSum::zero(int n_qubits) { return PauliSum(n_qubits); }

PauliSum PauliSum::identity(int n_qubits, std::complex<double> coeff) {
  PauliSum s(n_qubits);
  s.add(PauliString::identity(n_qubits), coeff);
  return s;
}

PauliSum PauliSum::of(const PauliString& s, std::complex<double> scale) {
  PauliSum sum(s.n_qubits());
  sum.add(s, scale);
  return sum;
}

void PauliSum::add(const PauliString& s, std::complex<double> scale) {
  if (s.n_qubits() != n_qubits_) {
    throw std::invalid_argument("qubit count mismatch in PauliSum::add");
  }
  add_pattern(s.pattern(), scale * s.phase());
}

void PauliSum::add_pattern(const PauliPattern& p, std::complex<double> coeff) {
  auto [it, inserted] = terms_.try_emplace(p, coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second == std::complex<double>(0.0, 0.0)) terms_.erase(it);
  } else if (coeff == std::complex<double>(0.0, 0.0)) {
    terms_.erase(it);
  }
}

std::complex<double> PauliSum::coefficient(const PauliPattern& p) const {
  auto it = terms_.find(p);
  return it == terms_.end() ? std::complex<double>(0.0) : it->second;
}

std::complex<double> PauliSum::coefficient(const PauliString& s) const {
  // The stored coefficient already includes any phase folded in; the query
  // string's own phase divides out so that coefficient(i*P) * i = c(P).
  return coefficient(s.pattern()) / s.phase();
}

PauliSum& PauliSum::operator+=(const PauliSum& other) {
  if (other.n_qubits_ != n_qubits_) {
    throw std::invalid_argument("qubit count mismatch in PauliSum sum");
  }
  for (const auto& [p, c] : other.terms_) add_pattern(p, c);
  return *this;
}

PauliSum& PauliSum::operator-=(const PauliSum& other) {
  if (other.n_qubits_ != n_qubits_) {
    throw std::invalid_argument("qubit count mismatch in PauliSum sum");
  }
  for (const auto& [p, c] : other.terms_) add_pattern(p, -c);
  return *this;
}

PauliSum& PauliSum::operator*=(std::complex<double> c) {
  if (c == std::complex<double>(0.0, 0.0)) {
    terms_.clear();
    return *this;
  }
  for (auto& [p, coeff] : terms_) coeff *= c;
  return *this;
}

PauliSum operator*(const PauliSum& a, const PauliSum& b) {
  if (a.n_qubits_ != b.n_qubits_) {
    throw std::invalid_argument("qubit count mismatch in PauliSum product");
  }
  static constexpr std::complex<double> kI[4] = {
      {1, 0}, {0, 1}, {-1, 0}, {0, -1}};
  PauliSum out(a.n_qubits_);
  const std::size_t words = words_for(a.n_qubits_);
  PauliPattern prod;
  prod.x.resize(words);
  prod.z.resize(words);
  for (const auto& [pa, ca] : a.terms_) {
    for (const auto& [pb, cb] : b.terms_) {
      // Letter algebra per word; 3*popcount stands in for the subtracted
      // phase of the product pattern's own Y letters.
      int g = 0;
      for (std::size_t w = 0; w < words; ++w) {
        const std::uint64_t cx = pa.x[w] ^ pb.x[w];
        const std::uint64_t cz = pa.z[w] ^ pb.z[w];
        g += std::popcount(pa.x[w] & pa.z[w]) +
             std::popcount(pb.x[w] & pb.z[w]) +
             2 * std::popcount(pa.z[w] & pb.x[w]) +
             3 * std::popcount(cx & cz);
        prod.x[w] = cx;
        prod.z[w] = cz;
      }
      out.add_pattern(prod, ca * cb * kI[g & 3]);
    }
  }
  return out;
}

PauliSum PauliSum::adjoint() const {
  // Patterns are Hermitian up to the Y letters' built-in i's, which the
  // letter convention keeps inside the pattern itself, so conjugating the
  // coefficients is exact.
  PauliSum out(n_qubits_);
  for (const auto& [p, c] : terms_) out.add_pattern(p, std::conj(c));
  return out;
}

void PauliSum::prune(double tol) {
  for (auto it = terms_.begin(); it != terms_.end();) {
    if (std::abs(it->second) <= tol) {
      it = terms_.erase(it);
    } else {
      ++it;
    }
  }
}

int PauliSum::max_weight() const {
  int best = 0;
  for (const auto& [p, c] : terms_) best = std::max(best, pattern_weight(p));
  return best;
}

bool PauliSum::is_hermitian(double tol) const {
  PauliSum diff = adjoint();
  diff -= *this;
  return diff.max_abs_coefficient() <= tol;
}

double PauliSum::max_abs_coefficient() const {
  double best = 0.0;
  for (const auto& [p, c] : terms_) best = std::max(best, std::abs(c));
  return best;
}

std::string PauliSum::str() const {
  std::ostringstream out;
  bool first = true;
  for (const auto& [p, c] : terms_) {
    if (!first) out << '\n';
    PauliString s(n_qubits_);
    s.pattern_ = p;
    out << format_complex(c) << " * " << s.pattern_str();
    first = false;
  }
  if (first) return "0";
  return out.str();
}

PauliSum commutator(const PauliSum& a, const PauliSum& b) {
  PauliSum out = a * b;
  out -= b * a;
  return out;
}

std::string format_complex(std::complex<double> c) {
  char buf[64];
  const double re = c.real(), im = c.imag();
  auto fmt = [&buf](double v) {
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return std::string(buf);
  };
  if (im == 0.0) return fmt(re);
  if (re == 0.0) return fmt(im) + "i";
  std::string out = "(" + fmt(re);
  if (!(im < 0.0)) out += "+";
  out += fmt(im) + "i)";
  return out;
}

int pattern_weight(const PauliPattern& p) {
  int total = 0;
  for (std::size_t i = 0; i < p.x.size(); ++i) {
    total += std::popcount(p.x[i] | p.z[i]);
  }
  return total;
}

}  // namespace fermloc
