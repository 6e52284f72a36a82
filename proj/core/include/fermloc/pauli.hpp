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
#include <map>
#include <string>
#include <utility>
#include <vector>

namespace fermloc {

/// Default threshold below which term coefficients are dropped.
inline constexpr double kDefaultPruneTol = 1e-12;

/// Letter pattern of a Pauli string in symplectic form. Bit q of x marks an
/// X or Y letter on qubit q, bit q of z marks a Z or Y letter. The pattern
/// carries no phase.
struct PauliPattern {
  std::vector<std::uint64_t> x;
  std::vector<std::uint64_t> z;

  auto operator<=>(const PauliPattern&) const = default;
};

/// A single Pauli string i^k * (tensor product of I/X/Y/Z letters).
///
/// Letters are stored as the (x, z) bit pair per qubit: I=(0,0), X=(1,0),
/// Z=(0,1), Y=(1,1), where Y is the literal Pauli Y matrix. phase_power is
/// the exponent k of the explicit i^k prefactor, 0..3.
class PauliString {
 public:
  explicit PauliString(int n_qubits);

  static PauliString identity(int n_qubits);
  /// letter must be one of 'X', 'Y', 'Z'.
  static PauliString single(int n_qubits, int qubit, char letter);
  /// Builds from (qubit, letter) pairs; qubits must be distinct.
  static PauliString from_letters(int n_qubits,
                                  const std::vector<std::pair<int, char>>& letters,
                                  int phase_power = 0);

  int n_qubits() const { return n_qubits_; }
  const PauliPattern& pattern() const { return pattern_; }
  int phase_power() const { return phase_power_; }
  /// The complex value i^phase_power.
  std::complex<double> phase() const;

  bool x_bit(int qubit) const;
  bool z_bit(int qubit) const;
  /// 'I', 'X', 'Y' or 'Z'.
  char letter_at(int qubit) const;
  /// Number of non-identity letters.
  int weight() const;
  bool is_identity_pattern() const;

  PauliString adjoint() const;
  PauliString with_phase_power(int k) const;

  bool same_pattern(const PauliString& other) const {
    return pattern_ == other.pattern_;
  }
  bool operator==(const PauliString& other) const = default;

  /// Letters in ascending qubit order, e.g. "X0 Z3 Y5"; "I" when empty.
  std::string pattern_str() const;
  /// Pattern with the phase prefix, e.g. "-i X0 Z3".
  std::string str() const;

  friend PauliString operator*(const PauliString& a, const PauliString& b);
  /// True when the strings commute; exact symplectic test, no arithmetic.
  friend bool commutes(const PauliString& a, const PauliString& b);

 private:
  int n_qubits_;
  PauliPattern pattern_;
  int phase_power_;  // 0..3

  friend class PauliSum;
};

PauliString operator*(const PauliString& a, const PauliString& b);
bool commutes(const PauliString& a, const PauliString& b);

/// A complex-linear combination of Pauli letter patterns. Phases of inserted
/// strings are folded into the coefficients, so the map is keyed purely by
/// pattern; iteration order is the canonical (x, z) lexicographic order used
/// by every serializer.
class PauliSum {
 public:
  /// Empty sum over zero qubits; assignable from any sized sum.
  PauliSum() = default;
  explicit PauliSum(int n_qubits);

  static PauliSum zero(int n_qubits);
  static PauliSum identity(int n_qubits, std::complex<double> coeff = 1.0);
  static PauliSum of(const PauliString& s, std::complex<double> scale = 1.0);

  int n_qubits() const { return n_qubits_; }
  std::size_t size() const { return terms_.size(); }
  bool empty() const { return terms_.empty(); }

  void add(const PauliString& s, std::complex<double> scale = 1.0);
  void add_pattern(const PauliPattern& p, std::complex<double> coeff);

  std::complex<double> coefficient(const PauliPattern& p) const;
  std::complex<double> coefficient(const PauliString& s) const;

  PauliSum& operator+=(const PauliSum& other);
  PauliSum& operator-=(const PauliSum& other);
  PauliSum& operator*=(std::complex<double> c);

  friend PauliSum operator+(PauliSum a, const PauliSum& b) { return a += b; }
  friend PauliSum operator-(PauliSum a, const PauliSum& b) { return a -= b; }
  friend PauliSum operator*(PauliSum a, std::complex<double> c) { return a *= c; }
  friend PauliSum operator*(std::complex<double> c, PauliSum a) { return a *= c; }
  friend PauliSum operator*(const PauliSum& a, const PauliSum& b);

  PauliSum adjoint() const;
  void prune(double tol = kDefaultPruneTol);

  /// Largest letter weight among the stored patterns; 0 for the empty sum.
  int max_weight() const;
  bool is_hermitian(double tol = kDefaultPruneTol) const;
  /// max |coefficient| over terms; 0 when empty.
  double max_abs_coefficient() const;

  const std::map<PauliPattern, std::complex<double>>& terms() const {
    return terms_;
  }

  /// One term per line, "coeff * pattern", in canonical order.
  std::string str() const;

  bool operator==(const PauliSum& other) const = default;

 private:
  int n_qubits_ = 0;
  std::map<PauliPattern, std::complex<double>> terms_;
};

/// a*b - b*a, unpruned.
PauliSum commutator(const PauliSum& a, const PauliSum& b);

/// Renders a complex coefficient deterministically, e.g. "0.25", "-0.5i",
/// "(0.5-0.25i)".
std::string format_complex(std::complex<double> c);

int pattern_weight(const PauliPattern& p);

}  // namespace fermloc
