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

// Text format for fermionic Hamiltonians.
//
//   # comment
//   modes 4
//   -1.5 0 0^ 1        a term: Re(coeff) Im(coeff) then ladder factors,
//   -1.5 0 1^ 0        "k^" creates on mode k and "k" annihilates
//   0.25 0 0^ 0 1^ 1
//
// The "modes N" header must be the first effective line.

#ifndef FERMLOC_IO_HPP_
#define FERMLOC_IO_HPP_

#include <istream>
#include <stdexcept>
#include <string>

#include "fermloc/fermion.hpp"

namespace fermloc {

class ParseError : public std::runtime_error {
 public:
  ParseError(int line, const std::string& message);

  int line() const { return line_; }

 private:
  int line_;
};

FermionHamiltonian parse_hamiltonian(std::istream& in);
FermionHamiltonian parse_hamiltonian_text(const std::string& text);

// Inverse of parse_hamiltonian: coefficients keep full double precision, so
// parse(render(h)) reproduces h exactly.
std::string render_hamiltonian(const FermionHamiltonian& h);

}  // namespace fermloc

#endif  // FERMLOC_IO_HPP_
