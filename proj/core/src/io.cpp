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

#include "fermloc/io.hpp"

#include <cctype>
#include <cstdio>
#include <sstream>
#include <string>
#include <vector>

namespace fermloc {

namespace {

std::string strip(const std::string& line) {
  std::string s = line.substr(0, line.find('#'));
  std::size_t begin = 0;
  while (begin < s.size() && std::isspace(static_cast<unsigned char>(s[begin]))) {
    ++begin;
  }
  std::size_t end = s.size();
  while (end > begin && std::isspace(static_cast<unsigned char>(s[end - 1]))) {
    --end;
  }
  return s.substr(begin, end - begin);
}

std::vector<std::string> split(const std::string& s) {
  std::istringstream in(s);
  std::vector<std::string> out;
  std::string tok;
  while (in >> tok) out.push_back(tok);
  return out;
}

double parse_double(const std::string& tok, int line) {
  std::size_t used = 0;
  double v = 0.0;
  try {
    v = std::stod(tok, &used);
  } catch (const std::exception&) {
    throw ParseError(line, "expected a number, got '" + tok + "'");
  }
  if (used != tok.size()) {
    throw ParseError(line, "trailing characters in number '" + tok + "'");
  }
  return v;
}

LadderOperator parse_factor(const std::string& tok, int n_modes, int line) {
  std::string digits = tok;
  bool creation = false;
  if (!digits.empty() && digits.back() == '^') {
    creation = true;
    digits.pop_back();
  }
  if (digits.empty()) {
    throw ParseError(line, "empty ladder factor");
  }
  for (char c : digits) {
    if (!std::isdigit(static_cast<unsigned char>(c))) {
      throw ParseError(line, "bad ladder factor '" + tok +
                                 "' (expected a mode index, e.g. 2 or 2^)");
    }
  }
  const long mode = std::stol(digits);
  if (mode < 0 || mode >= n_modes) {
    throw ParseError(line, "mode " + digits + " is outside [0, " +
                               std::to_string(n_modes) + ")");
  }
  return LadderOperator{static_cast<int>(mode), creation};
}

}  // namespace

ParseError::ParseError(int line, const std::string& message)
    : std::runtime_error("line " + std::to_string(line) + ": " + message),
      line_(line) {}

FermionHamiltonian parse_hamiltonian(std::istream& in) {
  FermionHamiltonian h;
  bool have_header = false;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const std::string body = strip(line);
    if (body.empty()) continue;
    const std::vector<std::string> toks = split(body);
    if (!have_header) {
      if (toks.size() != 2 || toks[0] != "modes") {
        throw ParseError(lineno, "expected the header 'modes N'");
      }
      for (char c : toks[1]) {
        if (!std::isdigit(static_cast<unsigned char>(c))) {
          throw ParseError(lineno, "bad mode count '" + toks[1] + "'");
        }
      }
      h.n_modes = static_cast<int>(std::stol(toks[1]));
      if (h.n_modes <= 0) {
        throw ParseError(lineno, "mode count must be positive");
      }
      have_header = true;
      continue;
    }
    if (toks[0] == "modes") {
      throw ParseError(lineno, "duplicate 'modes' header");
    }
    if (toks.size() < 2) {
      throw ParseError(lineno,
                       "a term needs at least 'Re Im' for its coefficient");
    }
    LadderTerm term;
    term.coefficient = {parse_double(toks[0], lineno),
                        parse_double(toks[1], lineno)};
    for (std::size_t i = 2; i < toks.size(); ++i) {
      term.factors.push_back(parse_factor(toks[i], h.n_modes, lineno));
    }
    h.terms.push_back(std::move(term));
  }
  if (!have_header) {
    throw ParseError(lineno, "missing 'modes N' header");
  }
  return h;
}

FermionHamiltonian parse_hamiltonian_text(const std::string& text) {
  std::istringstream in(text);
  return parse_hamiltonian(in);
}

std::string render_hamiltonian(const FermionHamiltonian& h) {
  std::ostringstream out;
  out << "modes " << h.n_modes << "\n";
  char buf[64];
  for (const LadderTerm& t : h.terms) {
    std::snprintf(buf, sizeof(buf), "%.17g", t.coefficient.real());
    out << buf;
    std::snprintf(buf, sizeof(buf), "%.17g", t.coefficient.imag());
    out << " " << buf;
    for (const LadderOperator& f : t.factors) {
      out << " " << f.mode << (f.creation ? "^" : "");
    }
    out << "\n";
  }
  return out.str();
}

}  // namespace fermloc
