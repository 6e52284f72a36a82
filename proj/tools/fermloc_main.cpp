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

// Command line front end.  Exit codes: 0 success, 1 usage or parse errors,
// 2 verification failure, 3 infeasible layout.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "fermloc/encoder.hpp"
#include "fermloc/fermion.hpp"
#include "fermloc/io.hpp"
#include "fermloc/json_io.hpp"
#include "fermloc/jw.hpp"
#include "fermloc/lattice.hpp"
#include "fermloc/layout.hpp"
#include "fermloc/pauli.hpp"
#include "fermloc/verify.hpp"

namespace {

using namespace fermloc;

struct Options {
  std::string input;
  std::string generate;
  std::string encoding = "aux";
  std::string order = "natural";
  std::string gauge;
  std::string format = "json";
  std::string output;
  bool add_hc = false;
  double tol_state = 1e-12;
  double tol_matrix = 1e-10;
  double tol_eig = 1e-9;
  std::uint64_t seed = 1;
};

std::vector<std::string> split_on(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string piece;
  std::istringstream in(s);
  while (std::getline(in, piece, sep)) out.push_back(piece);
  return out;
}

int parse_int(const std::string& tok, const std::string& what) {
  try {
    std::size_t used = 0;
    const int v = std::stoi(tok, &used);
    if (used != tok.size()) throw std::invalid_argument(tok);
    return v;
  } catch (const std::exception&) {
    throw std::invalid_argument("bad " + what + " '" + tok + "'");
  }
}

FermionHamiltonian from_generator(const std::string& spec) {
  const std::vector<std::string> parts = split_on(spec, ':');
  if (parts[0] == "k4" && parts.size() == 1) return generate_k4();
  if (parts[0] == "chain" && parts.size() == 2) {
    return generate_chain(parse_int(parts[1], "chain size"));
  }
  if (parts[0] == "hubbard" && parts.size() == 2) {
    const std::vector<std::string> dims = split_on(parts[1], 'x');
    if (dims.size() == 2) {
      return generate_hubbard(parse_int(dims[0], "grid rows"),
                              parse_int(dims[1], "grid cols"));
    }
  }
  throw std::invalid_argument(
      "unknown generator '" + spec +
      "' (expected k4, chain:N, or hubbard:RxC)");
}

FermionHamiltonian load_hamiltonian(const Options& opt) {
  if (!opt.generate.empty() && !opt.input.empty()) {
    throw std::invalid_argument("give either --input or --generate, not both");
  }
  FermionHamiltonian h;
  if (!opt.generate.empty()) {
    h = from_generator(opt.generate);
  } else if (opt.input == "-") {
    h = parse_hamiltonian(std::cin);
  } else if (!opt.input.empty()) {
    std::ifstream in(opt.input);
    if (!in) {
      throw std::invalid_argument("cannot open '" + opt.input + "'");
    }
    h = parse_hamiltonian(in);
  } else {
    throw std::invalid_argument("no input: pass --input FILE or --generate");
  }
  if (opt.add_hc) h = hermitian_closure(h);
  return h;
}

LinearOrder make_order(const std::string& spec, int n_modes) {
  if (spec == "natural") return LinearOrder::natural(n_modes);
  if (spec.rfind("snake:", 0) == 0) {
    const std::vector<std::string> dims = split_on(spec.substr(6), 'x');
    if (dims.size() != 2) {
      throw std::invalid_argument("bad --order '" + spec +
                                  "' (expected snake:RxC)");
    }
    const int rows = parse_int(dims[0], "snake rows");
    const int cols = parse_int(dims[1], "snake cols");
    if (rows * cols != n_modes) {
      throw std::invalid_argument("snake grid does not cover " +
                                  std::to_string(n_modes) + " modes");
    }
    return LinearOrder::snake(rows, cols);
  }
  std::vector<int> seq;
  for (const std::string& tok : split_on(spec, ',')) {
    seq.push_back(parse_int(tok, "--order entry"));
  }
  if (static_cast<int>(seq.size()) != n_modes) {
    throw std::invalid_argument("--order lists " +
                                std::to_string(seq.size()) + " modes, input has " +
                                std::to_string(n_modes));
  }
  return LinearOrder::from_sequence(seq);
}

std::optional<std::vector<double>> make_gauge(const std::string& spec) {
  if (spec.empty()) return std::nullopt;
  std::vector<double> out;
  for (const std::string& tok : split_on(spec, ',')) {
    try {
      std::size_t used = 0;
      out.push_back(std::stod(tok, &used));
      if (used != tok.size()) throw std::invalid_argument(tok);
    } catch (const std::exception&) {
      throw std::invalid_argument("bad --gauge angle '" + tok + "'");
    }
  }
  return out;
}

void emit(const Options& opt, const std::string& text) {
  std::string body = text;
  if (body.empty() || body.back() != '\n') body += '\n';
  if (opt.output.empty()) {
    std::cout << body;
    return;
  }
  std::ofstream out(opt.output);
  if (!out) {
    throw std::invalid_argument("cannot write '" + opt.output + "'");
  }
  out << body;
}

std::string mode_map_text(const AuxPlacement& aux) {
  std::ostringstream out;
  const Placement& pl = aux.placement;
  for (int q = 0; q < pl.n_qubits(); ++q) {
    const int m = pl.qubit_to_mode[q];
    out << "q" << q << " ";
    if (aux.is_aux(m)) {
      out << "aux " << m << " (host " << aux.aux_host[m - aux.n_original]
          << ")";
    } else {
      out << "mode " << m;
    }
    out << "\n";
  }
  return out.str();
}

std::string encoded_text(const EncodedHamiltonian& enc) {
  std::ostringstream out;
  out << "qubits " << enc.n_qubits() << "\n";
  out << mode_map_text(enc.layout.placement);
  for (const Stabilizer& s : enc.stabilizers) {
    out << "stabilizer (" << s.coupling.edge.a << "," << s.coupling.edge.b
        << ") = ";
    try {
      out << s.single_string().str() << "\n";
    } catch (const std::domain_error&) {
      out << "\n" << s.op.str();
    }
  }
  out << "terms:\n" << enc.op.str();
  return out.str();
}

std::string jw_text(const PauliSum& op, const Placement& pl) {
  std::ostringstream out;
  out << "qubits " << pl.n_qubits() << "\n";
  for (int q = 0; q < pl.n_qubits(); ++q) {
    out << "q" << q << " mode " << pl.qubit_to_mode[q] << "\n";
  }
  out << "terms:\n" << op.str();
  return out.str();
}

std::string layout_text(const EncodingLayout& layout) {
  std::ostringstream out;
  out << "order:";
  for (int m : layout.order.sequence) out << " " << m;
  out << "\nqubits " << layout.n_qubits() << "\n";
  out << mode_map_text(layout.placement);
  out << "nonlocal edges:";
  for (const Edge& e : layout.nonlocal) {
    out << " (" << e.a << "," << e.b << ")";
  }
  out << "\n";
  for (const Coupling& c : layout.couplings.couplings) {
    out << "coupling (" << c.edge.a << "," << c.edge.b << ") anchors ("
        << c.anchor_lo << "," << c.anchor_hi << ") aux (" << c.aux_lo << ","
        << c.aux_hi << ") theta (" << c.theta_lo << "," << c.theta_hi
        << ")\n";
  }
  return out.str();
}

std::string stats_text(const std::map<std::string, TermClassStats>& stats,
                       const PauliSum& op) {
  std::ostringstream out;
  for (const auto& [name, s] : stats) {
    out << name << ": count " << s.count << ", max weight " << s.max_weight
        << ", mean weight " << s.mean_weight() << "\n";
  }
  out << "total strings " << op.terms().size() << ", max weight "
      << op.max_weight() << "\n";
  return out.str();
}

int run_encode(const Options& opt) {
  const FermionHamiltonian h = load_hamiltonian(opt);
  const LinearOrder order = make_order(opt.order, h.n_modes);
  if (opt.encoding == "jw") {
    const Placement pl = Placement::from_order(order.sequence);
    PauliSum op = jw_encode(h, pl);
    emit(opt, opt.format == "json" ? jw_encoded_to_json(h, op, pl, order)
                                   : jw_text(op, pl));
    return 0;
  }
  const auto gauge = make_gauge(opt.gauge);
  const EncodingLayout layout =
      plan_layout(h, order, gauge ? &*gauge : nullptr);
  const EncodedHamiltonian enc = encode_hamiltonian(h, layout);
  emit(opt, opt.format == "json" ? encoded_to_json(enc) : encoded_text(enc));
  return 0;
}

int run_layout(const Options& opt) {
  const FermionHamiltonian h = load_hamiltonian(opt);
  const LinearOrder order = make_order(opt.order, h.n_modes);
  const auto gauge = make_gauge(opt.gauge);
  const EncodingLayout layout =
      plan_layout(h, order, gauge ? &*gauge : nullptr);
  emit(opt, opt.format == "json" ? layout_to_json(layout)
                                 : layout_text(layout));
  return 0;
}

int run_verify(const Options& opt) {
  const FermionHamiltonian h = load_hamiltonian(opt);
  const LinearOrder order = make_order(opt.order, h.n_modes);
  VerifyOptions vopt;
  vopt.tol.state = opt.tol_state;
  vopt.tol.matrix = opt.tol_matrix;
  vopt.tol.eig = opt.tol_eig;
  vopt.seed = opt.seed;
  VerificationReport rep;
  if (opt.encoding == "jw") {
    rep = run_verification_jw(h, Placement::from_order(order.sequence), vopt);
  } else {
    const auto gauge = make_gauge(opt.gauge);
    const EncodingLayout layout =
        plan_layout(h, order, gauge ? &*gauge : nullptr);
    rep = run_verification(h, layout, vopt);
  }
  emit(opt, opt.format == "json" ? report_to_json(rep) : rep.str());
  return rep.passed() ? 0 : 2;
}

int run_stats(const Options& opt) {
  const FermionHamiltonian h = load_hamiltonian(opt);
  const LinearOrder order = make_order(opt.order, h.n_modes);
  if (opt.encoding == "jw") {
    const Placement pl = Placement::from_order(order.sequence);
    const PauliSum op = jw_encode(h, pl);
    const auto stats = jw_stats(h, pl, order);
    emit(opt, opt.format == "json" ? stats_to_json(stats, op)
                                   : stats_text(stats, op));
    return 0;
  }
  const auto gauge = make_gauge(opt.gauge);
  const EncodingLayout layout =
      plan_layout(h, order, gauge ? &*gauge : nullptr);
  const EncodedHamiltonian enc = encode_hamiltonian(h, layout);
  emit(opt, opt.format == "json" ? stats_to_json(enc.stats, enc.op)
                                 : stats_text(enc.stats, enc.op));
  return 0;
}

void add_common(CLI::App* cmd, Options& opt, bool with_encoding,
                bool with_gauge) {
  cmd->add_option("-i,--input", opt.input,
                  "Hamiltonian file in the text format ('-' for stdin)");
  cmd->add_option("--generate", opt.generate,
                  "Built-in model: k4, chain:N, or hubbard:RxC");
  cmd->add_option("--order", opt.order,
                  "Backbone order: natural, snake:RxC, or a comma list");
  if (with_encoding) {
    cmd->add_option("--encoding", opt.encoding, "Target encoding")
        ->check(CLI::IsMember({"jw", "aux"}));
  }
  if (with_gauge) {
    cmd->add_option("--gauge", opt.gauge,
                    "Comma list of endpoint angles, two per nonlocal edge");
  }
  cmd->add_flag("--add-hc", opt.add_hc,
                "Close the input under hermitian conjugation");
  cmd->add_option("--format", opt.format, "Output format")
      ->check(CLI::IsMember({"json", "text"}));
  cmd->add_option("-o,--output", opt.output, "Write the result to a file");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "fermloc: maps fermionic lattice Hamiltonians onto qubit operators,\n"
      "keeping nonlocal hopping terms local with stabilized auxiliary modes"};
  app.require_subcommand(1);
  Options opt;

  CLI::App* encode = app.add_subcommand(
      "encode", "Translate a Hamiltonian into Pauli strings");
  add_common(encode, opt, true, true);

  CLI::App* layout = app.add_subcommand(
      "layout", "Plan auxiliary placement and couplings only");
  add_common(layout, opt, false, true);

  CLI::App* verify = app.add_subcommand(
      "verify", "Encode, then brute-force check against the Fock oracle");
  add_common(verify, opt, true, true);
  verify->add_option("--seed", opt.seed, "Seed for measured preparations");
  verify->add_option("--tol-state", opt.tol_state,
                     "State and algebra tolerance");
  verify->add_option("--tol-matrix", opt.tol_matrix,
                     "Matrix element tolerance");
  verify->add_option("--tol-eig", opt.tol_eig, "Spectrum tolerance");

  CLI::App* stats = app.add_subcommand(
      "stats", "Report encoded term counts and Pauli weights");
  add_common(stats, opt, true, true);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  try {
    if (encode->parsed()) return run_encode(opt);
    if (layout->parsed()) return run_layout(opt);
    if (verify->parsed()) return run_verify(opt);
    return run_stats(opt);
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return 1;
  } catch (const InfeasibleLayoutError& e) {
    std::cerr << "infeasible layout: " << e.what() << "\n";
    return 3;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
