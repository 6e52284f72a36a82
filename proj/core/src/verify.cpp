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

#include "fermloc/verify.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <stdexcept>
#include <vector>

namespace fermloc {

namespace {

std::string deviation_detail(double measured, double threshold) {
  char buf[96];
  std::snprintf(buf, sizeof(buf), "max deviation %.3g (tol %.3g)", measured,
                threshold);
  return buf;
}

CheckResult pass_fail(std::string name, double measured, double threshold,
                      std::string detail = {}) {
  CheckResult r;
  r.name = std::move(name);
  r.status = measured <= threshold ? CheckStatus::kPass : CheckStatus::kFail;
  r.detail = detail.empty() ? deviation_detail(measured, threshold)
                            : std::move(detail);
  r.measured = measured;
  r.threshold = threshold;
  return r;
}

CheckResult skipped(std::string name, std::string detail) {
  CheckResult r;
  r.name = std::move(name);
  r.status = CheckStatus::kSkip;
  r.detail = std::move(detail);
  return r;
}

const char* status_word(CheckStatus s) {
  switch (s) {
    case CheckStatus::kPass:
      return "PASS";
    case CheckStatus::kFail:
      return "FAIL";
    case CheckStatus::kSkip:
      return "SKIP";
  }
  return "????";
}

double hermiticity_deviation(const PauliSum& op) {
  PauliSum d = op.adjoint();
  d -= op;
  return d.max_abs_coefficient();
}

// Runs fn and converts a thrown exception into a FAIL entry, so a broken
// register reports instead of aborting the whole verification.
void guarded(VerificationReport& rep, const std::string& name,
             const std::function<CheckResult()>& fn) {
  try {
    rep.checks.push_back(fn());
  } catch (const std::exception& e) {
    CheckResult r;
    r.name = name;
    r.status = CheckStatus::kFail;
    r.detail = e.what();
    rep.checks.push_back(r);
  }
}

std::vector<FockState> parity_probe_occupations(int n_modes) {
  std::vector<FockState> occs;
  const std::uint64_t full = (std::uint64_t{1} << n_modes) - 1;
  occs.push_back({n_modes, full});
  for (int m = 0; m < n_modes; ++m) {
    occs.push_back({n_modes, std::uint64_t{1} << m});
  }
  std::uint64_t alternating = 0;
  for (int m = 0; m < n_modes; m += 2) alternating |= std::uint64_t{1} << m;
  occs.push_back({n_modes, alternating});
  return occs;
}

}  // namespace

bool VerificationReport::passed() const {
  return std::none_of(checks.begin(), checks.end(), [](const CheckResult& c) {
    return c.status == CheckStatus::kFail;
  });
}

const CheckResult* VerificationReport::find(const std::string& name) const {
  for (const CheckResult& c : checks) {
    if (c.name == name) return &c;
  }
  return nullptr;
}

std::string VerificationReport::str() const {
  std::size_t width = 0;
  for (const CheckResult& c : checks) width = std::max(width, c.name.size());
  std::ostringstream out;
  for (const CheckResult& c : checks) {
    out << status_word(c.status) << "  " << c.name
        << std::string(width - c.name.size() + 2, ' ') << c.detail << "\n";
  }
  return out.str();
}

VerificationReport run_verification(const FermionHamiltonian& h,
                                    const EncodingLayout& layout,
                                    const VerifyOptions& opt) {
  h.validate();
  VerificationReport rep;
  const std::vector<Stabilizer> stabs = build_stabilizers(layout);
  const EncodedHamiltonian encoded = encode_hamiltonian(h, layout);
  const int nq = layout.n_qubits();
  const Placement& pl = layout.placement.placement;

  const double herm_dev =
      hermiticity_deviation(jw_encode(h, Placement::natural(h.n_modes)));
  const bool hermitian_input = herm_dev <= opt.tol.state;
  rep.checks.push_back(pass_fail("hermitian_input", herm_dev, opt.tol.state));

  double dev = 0.0;
  for (std::size_t i = 0; i < stabs.size(); ++i) {
    for (std::size_t j = i + 1; j < stabs.size(); ++j) {
      dev = std::max(dev, commutator(stabs[i].op, stabs[j].op)
                              .max_abs_coefficient());
    }
  }
  rep.checks.push_back(pass_fail("stabilizers_commute", dev, opt.tol.state));

  dev = 0.0;
  for (const Stabilizer& s : stabs) {
    PauliSum sq = s.op * s.op;
    sq -= PauliSum::identity(nq);
    dev = std::max(dev, sq.max_abs_coefficient());
  }
  rep.checks.push_back(
      pass_fail("stabilizers_involutive", dev, opt.tol.state));

  dev = 0.0;
  for (const LadderTerm& term : h.terms) {
    const PauliSum enc_term = encode_term(term, layout, stabs);
    for (const Stabilizer& s : stabs) {
      dev = std::max(dev,
                     commutator(s.op, enc_term).max_abs_coefficient());
    }
  }
  rep.checks.push_back(
      pass_fail("stabilizers_commute_with_terms", dev, opt.tol.state));

  if (hermitian_input) {
    rep.checks.push_back(pass_fail("encoding_hermitian",
                                   hermiticity_deviation(encoded.op),
                                   opt.tol.state));
  } else {
    rep.checks.push_back(
        skipped("encoding_hermitian", "input is not hermitian"));
  }

  const bool sim_ok =
      nq <= std::min(opt.max_state_qubits, kMaxSimQubits) && h.n_modes < 63;
  if (!sim_ok) {
    const std::string why = "register too wide for state-space checks";
    for (const char* name :
         {"vacuum_norm", "vacuum_stabilized", "filled_state_stabilized",
          "measured_prep_matches_vacuum", "fast_prep_matches_slow",
          "endpoint_parity_stored"}) {
      rep.checks.push_back(skipped(name, why));
    }
  } else {
    StateVector raw = basis_state(nq, 0);
    const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
    for (const Stabilizer& s : stabs) {
      raw = (raw + act(s.op, raw)) * inv_sqrt2;
    }
    rep.checks.push_back(
        pass_fail("vacuum_norm", std::abs(raw.norm() - 1.0), opt.tol.eig));
    dev = 0.0;
    for (const Stabilizer& s : stabs) {
      dev = std::max(dev, (act(s.op, raw) - raw).lpNorm<Eigen::Infinity>());
    }
    rep.checks.push_back(pass_fail("vacuum_stabilized", dev, opt.tol.eig));

    guarded(rep, "filled_state_stabilized", [&] {
      const FockState filled{h.n_modes,
                             (std::uint64_t{1} << h.n_modes) - 1};
      const StateVector f = fast_prepare_fock(layout, stabs, filled);
      double d = 0.0;
      for (const Stabilizer& s : stabs) {
        d = std::max(d, (act(s.op, f) - f).lpNorm<Eigen::Infinity>());
      }
      return pass_fail("filled_state_stabilized", d, opt.tol.eig);
    });

    guarded(rep, "measured_prep_matches_vacuum", [&] {
      const StateVector vac = vacuum_state(layout, stabs);
      double d = 0.0;
      int flips = 0;
      for (int k = 0; k < opt.measured_preps; ++k) {
        const MeasuredPrepResult r =
            measured_prepare(layout, stabs, opt.seed + k);
        d = std::max(d, std::abs(1.0 - fidelity(r.state, vac)));
        for (int o : r.outcomes) flips += o < 0 ? 1 : 0;
      }
      char buf[128];
      std::snprintf(buf, sizeof(buf),
                    "%d preparations, %d corrected outcomes, %s",
                    opt.measured_preps, flips,
                    deviation_detail(d, opt.tol.eig).c_str());
      return pass_fail("measured_prep_matches_vacuum", d, opt.tol.eig, buf);
    });

    guarded(rep, "fast_prep_matches_slow", [&] {
      std::vector<std::uint64_t> occs;
      if (h.n_modes <= 10) {
        for (std::uint64_t b = 0; b < (std::uint64_t{1} << h.n_modes); ++b) {
          occs.push_back(b);
        }
      } else {
        std::mt19937_64 rng(opt.seed);
        for (int k = 0; k < opt.sampled_occupations; ++k) {
          occs.push_back(rng() & ((std::uint64_t{1} << h.n_modes) - 1));
        }
      }
      double d = 0.0;
      for (std::uint64_t bits : occs) {
        const FockState occ{h.n_modes, bits};
        const StateVector slow = prepare_fock(layout, stabs, occ);
        const StateVector fast = fast_prepare_fock(layout, stabs, occ);
        d = std::max(d, std::abs(1.0 - fidelity(fast, slow)));
      }
      char buf[96];
      std::snprintf(buf, sizeof(buf), "%zu occupations, %s", occs.size(),
                    deviation_detail(d, opt.tol.eig).c_str());
      return pass_fail("fast_prep_matches_slow", d, opt.tol.eig, buf);
    });

    guarded(rep, "endpoint_parity_stored", [&] {
      const StateVector vac = vacuum_state(layout, stabs);
      const int base = layout.placement.n_original;
      double d = 0.0;
      for (const Coupling& c : layout.couplings.couplings) {
        const int host_lo = layout.placement.aux_host[c.aux_lo - base];
        const int host_hi = layout.placement.aux_host[c.aux_hi - base];
        for (const FockState& occ : parity_probe_occupations(h.n_modes)) {
          const StateVector prepared = prepare_fock(layout, stabs, occ);
          int sigma_lo = 1;
          int sigma_hi = 1;
          for (int m = 0; m < h.n_modes; ++m) {
            if (!occ.occupied(m)) continue;
            if (layout.order.position[m] > layout.order.position[host_lo]) {
              sigma_lo = -sigma_lo;
            }
            if (layout.order.position[m] > layout.order.position[host_hi]) {
              sigma_hi = -sigma_hi;
            }
          }
          for (int s : {1, -1}) {
            for (int t : {1, -1}) {
              const double pn =
                  joint_letter_probability(prepared, c, pl, s, t);
              const double pv = joint_letter_probability(
                  vac, c, pl, s * sigma_lo, t * sigma_hi);
              d = std::max(d, std::abs(pn - pv));
            }
          }
        }
      }
      return pass_fail("endpoint_parity_stored", d, opt.tol.eig);
    });
  }

  const bool equiv_ok =
      h.n_modes <= std::min(opt.max_equiv_modes, 12) &&
      nq <= kMaxSimQubits &&
      (std::uint64_t{1} << h.n_modes) * (std::uint64_t{1} << nq) <=
          (std::uint64_t{1} << 26);
  if (!equiv_ok) {
    const std::string why = "register too wide for brute-force equivalence";
    rep.checks.push_back(skipped("equivalence_gram", why));
    rep.checks.push_back(skipped("equivalence_matrix", why));
    rep.checks.push_back(skipped("equivalence_spectrum", why));
  } else {
    EquivalenceReport eq;
    bool eq_failed = false;
    try {
      eq = equivalence_check(h, encoded);
    } catch (const std::exception& e) {
      eq_failed = true;
      for (const char* name :
           {"equivalence_gram", "equivalence_matrix", "equivalence_spectrum"}) {
        CheckResult r;
        r.name = name;
        r.status = CheckStatus::kFail;
        r.detail = e.what();
        rep.checks.push_back(r);
      }
    }
    if (!eq_failed) {
      char dims[96];
      std::snprintf(dims, sizeof(dims), "Fock dimension %d on %d qubits, ",
                    eq.fock_dim, eq.n_qubits);
      rep.checks.push_back(pass_fail(
          "equivalence_gram", eq.gram_dev, opt.tol.state,
          dims + deviation_detail(eq.gram_dev, opt.tol.state)));
      rep.checks.push_back(
          pass_fail("equivalence_matrix", eq.matrix_dev, opt.tol.matrix));
      if (hermitian_input) {
        rep.checks.push_back(
            pass_fail("equivalence_spectrum", eq.spectrum_dev, opt.tol.eig));
      } else {
        rep.checks.push_back(
            skipped("equivalence_spectrum", "input is not hermitian"));
      }
    }
  }

  {
    CheckResult info;
    info.name = "code_space";
    info.status = CheckStatus::kPass;
    const int k = nq - static_cast<int>(stabs.size());
    char buf[96];
    std::snprintf(buf, sizeof(buf),
                  "%d qubits, %zu stabilizers: code dimension 2^%d", nq,
                  stabs.size(), k);
    info.detail = buf;
    info.measured = k;
    rep.checks.push_back(info);
  }

  return rep;
}

VerificationReport run_verification_jw(const FermionHamiltonian& h,
                                       const Placement& placement,
                                       const VerifyOptions& opt) {
  h.validate();
  VerificationReport rep;
  const PauliSum op = jw_encode(h, placement);
  const double herm_dev = hermiticity_deviation(op);
  const bool hermitian_input = herm_dev <= opt.tol.state;
  rep.checks.push_back(pass_fail("hermitian_input", herm_dev, opt.tol.state));

  const int nq = placement.n_qubits();
  const bool equiv_ok =
      h.n_modes <= std::min(opt.max_equiv_modes, 12) &&
      nq <= kMaxSimQubits &&
      (std::uint64_t{1} << h.n_modes) * (std::uint64_t{1} << nq) <=
          (std::uint64_t{1} << 26);
  if (!equiv_ok) {
    const std::string why = "register too wide for brute-force equivalence";
    rep.checks.push_back(skipped("equivalence_gram", why));
    rep.checks.push_back(skipped("equivalence_matrix", why));
    rep.checks.push_back(skipped("equivalence_spectrum", why));
    return rep;
  }
  const EquivalenceReport eq = equivalence_check_jw(h, op, placement);
  char dims[96];
  std::snprintf(dims, sizeof(dims), "Fock dimension %d on %d qubits, ",
                eq.fock_dim, eq.n_qubits);
  rep.checks.push_back(
      pass_fail("equivalence_gram", eq.gram_dev, opt.tol.state,
                dims + deviation_detail(eq.gram_dev, opt.tol.state)));
  rep.checks.push_back(
      pass_fail("equivalence_matrix", eq.matrix_dev, opt.tol.matrix));
  if (hermitian_input) {
    rep.checks.push_back(
        pass_fail("equivalence_spectrum", eq.spectrum_dev, opt.tol.eig));
  } else {
    rep.checks.push_back(
        skipped("equivalence_spectrum", "input is not hermitian"));
  }
  return rep;
}

}  // namespace fermloc
