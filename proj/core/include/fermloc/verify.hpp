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

// End-to-end verification: algebraic stabilizer checks plus brute-force
// state-space comparison against the Fock oracle, sized to the register.

#ifndef FERMLOC_VERIFY_HPP_
#define FERMLOC_VERIFY_HPP_

#include <cstdint>
#include <string>
#include <vector>

#include "fermloc/encoder.hpp"
#include "fermloc/fermion.hpp"
#include "fermloc/jw.hpp"
#include "fermloc/layout.hpp"
#include "fermloc/statevec.hpp"

namespace fermloc {

enum class CheckStatus { kPass, kFail, kSkip };

struct CheckResult {
  std::string name;
  CheckStatus status = CheckStatus::kSkip;
  std::string detail;
  double measured = 0.0;
  double threshold = 0.0;
};

struct VerifyOptions {
  Tolerances tol;
  std::uint64_t seed = 1;
  // Measured preparations sampled per verification run.
  int measured_preps = 8;
  // Occupation states sampled for preparation checks on wide registers.
  int sampled_occupations = 64;
  // Full-basis equivalence is skipped beyond this many modes.
  int max_equiv_modes = 12;
  // State-space checks are skipped beyond this many qubits.
  int max_state_qubits = 20;
};

struct VerificationReport {
  std::vector<CheckResult> checks;

  bool passed() const;
  const CheckResult* find(const std::string& name) const;
  std::string str() const;
};

// Verifies an auxiliary-encoded register: stabilizer algebra, vacuum and
// occupied-state preparation, measured preparation with corrections,
// endpoint parity storage, and full-basis equivalence where tractable.
VerificationReport run_verification(const FermionHamiltonian& h,
                                    const EncodingLayout& layout,
                                    const VerifyOptions& opt = {});

// Verifies a bare Jordan-Wigner register against the Fock oracle.
VerificationReport run_verification_jw(const FermionHamiltonian& h,
                                       const Placement& placement,
                                       const VerifyOptions& opt = {});

}  // namespace fermloc

#endif  // FERMLOC_VERIFY_HPP_
