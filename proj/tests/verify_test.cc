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

#include "fermloc/verify.hpp"

#include <cmath>

#include <gtest/gtest.h>

#include "fermloc/lattice.hpp"

namespace fermloc {
namespace {

TEST(Verification, CompleteGraphPassesEveryCheck) {
  const FermionHamiltonian h = generate_k4();
  const EncodingLayout layout = plan_layout(h, LinearOrder::natural(4));
  const VerificationReport rep = run_verification(h, layout);
  EXPECT_TRUE(rep.passed()) << rep.str();
  for (const auto& c : rep.checks) EXPECT_NE(c.status, CheckStatus::kFail);

  const CheckResult* gram = rep.find("equivalence_gram");
  ASSERT_NE(gram, nullptr);
  EXPECT_EQ(gram->status, CheckStatus::kPass);
  EXPECT_LT(gram->measured, gram->threshold);
}

TEST(Verification, ChainHasNoCouplingsAndStillPasses) {
  const FermionHamiltonian h = generate_chain(4);
  const EncodingLayout layout = plan_layout(h, LinearOrder::natural(4));
  EXPECT_TRUE(layout.couplings.couplings.empty());
  const VerificationReport rep = run_verification(h, layout);
  EXPECT_TRUE(rep.passed()) << rep.str();
}

TEST(Verification, JordanWignerPath) {
  const FermionHamiltonian h = generate_chain(5);
  const VerificationReport rep =
      run_verification_jw(h, Placement::natural(5));
  EXPECT_TRUE(rep.passed()) << rep.str();
  EXPECT_NE(rep.find("equivalence_matrix"), nullptr);
}

TEST(Verification, WideRegistersSkipStateChecks) {
  const FermionHamiltonian h = generate_hubbard(4, 4);
  const EncodingLayout layout = plan_layout(h, LinearOrder::snake(4, 4));
  VerifyOptions opt;
  opt.max_state_qubits = 10;  // force the skip on this 25-qubit register
  const VerificationReport rep = run_verification(h, layout, opt);
  EXPECT_TRUE(rep.passed()) << rep.str();
  const CheckResult* vac = rep.find("vacuum_norm");
  ASSERT_NE(vac, nullptr);
  EXPECT_EQ(vac->status, CheckStatus::kSkip);
  const CheckResult* gram = rep.find("equivalence_gram");
  ASSERT_NE(gram, nullptr);
  EXPECT_EQ(gram->status, CheckStatus::kSkip);
  // Algebraic checks still run at any width.
  const CheckResult* comm = rep.find("stabilizers_commute");
  ASSERT_NE(comm, nullptr);
  EXPECT_EQ(comm->status, CheckStatus::kPass);
}

TEST(Verification, RotatedFreeEndpointIsALegalGauge) {
  // An endpoint letter on an auxiliary that serves a single coupling can sit
  // at any angle; the construction is gauge covariant, so everything passes.
  const FermionHamiltonian h = generate_k4();
  EncodingLayout layout = plan_layout(h, LinearOrder::natural(4));
  ASSERT_EQ(layout.couplings.couplings[0].edge, (Edge{0, 2}));
  layout.couplings.couplings[0].theta_hi = 0.4;
  const VerificationReport rep = run_verification(h, layout);
  EXPECT_TRUE(rep.passed()) << rep.str();
}

TEST(Verification, CatchesTamperedSharedSlotAngle) {
  // Two couplings meet auxiliary 4 from the same side and need orthogonal
  // letters there; skewing one must surface as non-commuting stabilizers
  // rather than crash the run.
  const FermionHamiltonian h = generate_k4();
  EncodingLayout layout = plan_layout(h, LinearOrder::natural(4));
  ASSERT_EQ(layout.couplings.couplings[1].edge, (Edge{0, 3}));
  ASSERT_EQ(layout.couplings.couplings[0].aux_lo,
            layout.couplings.couplings[1].aux_lo);
  layout.couplings.couplings[1].theta_lo = 0.4;
  const VerificationReport rep = run_verification(h, layout);
  EXPECT_FALSE(rep.passed());
  const CheckResult* comm = rep.find("stabilizers_commute");
  ASSERT_NE(comm, nullptr);
  EXPECT_EQ(comm->status, CheckStatus::kFail);
}

TEST(Verification, ReportRendersOneLinePerCheck) {
  const FermionHamiltonian h = generate_chain(3);
  const VerificationReport rep =
      run_verification(h, plan_layout(h, LinearOrder::natural(3)));
  const std::string text = rep.str();
  size_t lines = 0;
  for (char ch : text) lines += ch == '\n';
  EXPECT_EQ(lines, rep.checks.size());
  EXPECT_NE(text.find("PASS"), std::string::npos);
}

}  // namespace
}  // namespace fermloc
