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

// JSON renderings of encodings, layouts, and verification reports.  Keys
// are emitted in sorted order and numbers round-trip, so re-serializing a
// result is byte stable.

#ifndef FERMLOC_JSON_IO_HPP_
#define FERMLOC_JSON_IO_HPP_

#include <map>
#include <string>

#include "fermloc/encoder.hpp"
#include "fermloc/fermion.hpp"
#include "fermloc/jw.hpp"
#include "fermloc/layout.hpp"
#include "fermloc/verify.hpp"

namespace fermloc {

std::string encoded_to_json(const EncodedHamiltonian& encoded,
                            int indent = 2);

// Same schema as encoded_to_json with no auxiliaries and no stabilizers.
std::string jw_encoded_to_json(const FermionHamiltonian& h,
                               const PauliSum& op, const Placement& placement,
                               const LinearOrder& order, int indent = 2);

std::string layout_to_json(const EncodingLayout& layout, int indent = 2);

std::string report_to_json(const VerificationReport& report, int indent = 2);

// The stats object alone, as emitted inside encoded_to_json.
std::string stats_to_json(const std::map<std::string, TermClassStats>& stats,
                          const PauliSum& op, int indent = 2);

}  // namespace fermloc

#endif  // FERMLOC_JSON_IO_HPP_
