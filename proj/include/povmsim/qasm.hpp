// Copyright 2026 The povmsim Authors
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

#pragma once

// OpenQASM 3.0 text for the gate subset produced by state preparation:
// ry, rz, p and cx on a single `qubit[n] q;` register. The circuit's global
// phase travels in a `// global_phase: <radians>` comment.

#include <string>
#include <string_view>

#include "povmsim/circuit.hpp"

namespace povmsim {

/// Angles are printed with 17 significant digits so doubles round-trip.
std::string circuit_to_qasm(const Circuit &c);

/// Inverse of circuit_to_qasm. Throws QasmParseError (with 1-based line and
/// column) on anything outside the emitted subset.
Circuit parse_qasm(std::string_view text);

}  // namespace povmsim
