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

// Exact state preparation by recursive disentangling with uniformly
// controlled (multiplexed) rotations, lowered to RY/RZ/CNOT via Gray codes.

#include <cstddef>
#include <span>
#include <vector>

#include "povmsim/circuit.hpp"
#include "povmsim/linalg.hpp"

namespace povmsim {

enum class RotationAxis { y, z };

/// One disentangling step: the least significant qubit of `amplitudes` is
/// rotated into |0>. For prefix b the children are (amplitudes[2b],
/// amplitudes[2b+1]) and
///   ry_angles[b] = 2 atan2(|odd|, |even|)
///   rz_angles[b] = arg(odd) - arg(even)
///   reduced[b]   = hypot(|even|, |odd|) e^{i (arg(even) + arg(odd)) / 2}
/// so RZ(rz) RY(ry) |0> scaled by reduced[b] restores both children.
struct DisentangleStep {
    std::vector<double> ry_angles;
    std::vector<double> rz_angles;
    ComplexVector reduced;
};

DisentangleStep disentangle_angles(const ComplexVector &amplitudes);

/// Gray-code lowering of a multiplexed rotation.
///
/// angles[x] is the rotation applied to `target` when the controls read x,
/// with controls[0] the most significant bit of x. Emits 2^k rotations and,
/// for k > 0, 2^k CNOTs. Throws std::invalid_argument when angles.size()
/// is not 2^k.
std::vector<Gate> decompose_multiplexor(std::span<const double> angles, RotationAxis axis,
                                        std::span<const std::size_t> controls, std::size_t target);

/// Drops rotations with |angle| < tol, then cancels CNOT pairs left adjacent
/// (CNOTs sharing a target commute, so a pair cancels anywhere inside a run
/// of such CNOTs).
std::vector<Gate> elide_identities(const std::vector<Gate> &gates, double tol = 1e-14);

/// Circuit mapping |0...0> to `target` up to the returned global phase.
///
/// Throws DimensionError unless target.dim() is a power of two, and
/// InvalidMeasurementError unless it is normalized within `tol`.
Circuit prepare_state(const ComplexVector &target, double tol = 1e-10);

}  // namespace povmsim
