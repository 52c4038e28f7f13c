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

#include <cstddef>
#include <string>
#include <vector>

namespace povmsim {

enum class GateKind { ry, rz, phase, cnot };

/// RY(t) = [[cos t/2, -sin t/2], [sin t/2, cos t/2]]
/// RZ(t) = diag(e^{-it/2}, e^{it/2})
/// PHASE(t) = diag(1, e^{it})
/// CNOT flips `target` when `control` is 1.
struct Gate {
    GateKind kind = GateKind::ry;
    std::size_t target = 0;
    std::size_t control = 0;  // CNOT only
    double angle = 0;         // rotations only, radians

    static Gate ry(std::size_t target, double angle) { return {GateKind::ry, target, 0, angle}; }
    static Gate rz(std::size_t target, double angle) { return {GateKind::rz, target, 0, angle}; }
    static Gate phase(std::size_t target, double angle) { return {GateKind::phase, target, 0, angle}; }
    static Gate cnot(std::size_t control, std::size_t target) { return {GateKind::cnot, target, control, 0}; }

    bool is_rotation() const noexcept { return kind != GateKind::cnot; }
    bool operator==(const Gate &other) const = default;
};

std::string to_string(const Gate &g);

class Circuit {
   public:
    explicit Circuit(std::size_t width = 0, double global_phase = 0) : width_(width), global_phase_(global_phase) {}

    /// Throws std::invalid_argument for out-of-range qubits, a CNOT whose
    /// control equals its target, or a non-finite angle.
    void append(const Gate &g);

    std::size_t width() const noexcept { return width_; }
    const std::vector<Gate> &gates() const noexcept { return gates_; }
    double global_phase() const noexcept { return global_phase_; }
    void set_global_phase(double phase) { global_phase_ = phase; }

    std::size_t count(GateKind kind) const;
    std::size_t cnot_count() const { return count(GateKind::cnot); }

    bool operator==(const Circuit &other) const = default;

   private:
    std::size_t width_;
    double global_phase_;
    std::vector<Gate> gates_;
};

}  // namespace povmsim
