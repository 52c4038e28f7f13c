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

#include "povmsim/state_prep.hpp"

#include <bit>
#include <cmath>
#include <stdexcept>
#include <string>

#include "povmsim/errors.hpp"

namespace povmsim {

namespace {

Gate rotation(RotationAxis axis, std::size_t target, double angle) {
    return axis == RotationAxis::y ? Gate::ry(target, angle) : Gate::rz(target, angle);
}

void walsh_hadamard(std::vector<double> &v) {
    for (std::size_t half = 1; half < v.size(); half <<= 1) {
        for (std::size_t i = 0; i < v.size(); i += 2 * half) {
            for (std::size_t j = i; j < i + half; j++) {
                double a = v[j];
                double b = v[j + half];
                v[j] = a + b;
                v[j + half] = a - b;
            }
        }
    }
}

}  // namespace

DisentangleStep disentangle_angles(const ComplexVector &amplitudes) {
    const std::size_t dim = amplitudes.dim();
    if (dim < 2 || !std::has_single_bit(dim)) {
        throw DimensionError("disentangle_angles needs a 2^n vector with n >= 1, got dimension " +
                             std::to_string(dim));
    }
    const std::size_t half = dim / 2;
    DisentangleStep step{std::vector<double>(half), std::vector<double>(half), ComplexVector(half)};
    for (std::size_t b = 0; b < half; b++) {
        Complex even = amplitudes[2 * b];
        Complex odd = amplitudes[2 * b + 1];
        double r_even = std::abs(even);
        double r_odd = std::abs(odd);
        double phase_even = std::arg(even);
        double phase_odd = std::arg(odd);
        step.ry_angles[b] = 2 * std::atan2(r_odd, r_even);
        step.rz_angles[b] = phase_odd - phase_even;
        step.reduced[b] = std::polar(std::hypot(r_even, r_odd), (phase_even + phase_odd) / 2);
    }
    return step;
}

std::vector<Gate> decompose_multiplexor(std::span<const double> angles, RotationAxis axis,
                                        std::span<const std::size_t> controls, std::size_t target) {
    const std::size_t k = controls.size();
    const std::size_t count = std::size_t{1} << k;
    if (angles.size() != count) {
        throw std::invalid_argument("multiplexor with " + std::to_string(k) + " controls needs " +
                                    std::to_string(count) + " angles, got " + std::to_string(angles.size()));
    }
    if (k == 0) {
        return {rotation(axis, target, angles[0])};
    }
    std::vector<double> spectrum(angles.begin(), angles.end());
    walsh_hadamard(spectrum);

    std::vector<Gate> gates;
    gates.reserve(2 * count);
    const double scale = 1.0 / static_cast<double>(count);
    for (std::size_t i = 0; i < count; i++) {
        std::size_t gray = i ^ (i >> 1);
        gates.push_back(rotation(axis, target, spectrum[gray] * scale));
        // Bit flipped between gray(i) and gray(i + 1), wrapping back to 0.
        std::size_t bit = (i + 1 == count) ? k - 1 : static_cast<std::size_t>(std::countr_zero(i + 1));
        gates.push_back(Gate::cnot(controls[k - 1 - bit], target));
    }
    return gates;
}

std::vector<Gate> elide_identities(const std::vector<Gate> &gates, double tol) {
    std::vector<Gate> out;
    out.reserve(gates.size());
    for (const auto &g : gates) {
        if (g.is_rotation()) {
            if (std::abs(g.angle) >= tol) {
                out.push_back(g);
            }
            continue;
        }
        bool cancelled = false;
        for (std::size_t i = out.size(); i-- > 0;) {
            const Gate &prev = out[i];
            if (prev.kind != GateKind::cnot || prev.target != g.target) {
                break;
            }
            if (prev.control == g.control) {
                out.erase(out.begin() + static_cast<std::ptrdiff_t>(i));
                cancelled = true;
                break;
            }
        }
        if (!cancelled) {
            out.push_back(g);
        }
    }
    return out;
}

Circuit prepare_state(const ComplexVector &target, double tol) {
    const std::size_t dim = target.dim();
    if (dim == 0 || !std::has_single_bit(dim)) {
        throw DimensionError("state preparation needs a power-of-two dimension, got " + std::to_string(dim));
    }
    if (!target.is_normalized(tol)) {
        throw InvalidMeasurementError("state preparation target is not normalized (norm " +
                                      std::to_string(target.norm()) + ")");
    }
    const auto width = static_cast<std::size_t>(std::countr_zero(dim));

    // steps[q] disentangles qubit q; computed from qubit width-1 upward.
    std::vector<DisentangleStep> steps(width);
    ComplexVector current = target;
    for (std::size_t q = width; q-- > 0;) {
        steps[q] = disentangle_angles(current);
        current = steps[q].reduced;
    }

    std::vector<Gate> gates;
    std::vector<std::size_t> controls;
    for (std::size_t q = 0; q < width; q++) {
        for (auto &g : decompose_multiplexor(steps[q].ry_angles, RotationAxis::y, controls, q)) {
            gates.push_back(g);
        }
        for (auto &g : decompose_multiplexor(steps[q].rz_angles, RotationAxis::z, controls, q)) {
            gates.push_back(g);
        }
        controls.push_back(q);
    }

    Circuit circuit(width, std::arg(current[0]));
    for (const auto &g : elide_identities(gates)) {
        circuit.append(g);
    }
    return circuit;
}

}  // namespace povmsim
