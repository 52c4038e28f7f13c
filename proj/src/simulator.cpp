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

#include "povmsim/simulator.hpp"

#include <algorithm>
#include <bit>
#include <cmath>

#include "povmsim/errors.hpp"
#include "povmsim/rng.hpp"

namespace povmsim {

namespace {

void check_qubits(std::size_t width, std::span<const std::size_t> qubits) {
    std::vector<bool> seen(width, false);
    for (auto q : qubits) {
        if (q >= width) {
            throw DimensionError("qubit " + std::to_string(q) + " out of range for width " + std::to_string(width));
        }
        if (seen[q]) {
            throw DimensionError("qubit " + std::to_string(q) + " listed twice");
        }
        seen[q] = true;
    }
}

/// Outcome value of register index `i` read on `qubits`.
std::size_t outcome_of(std::size_t i, std::size_t width, std::span<const std::size_t> qubits) {
    std::size_t key = 0;
    for (auto q : qubits) {
        key = (key << 1) | ((i >> (width - 1 - q)) & 1U);
    }
    return key;
}

}  // namespace

StateVector::StateVector(std::size_t width) : width_(width), amplitudes_(std::size_t{1} << width) {
    amplitudes_[0] = 1.0;
}

StateVector::StateVector(ComplexVector amplitudes, double tol) : width_(0), amplitudes_(std::move(amplitudes)) {
    if (amplitudes_.dim() == 0 || !std::has_single_bit(amplitudes_.dim())) {
        throw DimensionError("state vector dimension " + std::to_string(amplitudes_.dim()) +
                             " is not a power of two");
    }
    if (!amplitudes_.is_normalized(tol)) {
        throw InvalidMeasurementError("state vector norm " + std::to_string(amplitudes_.norm()) + " is not 1");
    }
    width_ = static_cast<std::size_t>(std::countr_zero(amplitudes_.dim()));
}

void StateVector::apply(const Gate &g) {
    if (g.target >= width_ || (g.kind == GateKind::cnot && g.control >= width_)) {
        throw DimensionError("gate " + to_string(g) + " does not fit a " + std::to_string(width_) + "-qubit state");
    }
    auto amps = amplitudes_.entries();
    const std::size_t dim = amps.size();
    const std::size_t stride = std::size_t{1} << (width_ - 1 - g.target);

    switch (g.kind) {
        case GateKind::ry: {
            const double c = std::cos(g.angle / 2);
            const double s = std::sin(g.angle / 2);
            for (std::size_t block = 0; block < dim; block += 2 * stride) {
                for (std::size_t i = block; i < block + stride; i++) {
                    Complex a0 = amps[i];
                    Complex a1 = amps[i + stride];
                    amps[i] = c * a0 - s * a1;
                    amps[i + stride] = s * a0 + c * a1;
                }
            }
            break;
        }
        case GateKind::rz: {
            const Complex lo = std::polar(1.0, -g.angle / 2);
            const Complex hi = std::polar(1.0, g.angle / 2);
            for (std::size_t block = 0; block < dim; block += 2 * stride) {
                for (std::size_t i = block; i < block + stride; i++) {
                    amps[i] *= lo;
                    amps[i + stride] *= hi;
                }
            }
            break;
        }
        case GateKind::phase: {
            const Complex hi = std::polar(1.0, g.angle);
            for (std::size_t block = 0; block < dim; block += 2 * stride) {
                for (std::size_t i = block; i < block + stride; i++) {
                    amps[i + stride] *= hi;
                }
            }
            break;
        }
        case GateKind::cnot: {
            const std::size_t control_bit = std::size_t{1} << (width_ - 1 - g.control);
            for (std::size_t block = 0; block < dim; block += 2 * stride) {
                for (std::size_t i = block; i < block + stride; i++) {
                    if (i & control_bit) {
                        std::swap(amps[i], amps[i + stride]);
                    }
                }
            }
            break;
        }
    }
}

void StateVector::apply(const Circuit &c) {
    if (c.width() != width_) {
        throw DimensionError("circuit width " + std::to_string(c.width()) + " does not match state width " +
                             std::to_string(width_));
    }
    for (const auto &g : c.gates()) {
        apply(g);
    }
}

StateVector run_circuit(const Circuit &c) { return run_circuit(c, StateVector(c.width())); }

StateVector run_circuit(const Circuit &c, StateVector initial) {
    initial.apply(c);
    return initial;
}

std::string outcome_bitstring(std::size_t index, std::size_t width) {
    std::string bits(width, '0');
    for (std::size_t b = 0; b < width; b++) {
        if ((index >> (width - 1 - b)) & 1U) {
            bits[b] = '1';
        }
    }
    return bits;
}

std::vector<double> marginal_probabilities(const StateVector &s, std::span<const std::size_t> qubits) {
    check_qubits(s.width(), qubits);
    std::vector<double> probs(std::size_t{1} << qubits.size(), 0.0);
    const auto amps = s.amplitudes().entries();
    for (std::size_t i = 0; i < amps.size(); i++) {
        probs[outcome_of(i, s.width(), qubits)] += std::norm(amps[i]);
    }
    return probs;
}

ComplexMatrix reduced_density_matrix(const StateVector &s, std::span<const std::size_t> qubits) {
    check_qubits(s.width(), qubits);
    std::vector<std::size_t> rest;
    for (std::size_t q = 0; q < s.width(); q++) {
        if (std::find(qubits.begin(), qubits.end(), q) == qubits.end()) {
            rest.push_back(q);
        }
    }
    const std::size_t kept_dim = std::size_t{1} << qubits.size();
    const std::size_t rest_dim = std::size_t{1} << rest.size();
    // amps_by_rest[r][k] = amplitude with kept bits k and traced bits r.
    std::vector<std::vector<Complex>> amps_by_rest(rest_dim, std::vector<Complex>(kept_dim));
    const auto amps = s.amplitudes().entries();
    for (std::size_t i = 0; i < amps.size(); i++) {
        amps_by_rest[outcome_of(i, s.width(), rest)][outcome_of(i, s.width(), qubits)] = amps[i];
    }
    ComplexMatrix rho(kept_dim, kept_dim);
    for (const auto &branch : amps_by_rest) {
        for (std::size_t r = 0; r < kept_dim; r++) {
            if (branch[r] == Complex{}) {
                continue;
            }
            for (std::size_t c = 0; c < kept_dim; c++) {
                rho(r, c) += branch[r] * std::conj(branch[c]);
            }
        }
    }
    return rho;
}

std::vector<double> ShotRecord::frequencies() const {
    std::vector<double> f(std::size_t{1} << measured_qubits.size(), 0.0);
    if (shots == 0) {
        return f;
    }
    for (const auto &[bits, n] : counts) {
        std::size_t key = 0;
        for (char b : bits) {
            key = (key << 1) | (b == '1' ? 1U : 0U);
        }
        f[key] = static_cast<double>(n) / static_cast<double>(shots);
    }
    return f;
}

ShotRecord sample_distribution(std::span<const double> probabilities, std::span<const std::size_t> measured_qubits,
                               std::uint64_t shots, std::uint64_t seed) {
    if (shots == 0) {
        throw std::invalid_argument("shot count must be positive");
    }
    if (probabilities.size() != (std::size_t{1} << measured_qubits.size())) {
        throw DimensionError("distribution has " + std::to_string(probabilities.size()) + " entries for " +
                             std::to_string(measured_qubits.size()) + " measured qubits");
    }
    std::vector<double> cdf(probabilities.size());
    double running = 0;
    std::size_t last_nonzero = 0;
    for (std::size_t k = 0; k < probabilities.size(); k++) {
        if (probabilities[k] < 0) {
            throw InvalidMeasurementError("negative probability in sampling distribution");
        }
        running += probabilities[k];
        cdf[k] = running;
        if (probabilities[k] > 0) {
            last_nonzero = k;
        }
    }
    if (!(running > 0)) {
        throw InvalidMeasurementError("sampling distribution has no mass");
    }
    // Draw against the normalized CDF; rounding slack at the top end lands on
    // the last outcome with support.
    std::vector<std::uint64_t> tally(probabilities.size(), 0);
    Rng rng(seed);
    for (std::uint64_t shot = 0; shot < shots; shot++) {
        double u = rng.uniform() * running;
        auto it = std::upper_bound(cdf.begin(), cdf.end(), u);
        std::size_t k = it == cdf.end() ? last_nonzero : static_cast<std::size_t>(it - cdf.begin());
        tally[k]++;
    }

    ShotRecord record;
    record.shots = shots;
    record.seed = seed;
    record.measured_qubits.assign(measured_qubits.begin(), measured_qubits.end());
    for (std::size_t k = 0; k < tally.size(); k++) {
        if (tally[k] > 0) {
            record.counts[outcome_bitstring(k, measured_qubits.size())] = tally[k];
        }
    }
    return record;
}

ShotRecord sample_shots(const StateVector &s, std::span<const std::size_t> qubits, std::uint64_t shots,
                        std::uint64_t seed) {
    auto probs = marginal_probabilities(s, qubits);
    return sample_distribution(probs, qubits, shots, seed);
}

PostSelection post_select(const StateVector &s, std::span<const std::size_t> qubits, std::string_view outcome,
                          double threshold) {
    check_qubits(s.width(), qubits);
    if (outcome.size() != qubits.size()) {
        throw DimensionError("outcome '" + std::string(outcome) + "' has " + std::to_string(outcome.size()) +
                             " bits for " + std::to_string(qubits.size()) + " qubits");
    }
    std::size_t wanted = 0;
    for (char b : outcome) {
        if (b != '0' && b != '1') {
            throw DimensionError("outcome '" + std::string(outcome) + "' is not a bitstring");
        }
        wanted = (wanted << 1) | (b == '1' ? 1U : 0U);
    }
    std::vector<std::size_t> rest;
    for (std::size_t q = 0; q < s.width(); q++) {
        if (std::find(qubits.begin(), qubits.end(), q) == qubits.end()) {
            rest.push_back(q);
        }
    }
    ComplexVector conditioned(std::size_t{1} << rest.size());
    double probability = 0;
    const auto amps = s.amplitudes().entries();
    for (std::size_t i = 0; i < amps.size(); i++) {
        if (outcome_of(i, s.width(), qubits) != wanted) {
            continue;
        }
        conditioned[outcome_of(i, s.width(), rest)] = amps[i];
        probability += std::norm(amps[i]);
    }
    if (!(probability > threshold)) {
        throw ZeroProbabilityError("cannot post-select on outcome '" + std::string(outcome) + "' with probability " +
                                   std::to_string(probability));
    }
    conditioned *= 1.0 / std::sqrt(probability);
    return {StateVector(std::move(conditioned)), probability, std::move(rest)};
}

}  // namespace povmsim
