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

#include "povmsim/dilation.hpp"

#include <algorithm>
#include <bit>

#include "povmsim/errors.hpp"

namespace povmsim {

namespace {

void require_state(const ComplexVector &psi0, std::size_t dim) {
    if (psi0.dim() != dim) {
        throw DimensionError("input state has dimension " + std::to_string(psi0.dim()) +
                             ", operators act on dimension " + std::to_string(dim));
    }
    if (!psi0.is_normalized(kStateTolerance)) {
        throw InvalidMeasurementError("input state is not normalized (norm " + std::to_string(psi0.norm()) + ")");
    }
}

}  // namespace

JointState joint_state(const Povm &p, const ComplexVector &psi0, CompletenessCheck check) {
    if (check == CompletenessCheck::required) {
        require_valid(p);
    }
    require_state(psi0, p.dim());
    const std::size_t n = p.size();
    JointState out{ComplexVector(p.dim() * n), {p.dim(), n}};
    for (std::size_t j = 0; j < n; j++) {
        ComplexVector branch = p[j] * psi0;
        for (std::size_t a = 0; a < p.dim(); a++) {
            out.vector[a * n + j] = branch[a];
        }
    }
    return out;
}

JointState instrument_purification(const QuantumInstrument &instr, const ComplexVector &psi0,
                                   CompletenessCheck check) {
    if (check == CompletenessCheck::required) {
        require_valid(povm_from_instrument(instr));
    }
    require_state(psi0, instr.dim());
    const std::size_t d = instr.dim();
    const std::size_t nb = instr.branch_count();
    const std::size_t nk = instr.max_kraus_count();
    JointState out{ComplexVector(d * nb * nk * nb), {d, nb, nk, nb}};
    for (std::size_t j = 0; j < nb; j++) {
        for (std::size_t k = 0; k < instr.branch(j).size(); k++) {
            ComplexVector branch = instr.branch(j)[k] * psi0;
            for (std::size_t a = 0; a < d; a++) {
                out.vector[((a * nb + j) * nk + k) * nb + j] = branch[a];
            }
        }
    }
    return out;
}

ComplexMatrix isometry_matrix(const Povm &p) {
    require_valid(p);
    const std::size_t n = p.size();
    ComplexMatrix v(p.dim() * n, p.dim());
    for (std::size_t j = 0; j < n; j++) {
        for (std::size_t a = 0; a < p.dim(); a++) {
            for (std::size_t k = 0; k < p.dim(); k++) {
                v(a * n + j, k) = p[j](a, k);
            }
        }
    }
    return v;
}

std::size_t qubits_for_levels(std::size_t d) {
    if (d == 0) {
        throw DimensionError("subsystem dimension must be positive");
    }
    return static_cast<std::size_t>(std::bit_width(d - 1));
}

QuditEncoding::QuditEncoding(std::vector<std::size_t> dims) : dims_(std::move(dims)) {
    for (auto d : dims_) {
        qubits_.push_back(qubits_for_levels(d));
        total_qubits_ += qubits_.back();
        level_count_ *= d;
    }
}

std::vector<std::size_t> QuditEncoding::subsystem_qubits(std::size_t subsystem) const {
    if (subsystem >= dims_.size()) {
        throw DimensionError("subsystem " + std::to_string(subsystem) + " out of range");
    }
    std::size_t first = 0;
    for (std::size_t s = 0; s < subsystem; s++) {
        first += qubits_[s];
    }
    std::vector<std::size_t> out(qubits_[subsystem]);
    for (std::size_t i = 0; i < out.size(); i++) {
        out[i] = first + i;
    }
    return out;
}

std::string QuditEncoding::level_bits(std::size_t subsystem, std::size_t level) const {
    if (subsystem >= dims_.size() || level >= dims_[subsystem]) {
        throw DimensionError("level " + std::to_string(level) + " out of range for subsystem " +
                             std::to_string(subsystem));
    }
    const std::size_t q = qubits_[subsystem];
    std::string bits(q, '0');
    for (std::size_t i = 0; i < q; i++) {
        if ((level >> (q - 1 - i)) & 1U) {
            bits[i] = '1';
        }
    }
    return bits;
}

std::size_t QuditEncoding::encode_index(std::size_t flat_index) const {
    std::size_t out = 0;
    std::size_t shift = 0;
    for (std::size_t s = dims_.size(); s-- > 0;) {
        std::size_t level = flat_index % dims_[s];
        flat_index /= dims_[s];
        out |= level << shift;
        shift += qubits_[s];
    }
    return out;
}

std::optional<std::size_t> QuditEncoding::decode_index(std::size_t register_index) const {
    std::size_t flat = 0;
    std::size_t scale = 1;
    for (std::size_t s = dims_.size(); s-- > 0;) {
        std::size_t level = register_index & ((std::size_t{1} << qubits_[s]) - 1);
        register_index >>= qubits_[s];
        if (level >= dims_[s]) {
            return std::nullopt;
        }
        flat += level * scale;
        scale *= dims_[s];
    }
    return flat;
}

EncodedState encode_to_qubits(const JointState &s) {
    QuditEncoding enc(s.dims);
    if (enc.level_count() != s.vector.dim()) {
        throw DimensionError("joint state of dimension " + std::to_string(s.vector.dim()) +
                             " does not match its subsystem dims");
    }
    ComplexVector amps(std::size_t{1} << enc.total_qubits());
    for (std::size_t i = 0; i < s.vector.dim(); i++) {
        amps[enc.encode_index(i)] = s.vector[i];
    }
    return {std::move(amps), std::move(enc)};
}

JointState decode_from_qubits(const EncodedState &s, double tol) {
    const auto &enc = s.encoding;
    if (s.amplitudes.dim() != (std::size_t{1} << enc.total_qubits())) {
        throw DimensionError("register size does not match encoding");
    }
    JointState out{ComplexVector(enc.level_count()), enc.dims()};
    for (std::size_t r = 0; r < s.amplitudes.dim(); r++) {
        auto flat = enc.decode_index(r);
        if (flat) {
            out.vector[*flat] = s.amplitudes[r];
        } else if (std::abs(s.amplitudes[r]) > tol) {
            throw DimensionError("register amplitude " + std::to_string(r) + " lies outside the qudit encoding");
        }
    }
    return out;
}

ComplexVector permute_qubits(const ComplexVector &amplitudes, const std::vector<std::size_t> &order) {
    const std::size_t n = order.size();
    if (amplitudes.dim() != (std::size_t{1} << n)) {
        throw DimensionError("qubit order has " + std::to_string(n) + " entries for a register of dimension " +
                             std::to_string(amplitudes.dim()));
    }
    std::vector<bool> seen(n, false);
    for (auto q : order) {
        if (q >= n || seen[q]) {
            throw DimensionError("qubit order is not a permutation");
        }
        seen[q] = true;
    }
    ComplexVector out(amplitudes.dim());
    for (std::size_t i = 0; i < amplitudes.dim(); i++) {
        std::size_t j = 0;
        for (std::size_t q = 0; q < n; q++) {
            if ((i >> (n - 1 - q)) & 1U) {
                j |= std::size_t{1} << (n - 1 - order[q]);
            }
        }
        out[j] = amplitudes[i];
    }
    return out;
}

}  // namespace povmsim
