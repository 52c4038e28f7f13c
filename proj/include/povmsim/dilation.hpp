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

// Joint system-ancilla states that realize a POVM or instrument once the
// ancilla is measured projectively, plus the qudit -> qubit register layout.

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "povmsim/linalg.hpp"
#include "povmsim/povm.hpp"

namespace povmsim {

/// A pure state over subsystems of the given dimensions (tensor order).
/// For a POVM dilation dims = {d_A, n}; for an instrument purification
/// dims = {d_A, n_branches, max_kraus, n_branches} (A, J, E_j, E_J).
struct JointState {
    ComplexVector vector;
    std::vector<std::size_t> dims;
};

enum class CompletenessCheck { required, skipped };

/// sum_j (M_j |psi0>) (x) |j>_B, so the amplitude at (a, j) is <a|M_j|psi0>.
///
/// The POVM must pass validate_completeness unless `check` is `skipped`, in
/// which case the unnormalized vector is returned as-is.
JointState joint_state(const Povm &p, const ComplexVector &psi0,
                       CompletenessCheck check = CompletenessCheck::required);

/// sum_{j,k} M_{j,k}|psi0>_A (x) |j>_J (x) |k>_{E_j} (x) |j>_{E_J}.
JointState instrument_purification(const QuantumInstrument &instr, const ComplexVector &psi0,
                                   CompletenessCheck check = CompletenessCheck::required);

/// V with V|k>_A = joint_state(p, |k>); shape (d_A * n) x d_A.
ComplexMatrix isometry_matrix(const Povm &p);

/// Embedding of each qudit subsystem into ceil(log2 d) qubits.
///
/// Level l of a subsystem is written as the binary number l on that
/// subsystem's qubits, first qubit most significant (so a qutrit uses
/// |00>, |01>, |10> and leaves |11> empty). Subsystems keep their tensor
/// order, so subsystem 0 owns the leading qubits.
class QuditEncoding {
   public:
    explicit QuditEncoding(std::vector<std::size_t> dims);

    const std::vector<std::size_t> &dims() const noexcept { return dims_; }
    std::size_t qubit_count(std::size_t subsystem) const { return qubits_[subsystem]; }
    std::size_t total_qubits() const noexcept { return total_qubits_; }
    std::size_t level_count() const noexcept { return level_count_; }

    /// Qubit indices owned by `subsystem`, most significant first.
    std::vector<std::size_t> subsystem_qubits(std::size_t subsystem) const;

    /// Bits of `level` on its subsystem's qubits.
    std::string level_bits(std::size_t subsystem, std::size_t level) const;

    /// Flat mixed-radix index -> 2^n register index.
    std::size_t encode_index(std::size_t flat_index) const;
    /// Inverse of encode_index; nullopt for register states outside the image.
    std::optional<std::size_t> decode_index(std::size_t register_index) const;

   private:
    std::vector<std::size_t> dims_;
    std::vector<std::size_t> qubits_;
    std::size_t total_qubits_ = 0;
    std::size_t level_count_ = 1;
};

struct EncodedState {
    ComplexVector amplitudes;
    QuditEncoding encoding;
};

EncodedState encode_to_qubits(const JointState &s);

/// Drops register amplitudes outside the encoding's image; throws
/// DimensionError if any of them exceeds `tol` in magnitude.
JointState decode_from_qubits(const EncodedState &s, double tol = 1e-12);

/// Number of qubits needed to hold `d` levels, ceil(log2 d); 0 for d = 1.
std::size_t qubits_for_levels(std::size_t d);

/// Moves logical qubit q to position order[q]. `order` must be a permutation
/// of 0..n-1 for a 2^n vector.
ComplexVector permute_qubits(const ComplexVector &amplitudes, const std::vector<std::size_t> &order);

}  // namespace povmsim
