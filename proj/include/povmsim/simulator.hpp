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

// Statevector execution and the measurement side of the protocol: Born-rule
// marginals, seeded shot sampling and post-selection on measured qubits.
// Qubit 0 is the most significant bit of an amplitude index; outcome
// bitstrings list the measured qubits in the order they were requested.

#include <cstddef>
#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "povmsim/circuit.hpp"
#include "povmsim/linalg.hpp"

namespace povmsim {

class StateVector {
   public:
    /// |0...0> on `width` qubits.
    explicit StateVector(std::size_t width);
    /// Throws DimensionError unless the size is 2^n and
    /// InvalidMeasurementError unless the norm is 1 within `tol`.
    explicit StateVector(ComplexVector amplitudes, double tol = 1e-10);

    std::size_t width() const noexcept { return width_; }
    std::size_t dim() const noexcept { return amplitudes_.dim(); }
    const ComplexVector &amplitudes() const noexcept { return amplitudes_; }

    /// In-place stride kernel; never builds the full unitary.
    void apply(const Gate &g);
    void apply(const Circuit &c);

   private:
    std::size_t width_;
    ComplexVector amplitudes_;
};

/// Applies `c` to `initial` (default |0...0>). Throws DimensionError when the
/// widths differ.
StateVector run_circuit(const Circuit &c);
StateVector run_circuit(const Circuit &c, StateVector initial);

/// Bitstring of `index` over `width` bits, most significant first.
std::string outcome_bitstring(std::size_t index, std::size_t width);

/// Born-rule distribution over the 2^m outcomes of `qubits` (qubits[0] is
/// the most significant bit of the outcome index).
std::vector<double> marginal_probabilities(const StateVector &s, std::span<const std::size_t> qubits);

/// Reduced density matrix of `qubits`, in the listed order.
ComplexMatrix reduced_density_matrix(const StateVector &s, std::span<const std::size_t> qubits);

struct ShotRecord {
    std::map<std::string, std::uint64_t> counts;
    std::uint64_t shots = 0;
    std::uint64_t seed = 0;
    std::vector<std::size_t> measured_qubits;

    /// counts / shots indexed by outcome value.
    std::vector<double> frequencies() const;
};

/// i.i.d. inverse-CDF draws from `probabilities` (indexed by outcome value
/// over `measured_qubits`). Identical inputs give identical records.
ShotRecord sample_distribution(std::span<const double> probabilities, std::span<const std::size_t> measured_qubits,
                               std::uint64_t shots, std::uint64_t seed);

ShotRecord sample_shots(const StateVector &s, std::span<const std::size_t> qubits, std::uint64_t shots,
                        std::uint64_t seed);

struct PostSelection {
    StateVector state;                        // over remaining_qubits
    double probability = 0;
    std::vector<std::size_t> remaining_qubits;  // ascending
};

/// Conditions the unmeasured qubits on `qubits` reading `outcome`. Throws
/// ZeroProbabilityError when that outcome has probability <= threshold.
PostSelection post_select(const StateVector &s, std::span<const std::size_t> qubits, std::string_view outcome,
                          double threshold = 1e-12);

}  // namespace povmsim
