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

// Linear-inversion state tomography over the 3^m Pauli measurement settings.

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>

#include "povmsim/linalg.hpp"
#include "povmsim/povm.hpp"
#include "povmsim/simulator.hpp"

namespace povmsim {

struct TomographyOptions {
    /// nullopt selects exact mode: analytic setting probabilities, no shots.
    std::optional<std::uint64_t> shots_per_setting;
    std::uint64_t seed = 0;
};

struct TomographyResult {
    DensityMatrix state;      // after PSD projection
    ComplexMatrix estimate;   // raw linear-inversion estimate
    std::size_t settings = 0;
};

/// Reconstructs the joint state of `qubits` (qubits[0] most significant).
///
/// `prepare` is called once per setting and must return the same state each
/// time. Setting s draws shots with seed derive_seed(options.seed, s), so the
/// result does not depend on evaluation order. Each Pauli expectation is the
/// average over every setting that measures it.
TomographyResult tomography(const std::function<StateVector()> &prepare, std::span<const std::size_t> qubits,
                            const TomographyOptions &options = {});

TomographyResult tomography(const StateVector &prepared, std::span<const std::size_t> qubits,
                            const TomographyOptions &options = {});

/// Nearest-in-spectrum density matrix: symmetrize, clip negative eigenvalues
/// to zero, rescale to unit trace.
ComplexMatrix project_to_density_matrix(const ComplexMatrix &estimate);

/// <psi|rho|psi>
double fidelity(const DensityMatrix &rho, const ComplexVector &psi);

}  // namespace povmsim
