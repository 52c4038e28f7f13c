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

// Classical readout noise: each measured bit flips independently with its
// qubit's error rate p (symmetric channel), and the matching mitigation by
// inverting the tensor-product confusion matrix.

#include <array>
#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "povmsim/simulator.hpp"

namespace povmsim {

class ConfusionModel {
   public:
    /// error_rates[q] is the flip probability of circuit qubit q. Throws
    /// std::invalid_argument for rates outside [0, 1].
    explicit ConfusionModel(std::vector<double> error_rates);

    std::size_t qubit_count() const noexcept { return rates_.size(); }
    double error_rate(std::size_t qubit) const;
    bool covers(std::span<const std::size_t> qubits) const;

    /// Column-stochastic [[1-p, p], [p, 1-p]]; entry [observed][prepared].
    std::array<std::array<double, 2>, 2> matrix(std::size_t qubit) const;

   private:
    std::vector<double> rates_;
};

/// Pushes every recorded shot through the model. The returned record carries
/// `seed` as its seed.
ShotRecord apply_confusion(const ShotRecord &record, const ConfusionModel &model, std::uint64_t seed);

struct MitigationResult {
    std::vector<double> quasi_probabilities;  // C^{-1} f, may be negative
    std::vector<double> probabilities;        // Euclidean projection onto the simplex
    double negativity = 0;                    // sum of negative quasi-probability mass
};

/// Throws SingularModelError when some measured qubit has p = 1/2.
MitigationResult mitigate_readout(const ShotRecord &record, const ConfusionModel &model);

/// Closest point of the probability simplex in Euclidean distance.
std::vector<double> project_to_simplex(std::span<const double> v);

double total_variation(std::span<const double> a, std::span<const double> b);

}  // namespace povmsim
