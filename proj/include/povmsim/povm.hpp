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

// Measurement-theory value types and exact Born-rule reference computations.
// Outcome indices are 0-based: element j of a Povm is the paper-style M_{j+1}
// and is recorded on ancilla level |j>.

#include <cstddef>
#include <string>
#include <vector>

#include "povmsim/linalg.hpp"

namespace povmsim {

inline constexpr double kCompletenessTolerance = 1e-10;
inline constexpr double kStateTolerance = 1e-10;
inline constexpr double kNegativeProbabilityClamp = 1e-12;
inline constexpr double kConditioningThreshold = 1e-12;

/// Ordered measurement operators {M_j} on a d-dimensional system.
///
/// Construction checks structure only (non-empty, square, equal shapes) and
/// throws DimensionError otherwise. Completeness is a separate, reportable
/// property; see validate_completeness.
class Povm {
   public:
    explicit Povm(std::vector<ComplexMatrix> elements, std::vector<std::string> labels = {});

    std::size_t dim() const noexcept { return dim_; }
    std::size_t size() const noexcept { return elements_.size(); }
    const ComplexMatrix &operator[](std::size_t j) const { return elements_[j]; }
    const std::vector<ComplexMatrix> &elements() const noexcept { return elements_; }
    const std::vector<std::string> &labels() const noexcept { return labels_; }

    /// E_j = M_j^dagger M_j
    ComplexMatrix effect(std::size_t j) const;

   private:
    std::vector<ComplexMatrix> elements_;
    std::vector<std::string> labels_;
    std::size_t dim_ = 0;
};

/// Branches eps_j, each given by its Kraus operators {M_{j,k}}_k.
class QuantumInstrument {
   public:
    explicit QuantumInstrument(std::vector<std::vector<ComplexMatrix>> branches);

    std::size_t dim() const noexcept { return dim_; }
    std::size_t branch_count() const noexcept { return branches_.size(); }
    /// Largest number of Kraus operators in any branch.
    std::size_t max_kraus_count() const noexcept;
    const std::vector<ComplexMatrix> &branch(std::size_t j) const { return branches_[j]; }
    const std::vector<std::vector<ComplexMatrix>> &branches() const noexcept { return branches_; }

   private:
    std::vector<std::vector<ComplexMatrix>> branches_;
    std::size_t dim_ = 0;
};

/// Hermitian, PSD, unit-trace operator (each within kStateTolerance).
class DensityMatrix {
   public:
    /// Throws InvalidMeasurementError if `m` violates the invariants.
    explicit DensityMatrix(ComplexMatrix m, double tol = kStateTolerance);

    /// |psi><psi| for a normalized psi.
    static DensityMatrix pure(const ComplexVector &psi);

    std::size_t dim() const noexcept { return matrix_.rows(); }
    const ComplexMatrix &matrix() const noexcept { return matrix_; }

   private:
    ComplexMatrix matrix_;
};

struct ElementReport {
    std::string label;
    double min_eigenvalue = 0;
    bool psd = false;
};

struct ValidationReport {
    double tolerance = 0;
    /// max_ab |(sum_j M_j^dagger M_j - I)_ab|
    double max_deviation = 0;
    std::vector<ElementReport> elements;

    bool complete() const { return max_deviation <= tolerance; }
    bool all_psd() const;
    bool passed() const { return complete() && all_psd(); }
};

ValidationReport validate_completeness(const Povm &p, double tol = kCompletenessTolerance);

/// Throws InvalidMeasurementError carrying the report's deviation when
/// validation fails.
void require_valid(const Povm &p, double tol = kCompletenessTolerance);

/// Pr(j) = Tr(M_j rho M_j^dagger). Values in [-1e-12, 0) are clamped to 0;
/// anything more negative throws InvalidMeasurementError.
std::vector<double> outcome_probabilities(const Povm &p, const DensityMatrix &rho);

/// M_j rho M_j^dagger / Tr(...). Throws ZeroProbabilityError when the outcome
/// probability does not exceed `threshold`.
DensityMatrix post_measurement_state(const Povm &p, std::size_t j, const DensityMatrix &rho,
                                     double threshold = kConditioningThreshold);

/// sum_j M_j rho M_j^dagger, the non-selective channel.
ComplexMatrix unconditioned_output(const Povm &p, const DensityMatrix &rho);

/// eps_j(rho) = sum_k M_{j,k} rho M_{j,k}^dagger
ComplexMatrix branch_output(const QuantumInstrument &instr, std::size_t j, const DensityMatrix &rho);

/// Gamma(rho) = sum_j eps_j(rho) (x) |j><j|_J, block diagonal on A (x) J.
ComplexMatrix instrument_output(const QuantumInstrument &instr, const DensityMatrix &rho);

/// Flattened {M_{j,k}} in branch-major order with labels "j,k".
Povm povm_from_instrument(const QuantumInstrument &instr);

}  // namespace povmsim
