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

#include "povmsim/povm.hpp"

#include <algorithm>
#include <cmath>

#include "povmsim/errors.hpp"

namespace povmsim {

namespace {

std::string shape_of(const ComplexMatrix &m) {
    return std::to_string(m.rows()) + "x" + std::to_string(m.cols());
}

void check_dims(std::size_t expected, std::size_t got, const char *what) {
    if (expected != got) {
        throw DimensionError(std::string(what) + ": system dimension " + std::to_string(got) +
                             " does not match operator dimension " + std::to_string(expected));
    }
}

ComplexMatrix sandwich(const ComplexMatrix &m, const ComplexMatrix &rho) { return m * rho * adjoint(m); }

}  // namespace

Povm::Povm(std::vector<ComplexMatrix> elements, std::vector<std::string> labels)
    : elements_(std::move(elements)), labels_(std::move(labels)) {
    if (elements_.empty()) {
        throw DimensionError("POVM needs at least one element");
    }
    dim_ = elements_.front().rows();
    for (std::size_t j = 0; j < elements_.size(); j++) {
        const auto &m = elements_[j];
        if (!m.is_square() || m.rows() != dim_ || dim_ == 0) {
            throw DimensionError("POVM element " + std::to_string(j) + " has shape " + shape_of(m) +
                                 ", expected " + std::to_string(dim_) + "x" + std::to_string(dim_));
        }
    }
    if (labels_.empty()) {
        for (std::size_t j = 0; j < elements_.size(); j++) {
            labels_.push_back("M" + std::to_string(j + 1));
        }
    } else if (labels_.size() != elements_.size()) {
        throw DimensionError("POVM has " + std::to_string(elements_.size()) + " elements but " +
                             std::to_string(labels_.size()) + " labels");
    }
}

ComplexMatrix Povm::effect(std::size_t j) const { return adjoint(elements_[j]) * elements_[j]; }

QuantumInstrument::QuantumInstrument(std::vector<std::vector<ComplexMatrix>> branches)
    : branches_(std::move(branches)) {
    if (branches_.empty()) {
        throw DimensionError("instrument needs at least one branch");
    }
    for (std::size_t j = 0; j < branches_.size(); j++) {
        if (branches_[j].empty()) {
            throw DimensionError("instrument branch " + std::to_string(j) + " has no Kraus operators");
        }
    }
    dim_ = branches_.front().front().rows();
    for (std::size_t j = 0; j < branches_.size(); j++) {
        for (std::size_t k = 0; k < branches_[j].size(); k++) {
            const auto &m = branches_[j][k];
            if (!m.is_square() || m.rows() != dim_ || dim_ == 0) {
                throw DimensionError("Kraus operator (" + std::to_string(j) + "," + std::to_string(k) +
                                     ") has shape " + shape_of(m) + ", expected " +
                                     std::to_string(dim_) + "x" + std::to_string(dim_));
            }
        }
    }
}

std::size_t QuantumInstrument::max_kraus_count() const noexcept {
    std::size_t best = 0;
    for (const auto &b : branches_) {
        best = std::max(best, b.size());
    }
    return best;
}

DensityMatrix::DensityMatrix(ComplexMatrix m, double tol) : matrix_(std::move(m)) {
    if (!matrix_.is_square() || matrix_.rows() == 0) {
        throw DimensionError("density matrix must be square and non-empty, got " + shape_of(matrix_));
    }
    if (!matrix_.is_hermitian(tol)) {
        throw InvalidMeasurementError("density matrix is not Hermitian");
    }
    if (std::abs(matrix_.trace() - 1.0) > tol) {
        throw InvalidMeasurementError("density matrix trace " + std::to_string(matrix_.trace().real()) +
                                      " is not 1");
    }
    if (!is_psd(matrix_, tol)) {
        throw InvalidMeasurementError("density matrix is not positive semidefinite");
    }
}

DensityMatrix DensityMatrix::pure(const ComplexVector &psi) {
    if (!psi.is_normalized(kStateTolerance)) {
        throw InvalidMeasurementError("pure state has norm " + std::to_string(psi.norm()));
    }
    return DensityMatrix(outer(psi, psi));
}

bool ValidationReport::all_psd() const {
    return std::all_of(elements.begin(), elements.end(), [](const ElementReport &e) { return e.psd; });
}

ValidationReport validate_completeness(const Povm &p, double tol) {
    ValidationReport report;
    report.tolerance = tol;
    ComplexMatrix sum(p.dim(), p.dim());
    for (std::size_t j = 0; j < p.size(); j++) {
        ComplexMatrix e = p.effect(j);
        sum += e;
        ElementReport er;
        er.label = p.labels()[j];
        er.min_eigenvalue = hermitian_eigen(e).values.front();
        er.psd = is_psd(e, tol);
        report.elements.push_back(std::move(er));
    }
    report.max_deviation = max_abs_diff(sum, ComplexMatrix::identity(p.dim()));
    return report;
}

void require_valid(const Povm &p, double tol) {
    auto report = validate_completeness(p, tol);
    if (!report.complete()) {
        throw InvalidMeasurementError("measurement operators are not complete: max |sum M^dagger M - I| = " +
                                      std::to_string(report.max_deviation));
    }
    if (!report.all_psd()) {
        throw InvalidMeasurementError("an effect M^dagger M is not positive semidefinite");
    }
}

std::vector<double> outcome_probabilities(const Povm &p, const DensityMatrix &rho) {
    check_dims(p.dim(), rho.dim(), "outcome_probabilities");
    std::vector<double> probs;
    probs.reserve(p.size());
    for (std::size_t j = 0; j < p.size(); j++) {
        double pr = sandwich(p[j], rho.matrix()).trace().real();
        if (pr < -kNegativeProbabilityClamp) {
            throw InvalidMeasurementError("negative probability " + std::to_string(pr) + " for outcome " +
                                          std::to_string(j));
        }
        probs.push_back(std::max(pr, 0.0));
    }
    return probs;
}

DensityMatrix post_measurement_state(const Povm &p, std::size_t j, const DensityMatrix &rho, double threshold) {
    check_dims(p.dim(), rho.dim(), "post_measurement_state");
    if (j >= p.size()) {
        throw DimensionError("outcome " + std::to_string(j) + " out of range for " + std::to_string(p.size()) +
                             " outcomes");
    }
    ComplexMatrix out = sandwich(p[j], rho.matrix());
    double pr = out.trace().real();
    if (!(pr > threshold)) {
        throw ZeroProbabilityError("cannot condition on outcome " + std::to_string(j) + " with probability " +
                                   std::to_string(pr));
    }
    out *= 1.0 / pr;
    return DensityMatrix(std::move(out));
}

ComplexMatrix unconditioned_output(const Povm &p, const DensityMatrix &rho) {
    check_dims(p.dim(), rho.dim(), "unconditioned_output");
    ComplexMatrix out(p.dim(), p.dim());
    for (const auto &m : p.elements()) {
        out += sandwich(m, rho.matrix());
    }
    return out;
}

ComplexMatrix branch_output(const QuantumInstrument &instr, std::size_t j, const DensityMatrix &rho) {
    check_dims(instr.dim(), rho.dim(), "branch_output");
    ComplexMatrix out(instr.dim(), instr.dim());
    for (const auto &m : instr.branch(j)) {
        out += sandwich(m, rho.matrix());
    }
    return out;
}

ComplexMatrix instrument_output(const QuantumInstrument &instr, const DensityMatrix &rho) {
    check_dims(instr.dim(), rho.dim(), "instrument_output");
    const std::size_t nb = instr.branch_count();
    ComplexMatrix out(instr.dim() * nb, instr.dim() * nb);
    for (std::size_t j = 0; j < nb; j++) {
        ComplexMatrix flag(nb, nb);
        flag(j, j) = 1.0;
        out += tensor(branch_output(instr, j, rho), flag);
    }
    return out;
}

Povm povm_from_instrument(const QuantumInstrument &instr) {
    std::vector<ComplexMatrix> elements;
    std::vector<std::string> labels;
    for (std::size_t j = 0; j < instr.branch_count(); j++) {
        for (std::size_t k = 0; k < instr.branch(j).size(); k++) {
            elements.push_back(instr.branch(j)[k]);
            labels.push_back(std::to_string(j) + "," + std::to_string(k));
        }
    }
    return Povm(std::move(elements), std::move(labels));
}

}  // namespace povmsim
