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

#include "povmsim/tomography.hpp"

#include <cmath>
#include <numbers>
#include <vector>

#include "povmsim/errors.hpp"
#include "povmsim/rng.hpp"

namespace povmsim {

namespace {

enum Basis : std::size_t { basis_x = 0, basis_y = 1, basis_z = 2 };

std::size_t ipow(std::size_t base, std::size_t exp) {
    std::size_t r = 1;
    while (exp-- > 0) {
        r *= base;
    }
    return r;
}

/// Base-`radix` digit of `value` belonging to position `pos` of `m`
/// (position 0 most significant).
std::size_t digit(std::size_t value, std::size_t radix, std::size_t pos, std::size_t m) {
    return (value / ipow(radix, m - 1 - pos)) % radix;
}

/// Rotates the measurement basis of `q` onto Z.
void rotate_into_z(StateVector &s, std::size_t q, std::size_t basis) {
    constexpr double half_pi = std::numbers::pi / 2;
    if (basis == basis_x) {
        s.apply(Gate::ry(q, -half_pi));
    } else if (basis == basis_y) {
        s.apply(Gate::phase(q, -half_pi));
        s.apply(Gate::ry(q, -half_pi));
    }
}

ComplexMatrix pauli(std::size_t index) {
    const Complex i{0, 1};
    switch (index) {
        case 1:
            return {{0, 1}, {1, 0}};
        case 2:
            return {{0, -i}, {i, 0}};
        case 3:
            return {{1, 0}, {0, -1}};
        default:
            return ComplexMatrix::identity(2);
    }
}

}  // namespace

TomographyResult tomography(const std::function<StateVector()> &prepare, std::span<const std::size_t> qubits,
                            const TomographyOptions &options) {
    const std::size_t m = qubits.size();
    if (m == 0) {
        throw DimensionError("tomography needs at least one qubit");
    }
    const std::size_t setting_count = ipow(3, m);
    const std::size_t outcome_count = std::size_t{1} << m;

    std::vector<std::vector<double>> distributions(setting_count);
    for (std::size_t setting = 0; setting < setting_count; setting++) {
        StateVector s = prepare();
        for (std::size_t pos = 0; pos < m; pos++) {
            rotate_into_z(s, qubits[pos], digit(setting, 3, pos, m));
        }
        if (options.shots_per_setting) {
            distributions[setting] =
                sample_shots(s, qubits, *options.shots_per_setting, derive_seed(options.seed, setting)).frequencies();
        } else {
            distributions[setting] = marginal_probabilities(s, qubits);
        }
    }

    const std::size_t dim = outcome_count;
    ComplexMatrix estimate(dim, dim);
    const std::size_t pauli_count = ipow(4, m);
    for (std::size_t p = 0; p < pauli_count; p++) {
        double total = 0;
        std::size_t compatible = 0;
        for (std::size_t setting = 0; setting < setting_count; setting++) {
            bool matches = true;
            for (std::size_t pos = 0; pos < m && matches; pos++) {
                std::size_t letter = digit(p, 4, pos, m);
                matches = letter == 0 || letter - 1 == digit(setting, 3, pos, m);
            }
            if (!matches) {
                continue;
            }
            compatible++;
            for (std::size_t outcome = 0; outcome < outcome_count; outcome++) {
                int sign = 1;
                for (std::size_t pos = 0; pos < m; pos++) {
                    if (digit(p, 4, pos, m) != 0 && ((outcome >> (m - 1 - pos)) & 1U)) {
                        sign = -sign;
                    }
                }
                total += sign * distributions[setting][outcome];
            }
        }
        const double expectation = total / static_cast<double>(compatible);
        if (expectation == 0) {
            continue;
        }
        ComplexMatrix term = pauli(digit(p, 4, 0, m));
        for (std::size_t pos = 1; pos < m; pos++) {
            term = tensor(term, pauli(digit(p, 4, pos, m)));
        }
        estimate += term * Complex{expectation / static_cast<double>(dim)};
    }

    return {DensityMatrix(project_to_density_matrix(estimate)), estimate, setting_count};
}

TomographyResult tomography(const StateVector &prepared, std::span<const std::size_t> qubits,
                            const TomographyOptions &options) {
    return tomography([&prepared]() { return prepared; }, qubits, options);
}

ComplexMatrix project_to_density_matrix(const ComplexMatrix &estimate) {
    ComplexMatrix hermitian = (estimate + adjoint(estimate)) * Complex{0.5};
    auto eig = hermitian_eigen(hermitian);
    double total = 0;
    for (auto &v : eig.values) {
        v = std::max(v, 0.0);
        total += v;
    }
    if (!(total > 0)) {
        throw InvalidMeasurementError("tomography estimate has no positive spectrum");
    }
    for (auto &v : eig.values) {
        v /= total;
    }
    return from_eigen(eig.values, eig.vectors);
}

double fidelity(const DensityMatrix &rho, const ComplexVector &psi) {
    return inner(psi, rho.matrix() * psi).real();
}

}  // namespace povmsim
