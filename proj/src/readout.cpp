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

#include "povmsim/readout.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <stdexcept>
#include <string>

#include "povmsim/errors.hpp"
#include "povmsim/rng.hpp"

namespace povmsim {

ConfusionModel::ConfusionModel(std::vector<double> error_rates) : rates_(std::move(error_rates)) {
    for (std::size_t q = 0; q < rates_.size(); q++) {
        if (!(rates_[q] >= 0.0 && rates_[q] <= 1.0)) {
            throw std::invalid_argument("readout error rate of qubit " + std::to_string(q) + " is outside [0, 1]");
        }
    }
}

double ConfusionModel::error_rate(std::size_t qubit) const {
    if (qubit >= rates_.size()) {
        throw DimensionError("confusion model has no rate for qubit " + std::to_string(qubit));
    }
    return rates_[qubit];
}

bool ConfusionModel::covers(std::span<const std::size_t> qubits) const {
    return std::all_of(qubits.begin(), qubits.end(), [this](std::size_t q) { return q < rates_.size(); });
}

std::array<std::array<double, 2>, 2> ConfusionModel::matrix(std::size_t qubit) const {
    double p = error_rate(qubit);
    return {{{1 - p, p}, {p, 1 - p}}};
}

ShotRecord apply_confusion(const ShotRecord &record, const ConfusionModel &model, std::uint64_t seed) {
    if (!model.covers(record.measured_qubits)) {
        throw DimensionError("confusion model does not cover every measured qubit");
    }
    std::vector<double> rates;
    for (auto q : record.measured_qubits) {
        rates.push_back(model.error_rate(q));
    }
    const std::size_t m = rates.size();
    std::vector<std::uint64_t> tally(std::size_t{1} << m, 0);
    Rng rng(seed);
    for (const auto &[bits, n] : record.counts) {
        if (bits.size() != m) {
            throw DimensionError("outcome '" + bits + "' does not match the measured qubits");
        }
        std::size_t ideal = 0;
        for (char b : bits) {
            ideal = (ideal << 1) | (b == '1' ? 1U : 0U);
        }
        for (std::uint64_t shot = 0; shot < n; shot++) {
            std::size_t observed = ideal;
            for (std::size_t pos = 0; pos < m; pos++) {
                if (rng.uniform() < rates[pos]) {
                    observed ^= std::size_t{1} << (m - 1 - pos);
                }
            }
            tally[observed]++;
        }
    }
    ShotRecord out;
    out.shots = record.shots;
    out.seed = seed;
    out.measured_qubits = record.measured_qubits;
    for (std::size_t k = 0; k < tally.size(); k++) {
        if (tally[k] > 0) {
            out.counts[outcome_bitstring(k, m)] = tally[k];
        }
    }
    return out;
}

MitigationResult mitigate_readout(const ShotRecord &record, const ConfusionModel &model) {
    if (!model.covers(record.measured_qubits)) {
        throw DimensionError("confusion model does not cover every measured qubit");
    }
    const std::size_t m = record.measured_qubits.size();
    std::vector<double> q = record.frequencies();
    for (std::size_t pos = 0; pos < m; pos++) {
        const double p = model.error_rate(record.measured_qubits[pos]);
        const double det = 1 - 2 * p;
        if (std::abs(det) < 1e-12) {
            throw SingularModelError("confusion matrix of qubit " + std::to_string(record.measured_qubits[pos]) +
                                     " is singular (error rate 1/2)");
        }
        // inverse of [[1-p, p], [p, 1-p]] applied along this bit
        const std::size_t stride = std::size_t{1} << (m - 1 - pos);
        for (std::size_t block = 0; block < q.size(); block += 2 * stride) {
            for (std::size_t i = block; i < block + stride; i++) {
                double f0 = q[i];
                double f1 = q[i + stride];
                q[i] = ((1 - p) * f0 - p * f1) / det;
                q[i + stride] = ((1 - p) * f1 - p * f0) / det;
            }
        }
    }
    MitigationResult result;
    for (double v : q) {
        if (v < 0) {
            result.negativity -= v;
        }
    }
    result.probabilities = project_to_simplex(q);
    result.quasi_probabilities = std::move(q);
    return result;
}

std::vector<double> project_to_simplex(std::span<const double> v) {
    if (v.empty()) {
        return {};
    }
    std::vector<double> sorted(v.begin(), v.end());
    std::sort(sorted.begin(), sorted.end(), std::greater<>());
    double cumulative = 0;
    double threshold = 0;
    for (std::size_t j = 0; j < sorted.size(); j++) {
        cumulative += sorted[j];
        double candidate = (cumulative - 1) / static_cast<double>(j + 1);
        if (sorted[j] - candidate > 0) {
            threshold = candidate;
        }
    }
    std::vector<double> out(v.size());
    for (std::size_t i = 0; i < v.size(); i++) {
        out[i] = std::max(v[i] - threshold, 0.0);
    }
    return out;
}

double total_variation(std::span<const double> a, std::span<const double> b) {
    if (a.size() != b.size()) {
        throw DimensionError("total_variation: length mismatch");
    }
    double s = 0;
    for (std::size_t i = 0; i < a.size(); i++) {
        s += std::abs(a[i] - b[i]);
    }
    return s / 2;
}

}  // namespace povmsim
