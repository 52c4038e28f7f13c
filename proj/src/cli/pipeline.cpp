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

#include "povmsim/cli/pipeline.hpp"

#include <algorithm>
#include <cstdlib>
#include <string>

#include "povmsim/errors.hpp"
#include "povmsim/readout.hpp"
#include "povmsim/rng.hpp"
#include "povmsim/simulator.hpp"
#include "povmsim/state_prep.hpp"
#include "povmsim/tomography.hpp"

namespace povmsim::cli {

using nlohmann::json;

namespace {

// Sub-streams of the job seed. Sampling uses the seed itself.
constexpr std::uint64_t kNoiseStream = 1;
constexpr std::uint64_t kTomographyStream = 2;

std::vector<std::size_t> map_through(const std::vector<std::size_t> &logical, const std::vector<std::size_t> &layout) {
    std::vector<std::size_t> out;
    for (auto q : logical) {
        out.push_back(layout[q]);
    }
    return out;
}

/// Positions of `wanted` inside `among`.
std::vector<std::size_t> positions_in(const std::vector<std::size_t> &wanted, const std::vector<std::size_t> &among) {
    std::vector<std::size_t> out;
    for (auto q : wanted) {
        auto it = std::find(among.begin(), among.end(), q);
        out.push_back(static_cast<std::size_t>(it - among.begin()));
    }
    return out;
}

json tomography_json(const TomographyResult &tomo, const std::vector<std::size_t> &qubits,
                     const std::optional<std::uint64_t> &shots, const QuditEncoding &encoding,
                     const ComplexMatrix &analytic) {
    ComplexMatrix restricted = restrict_to_levels(tomo.state.matrix(), encoding);
    json j;
    j["qubits"] = qubits;
    j["mode"] = shots ? "shots" : "exact";
    if (shots) {
        j["shots_per_setting"] = *shots;
    }
    j["settings"] = tomo.settings;
    j["density_matrix"] = to_json(restricted);
    j["analytic_density_matrix"] = to_json(analytic);
    j["max_abs_deviation"] = max_abs_diff(restricted, analytic);
    return j;
}

json counts_json(const ShotRecord &r) {
    json j = json::object();
    for (const auto &[bits, n] : r.counts) {
        j[bits] = n;
    }
    return j;
}

}  // namespace

ComplexMatrix restrict_to_levels(const ComplexMatrix &m, const QuditEncoding &encoding) {
    const std::size_t levels = encoding.level_count();
    if (m.rows() != (std::size_t{1} << encoding.total_qubits()) || !m.is_square()) {
        throw DimensionError("operator does not match the encoded register");
    }
    ComplexMatrix out(levels, levels);
    for (std::size_t r = 0; r < levels; r++) {
        for (std::size_t c = 0; c < levels; c++) {
            out(r, c) = m(encoding.encode_index(r), encoding.encode_index(c));
        }
    }
    return out;
}

CompiledJob compile_job(const JobSpec &spec) {
    JointState joint;
    std::vector<std::string> labels;
    std::size_t outcomes = 0;
    if (spec.kind == JobKind::povm) {
        require_valid(*spec.povm, spec.tolerance);
        joint = joint_state(*spec.povm, spec.input_state, CompletenessCheck::skipped);
        labels = spec.povm->labels();
        outcomes = spec.povm->size();
    } else {
        require_valid(povm_from_instrument(*spec.instrument), spec.tolerance);
        joint = instrument_purification(*spec.instrument, spec.input_state, CompletenessCheck::skipped);
        outcomes = spec.instrument->branch_count();
        for (std::size_t j = 0; j < outcomes; j++) {
            labels.push_back("eps" + std::to_string(j));
        }
    }

    EncodedState encoded = encode_to_qubits(joint);
    const std::size_t width = encoded.encoding.total_qubits();
    std::vector<std::size_t> layout = spec.qubit_order;
    if (layout.empty()) {
        for (std::size_t q = 0; q < width; q++) {
            layout.push_back(q);
        }
    } else {
        std::vector<std::size_t> sorted = layout;
        std::sort(sorted.begin(), sorted.end());
        for (std::size_t q = 0; q < sorted.size(); q++) {
            if (sorted.size() != width || sorted[q] != q) {
                throw SpecError("qubit_order", "must be a permutation of 0.." + std::to_string(width - 1));
            }
        }
    }
    ComplexVector register_state = permute_qubits(encoded.amplitudes, layout);
    Circuit circuit = prepare_state(register_state);

    CompiledJob job{std::move(encoded), std::move(register_state), std::move(circuit), layout, {}, {}, outcomes,
                    std::move(labels)};
    job.system_qubits = map_through(job.encoded.encoding.subsystem_qubits(0), layout);
    job.measured_qubits = map_through(job.encoded.encoding.subsystem_qubits(1), layout);
    return job;
}

std::uint64_t resolve_seed(const JobSpec &spec, const SimulateOptions &options) {
    if (options.seed) {
        return *options.seed;
    }
    if (spec.seed) {
        return *spec.seed;
    }
    if (const char *env = std::getenv(kSeedEnvVar); env != nullptr && *env != '\0') {
        std::string text(env);
        if (text.find_first_not_of("0123456789") != std::string::npos) {
            throw SpecError(kSeedEnvVar, "expected a non-negative integer, got '" + text + "'");
        }
        try {
            return std::stoull(text);
        } catch (const std::out_of_range &) {
            throw SpecError(kSeedEnvVar, "value out of range");
        }
    }
    return kDefaultSeed;
}

json simulate_job(const JobSpec &spec, const SimulateOptions &options) {
    const std::uint64_t seed = resolve_seed(spec, options);
    const std::uint64_t shots = options.shots.value_or(spec.shots.value_or(kDefaultShots));
    std::optional<std::filesystem::path> noise = options.noise ? options.noise : spec.noise;
    if (options.exact && options.noise) {
        throw SpecError("--noise", "readout noise applies to sampled shots; drop --exact");
    }
    if (options.exact) {
        noise.reset();
    }
    if (options.mitigate && !noise) {
        throw SpecError("--mitigate", "needs a noise model (--noise or the spec's \"noise\" field) in shot mode");
    }
    if (options.post_select) {
        if (*options.post_select >= (spec.kind == JobKind::povm ? spec.povm->size() : spec.instrument->branch_count())) {
            throw SpecError("--post-select", "outcome " + std::to_string(*options.post_select) + " does not exist");
        }
    }

    CompiledJob job = compile_job(spec);
    StateVector state = run_circuit(job.circuit);
    const DensityMatrix rho = DensityMatrix::pure(spec.input_state);
    const QuditEncoding &encoding = job.encoded.encoding;

    json doc;
    doc["tool"] = {{"name", kToolName}, {"version", kToolVersion}};
    doc["provenance"] = {{"seed", seed},
                         {"input_fnv1a64", spec.input_hash},
                         {"mode", options.exact ? "exact" : "shots"}};
    if (!options.exact) {
        doc["provenance"]["shots"] = shots;
    }
    doc["job"] = {{"name", spec.name},
                  {"kind", spec.kind == JobKind::povm ? "povm" : "instrument"},
                  {"dim", spec.dim},
                  {"outcomes", job.outcome_count},
                  {"subsystem_dims", encoding.dims()}};
    doc["circuit"] = {{"width", job.circuit.width()},
                      {"gates", job.circuit.gates().size()},
                      {"cnot", job.circuit.cnot_count()},
                      {"ry", job.circuit.count(GateKind::ry)},
                      {"rz", job.circuit.count(GateKind::rz)},
                      {"global_phase", job.circuit.global_phase()}};
    doc["register"] = {{"layout", job.layout},
                       {"system_qubits", job.system_qubits},
                       {"measured_qubits", job.measured_qubits}};

    std::vector<double> analytic;
    if (spec.kind == JobKind::povm) {
        analytic = outcome_probabilities(*spec.povm, rho);
    } else {
        for (std::size_t j = 0; j < spec.instrument->branch_count(); j++) {
            analytic.push_back(std::max(0.0, branch_output(*spec.instrument, j, rho).trace().real()));
        }
    }
    const std::vector<double> measured = marginal_probabilities(state, job.measured_qubits);
    std::vector<double> analytic_padded(measured.size(), 0.0);
    for (std::size_t j = 0; j < analytic.size(); j++) {
        analytic_padded[j] = analytic[j];
    }

    json outcomes = json::array();
    double worst = 0;
    for (std::size_t k = 0; k < measured.size(); k++) {
        outcomes.push_back({{"bitstring", outcome_bitstring(k, job.measured_qubits.size())},
                            {"label", k < job.outcome_labels.size() ? job.outcome_labels[k] : ""},
                            {"analytic", analytic_padded[k]},
                            {"probability", measured[k]}});
        worst = std::max(worst, std::abs(analytic_padded[k] - measured[k]));
    }
    doc["outcomes"] = outcomes;
    doc["probabilities"] = measured;
    doc["analytic_probabilities"] = analytic_padded;
    doc["max_abs_deviation"] = worst;

    if (!options.exact) {
        ShotRecord record = sample_shots(state, job.measured_qubits, shots, seed);
        doc["shots"] = shots;
        doc["counts"] = counts_json(record);
        if (noise) {
            ConfusionModel model = load_calibration(*noise);
            if (!model.covers(job.measured_qubits)) {
                throw SpecError("noise", "calibration has " + std::to_string(model.qubit_count()) +
                                             " qubits; the measured register needs more");
            }
            ShotRecord noisy = apply_confusion(record, model, derive_seed(seed, kNoiseStream));
            doc["noise"] = {{"calibration", noise->filename().string()}};
            doc["noiseless_counts"] = doc["counts"];
            doc["counts"] = counts_json(noisy);
            if (options.mitigate) {
                MitigationResult m = mitigate_readout(noisy, model);
                doc["mitigation"] = {{"probabilities", m.probabilities},
                                     {"quasi_probabilities", m.quasi_probabilities},
                                     {"negativity", m.negativity}};
            }
        }
    }

    const std::optional<std::uint64_t> tomo_shots = options.exact ? std::nullopt : std::optional(shots);
    const TomographyOptions tomo_options{tomo_shots, derive_seed(seed, kTomographyStream)};
    const QuditEncoding system_encoding({spec.dim});

    if (options.post_select) {
        const std::size_t j = *options.post_select;
        const std::string bits = encoding.level_bits(1, j);
        PostSelection ps = post_select(state, job.measured_qubits, bits);
        const auto sys_pos = positions_in(job.system_qubits, ps.remaining_qubits);
        ComplexMatrix conditioned = restrict_to_levels(reduced_density_matrix(ps.state, sys_pos), system_encoding);
        ComplexMatrix expected;
        if (spec.kind == JobKind::povm) {
            expected = post_measurement_state(*spec.povm, j, rho).matrix();
        } else {
            expected = branch_output(*spec.instrument, j, rho);
            expected *= 1.0 / expected.trace().real();
        }
        json sel = {{"outcome", j},
                    {"bitstring", bits},
                    {"label", job.outcome_labels[j]},
                    {"probability", ps.probability},
                    {"density_matrix", to_json(conditioned)},
                    {"analytic_density_matrix", to_json(expected)},
                    {"max_abs_deviation", max_abs_diff(conditioned, expected)}};
        if (options.tomography) {
            auto tomo = tomography(ps.state, sys_pos, tomo_options);
            sel["tomography"] = tomography_json(tomo, job.system_qubits, tomo_shots, system_encoding, expected);
        }
        doc["post_selection"] = sel;
    } else if (options.tomography) {
        std::vector<std::size_t> qubits = job.system_qubits;
        ComplexMatrix expected;
        QuditEncoding tomo_encoding = system_encoding;
        if (spec.kind == JobKind::povm) {
            expected = unconditioned_output(*spec.povm, rho);
        } else {
            qubits.insert(qubits.end(), job.measured_qubits.begin(), job.measured_qubits.end());
            expected = instrument_output(*spec.instrument, rho);
            tomo_encoding = QuditEncoding({spec.dim, spec.instrument->branch_count()});
        }
        auto tomo = tomography(state, qubits, tomo_options);
        doc["tomography"] = tomography_json(tomo, qubits, tomo_shots, tomo_encoding, expected);
    }
    return doc;
}

}  // namespace povmsim::cli
