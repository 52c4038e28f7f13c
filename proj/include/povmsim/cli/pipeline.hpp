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

// Protocol pipeline: joint state -> qubit encoding -> preparation circuit ->
// execution -> ancilla statistics, with optional readout noise, mitigation,
// post-selection and tomography. Results are JSON documents.

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <optional>
#include <vector>

#include "json.hpp"
#include "povmsim/circuit.hpp"
#include "povmsim/cli/job_spec.hpp"
#include "povmsim/dilation.hpp"

namespace povmsim::cli {

inline constexpr const char *kToolName = "povmsim";
inline constexpr const char *kToolVersion = "0.1.0";
inline constexpr std::uint64_t kDefaultShots = 8192;
inline constexpr std::uint64_t kDefaultSeed = 1234;
inline constexpr const char *kSeedEnvVar = "POVMSIM_SEED";

/// Steps 1-2 of the protocol for one job.
struct CompiledJob {
    EncodedState encoded;              // before any qubit_order permutation
    ComplexVector register_state;      // amplitudes actually prepared
    Circuit circuit;
    std::vector<std::size_t> layout;   // logical qubit q sits at layout[q]
    std::vector<std::size_t> system_qubits;    // A, physical, most significant first
    std::vector<std::size_t> measured_qubits;  // B (povm) or J (instrument)
    std::size_t outcome_count = 0;             // n outcomes or branches
    std::vector<std::string> outcome_labels;
};

/// Throws InvalidMeasurementError for incomplete operator sets or an
/// unnormalized input state, SpecError for a bad qubit_order.
CompiledJob compile_job(const JobSpec &spec);

struct SimulateOptions {
    bool exact = false;
    std::optional<std::uint64_t> shots;
    std::optional<std::uint64_t> seed;
    std::optional<std::filesystem::path> noise;
    bool mitigate = false;
    std::optional<std::size_t> post_select;
    bool tomography = false;
};

/// Seed precedence: explicit option, then the spec, then $POVMSIM_SEED,
/// then kDefaultSeed.
std::uint64_t resolve_seed(const JobSpec &spec, const SimulateOptions &options);

nlohmann::json simulate_job(const JobSpec &spec, const SimulateOptions &options);

/// Restricts an operator on an encoded register to the encoding's levels.
ComplexMatrix restrict_to_levels(const ComplexMatrix &m, const QuditEncoding &encoding);

}  // namespace povmsim::cli
