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

#include "povmsim/cli/commands.hpp"

#include <cstdio>
#include <ostream>

#include "CLI11.hpp"
#include "povmsim/cli/pipeline.hpp"
#include "povmsim/errors.hpp"
#include "povmsim/qasm.hpp"

namespace povmsim::cli {

using nlohmann::json;

namespace {

std::string format_number(double x) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", x);
    return buf;
}

std::string csv_field(const std::string &s) {
    if (s.find_first_of(",\"\r\n") == std::string::npos) {
        return s;
    }
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') {
            out += '"';
        }
        out += c;
    }
    return out + "\"";
}

void emit(const std::string &text, const std::string &path, std::ostream &out) {
    if (path.empty() || path == "-") {
        out << text;
    } else {
        write_file(path, text);
    }
}

double number_at(const json &j, const std::string &where) {
    if (!j.is_number()) {
        throw SpecError(where, "expected a number");
    }
    return j.get<double>();
}

}  // namespace

json validation_report(const JobSpec &spec) {
    const Povm flat = spec.kind == JobKind::povm ? *spec.povm : povm_from_instrument(*spec.instrument);
    const ValidationReport report = validate_completeness(flat, spec.tolerance);
    json j;
    j["name"] = spec.name;
    j["kind"] = spec.kind == JobKind::povm ? "povm" : "instrument";
    j["dim"] = spec.dim;
    j["elements"] = flat.size();
    j["tolerance"] = report.tolerance;
    j["max_deviation"] = report.max_deviation;
    j["complete"] = report.complete();
    j["all_psd"] = report.all_psd();
    json effects = json::array();
    for (const auto &e : report.elements) {
        effects.push_back({{"label", e.label}, {"psd", e.psd}, {"min_eigenvalue", e.min_eigenvalue}});
    }
    j["effects"] = effects;
    bool valid = report.passed();
    if (spec.kind == JobKind::instrument) {
        // A branch is trace non-increasing iff sum_k M^dagger M <= I.
        json branches = json::array();
        for (std::size_t b = 0; b < spec.instrument->branch_count(); b++) {
            ComplexMatrix sum(spec.dim, spec.dim);
            for (const auto &m : spec.instrument->branch(b)) {
                sum += adjoint(m) * m;
            }
            double largest = hermitian_eigen(sum).values.back();
            bool ok = largest <= 1 + spec.tolerance;
            valid = valid && ok;
            branches.push_back({{"branch", b}, {"max_effect_eigenvalue", largest}, {"trace_non_increasing", ok}});
        }
        j["branches"] = branches;
    }
    j["valid"] = valid;
    return j;
}

std::string histogram_csv(const json &result) {
    if (!result.is_object() || !result.contains("outcomes") || !result["outcomes"].is_array()) {
        throw SpecError("outcomes", "result document has no outcome list");
    }
    const json &rows = result["outcomes"];
    const bool has_counts = result.contains("counts") && result["counts"].is_object();
    double shots = 0;
    if (has_counts) {
        if (!result.contains("shots")) {
            throw SpecError("shots", "result document has counts but no shot total");
        }
        shots = number_at(result["shots"], "shots");
    }
    const json *mitigated = nullptr;
    if (result.contains("mitigation")) {
        mitigated = &result["mitigation"]["probabilities"];
        if (!mitigated->is_array() || mitigated->size() != rows.size()) {
            throw SpecError("mitigation.probabilities", "expected one entry per outcome");
        }
    }

    std::string csv = "outcome,label,analytic,sampled,mitigated\r\n";
    for (std::size_t k = 0; k < rows.size(); k++) {
        const json &row = rows[k];
        const std::string where = "outcomes[" + std::to_string(k) + "]";
        if (!row.is_object() || !row.contains("bitstring") || !row["bitstring"].is_string()) {
            throw SpecError(where, "expected an object with a bitstring");
        }
        const std::string bits = row["bitstring"].get<std::string>();
        const std::string label = row.contains("label") && row["label"].is_string() ? row["label"].get<std::string>() : "";
        csv += csv_field(bits) + "," + csv_field(label) + ",";
        csv += format_number(number_at(row["analytic"], where + ".analytic")) + ",";
        if (has_counts) {
            double n = 0;
            if (result["counts"].contains(bits)) {
                n = number_at(result["counts"][bits], "counts." + bits);
            }
            csv += format_number(shots > 0 ? n / shots : 0.0);
        }
        csv += ",";
        if (mitigated) {
            csv += format_number(number_at((*mitigated)[k], "mitigation.probabilities[" + std::to_string(k) + "]"));
        }
        csv += "\r\n";
    }
    return csv;
}

std::string gnuplot_script(const std::string &csv_path, const std::string &title) {
    // Inside single quotes gnuplot reads '' as one quote character.
    auto quoted = [](const std::string &text) {
        std::string q = "'";
        for (char c : text) {
            q += c == '\'' ? std::string("''") : std::string(1, c);
        }
        return q + "'";
    };
    std::string s;
    s += "# gnuplot script; render with: gnuplot -p <this file>\n";
    s += "set datafile separator ','\n";
    s += "set title " + quoted(title) + "\n";
    s += "set style data histograms\n";
    s += "set style histogram clustered gap 1\n";
    s += "set style fill solid 0.8 border -1\n";
    s += "set yrange [0:1]\n";
    s += "set ylabel 'probability'\n";
    s += "set key top right\n";
    s += "plot " + quoted(csv_path) + " using 3:xtic(1) title 'analytic', '' using 4 title 'sampled', '' using 5 title 'mitigated'\n";
    return s;
}

int run_cli(const std::vector<std::string> &args, std::ostream &out, std::ostream &err) {
    CLI::App app{"Simulate POVMs and quantum instruments by dilation and state preparation", "povmsim"};
    app.require_subcommand(1);
    app.set_version_flag("--version", kToolVersion);

    std::string spec_path;
    std::string output_path;

    auto *validate = app.add_subcommand("validate", "Check completeness and positivity of a job spec");
    validate->add_option("spec", spec_path, "Job spec (JSON)")->required();

    SimulateOptions sim;
    std::uint64_t shots = 0;
    std::uint64_t seed = 0;
    std::string noise_path;
    std::size_t post_select = 0;
    auto *simulate = app.add_subcommand("simulate", "Run the full dilation pipeline and print a result document");
    simulate->add_option("spec", spec_path, "Job spec (JSON)")->required();
    auto *shots_opt = simulate->add_option("--shots", shots, "Shots to sample (default: spec, then 8192)")
                          ->check(CLI::PositiveNumber);
    auto *seed_opt = simulate->add_option("--seed", seed, std::string("PRNG seed (default: spec, then $") +
                                                              kSeedEnvVar + ", then " +
                                                              std::to_string(kDefaultSeed) + ")");
    simulate->add_flag("--exact", sim.exact, "Analytic probabilities only, no sampling");
    auto *noise_opt = simulate->add_option("--noise", noise_path, "Calibration file with per-qubit readout errors");
    simulate->add_flag("--mitigate", sim.mitigate, "Invert the readout confusion model on the sampled counts");
    auto *post_opt = simulate->add_option("--post-select", post_select, "Condition on outcome J (0-based)");
    simulate->add_flag("--tomo", sim.tomography, "Reconstruct the output state by Pauli tomography");
    simulate->add_option("-o,--output", output_path, "Write the result here instead of stdout");

    auto *export_qasm = app.add_subcommand("export-qasm", "Write the state-preparation circuit as OpenQASM 3.0");
    export_qasm->add_option("spec", spec_path, "Job spec (JSON)")->required();
    export_qasm->add_option("-o,--output", output_path, "Write the program here instead of stdout");

    std::string result_path;
    std::string plot_path;
    auto *histogram = app.add_subcommand("histogram", "Turn a result document into CSV (and a gnuplot script)");
    histogram->add_option("result", result_path, "Result document from `simulate`")->required();
    histogram->add_option("-o,--output", output_path, "Write the CSV here instead of stdout");
    histogram->add_option("--plot", plot_path, "Also write a gnuplot script");

    std::vector<const char *> argv;
    for (const auto &a : args) {
        argv.push_back(a.c_str());
    }
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError &e) {
        int code = app.exit(e, out, err);
        return code == 0 ? exit_ok : exit_parse;
    }

    try {
        if (validate->parsed()) {
            JobSpec spec = load_job_spec(spec_path);
            json report = validation_report(spec);
            out << report.dump(2) << "\n";
            return report["valid"].get<bool>() ? exit_ok : exit_invalid;
        }
        if (simulate->parsed()) {
            JobSpec spec = load_job_spec(spec_path);
            if (*shots_opt) {
                sim.shots = shots;
            }
            if (*seed_opt) {
                sim.seed = seed;
            }
            if (*noise_opt) {
                sim.noise = noise_path;
            }
            if (*post_opt) {
                sim.post_select = post_select;
            }
            emit(simulate_job(spec, sim).dump(2) + "\n", output_path, out);
            return exit_ok;
        }
        if (export_qasm->parsed()) {
            JobSpec spec = load_job_spec(spec_path);
            emit(circuit_to_qasm(compile_job(spec).circuit), output_path, out);
            return exit_ok;
        }
        if (histogram->parsed()) {
            json result = parse_json_text(read_file(result_path));
            std::string csv = histogram_csv(result);
            emit(csv, output_path, out);
            if (!plot_path.empty()) {
                std::string csv_ref = output_path.empty() || output_path == "-" ? "histogram.csv" : output_path;
                std::string title = result.contains("job") && result["job"].contains("name") &&
                                            result["job"]["name"].is_string()
                                        ? result["job"]["name"].get<std::string>()
                                        : "povmsim";
                write_file(plot_path, gnuplot_script(csv_ref, title));
            }
            return exit_ok;
        }
    } catch (const SpecError &e) {
        err << "error: " << e.what() << "\n";
        return exit_parse;
    } catch (const IoError &e) {
        err << "error: " << e.what() << "\n";
        return exit_io;
    } catch (const std::exception &e) {
        err << "error: " << e.what() << "\n";
        return exit_invalid;
    }
    return exit_parse;
}

}  // namespace povmsim::cli
