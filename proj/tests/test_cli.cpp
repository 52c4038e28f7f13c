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


#include <gtest/gtest.h>

#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <sys/wait.h>
#include <vector>

#include "json.hpp"
#include "povmsim/cli/commands.hpp"
#include "povmsim/cli/job_spec.hpp"
#include "povmsim/cli/pipeline.hpp"
#include "povmsim/qasm.hpp"
#include "povmsim/simulator.hpp"
#include "support/reference.hpp"
#include "support/statistics.hpp"

namespace povmsim::cli {
namespace {

namespace fs = std::filesystem;
using nlohmann::json;

struct Invocation {
    int code = -1;
    std::string out;
    std::string err;
};

Invocation run(std::vector<std::string> args) {
    args.insert(args.begin(), "povmsim");
    std::ostringstream out, err;
    Invocation r;
    r.code = run_cli(args, out, err);
    r.out = out.str();
    r.err = err.str();
    return r;
}

std::string example(const std::string &name) { return testing::data_path("examples/" + name + ".json"); }

std::string slurp(const fs::path &p) {
    std::ifstream in(p, std::ios::binary);
    return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

class CliTest : public ::testing::Test {
   protected:
    void SetUp() override {
        dir_ = fs::temp_directory_path() /
               ("povmsim_cli_" + std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
        fs::remove_all(dir_);
        fs::create_directories(dir_);
        unsetenv(kSeedEnvVar);
    }
    void TearDown() override {
        fs::remove_all(dir_);
        unsetenv(kSeedEnvVar);
    }

    fs::path write(const std::string &name, const std::string &text) {
        fs::path p = dir_ / name;
        std::ofstream(p, std::ios::binary) << text;
        return p;
    }

    // Bundled example with its relative noise path made absolute so the
    // copy can live in the temporary directory.
    json example_doc(const std::string &name) {
        json doc = json::parse(slurp(example(name)));
        if (doc.contains("noise")) doc["noise"] = testing::data_path("calibration/" + fs::path(doc["noise"].get<std::string>()).filename().string());
        return doc;
    }

    fs::path dir_;
};

std::vector<double> probabilities_of(const json &result) { return result.at("probabilities").get<std::vector<double>>(); }

ComplexMatrix matrix_of(const json &m) {
    ComplexMatrix out(m.size(), m.size());
    for (std::size_t r = 0; r < m.size(); ++r)
        for (std::size_t c = 0; c < m.size(); ++c) out(r, c) = Complex(m[r][c][0].get<double>(), m[r][c][1].get<double>());
    return out;
}

// ---------------------------------------------------------------- bundled data

TEST_F(CliTest, BundledSpecsMatchClosedFormOperators) {
    const std::vector<std::pair<std::string, Povm>> povms = {{"ex1", testing::ex1_povm()},
                                                             {"ex2", testing::ex2_povm()},
                                                             {"ex3", testing::ex3_povm()},
                                                             {"ex4", testing::ex4_povm()}};
    for (const auto &[name, reference] : povms) {
        JobSpec spec = load_job_spec(example(name));
        ASSERT_TRUE(spec.povm.has_value()) << name;
        ASSERT_EQ(spec.povm->size(), reference.size());
        for (std::size_t j = 0; j < reference.size(); ++j) EXPECT_LT(max_abs_diff((*spec.povm)[j], reference[j]), 1e-15);
    }
    JobSpec ex3 = load_job_spec(example("ex3"));
    EXPECT_LT(max_abs_diff(ex3.input_state, testing::ex3_input()), 1e-15);
    JobSpec qi = load_job_spec(example("qi"));
    ASSERT_TRUE(qi.instrument.has_value());
    QuantumInstrument ref = testing::example_instrument();
    for (std::size_t j = 0; j < 2; ++j)
        for (std::size_t k = 0; k < 2; ++k)
            EXPECT_LT(max_abs_diff(qi.instrument->branch(j)[k], ref.branch(j)[k]), 1e-15);
}

TEST_F(CliTest, CalibrationFilesCarryTableRates) {
    ConfusionModel t1 = load_calibration(testing::data_path("calibration/ibmq_belem_table1.json"));
    const std::vector<double> want1{1.45e-2, 2.90e-2, 2.65e-2, 3.78e-2, 3.26e-2};
    ConfusionModel t2 = load_calibration(testing::data_path("calibration/ibmq_belem_table2.json"));
    const std::vector<double> want2{1.31e-2, 1.99e-2, 2.19e-2, 2.87e-2, 14.67e-2};
    for (std::size_t q = 0; q < 5; ++q) {
        EXPECT_DOUBLE_EQ(t1.error_rate(q), want1[q]);
        EXPECT_DOUBLE_EQ(t2.error_rate(q), want2[q]);
    }
}

// ---------------------------------------------------------------- validate

TEST_F(CliTest, ValidateBundledSpecs) {
    for (const char *name : {"ex1", "ex2", "ex3", "ex4", "qi"}) {
        Invocation r = run({"validate", example(name)});
        EXPECT_EQ(r.code, exit_ok) << name << r.err;
        json report = json::parse(r.out);
        EXPECT_TRUE(report["valid"].get<bool>());
        EXPECT_LT(report["max_deviation"].get<double>(), 1e-14);
    }
    json qi = json::parse(run({"validate", example("qi")}).out);
    ASSERT_EQ(qi["branches"].size(), 2U);
    EXPECT_TRUE(qi["branches"][0]["trace_non_increasing"].get<bool>());
}

TEST_F(CliTest, ValidateEx1WithoutSecondElementExitsOne) {
    json doc = example_doc("ex1");
    doc["operators"].erase(1);
    doc["labels"].erase(1);
    Invocation r = run({"validate", write("ex1_m1.json", doc.dump()).string()});
    EXPECT_EQ(r.code, exit_invalid);
    json report = json::parse(r.out);
    EXPECT_FALSE(report["complete"].get<bool>());
    EXPECT_NEAR(report["max_deviation"].get<double>(), 0.5, 1e-14);
    EXPECT_EQ(report["effects"].size(), 1U);
    EXPECT_TRUE(report["effects"][0]["psd"].get<bool>());
}

TEST_F(CliTest, ValidateMalformedRowExitsTwoWithFieldPath) {
    json doc = example_doc("ex1");
    doc["operators"][1][0].erase(1);
    Invocation r = run({"validate", write("ragged.json", doc.dump()).string()});
    EXPECT_EQ(r.code, exit_parse);
    EXPECT_NE(r.err.find("operators[1]"), std::string::npos) << r.err;
}

TEST_F(CliTest, ValidateSyntaxErrorReportsLineAndColumn) {
    Invocation r = run({"validate", write("broken.json", "{\n  \"kind\": \"povm\",\n  \"dim\": 2,,\n}").string()});
    EXPECT_EQ(r.code, exit_parse);
    EXPECT_NE(r.err.find("line 3"), std::string::npos) << r.err;
}

TEST_F(CliTest, SchemaViolationsExitTwo) {
    const std::vector<std::pair<std::string, std::function<void(json &)>>> edits = {
        {"unknown key", [](json &d) { d["shotz"] = 5; }},
        {"bad kind", [](json &d) { d["kind"] = "channel"; }},
        {"missing dim", [](json &d) { d.erase("dim"); }},
        {"string entry", [](json &d) { d["operators"][0][0][0] = "one"; }},
        {"three-part complex", [](json &d) { d["operators"][0][0][0] = json::array({1, 0, 0}); }},
        {"wrong matrix size", [](json &d) { d["dim"] = 3; }},
        {"bad preset", [](json &d) { d["state"] = json{{"preset", "basis:9"}}; }},
        {"short state", [](json &d) { d["state"] = json{{"amplitudes", json::array({1})}}; }},
        {"negative shots", [](json &d) { d["shots"] = -4; }},
        {"labels length", [](json &d) { d["labels"] = json::array({"only"}); }},
        {"not an object", [](json &d) { d = json::array(); }},
    };
    for (const auto &[what, edit] : edits) {
        json doc = example_doc("ex1");
        edit(doc);
        Invocation r = run({"validate", write("edited.json", doc.dump()).string()});
        EXPECT_EQ(r.code, exit_parse) << what << ": " << r.err;
        EXPECT_FALSE(r.err.empty()) << what;
    }
}

TEST_F(CliTest, MissingFileExitsThree) {
    EXPECT_EQ(run({"validate", (dir_ / "nope.json").string()}).code, exit_io);
    EXPECT_EQ(run({"simulate", (dir_ / "nope.json").string(), "--exact"}).code, exit_io);
    EXPECT_EQ(run({"histogram", (dir_ / "nope.json").string()}).code, exit_io);
}

TEST_F(CliTest, UsageErrorsExitTwo) {
    EXPECT_EQ(run({}).code, exit_parse);
    EXPECT_EQ(run({"frobnicate"}).code, exit_parse);
    EXPECT_EQ(run({"simulate"}).code, exit_parse);
    EXPECT_EQ(run({"simulate", example("ex1"), "--shots", "0"}).code, exit_parse);
    EXPECT_EQ(run({"simulate", example("ex1"), "--shots", "many"}).code, exit_parse);
    EXPECT_EQ(run({"simulate", example("ex1"), "--exact", "--noise", testing::data_path("calibration/ibmq_belem_table1.json")}).code,
              exit_parse);
    json doc = example_doc("ex1");
    doc.erase("noise");
    EXPECT_EQ(run({"simulate", write("quiet.json", doc.dump()).string(), "--mitigate"}).code, exit_parse);
    EXPECT_EQ(run({"simulate", example("ex1"), "--exact", "--post-select", "7"}).code, exit_parse);
}

TEST_F(CliTest, HelpAndVersionExitZero) {
    EXPECT_EQ(run({"--help"}).code, exit_ok);
    Invocation v = run({"--version"});
    EXPECT_EQ(v.code, exit_ok);
    EXPECT_NE(v.out.find(kToolVersion), std::string::npos);
}

// ---------------------------------------------------------------- simulate

TEST_F(CliTest, SimulateExactEx1) {
    Invocation r = run({"simulate", example("ex1"), "--exact"});
    ASSERT_EQ(r.code, exit_ok) << r.err;
    auto p = probabilities_of(json::parse(r.out));
    ASSERT_EQ(p.size(), 2U);
    EXPECT_NEAR(p[0], 0.5, 1e-12);
    EXPECT_NEAR(p[1], 0.5, 1e-12);
}

TEST_F(CliTest, SimulateExactEx3OverAncillaBasis) {
    json result = json::parse(run({"simulate", example("ex3"), "--exact"}).out);
    auto p = probabilities_of(result);
    const std::vector<double> want{1.0 / 6, 0.5, 1.0 / 3, 0};
    ASSERT_EQ(p.size(), 4U);
    for (std::size_t i = 0; i < 4; ++i) EXPECT_NEAR(p[i], want[i], 1e-12);
    EXPECT_EQ(result["outcomes"][2]["bitstring"], "10");
}

TEST_F(CliTest, SimulateExactTomographyOfInstrument) {
    Invocation r = run({"simulate", example("qi"), "--exact", "--tomo"});
    ASSERT_EQ(r.code, exit_ok) << r.err;
    json result = json::parse(r.out);
    ComplexMatrix rho = matrix_of(result["tomography"]["density_matrix"]);
    EXPECT_LT(max_abs_diff(rho * Complex(8), testing::instrument_output_times_8()), 8e-10);
    auto p = probabilities_of(result);
    EXPECT_NEAR(p[0], 0.75, 1e-12);
    EXPECT_NEAR(p[1], 0.25, 1e-12);
}

TEST_F(CliTest, SimulatePostSelectionEx1) {
    json result = json::parse(run({"simulate", example("ex1"), "--exact", "--post-select", "1"}).out);
    const json &ps = result["post_selection"];
    EXPECT_NEAR(ps["probability"].get<double>(), 0.5, 1e-12);
    ComplexMatrix rho = matrix_of(ps["density_matrix"]);
    const double s3 = std::sqrt(3.0);
    ComplexMatrix want{{0.25, -s3 / 4}, {-s3 / 4, 0.75}};
    EXPECT_LT(max_abs_diff(rho, want), 1e-12);
}

TEST_F(CliTest, ShotDocumentInvariants) {
    Invocation r = run({"simulate", example("ex4"), "--shots", "5000", "--seed", "8", "--mitigate"});
    ASSERT_EQ(r.code, exit_ok) << r.err;
    json result = json::parse(r.out);
    std::uint64_t total = 0;
    for (const auto &[k, v] : result["counts"].items()) {
        EXPECT_EQ(k.size(), 2U);
        total += v.get<std::uint64_t>();
    }
    EXPECT_EQ(total, 5000U);
    double sum = 0;
    for (double p : probabilities_of(result)) sum += p;
    EXPECT_NEAR(sum, 1, 1e-9);
    double mitigated = 0;
    for (double p : result["mitigation"]["probabilities"].get<std::vector<double>>()) mitigated += p;
    EXPECT_NEAR(mitigated, 1, 1e-9);
    EXPECT_EQ(result["provenance"]["seed"], 8);
    EXPECT_EQ(result["provenance"]["shots"], 5000);
    EXPECT_EQ(result["tool"]["version"], kToolVersion);
}

TEST_F(CliTest, IdenticalInputsGiveByteIdenticalDocuments) {
    const std::vector<std::string> args{"simulate", example("ex2"), "--seed", "42", "--mitigate", "--tomo", "--post-select", "0"};
    Invocation a = run(args);
    Invocation b = run(args);
    ASSERT_EQ(a.code, exit_ok) << a.err;
    EXPECT_EQ(a.out, b.out);
    std::vector<std::string> other = args;
    other[3] = "43";
    EXPECT_NE(run(other).out, a.out);
}

TEST_F(CliTest, SeedPrecedence) {
    auto seed_of = [&](std::vector<std::string> args) { return json::parse(run(args).out)["provenance"]["seed"].get<std::uint64_t>(); };
    json doc = example_doc("ex1");
    doc.erase("noise");
    const std::string plain = write("plain.json", doc.dump()).string();
    doc["seed"] = 77;
    const std::string seeded = write("seeded.json", doc.dump()).string();

    EXPECT_EQ(seed_of({"simulate", plain, "--shots", "10"}), kDefaultSeed);
    setenv(kSeedEnvVar, "55", 1);
    EXPECT_EQ(seed_of({"simulate", plain, "--shots", "10"}), 55U);
    EXPECT_EQ(seed_of({"simulate", seeded, "--shots", "10"}), 77U);
    EXPECT_EQ(seed_of({"simulate", seeded, "--shots", "10", "--seed", "9"}), 9U);
    setenv(kSeedEnvVar, "not-a-number", 1);
    EXPECT_EQ(run({"simulate", plain, "--shots", "10"}).code, exit_parse);
}

TEST_F(CliTest, SampledFrequenciesWithinFiveSigma) {
    json result = json::parse(run({"simulate", example("ex1"), "--shots", "8192", "--seed", "1"}).out);
    std::vector<double> f(2, 0);
    for (const auto &[k, v] : result["counts"].items()) f[std::stoul(k, nullptr, 2)] = v.get<double>() / 8192;
    EXPECT_TRUE(testing::within_binomial_band(f, testing::kEx1Probabilities, 8192, 5));
}

TEST_F(CliTest, UnnormalizedStateExitsOne) {
    json doc = example_doc("ex1");
    doc["state"] = json{{"amplitudes", json::array({1, 1})}};
    Invocation r = run({"simulate", write("unnormalized.json", doc.dump()).string(), "--exact"});
    EXPECT_EQ(r.code, exit_invalid);
    EXPECT_NE(r.err.find("normalized"), std::string::npos) << r.err;
}

TEST_F(CliTest, ZeroProbabilityPostSelectionExitsOne) {
    json doc = example_doc("ex1");
    doc["operators"] = json::array({json::array({json::array({1, 0}), json::array({0, 0})}),
                                    json::array({json::array({0, 0}), json::array({0, 1})})});
    doc.erase("labels");
    Invocation r = run({"simulate", write("projective.json", doc.dump()).string(), "--exact", "--post-select", "1"});
    EXPECT_EQ(r.code, exit_invalid);
}

TEST_F(CliTest, QubitOrderPermutesTheRegister) {
    json doc = example_doc("ex4");
    doc["qubit_order"] = json::array({0, 3, 1, 2});
    Invocation r = run({"simulate", write("interleaved.json", doc.dump()).string(), "--exact"});
    ASSERT_EQ(r.code, exit_ok) << r.err;
    json result = json::parse(r.out);
    EXPECT_EQ(result["register"]["measured_qubits"], json::array({1, 2}));
    auto p = probabilities_of(result);
    for (std::size_t i = 0; i < 4; ++i) EXPECT_NEAR(p[i], testing::kEx4Probabilities[i], 1e-12);
    doc["qubit_order"] = json::array({0, 0, 1, 2});
    EXPECT_EQ(run({"simulate", write("bad_order.json", doc.dump()).string(), "--exact"}).code, exit_parse);
}

TEST_F(CliTest, OutputFileAndUnwritablePath) {
    fs::path out = dir_ / "result.json";
    ASSERT_EQ(run({"simulate", example("ex1"), "--exact", "-o", out.string()}).code, exit_ok);
    EXPECT_NO_THROW(json::parse(slurp(out)));
    EXPECT_EQ(run({"simulate", example("ex1"), "--exact", "-o", (dir_ / "missing" / "r.json").string()}).code, exit_io);
}

TEST_F(CliTest, SpecNoiseReferenceMustExist) {
    json doc = example_doc("ex1");
    doc["noise"] = "no_such_calibration.json";
    EXPECT_EQ(run({"simulate", write("badnoise.json", doc.dump()).string(), "--shots", "10"}).code, exit_io);
    // Exact mode never reads the noise model.
    EXPECT_EQ(run({"simulate", write("badnoise.json", doc.dump()).string(), "--exact"}).code, exit_ok);
}

// ---------------------------------------------------------------- export-qasm

TEST_F(CliTest, ExportQasmEx1ResimulatesExactResult) {
    Invocation q = run({"export-qasm", example("ex1")});
    ASSERT_EQ(q.code, exit_ok) << q.err;
    Circuit c = parse_qasm(q.out);
    EXPECT_EQ(c.width(), 2U);
    json result = json::parse(run({"simulate", example("ex1"), "--exact"}).out);
    auto measured = result["register"]["measured_qubits"].get<std::vector<std::size_t>>();
    auto p = marginal_probabilities(run_circuit(c), measured);
    auto want = probabilities_of(result);
    for (std::size_t i = 0; i < p.size(); ++i) EXPECT_NEAR(p[i], want[i], 1e-12);
}

TEST_F(CliTest, ExportQasmEveryExampleResimulates) {
    for (const char *name : {"ex2", "ex3", "ex4", "qi"}) {
        Circuit c = parse_qasm(run({"export-qasm", example(name)}).out);
        json result = json::parse(run({"simulate", example(name), "--exact"}).out);
        auto measured = result["register"]["measured_qubits"].get<std::vector<std::size_t>>();
        auto p = marginal_probabilities(run_circuit(c), measured);
        auto want = probabilities_of(result);
        for (std::size_t i = 0; i < want.size(); ++i) EXPECT_NEAR(p[i], want[i], 1e-12) << name;
    }
}

TEST_F(CliTest, ExportQasmEx4CnotBound) {
    Circuit c = parse_qasm(run({"export-qasm", example("ex4")}).out);
    EXPECT_EQ(c.width(), 4U);
    EXPECT_LE(c.cnot_count(), 32U);
}

TEST_F(CliTest, ExportQasmProjectiveIsDeterministic) {
    json doc = example_doc("ex1");
    doc["operators"] = json::array({json::array({json::array({1, 0}), json::array({0, 0})}),
                                    json::array({json::array({0, 0}), json::array({0, 1})})});
    doc["state"] = json{{"preset", "basis:1"}};
    doc.erase("noise");
    fs::path spec = write("projective.json", doc.dump());
    Circuit c = parse_qasm(run({"export-qasm", spec.string()}).out);
    std::vector<std::size_t> ancilla{1};
    auto p = marginal_probabilities(run_circuit(c), ancilla);
    EXPECT_NEAR(p[1], 1, 1e-12);
    json result = json::parse(run({"simulate", spec.string(), "--shots", "300"}).out);
    EXPECT_EQ(result["counts"], json({{"1", 300}}));
}

TEST_F(CliTest, ExportQasmToFileAndUnwritablePath) {
    fs::path out = dir_ / "ex1.qasm";
    EXPECT_EQ(run({"export-qasm", example("ex1"), "-o", out.string()}).code, exit_ok);
    EXPECT_EQ(slurp(out).rfind("OPENQASM 3.0;\n", 0), 0U);
    EXPECT_EQ(run({"export-qasm", example("ex1"), "-o", (dir_ / "missing" / "x.qasm").string()}).code, exit_io);
}

// ---------------------------------------------------------------- histogram

std::vector<std::vector<std::string>> parse_csv(const std::string &text) {
    std::vector<std::vector<std::string>> rows;
    std::size_t pos = 0;
    while (pos < text.size()) {
        std::size_t end = text.find("\r\n", pos);
        std::string line = text.substr(pos, end - pos);
        std::vector<std::string> fields;
        std::string field;
        bool quoted = false;
        for (std::size_t i = 0; i < line.size(); ++i) {
            char c = line[i];
            if (quoted) {
                if (c == '"' && i + 1 < line.size() && line[i + 1] == '"') {
                    field += '"';
                    ++i;
                } else if (c == '"') {
                    quoted = false;
                } else {
                    field += c;
                }
            } else if (c == '"') {
                quoted = true;
            } else if (c == ',') {
                fields.push_back(field);
                field.clear();
            } else {
                field += c;
            }
        }
        fields.push_back(field);
        rows.push_back(fields);
        pos = end + 2;
    }
    return rows;
}

TEST_F(CliTest, HistogramOfExactEx2) {
    fs::path result = dir_ / "ex2.json";
    ASSERT_EQ(run({"simulate", example("ex2"), "--exact", "-o", result.string()}).code, exit_ok);
    Invocation h = run({"histogram", result.string()});
    ASSERT_EQ(h.code, exit_ok) << h.err;
    auto rows = parse_csv(h.out);
    ASSERT_EQ(rows.size(), 5U);
    EXPECT_EQ(rows[0], (std::vector<std::string>{"outcome", "label", "analytic", "sampled", "mitigated"}));
    const std::vector<double> want{2.0 / 3, 1.0 / 6, 1.0 / 6, 0};
    for (std::size_t i = 0; i < 4; ++i) {
        ASSERT_EQ(rows[i + 1].size(), 5U);
        EXPECT_NEAR(std::stod(rows[i + 1][2]), want[i], 1e-12);
        EXPECT_EQ(rows[i + 1][3], "");
        EXPECT_EQ(rows[i + 1][4], "");
    }
    EXPECT_EQ(rows[1][0], "00");
    EXPECT_EQ(rows[1][1], "M1");
}

TEST_F(CliTest, HistogramOfSampledEx1) {
    fs::path result = dir_ / "ex1.json";
    ASSERT_EQ(run({"simulate", example("ex1"), "--shots", "8192", "--seed", "5", "--mitigate", "-o", result.string()}).code,
              exit_ok);
    fs::path csv = dir_ / "ex1.csv";
    fs::path plot = dir_ / "ex1.gp";
    ASSERT_EQ(run({"histogram", result.string(), "-o", csv.string(), "--plot", plot.string()}).code, exit_ok);
    auto rows = parse_csv(slurp(csv));
    ASSERT_EQ(rows.size(), 3U);
    std::vector<double> sampled{std::stod(rows[1][3]), std::stod(rows[2][3])};
    EXPECT_TRUE(testing::within_binomial_band(sampled, testing::kEx1Probabilities, 8192, 5));
    EXPECT_FALSE(rows[1][4].empty());
    std::string script = slurp(plot);
    EXPECT_NE(script.find(csv.string()), std::string::npos);
    EXPECT_NE(script.find("set title 'ex1'"), std::string::npos);
}

TEST_F(CliTest, HistogramQuotesFieldsPerRfc4180) {
    json doc = {{"outcomes", json::array({{{"bitstring", "0"}, {"label", "a,\"b\""}, {"analytic", 1.0}}})}};
    std::string csv = histogram_csv(doc);
    EXPECT_EQ(csv, "outcome,label,analytic,sampled,mitigated\r\n0,\"a,\"\"b\"\"\",1,,\r\n");
}

TEST_F(CliTest, HistogramRejectsDocumentsWithoutOutcomes) {
    Invocation r = run({"histogram", write("empty.json", "{}").string()});
    EXPECT_EQ(r.code, exit_parse);
    EXPECT_EQ(run({"histogram", write("text.json", "not json").string()}).code, exit_parse);
}

TEST(GnuplotScript, EscapesQuotes) {
    std::string s = gnuplot_script("it's.csv", "Bob's run");
    EXPECT_NE(s.find("set title 'Bob''s run'"), std::string::npos);
    EXPECT_NE(s.find("plot 'it''s.csv'"), std::string::npos);
}

// ---------------------------------------------------------------- binary

int exit_status(const std::string &command) {
    int status = std::system((command + " >/dev/null 2>&1").c_str());
    return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

TEST_F(CliTest, BinaryExitCodes) {
    const std::string bin = POVMSIM_BINARY;
    EXPECT_EQ(exit_status(bin + " validate " + example("ex1")), 0);
    json doc = example_doc("ex1");
    doc["operators"].erase(1);
    doc["labels"].erase(1);
    EXPECT_EQ(exit_status(bin + " validate " + write("m1.json", doc.dump()).string()), 1);
    EXPECT_EQ(exit_status(bin + " validate " + write("bad.json", "{\"kind\": [}").string()), 2);
    EXPECT_EQ(exit_status(bin + " validate " + (dir_ / "absent.json").string()), 3);
    EXPECT_EQ(exit_status(bin + " bogus"), 2);
}

}  // namespace
}  // namespace povmsim::cli
