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
#include <string>

#include "povmsim/errors.hpp"
#include "povmsim/qasm.hpp"
#include "povmsim/simulator.hpp"
#include "povmsim/state_prep.hpp"
#include "support/oracles.hpp"

namespace povmsim {
namespace {

using testing::TestRng;

std::size_t count_lines_starting(const std::string &text, const std::string &prefix) {
    std::size_t n = 0, pos = 0;
    while (pos < text.size()) {
        std::size_t end = text.find('\n', pos);
        if (end == std::string::npos) end = text.size();
        if (text.compare(pos, prefix.size(), prefix) == 0) ++n;
        pos = end + 1;
    }
    return n;
}

QasmParseError parse_error(const std::string &text) {
    try {
        parse_qasm(text);
    } catch (const QasmParseError &e) {
        return e;
    }
    ADD_FAILURE() << "no parse error for:\n" << text;
    return QasmParseError(0, 0, "");
}

TEST(CircuitToQasm, EmptyTwoQubitCircuit) {
    std::string text = circuit_to_qasm(Circuit(2));
    EXPECT_EQ(text,
              "OPENQASM 3.0;\n"
              "include \"stdgates.inc\";\n"
              "// global_phase: 0\n"
              "qubit[2] q;\n");
}

TEST(CircuitToQasm, SingleCnot) {
    Circuit c(2);
    c.append(Gate::cnot(0, 1));
    std::string text = circuit_to_qasm(c);
    EXPECT_EQ(count_lines_starting(text, "cx "), 1U);
    EXPECT_NE(text.find("cx q[0], q[1];\n"), std::string::npos);
}

TEST(CircuitToQasm, AllGateKindsAndSeventeenDigits) {
    Circuit c(3, -0.1);
    c.append(Gate::ry(0, 0.1));
    c.append(Gate::rz(1, -2.5));
    c.append(Gate::phase(2, 1.0 / 3));
    c.append(Gate::cnot(2, 0));
    std::string text = circuit_to_qasm(c);
    EXPECT_NE(text.find("// global_phase: -0.10000000000000001\n"), std::string::npos);
    EXPECT_NE(text.find("ry(0.10000000000000001) q[0];\n"), std::string::npos);
    EXPECT_NE(text.find("rz(-2.5) q[1];\n"), std::string::npos);
    EXPECT_NE(text.find("p(0.33333333333333331) q[2];\n"), std::string::npos);
    EXPECT_NE(text.find("cx q[2], q[0];\n"), std::string::npos);
    EXPECT_EQ(parse_qasm(text), c);
}

TEST(ParseQasm, BellCircuitRoundTrips) {
    const double r = 1 / std::sqrt(2.0);
    Circuit bell = prepare_state(ComplexVector{r, 0, 0, r});
    Circuit back = parse_qasm(circuit_to_qasm(bell));
    EXPECT_EQ(back, bell);
    EXPECT_EQ(back.gates(), bell.gates());
}

TEST(ParseQasm, RandomPreparationsRoundTripExactly) {
    TestRng rng(51);
    for (std::size_t n = 1; n <= 6; ++n) {
        for (int trial = 0; trial < 5; ++trial) {
            ComplexVector v = testing::haar_state(rng, std::size_t{1} << n);
            Circuit c = prepare_state(v);
            Circuit back = parse_qasm(circuit_to_qasm(c));
            // 17 significant digits reproduce every double bit for bit.
            EXPECT_EQ(back, c);
            EXPECT_LT(max_abs_diff(run_circuit(back).amplitudes(), run_circuit(c).amplitudes()), 1e-12);
        }
    }
}

TEST(ParseQasm, AcceptsWhitespaceCommentsAndMissingPhase) {
    Circuit c = parse_qasm(
        "// a leading comment\n"
        "OPENQASM 3;\n"
        "qubit[2]   q ;\n"
        "  ry( 1.5e-1 ) q[ 1 ];  // trailing\n"
        "cx q[1],q[0];\n");
    EXPECT_EQ(c.width(), 2U);
    EXPECT_EQ(c.global_phase(), 0);
    ASSERT_EQ(c.gates().size(), 2U);
    EXPECT_EQ(c.gates()[0], Gate::ry(1, 0.15));
    EXPECT_EQ(c.gates()[1], Gate::cnot(1, 0));
}

TEST(ParseQasm, UnsupportedGateReportsLineAndColumn) {
    QasmParseError e = parse_error("OPENQASM 3.0;\nqubit[1] q;\n  h q[0];\n");
    EXPECT_EQ(e.line(), 3U);
    EXPECT_EQ(e.column(), 3U);
    EXPECT_NE(std::string(e.what()).find("unsupported statement 'h'"), std::string::npos);
}

TEST(ParseQasm, Diagnostics) {
    struct Case {
        std::string text;
        std::size_t line, column;
    };
    const Case cases[] = {
        {"OPENQASM 2.0;\n", 1, 10},
        {"qubit[1] q;\n", 1, 1},
        {"OPENQASM 3.0;\ninclude \"qelib1.inc\";\n", 2, 9},
        {"OPENQASM 3.0;\nry(0.1) q[0];\n", 2, 1},
        {"OPENQASM 3.0;\nqubit[2] q;\nry(0.1) q[2];\n", 3, 11},
        {"OPENQASM 3.0;\nqubit[2] q;\nry(0.1) r[0];\n", 3, 9},
        {"OPENQASM 3.0;\nqubit[2] q;\ncx q[1], q[1];\n", 3, 10},
        {"OPENQASM 3.0;\nqubit[2] q;\nry(1e400) q[0];\n", 3, 4},
        {"OPENQASM 3.0;\nqubit[2] q;\nry(0.1) q[0]\n", 4, 1},
        {"OPENQASM 3.0;\nqubit[2] q;\nry(0..1) q[0];\n", 3, 4},
        {"OPENQASM 3.0;\nqubit[2] q;\nqubit[1] r;\n", 3, 1},
        {"OPENQASM 3.0;\n// global_phase: nope\nqubit[1] q;\n", 2, 1},
        {"OPENQASM 3.0;\nqubit[1] q;\nry(0.1) q[0]; @\n", 3, 15},
        {"OPENQASM 3.0;\n", 2, 1},
    };
    for (const auto &c : cases) {
        QasmParseError e = parse_error(c.text);
        EXPECT_EQ(e.line(), c.line) << c.text << e.what();
        EXPECT_EQ(e.column(), c.column) << c.text << e.what();
    }
}

}  // namespace
}  // namespace povmsim
