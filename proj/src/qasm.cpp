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

#include "povmsim/qasm.hpp"

#include <cctype>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <optional>
#include <stdexcept>
#include <vector>

#include "povmsim/errors.hpp"

namespace povmsim {

namespace {

constexpr std::string_view kPhaseComment = "global_phase:";

std::string format_angle(double x) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", x);
    return buf;
}

enum class TokenKind { identifier, number, string, symbol, end };

struct Token {
    TokenKind kind;
    std::string text;
    std::size_t line;
    std::size_t column;
};

class Lexer {
   public:
    explicit Lexer(std::string_view text) : text_(text) {}

    /// Tokens of the whole program; the global-phase comment, if any, is
    /// reported through `phase`.
    std::vector<Token> run(std::optional<double> &phase) {
        std::vector<Token> tokens;
        while (true) {
            skip_space_and_comments(phase);
            if (pos_ >= text_.size()) {
                tokens.push_back({TokenKind::end, "", line_, column_});
                return tokens;
            }
            tokens.push_back(next());
        }
    }

   private:
    char peek(std::size_t ahead = 0) const { return pos_ + ahead < text_.size() ? text_[pos_ + ahead] : '\0'; }

    void advance() {
        if (text_[pos_] == '\n') {
            line_++;
            column_ = 1;
        } else {
            column_++;
        }
        pos_++;
    }

    void skip_space_and_comments(std::optional<double> &phase) {
        while (pos_ < text_.size()) {
            char c = peek();
            if (std::isspace(static_cast<unsigned char>(c))) {
                advance();
            } else if (c == '/' && peek(1) == '/') {
                std::size_t line = line_;
                std::size_t column = column_;
                std::size_t start = pos_ + 2;
                while (pos_ < text_.size() && peek() != '\n') {
                    advance();
                }
                read_phase_comment(text_.substr(start, pos_ - start), line, column, phase);
            } else {
                return;
            }
        }
    }

    void read_phase_comment(std::string_view body, std::size_t line, std::size_t column,
                            std::optional<double> &phase) {
        while (!body.empty() && body.front() == ' ') {
            body.remove_prefix(1);
        }
        if (body.substr(0, kPhaseComment.size()) != kPhaseComment) {
            return;
        }
        std::string value(body.substr(kPhaseComment.size()));
        char *end = nullptr;
        double v = std::strtod(value.c_str(), &end);
        while (end && *end == ' ') {
            end++;
        }
        if (end == value.c_str() || (end && *end != '\0') || !std::isfinite(v)) {
            throw QasmParseError(line, column, "malformed global_phase comment");
        }
        phase = v;
    }

    Token next() {
        std::size_t line = line_;
        std::size_t column = column_;
        char c = peek();
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::size_t start = pos_;
            while (std::isalnum(static_cast<unsigned char>(peek())) || peek() == '_') {
                advance();
            }
            return {TokenKind::identifier, std::string(text_.substr(start, pos_ - start)), line, column};
        }
        if (std::isdigit(static_cast<unsigned char>(c)) || c == '.' || c == '-' || c == '+') {
            std::size_t start = pos_;
            advance();
            while (true) {
                char d = peek();
                bool exponent_sign = (d == '-' || d == '+') && (text_[pos_ - 1] == 'e' || text_[pos_ - 1] == 'E');
                if (std::isdigit(static_cast<unsigned char>(d)) || d == '.' || d == 'e' || d == 'E' || exponent_sign) {
                    advance();
                } else {
                    break;
                }
            }
            return {TokenKind::number, std::string(text_.substr(start, pos_ - start)), line, column};
        }
        if (c == '"') {
            advance();
            std::size_t start = pos_;
            while (pos_ < text_.size() && peek() != '"' && peek() != '\n') {
                advance();
            }
            if (peek() != '"') {
                throw QasmParseError(line, column, "unterminated string");
            }
            std::string s(text_.substr(start, pos_ - start));
            advance();
            return {TokenKind::string, s, line, column};
        }
        if (c == ';' || c == '[' || c == ']' || c == '(' || c == ')' || c == ',') {
            advance();
            return {TokenKind::symbol, std::string(1, c), line, column};
        }
        throw QasmParseError(line, column, std::string("unexpected character '") + c + "'");
    }

    std::string_view text_;
    std::size_t pos_ = 0;
    std::size_t line_ = 1;
    std::size_t column_ = 1;
};

class Parser {
   public:
    explicit Parser(std::vector<Token> tokens) : tokens_(std::move(tokens)) {}

    Circuit run(std::optional<double> phase) {
        expect_identifier("OPENQASM");
        const Token &version = expect(TokenKind::number, "version number");
        if (version.text != "3" && version.text != "3.0") {
            fail(version, "unsupported OpenQASM version " + version.text);
        }
        expect_symbol(";");

        std::optional<Circuit> circuit;
        while (current().kind != TokenKind::end) {
            const Token &head = current();
            if (head.kind != TokenKind::identifier) {
                fail(head, "expected a statement");
            }
            if (head.text == "include") {
                pos_++;
                const Token &file = expect(TokenKind::string, "include file");
                if (file.text != "stdgates.inc") {
                    fail(file, "unsupported include \"" + file.text + "\"");
                }
                expect_symbol(";");
            } else if (head.text == "qubit") {
                if (circuit) {
                    fail(head, "only one qubit register is supported");
                }
                pos_++;
                expect_symbol("[");
                std::size_t width = parse_index();
                expect_symbol("]");
                register_ = expect(TokenKind::identifier, "register name").text;
                expect_symbol(";");
                circuit.emplace(width, phase.value_or(0.0));
            } else if (head.text == "ry" || head.text == "rz" || head.text == "p" || head.text == "cx") {
                if (!circuit) {
                    fail(head, "gate before qubit declaration");
                }
                parse_gate(*circuit);
            } else {
                fail(head, "unsupported statement '" + head.text + "'");
            }
        }
        if (!circuit) {
            fail(current(), "missing qubit declaration");
        }
        return *circuit;
    }

   private:
    const Token &current() const { return tokens_[pos_]; }

    [[noreturn]] void fail(const Token &at, const std::string &message) const {
        throw QasmParseError(at.line, at.column, message);
    }

    const Token &expect(TokenKind kind, const std::string &what) {
        const Token &t = current();
        if (t.kind != kind) {
            fail(t, "expected " + what + (t.kind == TokenKind::end ? " before end of input" : ", got '" + t.text + "'"));
        }
        pos_++;
        return t;
    }

    void expect_symbol(const std::string &s) {
        const Token &t = current();
        if (t.kind != TokenKind::symbol || t.text != s) {
            fail(t, "expected '" + s + "'" + (t.kind == TokenKind::end ? " before end of input" : ", got '" + t.text + "'"));
        }
        pos_++;
    }

    void expect_identifier(const std::string &s) {
        const Token &t = current();
        if (t.kind != TokenKind::identifier || t.text != s) {
            fail(t, "expected '" + s + "'");
        }
        pos_++;
    }

    std::size_t parse_index() {
        const Token &t = expect(TokenKind::number, "integer");
        for (char c : t.text) {
            if (!std::isdigit(static_cast<unsigned char>(c))) {
                fail(t, "expected a non-negative integer, got '" + t.text + "'");
            }
        }
        return static_cast<std::size_t>(std::stoull(t.text));
    }

    double parse_angle() {
        const Token &t = expect(TokenKind::number, "angle");
        char *end = nullptr;
        double v = std::strtod(t.text.c_str(), &end);
        if (end != t.text.c_str() + t.text.size()) {
            fail(t, "malformed number '" + t.text + "'");
        }
        if (!std::isfinite(v)) {
            fail(t, "angle '" + t.text + "' is not finite");
        }
        return v;
    }

    std::size_t parse_operand(const Circuit &c) {
        const Token &name = expect(TokenKind::identifier, "qubit operand");
        if (name.text != register_) {
            fail(name, "unknown register '" + name.text + "'");
        }
        expect_symbol("[");
        const Token &index_token = current();
        std::size_t index = parse_index();
        if (index >= c.width()) {
            fail(index_token, "qubit index " + std::to_string(index) + " out of range");
        }
        expect_symbol("]");
        return index;
    }

    void parse_gate(Circuit &c) {
        const Token &head = current();
        pos_++;
        if (head.text == "cx") {
            std::size_t control = parse_operand(c);
            expect_symbol(",");
            const Token &target_token = current();
            std::size_t target = parse_operand(c);
            expect_symbol(";");
            if (control == target) {
                fail(target_token, "cx control and target coincide");
            }
            c.append(Gate::cnot(control, target));
            return;
        }
        expect_symbol("(");
        double angle = parse_angle();
        expect_symbol(")");
        std::size_t target = parse_operand(c);
        expect_symbol(";");
        if (head.text == "ry") {
            c.append(Gate::ry(target, angle));
        } else if (head.text == "rz") {
            c.append(Gate::rz(target, angle));
        } else {
            c.append(Gate::phase(target, angle));
        }
    }

    std::vector<Token> tokens_;
    std::size_t pos_ = 0;
    std::string register_;
};

}  // namespace

std::string circuit_to_qasm(const Circuit &c) {
    std::string out;
    out += "OPENQASM 3.0;\n";
    out += "include \"stdgates.inc\";\n";
    out += "// global_phase: " + format_angle(c.global_phase()) + "\n";
    out += "qubit[" + std::to_string(c.width()) + "] q;\n";
    for (const auto &g : c.gates()) {
        const std::string target = "q[" + std::to_string(g.target) + "]";
        switch (g.kind) {
            case GateKind::ry:
                out += "ry(" + format_angle(g.angle) + ") " + target + ";\n";
                break;
            case GateKind::rz:
                out += "rz(" + format_angle(g.angle) + ") " + target + ";\n";
                break;
            case GateKind::phase:
                out += "p(" + format_angle(g.angle) + ") " + target + ";\n";
                break;
            case GateKind::cnot:
                out += "cx q[" + std::to_string(g.control) + "], " + target + ";\n";
                break;
        }
    }
    return out;
}

Circuit parse_qasm(std::string_view text) {
    std::optional<double> phase;
    auto tokens = Lexer(text).run(phase);
    return Parser(std::move(tokens)).run(phase);
}

}  // namespace povmsim
