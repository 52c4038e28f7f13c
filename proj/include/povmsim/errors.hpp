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

#include <cstddef>
#include <stdexcept>
#include <string>

namespace povmsim {

/// Operands whose shapes do not fit together.
class DimensionError : public std::invalid_argument {
   public:
    using std::invalid_argument::invalid_argument;
};

/// Mathematically invalid measurement, instrument or state: incomplete
/// operator sets, non-PSD effects, unnormalized inputs.
class InvalidMeasurementError : public std::domain_error {
   public:
    using std::domain_error::domain_error;
};

/// Conditioning on an outcome whose probability is (numerically) zero.
class ZeroProbabilityError : public std::domain_error {
   public:
    using std::domain_error::domain_error;
};

/// Readout confusion model that cannot be inverted.
class SingularModelError : public std::domain_error {
   public:
    using std::domain_error::domain_error;
};

class QasmParseError : public std::runtime_error {
   public:
    QasmParseError(std::size_t line, std::size_t column, const std::string &message)
        : std::runtime_error(std::to_string(line) + ":" + std::to_string(column) + ": " + message),
          line_(line),
          column_(column) {}

    std::size_t line() const noexcept { return line_; }
    std::size_t column() const noexcept { return column_; }

   private:
    std::size_t line_;
    std::size_t column_;
};

}  // namespace povmsim
