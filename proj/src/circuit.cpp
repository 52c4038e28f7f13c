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

#include "povmsim/circuit.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace povmsim {

std::string to_string(const Gate &g) {
    switch (g.kind) {
        case GateKind::ry:
            return "RY(" + std::to_string(g.angle) + ") q" + std::to_string(g.target);
        case GateKind::rz:
            return "RZ(" + std::to_string(g.angle) + ") q" + std::to_string(g.target);
        case GateKind::phase:
            return "P(" + std::to_string(g.angle) + ") q" + std::to_string(g.target);
        case GateKind::cnot:
            return "CNOT q" + std::to_string(g.control) + " q" + std::to_string(g.target);
    }
    return "?";
}

void Circuit::append(const Gate &g) {
    if (g.target >= width_) {
        throw std::invalid_argument("gate target " + std::to_string(g.target) + " outside circuit of width " +
                                    std::to_string(width_));
    }
    if (g.kind == GateKind::cnot) {
        if (g.control >= width_) {
            throw std::invalid_argument("CNOT control " + std::to_string(g.control) + " outside circuit of width " +
                                        std::to_string(width_));
        }
        if (g.control == g.target) {
            throw std::invalid_argument("CNOT control and target coincide");
        }
    } else if (!std::isfinite(g.angle)) {
        throw std::invalid_argument("non-finite rotation angle");
    }
    gates_.push_back(g);
}

std::size_t Circuit::count(GateKind kind) const {
    return static_cast<std::size_t>(
        std::count_if(gates_.begin(), gates_.end(), [kind](const Gate &g) { return g.kind == kind; }));
}

}  // namespace povmsim
