// Copyright 2026 The cczsim Authors

// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at

//     http://www.apache.org/licenses/LICENSE-2.0

// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <string>
#include <vector>

#include "ccz/types.hpp"

namespace ccz {

enum class GateKind { CZ, H, T, Tdg };

/// One element of a 3-qubit circuit; control is meaningful for CZ only.
/// Qubits are 1-based with qubit 1 the most significant basis bit.
struct GateElement {
    GateKind kind = GateKind::H;
    int control = 0;
    int target = 1;
};

struct GateCircuit {
    std::vector<GateElement> elements;
};

struct GateCounts {
    int cz = 0;
    int hadamard = 0;
    int t_type = 0;  // T and T^+ together
};

/// The conventional controlled-controlled-Z network over {CZ, H, T, T^+}:
/// six CZ (each the core of a CNOT conjugated by Hadamards) and seven
/// T-type phase gates, 25 elements in application order.
GateCircuit build_ccz_decomposition();

/// 8x8 unitary of the circuit; the first element acts first. Throws
/// std::domain_error on qubit indices outside 1..3.
CMatrix circuit_unitary(const GateCircuit& circuit);

GateCounts count_gates(const GateCircuit& circuit);

/// Single-line rendering, e.g. "CZ q1 q3" or "Tdg q2".
std::string describe(const GateElement& element);

/// diag(1, 1, 1, 1, 1, 1, 1, -1): the phase flip on |111> alone.
CMatrix ccz_target();

}  // namespace ccz
