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

#include "ccz/circuit.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace ccz {

namespace {

constexpr int NUM_QUBITS = 3;
constexpr int DIM = 8;

void check_qubit(int q) {
    if (q < 1 || q > NUM_QUBITS) {
        throw std::domain_error("qubit index must be 1, 2 or 3");
    }
}

int bit_of(int basis, int qubit) { return (basis >> (NUM_QUBITS - qubit)) & 1; }

CMatrix single_qubit(const CMatrix& u2, int qubit) {
    CMatrix u = CMatrix::Zero(DIM, DIM);
    const int shift = NUM_QUBITS - qubit;
    for (int col = 0; col < DIM; ++col) {
        const int b = (col >> shift) & 1;
        for (int a = 0; a < 2; ++a) {
            const int row = (col & ~(1 << shift)) | (a << shift);
            u(row, col) = u2(a, b);
        }
    }
    return u;
}

CMatrix element_matrix(const GateElement& el) {
    switch (el.kind) {
        case GateKind::CZ: {
            check_qubit(el.control);
            check_qubit(el.target);
            if (el.control == el.target) {
                throw std::domain_error("CZ control and target must differ");
            }
            CMatrix u = CMatrix::Identity(DIM, DIM);
            for (int k = 0; k < DIM; ++k) {
                if (bit_of(k, el.control) && bit_of(k, el.target)) u(k, k) = -1.0;
            }
            return u;
        }
        case GateKind::H: {
            check_qubit(el.target);
            CMatrix h2(2, 2);
            const Real s = 1.0 / std::sqrt(2.0);
            h2 << s, s, s, -s;
            return single_qubit(h2, el.target);
        }
        case GateKind::T:
        case GateKind::Tdg: {
            check_qubit(el.target);
            const Real sign = el.kind == GateKind::T ? 1.0 : -1.0;
            CMatrix t2 = CMatrix::Identity(2, 2);
            t2(1, 1) = std::exp(sign * IMAG_UNIT * (std::numbers::pi / 4.0));
            return single_qubit(t2, el.target);
        }
    }
    throw std::domain_error("unknown gate kind");
}

void append_cnot(std::vector<GateElement>& v, int control, int target) {
    v.push_back({GateKind::H, 0, target});
    v.push_back({GateKind::CZ, control, target});
    v.push_back({GateKind::H, 0, target});
}

}  // namespace

GateCircuit build_ccz_decomposition() {
    // Phase-polynomial network: every computational parity a, b, c, a^b,
    // a^c, b^c, a^b^c receives one T-type gate, giving the identity
    // pi*abc = pi/4*(a+b+c-a^b-a^c-b^c+a^b^c) with no leftover global phase.
    GateCircuit circuit;
    auto& v = circuit.elements;
    append_cnot(v, 2, 3);
    v.push_back({GateKind::Tdg, 0, 3});
    append_cnot(v, 1, 3);
    v.push_back({GateKind::T, 0, 3});
    append_cnot(v, 2, 3);
    v.push_back({GateKind::Tdg, 0, 3});
    append_cnot(v, 1, 3);
    v.push_back({GateKind::T, 0, 3});
    v.push_back({GateKind::T, 0, 2});
    append_cnot(v, 1, 2);
    v.push_back({GateKind::Tdg, 0, 2});
    append_cnot(v, 1, 2);
    v.push_back({GateKind::T, 0, 1});
    return circuit;
}

CMatrix circuit_unitary(const GateCircuit& circuit) {
    CMatrix u = CMatrix::Identity(DIM, DIM);
    for (const GateElement& el : circuit.elements) {
        u = element_matrix(el) * u;
    }
    return u;
}

GateCounts count_gates(const GateCircuit& circuit) {
    GateCounts counts;
    for (const GateElement& el : circuit.elements) {
        switch (el.kind) {
            case GateKind::CZ: ++counts.cz; break;
            case GateKind::H: ++counts.hadamard; break;
            case GateKind::T:
            case GateKind::Tdg: ++counts.t_type; break;
        }
    }
    return counts;
}

std::string describe(const GateElement& element) {
    switch (element.kind) {
        case GateKind::CZ:
            return "CZ q" + std::to_string(element.control) + " q" +
                   std::to_string(element.target);
        case GateKind::H: return "H q" + std::to_string(element.target);
        case GateKind::T: return "T q" + std::to_string(element.target);
        case GateKind::Tdg: return "Tdg q" + std::to_string(element.target);
    }
    return "?";
}

CMatrix ccz_target() {
    CMatrix u = CMatrix::Identity(DIM, DIM);
    u(DIM - 1, DIM - 1) = -1.0;
    return u;
}

}  // namespace ccz
