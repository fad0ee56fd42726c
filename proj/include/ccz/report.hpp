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

#include "ccz/analysis.hpp"
#include "ccz/circuit.hpp"
#include "ccz/config.hpp"
#include "ccz/types.hpp"

namespace ccz {

/// Shortest decimal form that round-trips a binary64 value (%.17g).
std::string format_real17(Real x);

/// Payload of one gate-extraction run.
struct RunReport {
    std::string mode_name;  // "idealized" | "simultaneous"
    Real tau_s = 0.0;
    CMatrix gate;  // 8x8 logical matrix
    FidelityReport fidelity;
    TruthTableCheck truth;
};

/// All emitters are deterministic: fixed key order, no timestamps, 17
/// significant digits, LF line endings. Byte-identical output for equal
/// inputs is part of the contract.
std::string emit_run_report(const RunReport& rep, OutputFormat format);

/// CSV columns ratio,infidelity,leakage,tau_s; an infinite ratio prints as
/// "inf" (JSON renders it as the string "inf").
std::string emit_sweep_report(const std::vector<SweepRow>& rows,
                              OutputFormat format);

std::string emit_feasibility_report(const FeasibilityReport& rep,
                                    OutputFormat format);

/// One line per element, then the count line "CZ=6 H=12 T-type=7", then the
/// verdict line "equivalent to CCZ up to global phase: yes|no".
std::string emit_decomposition_report(const GateCircuit& circuit,
                                      bool equivalent);

}  // namespace ccz
