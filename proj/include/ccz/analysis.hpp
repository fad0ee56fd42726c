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

#include <array>
#include <vector>

#include "ccz/protocol.hpp"
#include "ccz/types.hpp"

namespace ccz {

/// Margins at or above this fraction of the relevant lifetime fail the
/// feasibility check.
inline constexpr Real MARGIN_LIMIT = 0.1;

/// Gate realized by one run of the compiled schedule, written in the logical
/// basis |000>..|111> with qubit 1 as the most significant bit.
struct GateExtraction {
    CMatrix gate;        // 8x8; column k = projected image of logical input k
    Real leakage = 0.0;  // 1 - mean squared column norm
};

/// Runs the schedule on the 8 logical basis states and projects each output
/// onto the computational (x) vacuum subspace; the discarded norm is the
/// leakage.
GateExtraction extract_gate(const ProtocolConfig& cfg);

struct FidelityReport {
    Real process_fidelity = 0.0;       // |Tr(target^+ actual)|^2 / 64
    Real avg_gate_fidelity = 0.0;      // (8 F_p + 1) / 9
    Real leakage = 0.0;                // 1 - mean squared column norm of actual
    Real max_elementwise_error = 0.0;  // after global-phase alignment
};

/// Unit phase z maximizing Re Tr(target^+ (z actual)); 1 when the overlap
/// vanishes.
Complex global_phase_alignment(const CMatrix& actual, const CMatrix& target);

/// Scores one 8x8 gate against another; columns of `actual` may be
/// subnormalized (leakage). Throws std::invalid_argument on wrong shapes.
FidelityReport gate_fidelities(const CMatrix& actual, const CMatrix& target);

/// kappa^{-1} = Q / (2 pi nu_c). Throws std::domain_error on nonpositive
/// input.
Real cavity_lifetime(Real q_factor, Real nu_c);

struct FeasibilityReport {
    Real tau_s = 0.0;
    Real kappa_inv_s = 0.0;
    Real cavity_margin = 0.0;      // tau / kappa^{-1}
    Real relaxation_margin = 0.0;  // tau / gamma3r^{-1}
    Real dephasing_margin = 0.0;   // tau / gamma3p^{-1}
    bool cavity_pass = false;      // margin < MARGIN_LIMIT
    bool relaxation_pass = false;
    bool dephasing_pass = false;
    bool pass = false;  // all three margins below MARGIN_LIMIT
};

/// Compares the schedule duration against the three decoherence lifetimes.
FeasibilityReport feasibility_check(const ProtocolConfig& cfg, Real q_factor,
                                    Real nu_c, Real gamma3r_inv,
                                    Real gamma3p_inv);

/// Same check with the cavity lifetime given directly.
FeasibilityReport feasibility_check_lifetimes(const ProtocolConfig& cfg,
                                              Real kappa_inv, Real gamma3r_inv,
                                              Real gamma3p_inv);

struct SweepRow {
    Real ratio = 0.0;       // omega / max coupling; +inf marks the ideal limit
    Real infidelity = 0.0;  // 1 - avg gate fidelity vs the CCZ target
    Real leakage = 0.0;
    Real tau_s = 0.0;
};

/// Extracts the gate once per ratio with omega = ratio * max(g1,g2,g3) in
/// Simultaneous mode; an infinite ratio selects Idealized mode and reports
/// the omega -> infinity limit of the schedule duration. Rows come back
/// sorted by ratio. Decoherence channels in the template are ignored.
/// Throws std::invalid_argument on fewer than two ratios and
/// std::domain_error on a ratio that is not positive.
std::vector<SweepRow> error_scaling_sweep(const ProtocolConfig& base,
                                          std::vector<Real> ratios);

struct TruthTableCheck {
    std::array<bool, 8> state_pass{};  // per logical input |000>..|111>
    bool all_pass = false;
    Real max_deviation = 0.0;
};

/// Compares each column of an extracted gate against the CCZ target
/// elementwise, with no phase alignment: the schedule is phase-exact.
TruthTableCheck truth_table_check(const CMatrix& gate, Real tol = 1e-10);

struct ChannelFidelity {
    Real process_fidelity = 0.0;
    Real avg_gate_fidelity = 0.0;
    int steps_per_segment = 0;  // RK4 resolution picked by the probe stage
};

/// Process fidelity of the master-equation channel against the CCZ target,
/// evaluated on the 36 operator-basis inputs |i><j|, i <= j; the remaining
/// half follows from E(X^+) = E(X)^+. The per-segment step count is chosen
/// by one adaptive probe run on a uniform logical superposition.
ChannelFidelity lindblad_channel_fidelity(const ProtocolConfig& cfg,
                                          Real tol = 1e-7);

}  // namespace ccz
