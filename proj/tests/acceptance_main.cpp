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

// Acceptance gate: each criterion prints one [PASS]/[FAIL] line with its
// measured figure and wall time; the budget is part of the criterion.

#include <array>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include "ccz/analysis.hpp"
#include "ccz/circuit.hpp"
#include "ccz/dynamics.hpp"
#include "ccz/hilbert.hpp"
#include "ccz/protocol.hpp"

namespace {

using namespace ccz;

constexpr Real PI = std::numbers::pi;

struct CheckFailure : std::runtime_error {
    using std::runtime_error::runtime_error;
};

void require(bool condition, const std::string& message) {
    if (!condition) throw CheckFailure(message);
}

std::string num(Real x) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.3g", x);
    return buf;
}

ProtocolConfig reference_config() {
    ProtocolConfig cfg;
    cfg.g1 = cfg.g2 = cfg.g3 = 2 * PI * 220e6;
    cfg.omega = 10.0 * cfg.g1;
    cfg.n_max = 3;
    return cfg;
}

// 1. Each logical input maps to (-1)^{b1 b2 b3} itself with the cavity back
//    in vacuum, within 1e-10.
std::string truth_table_criterion() {
    const GateExtraction ex = extract_gate(reference_config());
    const TruthTableCheck check = truth_table_check(ex.gate, 1e-10);
    require(check.all_pass, "worst amplitude deviation " +
                                num(check.max_deviation) + " exceeds 1e-10");
    return "8 inputs, worst amplitude deviation " + num(check.max_deviation);
}

// 2. All five per-step ket tables, including the (a)/(b)/(c) intermediates,
//    reproduced within 1e-10.
std::string step_table_criterion() {
    const StepTableCheck check = check_step_expectations(reference_config());
    require(check.checked_mappings == 192,
            "expected 192 replayed mappings, got " +
                std::to_string(check.checked_mappings));
    require(check.max_deviation < 1e-10,
            "worst coefficient deviation " + num(check.max_deviation) +
                " exceeds 1e-10");
    return std::to_string(check.checked_mappings) +
           " mappings, worst coefficient deviation " +
           num(check.max_deviation);
}

// 3. Closed-form cavity and pulse propagators against the series-expansion
//    oracle, 24 randomized draws, 1e-9.
std::string propagator_oracle_criterion() {
    std::mt19937 rng(424242);
    std::uniform_real_distribution<Real> g_draw(0.4e9, 3.0e9);
    std::uniform_real_distribution<Real> t_draw(0.05e-9, 1.2e-9);
    std::uniform_real_distribution<Real> phase_draw(-PI, PI);
    constexpr std::array<std::array<int, 2>, 5> transitions = {
        {{0, 2}, {1, 3}, {0, 3}, {1, 2}, {2, 3}}};

    Real worst = 0.0;
    int draws = 0;
    for (int i = 0; i < 12; ++i) {
        const CompositeSpace space(2 + i % 2);
        const JcCoupling coupling{1 + i % 3, g_draw(rng)};
        const Real t = t_draw(rng);
        const CMatrix closed = jc_propagator_closed(space, coupling, t);
        const CMatrix oracle =
            evolve_numeric(jc_hamiltonian(space, coupling), t);
        worst = std::max(worst, (closed - oracle).cwiseAbs().maxCoeff());
        ++draws;
    }
    for (int i = 0; i < 12; ++i) {
        const CompositeSpace space(2 + i % 2);
        PulseDrive drive;
        drive.qudit = 1 + i % 3;
        drive.transition = {transitions[i % 5][0], transitions[i % 5][1]};
        drive.rabi = g_draw(rng);
        drive.phase = phase_draw(rng);
        drive.duration = t_draw(rng);
        const CMatrix closed = pulse_propagator_closed(space, drive);
        const CMatrix oracle =
            evolve_numeric(pulse_hamiltonian(space, drive), drive.duration);
        worst = std::max(worst, (closed - oracle).cwiseAbs().maxCoeff());
        ++draws;
    }
    require(worst < 1e-9,
            "worst propagator deviation " + num(worst) + " exceeds 1e-9");
    return std::to_string(draws) + " draws, worst deviation " + num(worst);
}

// 4. Schedule duration 7.95 ns and cavity lifetime 1.59 us, both within 1%.
std::string timing_criterion() {
    const Real tau = total_operation_time(reference_config());
    const Real tau_err = std::abs(tau - 7.95e-9) / 7.95e-9;
    require(tau_err < 0.01, "schedule duration " + num(tau) +
                                " s is off the 7.95 ns reference by " +
                                num(tau_err));
    const Real kappa_inv = cavity_lifetime(5e4, 5e9);
    const Real kappa_err = std::abs(kappa_inv - 1.59e-6) / 1.59e-6;
    require(kappa_err < 0.01, "cavity lifetime " + num(kappa_inv) +
                                  " s is off the 1.59 us reference by " +
                                  num(kappa_err));
    return "duration " + num(tau) + " s (" + num(tau_err * 100) +
           "% off), lifetime " + num(kappa_inv) + " s (" +
           num(kappa_err * 100) + "% off)";
}

// 5. The truth table survives unequal couplings (200, 220, 240 MHz).
std::string inhomogeneous_criterion() {
    ProtocolConfig cfg = reference_config();
    cfg.g1 = 2 * PI * 200e6;
    cfg.g2 = 2 * PI * 220e6;
    cfg.g3 = 2 * PI * 240e6;
    cfg.omega = 2 * PI * 2.2e9;
    const TruthTableCheck check =
        truth_table_check(extract_gate(cfg).gate, 1e-10);
    require(check.all_pass, "worst amplitude deviation " +
                                num(check.max_deviation) + " exceeds 1e-10");
    return "unequal couplings, worst amplitude deviation " +
           num(check.max_deviation);
}

// 6. Residual error of simultaneous evolution falls monotonically in the
//    drive-to-coupling ratio and is below 1e-6 by ratio 1e4.
std::string convergence_criterion() {
    const std::vector<SweepRow> rows =
        error_scaling_sweep(reference_config(), {5, 10, 20, 40, 1e4});
    for (std::size_t i = 1; i + 1 < rows.size(); ++i) {
        require(rows[i].infidelity < rows[i - 1].infidelity,
                "infidelity is not strictly decreasing between ratios " +
                    num(rows[i - 1].ratio) + " and " + num(rows[i].ratio));
    }
    require(rows.back().infidelity < rows[rows.size() - 2].infidelity,
            "infidelity did not keep falling toward ratio 1e4");
    require(rows.back().infidelity < 1e-6,
            "infidelity " + num(rows.back().infidelity) +
                " at ratio 1e4 is not below 1e-6");
    return "infidelity " + num(rows[0].infidelity) + " -> " +
           num(rows[3].infidelity) + " over ratios 5..40, " +
           num(rows.back().infidelity) + " at 1e4";
}

// 7. Master-equation run at the reference lifetimes keeps the average gate
//    fidelity at or above 0.99.
std::string decoherence_criterion() {
    ProtocolConfig cfg = reference_config();
    cfg.n_max = 2;
    cfg.collapses = standard_collapse_set(1e-6, 1e-6, 1.6e-6);
    const ChannelFidelity channel = lindblad_channel_fidelity(cfg, 1e-5);
    require(channel.avg_gate_fidelity >= 0.99,
            "average gate fidelity " + num(channel.avg_gate_fidelity) +
                " fell below 0.99");
    return "average gate fidelity " + num(channel.avg_gate_fidelity) + " (" +
           std::to_string(channel.steps_per_segment) + " steps/segment)";
}

// 8. The 25-element circuit has counts 6/12/7, equals the target up to
//    global phase within 1e-12, and matches the extracted gate within 1e-9.
std::string decomposition_criterion() {
    const GateCircuit circuit = build_ccz_decomposition();
    require(circuit.elements.size() == 25,
            "expected 25 elements, got " +
                std::to_string(circuit.elements.size()));
    const GateCounts counts = count_gates(circuit);
    require(counts.cz == 6 && counts.hadamard == 12 && counts.t_type == 7,
            "gate counts CZ=" + std::to_string(counts.cz) +
                " H=" + std::to_string(counts.hadamard) +
                " T-type=" + std::to_string(counts.t_type) +
                " differ from 6/12/7");
    const CMatrix oracle = circuit_unitary(circuit);
    const Real vs_target =
        gate_fidelities(oracle, ccz_target()).max_elementwise_error;
    require(vs_target < 1e-12, "aligned deviation from the target " +
                                   num(vs_target) + " exceeds 1e-12");
    const Real vs_protocol =
        gate_fidelities(oracle, extract_gate(reference_config()).gate)
            .max_elementwise_error;
    require(vs_protocol < 1e-9, "aligned deviation from the extracted gate " +
                                    num(vs_protocol) + " exceeds 1e-9");
    return "counts 6/12/7, target deviation " + num(vs_target) +
           ", protocol deviation " + num(vs_protocol);
}

struct Criterion {
    const char* name;
    Real budget_s;
    std::string (*body)();
};

}  // namespace

int main() {
    const std::vector<Criterion> criteria = {
        {"truth table on the eight logical inputs", 1.0,
         truth_table_criterion},
        {"per-step transformation tables", 1.0, step_table_criterion},
        {"closed-form propagators vs numeric oracle", 5.0,
         propagator_oracle_criterion},
        {"schedule duration and cavity lifetime", 1.0, timing_criterion},
        {"truth table with unequal couplings", 1.0, inhomogeneous_criterion},
        {"drive-ratio error convergence", 120.0, convergence_criterion},
        {"decoherence margin at reference lifetimes", 300.0,
         decoherence_criterion},
        {"25-gate decomposition oracle", 1.0, decomposition_criterion},
    };

    int failures = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        const Criterion& c = criteria[i];
        const auto start = std::chrono::steady_clock::now();
        std::string detail;
        std::string error;
        try {
            detail = c.body();
        } catch (const std::exception& e) {
            error = e.what();
        }
        const Real elapsed =
            std::chrono::duration<Real>(std::chrono::steady_clock::now() -
                                        start)
                .count();
        if (error.empty() && elapsed > c.budget_s) {
            error = "runtime " + num(elapsed) + " s exceeds the " +
                    num(c.budget_s) + " s budget";
        }
        if (error.empty()) {
            std::printf("[PASS] criterion %zu: %s (%s; %.2f s)\n", i + 1,
                        c.name, detail.c_str(), elapsed);
        } else {
            std::printf("[FAIL] criterion %zu: %s (%s; %.2f s)\n", i + 1,
                        c.name, error.c_str(), elapsed);
            ++failures;
        }
        std::fflush(stdout);
    }
    if (failures == 0) {
        std::printf("all %zu acceptance criteria passed\n", criteria.size());
        return 0;
    }
    std::printf("%d of %zu acceptance criteria failed\n", failures,
                criteria.size());
    return 1;
}
