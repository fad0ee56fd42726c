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

#include "ccz/analysis.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "ccz/circuit.hpp"

namespace ccz {

namespace {

constexpr int LOGICAL_DIM = 8;

std::array<int, 3> logical_bits(int k) {
    return {(k >> 2) & 1, (k >> 1) & 1, k & 1};
}

/// dim x 8 matrix whose columns are the embedded logical basis kets.
CMatrix logical_embedding(const CompositeSpace& space,
                          const LogicalEncoding& enc) {
    CMatrix basis(space.dim(), LOGICAL_DIM);
    for (int k = 0; k < LOGICAL_DIM; ++k) {
        basis.col(k) = space.logical_basis_state(logical_bits(k), enc);
    }
    return basis;
}

/// CCZ eigenvalue of logical basis state k.
Real ccz_sign(int k) { return k == LOGICAL_DIM - 1 ? -1.0 : 1.0; }

}  // namespace

GateExtraction extract_gate(const ProtocolConfig& cfg) {
    const CompositeSpace space(cfg.n_max);
    const Schedule sched = compile_ccz_schedule(cfg);
    const CompiledSchedule compiled(space, sched, cfg);
    const CMatrix basis = logical_embedding(space, cfg.encoding);

    CMatrix outputs(space.dim(), LOGICAL_DIM);
    for (int k = 0; k < LOGICAL_DIM; ++k) {
        outputs.col(k) = compiled.apply(basis.col(k));
    }

    GateExtraction out;
    out.gate = basis.adjoint() * outputs;
    out.leakage = 1.0 - out.gate.squaredNorm() / LOGICAL_DIM;
    return out;
}

Complex global_phase_alignment(const CMatrix& actual, const CMatrix& target) {
    const Complex overlap = (target.adjoint() * actual).trace();
    const Real modulus = std::abs(overlap);
    return modulus == 0.0 ? Complex(1.0, 0.0) : std::conj(overlap) / modulus;
}

FidelityReport gate_fidelities(const CMatrix& actual, const CMatrix& target) {
    if (actual.rows() != LOGICAL_DIM || actual.cols() != LOGICAL_DIM ||
        target.rows() != LOGICAL_DIM || target.cols() != LOGICAL_DIM) {
        throw std::invalid_argument("gate_fidelities expects 8x8 matrices");
    }
    FidelityReport rep;
    const Complex overlap = (target.adjoint() * actual).trace();
    rep.process_fidelity = std::norm(overlap) / (LOGICAL_DIM * LOGICAL_DIM);
    rep.avg_gate_fidelity = (LOGICAL_DIM * rep.process_fidelity + 1.0) /
                            (LOGICAL_DIM + 1.0);
    rep.leakage = 1.0 - actual.squaredNorm() / LOGICAL_DIM;
    rep.max_elementwise_error =
        (global_phase_alignment(actual, target) * actual - target)
            .cwiseAbs()
            .maxCoeff();
    return rep;
}

Real cavity_lifetime(Real q_factor, Real nu_c) {
    if (q_factor <= 0.0 || nu_c <= 0.0) {
        throw std::domain_error(
            "quality factor and cavity frequency must be positive");
    }
    return q_factor / (2.0 * std::numbers::pi * nu_c);
}

FeasibilityReport feasibility_check(const ProtocolConfig& cfg, Real q_factor,
                                    Real nu_c, Real gamma3r_inv,
                                    Real gamma3p_inv) {
    return feasibility_check_lifetimes(cfg, cavity_lifetime(q_factor, nu_c),
                                       gamma3r_inv, gamma3p_inv);
}

FeasibilityReport feasibility_check_lifetimes(const ProtocolConfig& cfg,
                                              Real kappa_inv, Real gamma3r_inv,
                                              Real gamma3p_inv) {
    if (kappa_inv <= 0.0 || gamma3r_inv <= 0.0 || gamma3p_inv <= 0.0) {
        throw std::domain_error("decoherence lifetimes must be positive");
    }
    FeasibilityReport rep;
    rep.tau_s = total_operation_time(cfg);
    rep.kappa_inv_s = kappa_inv;
    rep.cavity_margin = rep.tau_s / kappa_inv;
    rep.relaxation_margin = rep.tau_s / gamma3r_inv;
    rep.dephasing_margin = rep.tau_s / gamma3p_inv;
    rep.cavity_pass = rep.cavity_margin < MARGIN_LIMIT;
    rep.relaxation_pass = rep.relaxation_margin < MARGIN_LIMIT;
    rep.dephasing_pass = rep.dephasing_margin < MARGIN_LIMIT;
    rep.pass = rep.cavity_pass && rep.relaxation_pass && rep.dephasing_pass;
    return rep;
}

std::vector<SweepRow> error_scaling_sweep(const ProtocolConfig& base,
                                          std::vector<Real> ratios) {
    if (ratios.size() < 2) {
        throw std::invalid_argument("sweep needs at least two ratios");
    }
    std::sort(ratios.begin(), ratios.end());
    const Real g_top = std::max({base.g1, base.g2, base.g3});
    const CMatrix target = ccz_target();

    std::vector<SweepRow> rows;
    rows.reserve(ratios.size());
    for (const Real ratio : ratios) {
        if (!(ratio > 0.0)) {
            throw std::domain_error("sweep ratios must be positive");
        }
        ProtocolConfig cfg = base;
        cfg.collapses.clear();
        SweepRow row;
        row.ratio = ratio;
        if (std::isinf(ratio)) {
            // The extracted gate in Idealized mode does not depend on omega;
            // any positive value stands in for the limit.
            cfg.mode = EvolutionMode::Idealized;
            cfg.omega = 10.0 * g_top;
            row.tau_s = std::numbers::pi * (1.0 / cfg.g1 + 1.0 / cfg.g2 +
                                            1.0 / cfg.g3);
        } else {
            cfg.mode = EvolutionMode::Simultaneous;
            cfg.omega = ratio * g_top;
            row.tau_s = total_operation_time(cfg);
        }
        const GateExtraction extraction = extract_gate(cfg);
        const FidelityReport rep = gate_fidelities(extraction.gate, target);
        row.infidelity = 1.0 - rep.avg_gate_fidelity;
        row.leakage = extraction.leakage;
        rows.push_back(row);
    }
    return rows;
}

TruthTableCheck truth_table_check(const CMatrix& gate, Real tol) {
    if (gate.rows() != LOGICAL_DIM || gate.cols() != LOGICAL_DIM) {
        throw std::invalid_argument("truth_table_check expects an 8x8 matrix");
    }
    const CMatrix target = ccz_target();
    TruthTableCheck check;
    check.all_pass = true;
    for (int k = 0; k < LOGICAL_DIM; ++k) {
        const Real deviation =
            (gate.col(k) - target.col(k)).cwiseAbs().maxCoeff();
        check.state_pass[k] = deviation < tol;
        check.all_pass = check.all_pass && check.state_pass[k];
        check.max_deviation = std::max(check.max_deviation, deviation);
    }
    return check;
}

ChannelFidelity lindblad_channel_fidelity(const ProtocolConfig& cfg, Real tol) {
    const CompositeSpace space(cfg.n_max);
    const Schedule sched = compile_ccz_schedule(cfg);
    const DensityEngine engine(space, sched, cfg);
    const CMatrix basis = logical_embedding(space, cfg.encoding);

    // One adaptive probe on the uniform logical superposition fixes the step
    // count for all 36 operator-basis evolutions.
    const CVector probe =
        basis.rowwise().sum() / std::sqrt(Real(LOGICAL_DIM));
    ChannelFidelity out;
    engine.run_adaptive(probe * probe.adjoint(), tol, &out.steps_per_segment);

    Real sum = 0.0;
    for (int i = 0; i < LOGICAL_DIM; ++i) {
        for (int j = i; j < LOGICAL_DIM; ++j) {
            const CMatrix rho_out = engine.run(
                basis.col(i) * basis.col(j).adjoint(), out.steps_per_segment);
            const Complex bralket = basis.col(i).dot(rho_out * basis.col(j));
            const Real term = ccz_sign(i) * ccz_sign(j) * bralket.real();
            sum += i == j ? term : 2.0 * term;
        }
    }
    out.process_fidelity = sum / (LOGICAL_DIM * LOGICAL_DIM);
    out.avg_gate_fidelity = (LOGICAL_DIM * out.process_fidelity + 1.0) /
                            (LOGICAL_DIM + 1.0);
    return out;
}

}  // namespace ccz
