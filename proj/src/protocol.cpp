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

#include "ccz/protocol.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace ccz {

namespace {

constexpr Real PI = std::numbers::pi;

void check_rates(const ProtocolConfig& cfg) {
    if (!(cfg.g1 > 0.0) || !(cfg.g2 > 0.0) || !(cfg.g3 > 0.0)) {
        throw std::domain_error("all coupling rates must be positive");
    }
    if (!(cfg.omega > 0.0)) {
        throw std::domain_error("pulse Rabi rate must be positive");
    }
}

Segment make_pulse(int step, char subop, int qudit, int lo, int hi, Real phase,
                   Real omega) {
    Segment s;
    s.kind = Segment::Kind::Pulse;
    s.pulse = PulseDrive{qudit, {lo, hi}, omega, phase, PI / (2.0 * omega)};
    s.duration = s.pulse.duration;
    s.step = step;
    s.subop = subop;
    return s;
}

Segment make_wait(int step, Real duration) {
    Segment s;
    s.kind = Segment::Kind::Wait;
    s.duration = duration;
    s.step = step;
    s.subop = 'b';
    return s;
}

}  // namespace

Schedule compile_ccz_schedule(const ProtocolConfig& cfg) {
    check_rates(cfg);
    const Real w = cfg.omega;
    Schedule sched;
    sched.segments = {
        make_pulse(1, 'a', 1, 1, 3, -PI / 2, w),
        make_wait(1, PI / (2.0 * cfg.g1)),
        make_pulse(1, 'c', 1, 0, 2, -PI / 2, w),

        make_pulse(2, 'a', 2, 0, 2, -PI / 2, w),
        make_wait(2, PI / (2.0 * cfg.g2)),
        make_pulse(2, 'c', 2, 0, 3, PI, w),

        make_pulse(3, 'a', 3, 1, 2, -PI / 2, w),
        make_wait(3, PI / cfg.g3),
        make_pulse(3, 'c', 3, 1, 2, PI / 2, w),

        make_pulse(4, 'a', 2, 0, 3, PI, w),
        make_wait(4, PI / (2.0 * cfg.g2)),
        make_pulse(4, 'c', 2, 0, 2, PI / 2, w),

        make_pulse(5, 'a', 1, 0, 2, PI / 2, w),
        make_wait(5, PI / (2.0 * cfg.g1)),
        make_pulse(5, 'c', 1, 1, 3, -PI / 2, w),
    };
    for (const Segment& s : sched.segments) {
        sched.total_duration += s.duration;
    }
    return sched;
}

Real total_operation_time(const ProtocolConfig& cfg) {
    check_rates(cfg);
    return PI / cfg.g1 + PI / cfg.g2 + PI / cfg.g3 + 5.0 * PI / cfg.omega;
}

std::optional<std::string> rabi_ratio_warning(const ProtocolConfig& cfg) {
    if (cfg.mode != EvolutionMode::Simultaneous) return std::nullopt;
    const Real gmax = std::max({cfg.g1, cfg.g2, cfg.g3});
    if (cfg.omega > 5.0 * gmax) return std::nullopt;
    return "pulse Rabi rate is below 5x the largest cavity coupling; pulse "
           "rotations will be visibly distorted by the always-on couplings";
}

CompiledSchedule::CompiledSchedule(const CompositeSpace& space,
                                   const Schedule& sched,
                                   const ProtocolConfig& cfg)
    : dim_(space.dim()) {
    check_rates(cfg);
    const CMatrix h_jc = jc_hamiltonian(space, cfg.couplings());
    const SpectralPropagator jc_prop(h_jc);
    unitaries_.reserve(sched.segments.size());
    for (const Segment& seg : sched.segments) {
        if (seg.kind == Segment::Kind::Wait) {
            unitaries_.push_back(jc_prop.at(seg.duration));
        } else if (cfg.mode == EvolutionMode::Idealized) {
            unitaries_.push_back(pulse_propagator_closed(space, seg.pulse));
        } else {
            const CMatrix h = pulse_hamiltonian(space, seg.pulse) + h_jc;
            unitaries_.push_back(propagator(h, seg.pulse.duration));
        }
    }
}

CVector CompiledSchedule::apply(const CVector& initial) const {
    if (initial.size() != dim_) {
        throw std::domain_error("state dimension does not match the schedule's space");
    }
    CVector psi = initial;
    for (const CMatrix& u : unitaries_) {
        psi = u * psi;
    }
    return psi;
}

std::vector<CVector> CompiledSchedule::trajectory(const CVector& initial) const {
    if (initial.size() != dim_) {
        throw std::domain_error("state dimension does not match the schedule's space");
    }
    std::vector<CVector> states;
    states.reserve(unitaries_.size() + 1);
    states.push_back(initial);
    for (const CMatrix& u : unitaries_) {
        states.push_back(u * states.back());
    }
    return states;
}

CVector run_schedule(const CVector& initial, const Schedule& sched,
                     const ProtocolConfig& cfg) {
    const CompositeSpace space(cfg.n_max);
    return CompiledSchedule(space, sched, cfg).apply(initial);
}

DensityEngine::DensityEngine(const CompositeSpace& space, const Schedule& sched,
                             const ProtocolConfig& cfg) {
    check_rates(cfg);
    const CMatrix h_jc = jc_hamiltonian(space, cfg.couplings());
    for (const Segment& seg : sched.segments) {
        CMatrix h;
        if (seg.kind == Segment::Kind::Wait) {
            h = h_jc;
        } else if (cfg.mode == EvolutionMode::Idealized) {
            h = pulse_hamiltonian(space, seg.pulse);
        } else {
            h = pulse_hamiltonian(space, seg.pulse) + h_jc;
        }
        generators_.emplace_back(space, h, cfg.collapses);
        durations_.push_back(seg.duration);
    }
}

CMatrix DensityEngine::run(const CMatrix& rho0, int steps_per_segment) const {
    CMatrix rho = rho0;
    for (std::size_t k = 0; k < generators_.size(); ++k) {
        if (durations_[k] == 0.0) continue;
        rho = generators_[k].evolve(rho, durations_[k], steps_per_segment);
    }
    return rho;
}

CMatrix DensityEngine::run_adaptive(const CMatrix& rho0, Real tol,
                                    int* chosen_steps) const {
    constexpr int MAX_STEPS = 2048;
    int steps = 8;
    CMatrix prev = run(rho0, steps);
    while (steps < MAX_STEPS) {
        steps *= 2;
        CMatrix next = run(rho0, steps);
        if ((next - prev).cwiseAbs().maxCoeff() < tol) {
            if (chosen_steps) *chosen_steps = steps;
            return next;
        }
        prev = std::move(next);
    }
    if (chosen_steps) *chosen_steps = steps;
    return prev;
}

CMatrix run_schedule_density(const CMatrix& initial, const Schedule& sched,
                             const ProtocolConfig& cfg) {
    const CompositeSpace space(cfg.n_max);
    if (initial.rows() != space.dim() || initial.cols() != space.dim()) {
        throw std::domain_error("density matrix dimension does not match the space");
    }
    return DensityEngine(space, sched, cfg).run_adaptive(initial, 1e-9);
}

std::vector<StepExpectation> step_expectations() {
    const Complex one{1.0, 0.0};
    const Complex i = IMAG_UNIT;

    std::vector<StepExpectation> tables(5);

    // Step 1 on system 1: load bit 1 into the cavity.
    tables[0].step = 1;
    tables[0].qudit = 1;
    tables[0].rows = {
        {1, 0, {{{one, 3, 0}, {-i, 2, 1}, {i, 0, 1}}}},
        {0, 0, {{{one, 0, 0}, {one, 0, 0}, {one, 2, 0}}}},
    };

    // Step 2 on system 2: absorb the photon only when bit 2 is 0.
    tables[1].step = 2;
    tables[1].qudit = 2;
    tables[1].rows = {
        {0, 1, {{{one, 2, 1}, {-i, 3, 0}, {one, 0, 0}}}},
        {1, 1, {{{one, 1, 1}, {one, 1, 1}, {one, 1, 1}}}},
        {0, 0, {{{one, 2, 0}, {one, 2, 0}, {one, 2, 0}}}},
        {1, 0, {{{one, 1, 0}, {one, 1, 0}, {one, 1, 0}}}},
    };

    // Step 3 on system 3: the photon and bit 3 together flip the sign.
    tables[2].step = 3;
    tables[2].qudit = 3;
    tables[2].rows = {
        {0, 0, {{{one, 0, 0}, {one, 0, 0}, {one, 0, 0}}}},
        {1, 0, {{{one, 2, 0}, {one, 2, 0}, {one, 1, 0}}}},
        {0, 1, {{{one, 0, 1}, {one, 0, 1}, {one, 0, 1}}}},
        {1, 1, {{{one, 2, 1}, {-one, 2, 1}, {-one, 1, 1}}}},
    };

    // Step 4 on system 2: undo step 2. Sub-op (c) drives the qudit alone,
    // so the photon emitted in (b) stays in the cavity.
    tables[3].step = 4;
    tables[3].qudit = 2;
    tables[3].rows = {
        {0, 0, {{{i, 3, 0}, {one, 2, 1}, {one, 0, 1}}}},
        {1, 1, {{{one, 1, 1}, {one, 1, 1}, {one, 1, 1}}}},
        {2, 0, {{{one, 2, 0}, {one, 2, 0}, {one, 0, 0}}}},
        {1, 0, {{{one, 1, 0}, {one, 1, 0}, {one, 1, 0}}}},
    };

    // Step 5 on system 1: undo step 1 and return the cavity to vacuum.
    tables[4].step = 5;
    tables[4].qudit = 1;
    tables[4].rows = {
        {0, 1, {{{-one, 2, 1}, {i, 3, 0}, {-i, 1, 0}}}},
        {2, 0, {{{one, 0, 0}, {one, 0, 0}, {one, 0, 0}}}},
    };

    return tables;
}

StepTableCheck check_step_expectations(const ProtocolConfig& cfg) {
    ProtocolConfig ideal = cfg;
    ideal.mode = EvolutionMode::Idealized;
    const CompositeSpace space(ideal.n_max);
    const Schedule sched = compile_ccz_schedule(ideal);
    const CompiledSchedule compiled(space, sched, ideal);

    StepTableCheck out;
    for (const StepExpectation& table : step_expectations()) {
        for (const StepKetMap& row : table.rows) {
            for (int spectator = 0; spectator < 4; ++spectator) {
                std::array<int, 3> levels{};
                int bits = spectator;
                for (int q = 1; q <= NUM_QUDITS; ++q) {
                    if (q == table.qudit) continue;
                    levels[q - 1] = bits & 1;
                    bits >>= 1;
                }
                levels[table.qudit - 1] = row.level_in;
                CVector psi = space.basis_state(levels[0], levels[1], levels[2],
                                                row.photon_in);
                for (int sub = 0; sub < 3; ++sub) {
                    psi = compiled.segment_unitaries()[(table.step - 1) * 3 + sub] *
                          psi;
                    levels[table.qudit - 1] = row.after[sub].level;
                    const CVector expected =
                        row.after[sub].coeff *
                        space.basis_state(levels[0], levels[1], levels[2],
                                          row.after[sub].photon);
                    out.max_deviation =
                        std::max(out.max_deviation,
                                 (psi - expected).cwiseAbs().maxCoeff());
                    ++out.checked_mappings;
                }
            }
        }
    }
    return out;
}

}  // namespace ccz
