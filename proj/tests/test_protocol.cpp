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

#include <doctest.h>

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "ccz/protocol.hpp"

namespace {

using namespace ccz;

constexpr Real PI = std::numbers::pi;

ProtocolConfig reference_config() {
    ProtocolConfig cfg;
    cfg.g1 = cfg.g2 = cfg.g3 = 2 * PI * 220e6;
    cfg.omega = 10.0 * cfg.g1;
    cfg.n_max = 3;
    return cfg;
}

int parity(int b1, int b2, int b3) { return (b1 & b2 & b3) ? -1 : 1; }

TEST_SUITE("protocol") {

TEST_CASE("compiled gate program has 15 annotated segments") {
    const ProtocolConfig cfg = reference_config();
    const Schedule sched = compile_ccz_schedule(cfg);
    REQUIRE(sched.segments.size() == 15);

    for (int step = 1; step <= 5; ++step) {
        const Segment& a = sched.segments[(step - 1) * 3];
        const Segment& b = sched.segments[(step - 1) * 3 + 1];
        const Segment& c = sched.segments[(step - 1) * 3 + 2];
        CHECK(a.kind == Segment::Kind::Pulse);
        CHECK(b.kind == Segment::Kind::Wait);
        CHECK(c.kind == Segment::Kind::Pulse);
        CHECK(a.step == step);
        CHECK(b.step == step);
        CHECK(c.step == step);
        CHECK(a.subop == 'a');
        CHECK(b.subop == 'b');
        CHECK(c.subop == 'c');
        CHECK(a.duration == doctest::Approx(PI / (2 * cfg.omega)));
        CHECK(c.duration == doctest::Approx(PI / (2 * cfg.omega)));
    }
    // The middle wait is a half period, twice the quarter-period waits.
    CHECK(sched.segments[7].duration ==
          doctest::Approx(2.0 * sched.segments[1].duration));
    CHECK(sched.segments[1].duration == doctest::Approx(PI / (2 * cfg.g1)));

    CHECK(sched.total_duration == doctest::Approx(total_operation_time(cfg)));
    CHECK_THROWS_AS(compile_ccz_schedule(ProtocolConfig{}), std::domain_error);
}

TEST_CASE("total operation time matches the closed form") {
    ProtocolConfig cfg = reference_config();
    CHECK(total_operation_time(cfg) == doctest::Approx(7.954545e-9).epsilon(1e-6));

    // Large Rabi rate leaves only the wait contributions.
    cfg.omega = 1e6 * cfg.g1;
    CHECK(total_operation_time(cfg) ==
          doctest::Approx(3 * PI / cfg.g1).epsilon(1e-5));

    ProtocolConfig inhom;
    inhom.g1 = 2 * PI * 200e6;
    inhom.g2 = 2 * PI * 220e6;
    inhom.g3 = 2 * PI * 240e6;
    inhom.omega = 2 * PI * 2.2e9;
    CHECK(total_operation_time(inhom) ==
          doctest::Approx(7.992424e-9).epsilon(1e-6));
}

TEST_CASE("idealized run realizes the phase flip on |111> only") {
    for (int n_max : {2, 3}) {
        ProtocolConfig cfg = reference_config();
        cfg.n_max = n_max;
        const CompositeSpace space(n_max);
        const Schedule sched = compile_ccz_schedule(cfg);
        const CompiledSchedule compiled(space, sched, cfg);

        for (int k = 0; k < 8; ++k) {
            const std::array<int, 3> bits = {(k >> 2) & 1, (k >> 1) & 1, k & 1};
            const CVector in = space.logical_basis_state(bits, cfg.encoding);
            const CVector out = compiled.apply(in);
            const CVector expected =
                Real(parity(bits[0], bits[1], bits[2])) * in;
            CHECK((out - expected).cwiseAbs().maxCoeff() < 1e-10);
            // The cavity ends in vacuum for every input.
            const CMatrix cav = space.reduced_cavity(out);
            CHECK(std::abs(cav(0, 0).real() - 1.0) < 1e-10);
        }
    }
}

TEST_CASE("truth table survives coupling inhomogeneity") {
    ProtocolConfig cfg;
    cfg.g1 = 2 * PI * 200e6;
    cfg.g2 = 2 * PI * 220e6;
    cfg.g3 = 2 * PI * 240e6;
    cfg.omega = 2 * PI * 2.2e9;
    cfg.n_max = 2;
    const CompositeSpace space(cfg.n_max);
    const CompiledSchedule compiled(space, compile_ccz_schedule(cfg), cfg);

    for (int k = 0; k < 8; ++k) {
        const std::array<int, 3> bits = {(k >> 2) & 1, (k >> 1) & 1, k & 1};
        const CVector in = space.logical_basis_state(bits, cfg.encoding);
        const CVector out = compiled.apply(in);
        CHECK((out - Real(parity(bits[0], bits[1], bits[2])) * in)
                  .cwiseAbs()
                  .maxCoeff() < 1e-10);
    }
}

TEST_CASE("idealized gate amplitudes do not depend on the rate values") {
    ProtocolConfig a = reference_config();
    a.n_max = 2;
    ProtocolConfig b;
    b.g1 = 0.81e9;
    b.g2 = 1.47e9;
    b.g3 = 1.02e9;
    b.omega = 7.3e9;
    b.n_max = 2;

    const CompositeSpace space(2);
    const CompiledSchedule ca(space, compile_ccz_schedule(a), a);
    const CompiledSchedule cb(space, compile_ccz_schedule(b), b);
    for (int k = 0; k < 8; ++k) {
        const std::array<int, 3> bits = {(k >> 2) & 1, (k >> 1) & 1, k & 1};
        const CVector in = space.logical_basis_state(bits);
        CHECK((ca.apply(in) - cb.apply(in)).cwiseAbs().maxCoeff() < 1e-10);
    }
}

TEST_CASE("schedule application is linear over superposed inputs") {
    ProtocolConfig cfg = reference_config();
    cfg.n_max = 2;
    const CompositeSpace space(cfg.n_max);
    const CompiledSchedule compiled(space, compile_ccz_schedule(cfg), cfg);

    CVector sum = CVector::Zero(space.dim());
    CVector outputs = CVector::Zero(space.dim());
    for (int k = 0; k < 8; ++k) {
        const std::array<int, 3> bits = {(k >> 2) & 1, (k >> 1) & 1, k & 1};
        const CVector in = space.logical_basis_state(bits);
        sum += in;
        outputs += compiled.apply(in) / std::sqrt(8.0);
    }
    sum /= std::sqrt(8.0);
    CHECK((compiled.apply(sum) - outputs).cwiseAbs().maxCoeff() < 1e-10);
}

TEST_CASE("per-step tables replay exactly for every spectator assignment") {
    const StepTableCheck check = check_step_expectations(reference_config());
    CHECK(check.checked_mappings == 192);
    CHECK(check.max_deviation < 1e-10);

    // Every listed coefficient is a pure phase.
    for (const StepExpectation& table : step_expectations()) {
        for (const StepKetMap& row : table.rows) {
            for (const KetAmplitude& amp : row.after) {
                CHECK(std::abs(std::abs(amp.coeff) - 1.0) < 1e-15);
            }
        }
    }
}

TEST_CASE("spectator qudits are untouched while step one runs") {
    ProtocolConfig cfg = reference_config();
    cfg.n_max = 2;
    const CompositeSpace space(cfg.n_max);
    const CompiledSchedule compiled(space, compile_ccz_schedule(cfg), cfg);

    // Generic product input over the logical levels of all three qudits.
    CVector in = CVector::Zero(space.dim());
    const Complex a1{0.6, 0.0}, b1{0.0, 0.8};
    const Complex a2{0.28, 0.96}, b2{0.0, 0.0};
    const Complex a3{1.0 / std::sqrt(2.0), 0.0}, b3{0.5, -0.5};
    for (int l1 : {0, 1}) {
        for (int l2 : {0, 1}) {
            for (int l3 : {0, 1}) {
                const Complex amp = (l1 ? b1 : a1) * (l2 ? b2 : a2) * (l3 ? b3 : a3);
                in += amp * space.basis_state(l1, l2, l3, 0);
            }
        }
    }
    in.normalize();

    const auto states = compiled.trajectory(in);
    REQUIRE(states.size() == 16);
    const CVector& after_step1 = states[3];
    for (int q : {2, 3}) {
        const CMatrix before = space.reduced_qudit(in, q);
        const CMatrix after = space.reduced_qudit(after_step1, q);
        CHECK((before - after).cwiseAbs().maxCoeff() < 1e-10);
    }
}

TEST_CASE("simultaneous mode error shrinks as the drive gets stiffer") {
    ProtocolConfig cfg = reference_config();
    cfg.n_max = 2;
    cfg.mode = EvolutionMode::Simultaneous;
    const CompositeSpace space(cfg.n_max);
    const CVector in = space.logical_basis_state({1, 1, 1});
    const CVector target = -in;

    auto deviation = [&](Real ratio) {
        ProtocolConfig c = cfg;
        c.omega = ratio * c.g1;
        const CompiledSchedule compiled(space, compile_ccz_schedule(c), c);
        return (compiled.apply(in) - target).norm();
    };

    const Real at10 = deviation(10.0);
    const Real at40 = deviation(40.0);
    CHECK(at10 > 1e-6);  // genuine physical error at modest drive
    CHECK(at40 < at10);

    CHECK(rabi_ratio_warning(cfg).has_value() == false);
    ProtocolConfig weak = cfg;
    weak.omega = 3.0 * weak.g1;
    CHECK(rabi_ratio_warning(weak).has_value());
}

TEST_CASE("density run with zero rates matches the pure-state run") {
    ProtocolConfig cfg = reference_config();
    cfg.n_max = 2;
    const CompositeSpace space(cfg.n_max);
    const Schedule sched = compile_ccz_schedule(cfg);
    const CompiledSchedule compiled(space, sched, cfg);

    const CVector in = space.logical_basis_state({1, 1, 0});
    const CVector out = compiled.apply(in);
    const CMatrix pure = out * out.adjoint();

    const CMatrix evolved = run_schedule_density(
        CMatrix(in * in.adjoint()), sched, cfg);

    // Trace distance between the two final density operators.
    Eigen::SelfAdjointEigenSolver<CMatrix> solver(evolved - pure);
    CHECK(0.5 * solver.eigenvalues().cwiseAbs().sum() < 1e-8);
}

TEST_CASE("zero-duration segments are legal no-ops") {
    ProtocolConfig cfg = reference_config();
    cfg.n_max = 2;
    const CompositeSpace space(cfg.n_max);

    Schedule sched;
    Segment wait;
    wait.kind = Segment::Kind::Wait;
    wait.duration = 0.0;
    Segment pulse;
    pulse.kind = Segment::Kind::Pulse;
    pulse.pulse = PulseDrive{1, {0, 2}, cfg.omega, 0.3, 0.0};
    pulse.duration = 0.0;
    sched.segments = {wait, pulse};

    const CompiledSchedule compiled(space, sched, cfg);
    const CVector in = space.basis_state(3, 2, 1, 1);
    CHECK((compiled.apply(in) - in).cwiseAbs().maxCoeff() < 1e-12);
}

TEST_CASE("runner rejects states from a mismatched space") {
    ProtocolConfig cfg = reference_config();
    cfg.n_max = 3;
    const Schedule sched = compile_ccz_schedule(cfg);
    const CVector wrong = CVector::Zero(128);
    CHECK_THROWS_AS(run_schedule(wrong, sched, cfg), std::domain_error);
}

}  // TEST_SUITE

}  // namespace
