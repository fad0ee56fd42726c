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

#include <numbers>

#include "ccz/schedule_io.hpp"

namespace {

using namespace ccz;

ProtocolConfig sample_config() {
    ProtocolConfig cfg;
    cfg.g1 = 2 * std::numbers::pi * 200e6;
    cfg.g2 = 2 * std::numbers::pi * 220e6;
    cfg.g3 = 2 * std::numbers::pi * 240e6;
    cfg.omega = 2 * std::numbers::pi * 2.2e9;
    return cfg;
}

TEST_SUITE("schedule_io") {

TEST_CASE("compiled schedule round-trips bit-exactly") {
    const Schedule sched = compile_ccz_schedule(sample_config());
    const std::string text = emit_schedule(sched);
    const Schedule parsed = parse_schedule(text);

    REQUIRE(parsed.segments.size() == sched.segments.size());
    for (std::size_t k = 0; k < sched.segments.size(); ++k) {
        const Segment& a = sched.segments[k];
        const Segment& b = parsed.segments[k];
        CHECK(a.kind == b.kind);
        CHECK(a.duration == b.duration);  // bitwise equality required
        if (a.kind == Segment::Kind::Pulse) {
            CHECK(a.pulse.qudit == b.pulse.qudit);
            CHECK(a.pulse.transition.lower == b.pulse.transition.lower);
            CHECK(a.pulse.transition.upper == b.pulse.transition.upper);
            CHECK(a.pulse.phase == b.pulse.phase);
            CHECK(a.pulse.rabi == b.pulse.rabi);
            CHECK(a.pulse.duration == b.pulse.duration);
        }
    }
    // Emit is a fixed point after the first round trip.
    CHECK(emit_schedule(parsed) == text);
}

TEST_CASE("comments, blank lines and scientific notation are accepted") {
    const std::string text =
        "# gate program fragment\n"
        "\n"
        "pulse q=1 lo=1 hi=3 phase=-1.5707963267948966 rabi=1.3823e10 t=1.136e-10\n"
        "wait t=2.5e-9  # quarter period\n"
        "   wait t=0\n";
    const Schedule sched = parse_schedule(text);
    REQUIRE(sched.segments.size() == 3);
    CHECK(sched.segments[0].kind == Segment::Kind::Pulse);
    CHECK(sched.segments[0].pulse.rabi == doctest::Approx(1.3823e10));
    CHECK(sched.segments[1].duration == doctest::Approx(2.5e-9));
    CHECK(sched.segments[2].duration == 0.0);
    CHECK(sched.total_duration ==
          doctest::Approx(1.136e-10 + 2.5e-9));
}

TEST_CASE("violations are reported with line and column") {
    auto expect_error = [](const std::string& text, int line) {
        try {
            parse_schedule(text);
            FAIL_CHECK("expected ParseError for: " << text);
        } catch (const ParseError& err) {
            CHECK(err.line() == line);
            CHECK(err.column() >= 1);
        }
    };

    expect_error("drift t=1e-9\n", 1);
    expect_error("wait t=1e-9\nwait\n", 2);                       // missing t
    expect_error("wait t=abc\n", 1);                              // not a number
    expect_error("wait t=1e-9 t=2e-9\n", 1);                      // duplicate
    expect_error("wait t=1e-9 q=1\n", 1);                         // stray field
    expect_error("pulse q=4 lo=0 hi=2 phase=0 rabi=1 t=0\n", 1);  // bad qudit
    expect_error("pulse q=1 lo=2 hi=2 phase=0 rabi=1 t=0\n", 1);  // lo == hi
    expect_error("pulse q=1 lo=0 hi=2 phase=0 rabi=0 t=0\n", 1);  // rabi <= 0
    expect_error("wait t=-1e-9\n", 1);                            // negative t

    try {
        parse_schedule("wait t=1\nnope t=1\n");
    } catch (const ParseError& err) {
        CHECK(err.line() == 2);
        CHECK(err.column() == 1);
        CHECK(std::string(err.what()).find("line 2") != std::string::npos);
    }
}

TEST_CASE("parsed schedules execute like compiled ones") {
    const ProtocolConfig cfg = sample_config();
    ProtocolConfig cfg2 = cfg;
    cfg2.n_max = 2;
    const Schedule compiled = compile_ccz_schedule(cfg2);
    const Schedule parsed = parse_schedule(emit_schedule(compiled));

    const CompositeSpace space(cfg2.n_max);
    const CVector in = space.logical_basis_state({1, 1, 1});
    const CVector a = CompiledSchedule(space, compiled, cfg2).apply(in);
    const CVector b = CompiledSchedule(space, parsed, cfg2).apply(in);
    CHECK((a - b).cwiseAbs().maxCoeff() < 1e-12);
}

}  // TEST_SUITE

}  // namespace
