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
#include <optional>
#include <string>
#include <vector>

#include "ccz/dynamics.hpp"
#include "ccz/hilbert.hpp"
#include "ccz/types.hpp"

namespace ccz {

/// One schedule entry: either a resonant pulse on one qudit or a free wait.
/// Waits evolve under the sum of all three cavity couplings; nothing is ever
/// switched off for a spectator.
struct Segment {
    enum class Kind { Pulse, Wait };

    Kind kind = Kind::Wait;
    PulseDrive pulse;      // meaningful when kind == Pulse
    Real duration = 0.0;   // seconds; mirrors pulse.duration for pulses
    int step = 0;          // 1..5 for the compiled gate program, 0 otherwise
    char subop = '?';      // 'a', 'b' or 'c' within a step
};

struct ProtocolConfig {
    Real g1 = 0.0;  // rad/s
    Real g2 = 0.0;
    Real g3 = 0.0;
    Real omega = 0.0;  // pulse Rabi rate, rad/s
    EvolutionMode mode = EvolutionMode::Idealized;
    LogicalEncoding encoding;
    int n_max = 3;
    std::vector<CollapseOperator> collapses;

    std::vector<JcCoupling> couplings() const {
        return {{1, g1}, {2, g2}, {3, g3}};
    }
};

struct Schedule {
    std::vector<Segment> segments;
    Real total_duration = 0.0;
};

/// The five-step gate program, 15 annotated segments:
///   step 1: pulse q1 (1,3) phi=-pi/2 | wait pi/2g1 | pulse q1 (0,2) phi=-pi/2
///   step 2: pulse q2 (0,2) phi=-pi/2 | wait pi/2g2 | pulse q2 (0,3) phi=pi
///   step 3: pulse q3 (1,2) phi=-pi/2 | wait pi/g3  | pulse q3 (1,2) phi=+pi/2
///   step 4: pulse q2 (0,3) phi=pi    | wait pi/2g2 | pulse q2 (0,2) phi=+pi/2
///   step 5: pulse q1 (0,2) phi=+pi/2 | wait pi/2g1 | pulse q1 (1,3) phi=-pi/2
/// Every pulse lasts pi/(2 omega). Throws std::domain_error on nonpositive
/// rates.
Schedule compile_ccz_schedule(const ProtocolConfig& cfg);

/// pi/g1 + pi/g2 + pi/g3 + 5 pi/omega; equals the compiled schedule's
/// total_duration.
Real total_operation_time(const ProtocolConfig& cfg);

/// Advisory message when Simultaneous mode is requested with omega below
/// five times the largest coupling (the separation the pulse rotations rely
/// on); empty when the configuration is comfortable.
std::optional<std::string> rabi_ratio_warning(const ProtocolConfig& cfg);

/// Per-segment unitaries for repeated application of one schedule. The wait
/// Hamiltonian is eigendecomposed once and reused across all wait segments.
/// Idealized mode applies pulses as closed-form rotations; Simultaneous mode
/// exponentiates H_pulse plus all cavity couplings.
class CompiledSchedule {
public:
    CompiledSchedule(const CompositeSpace& space, const Schedule& sched,
                     const ProtocolConfig& cfg);

    CVector apply(const CVector& initial) const;

    /// State after each prefix of the schedule, including the input
    /// (size = segments + 1).
    std::vector<CVector> trajectory(const CVector& initial) const;

    const std::vector<CMatrix>& segment_unitaries() const { return unitaries_; }

private:
    int dim_;
    std::vector<CMatrix> unitaries_;
};

/// One-shot convenience runner; initial must live on CompositeSpace(cfg.n_max).
CVector run_schedule(const CVector& initial, const Schedule& sched,
                     const ProtocolConfig& cfg);

/// Per-segment master-equation integration of one schedule. Pulse segments
/// use the segment Hamiltonian dictated by cfg.mode; collapse channels come
/// from cfg.collapses.
class DensityEngine {
public:
    DensityEngine(const CompositeSpace& space, const Schedule& sched,
                  const ProtocolConfig& cfg);

    /// Fixed per-segment RK4 step count.
    CMatrix run(const CMatrix& rho0, int steps_per_segment) const;

    /// Doubles the per-segment step count until two successive full runs
    /// agree within tol in max norm; reports the accepted count through
    /// chosen_steps so bulk callers can reuse it with run().
    CMatrix run_adaptive(const CMatrix& rho0, Real tol,
                         int* chosen_steps = nullptr) const;

private:
    std::vector<LindbladGenerator> generators_;
    std::vector<Real> durations_;
};

/// One-shot density runner with step halving at tolerance 1e-9.
CMatrix run_schedule_density(const CMatrix& initial, const Schedule& sched,
                             const ProtocolConfig& cfg);

/// Expected amplitude of the active qudit and cavity after one sub-op.
struct KetAmplitude {
    Complex coeff;  // unit modulus
    int level = 0;
    int photon = 0;
};

/// One input ket of a step table and its image after sub-ops (a), (b), (c).
struct StepKetMap {
    int level_in = 0;
    int photon_in = 0;
    std::array<KetAmplitude, 3> after;
};

/// Transformation table of one protocol step on its active qudit.
struct StepExpectation {
    int step = 0;   // 1..5
    int qudit = 0;  // driven system
    std::vector<StepKetMap> rows;
};

/// The five per-step tables with every intermediate amplitude.
std::vector<StepExpectation> step_expectations();

struct StepTableCheck {
    Real max_deviation = 0.0;
    int checked_mappings = 0;
};

/// Replays every table row through the compiled segments in Idealized mode,
/// sweeping all four spectator bit assignments, and reports the worst
/// amplitude deviation.
StepTableCheck check_step_expectations(const ProtocolConfig& cfg);

}  // namespace ccz
