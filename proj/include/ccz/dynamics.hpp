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

#include <vector>

#include <Eigen/Eigenvalues>
#include <Eigen/SparseCore>

#include "ccz/hilbert.hpp"
#include "ccz/types.hpp"

namespace ccz {

/// Resonant coupling of one qudit's 2<->3 transition to the cavity mode.
/// g is angular (rad/s), hbar = 1 throughout.
struct JcCoupling {
    int qudit = 1;
    Real g = 0.0;
};

/// Pulse-addressed transition; `lower` is the lower-energy level by the
/// per-qudit label convention.
struct TransitionSelector {
    int lower = 0;
    int upper = 1;
};

/// Square pulse resonant with one transition of one qudit. rabi and phase
/// are the drive amplitude (rad/s) and initial phase (rad).
struct PulseDrive {
    int qudit = 1;
    TransitionSelector transition;
    Real rabi = 0.0;
    Real phase = 0.0;
    Real duration = 0.0;
};

enum class CollapseKind {
    Level3Relaxation,  // L = sqrt(rate) |target><3| on one qudit
    Level3Dephasing,   // L = sqrt(2 rate) |3><3|; rate is the coherence decay rate
    CavityDecay,       // L = sqrt(rate) a
};

struct CollapseOperator {
    CollapseKind kind = CollapseKind::CavityDecay;
    Real rate = 0.0;  // 1/s, >= 0
    int qudit = 0;    // required for the level-3 channels
    int relax_target = 2;  // level |3> relaxes into; 2 unless overridden
};

/// Idealized: pulses act alone (instantaneous rotations, cavity coupling
/// suspended for the pulse duration). Simultaneous: pulses evolve under
/// H_pulse + sum of all three cavity couplings, which stay on at all times.
enum class EvolutionMode {
    Idealized,
    Simultaneous,
};

/// H = g (a^+ |2><3| + a |3><2|) on the addressed qudit; couples
/// |3,n> <-> |2,n+1> only. Throws std::domain_error for g <= 0 or a bad id.
CMatrix jc_hamiltonian(const CompositeSpace& space, const JcCoupling& coupling);

/// Sum of the per-qudit cavity coupling Hamiltonians.
CMatrix jc_hamiltonian(const CompositeSpace& space,
                       const std::vector<JcCoupling>& couplings);

/// H = rabi (e^{i phase} |lower><upper| + e^{-i phase} |upper><lower|) on
/// the driven qudit, identity on the cavity factor.
CMatrix pulse_hamiltonian(const CompositeSpace& space, const PulseDrive& drive);

/// Closed-form exp(-iHt) for a single cavity coupling: each doublet
/// {|3,n>, |2,n+1>} rotates by angle g sqrt(n+1) t; all dark states
/// (driven qudit in {0,1}, |2>|0>_c, and the truncation edge |3,n_max-1>)
/// are left unchanged.
CMatrix jc_propagator_closed(const CompositeSpace& space,
                             const JcCoupling& coupling, Real t);

/// Closed-form pulse rotation with theta = rabi * duration:
///   |lower> -> cos(theta)|lower> - i e^{-i phase} sin(theta)|upper>
///   |upper> -> cos(theta)|upper> - i e^{+i phase} sin(theta)|lower>
CMatrix pulse_propagator_closed(const CompositeSpace& space,
                                const PulseDrive& drive);

/// exp(-iHt) for Hermitian H via one eigendecomposition, reusable across
/// durations. Throws std::domain_error on a non-Hermitian input.
class SpectralPropagator {
public:
    explicit SpectralPropagator(const CMatrix& h);

    CMatrix at(Real t) const;

private:
    Eigen::VectorXd eigenvalues_;
    CMatrix eigenvectors_;
};

/// Single-shot exp(-iHt) through SpectralPropagator.
CMatrix propagator(const CMatrix& h, Real t);

/// Brute-force exp(-iHt) by scaling-and-squaring of the Taylor series.
/// Independent of the spectral route; kept as the cross-check oracle.
/// Throws std::domain_error on a non-Hermitian input.
CMatrix evolve_numeric(const CMatrix& h, Real t);

/// Dense composite-space matrix of one collapse channel, rate folded in.
CMatrix collapse_matrix(const CompositeSpace& space, const CollapseOperator& op);

/// The seven standard decoherence channels built from lifetimes: level-3
/// relaxation and level-3 dephasing on each qudit, plus one cavity decay.
/// Throws std::domain_error on a nonpositive lifetime.
std::vector<CollapseOperator> standard_collapse_set(Real gamma3r_inv,
                                                    Real gamma3p_inv,
                                                    Real kappa_inv,
                                                    int relax_target = 2);

/// Right-hand side and fixed-step RK4 integrator for
///   d rho/dt = -i[H,rho] + sum_L (L rho L^+ - 1/2 {L^+L, rho}),
/// held in the K-form K rho + rho K^+ + sum_L L rho L^+ with
/// K = -iH - 1/2 sum_L L^+L. All operators are stored sparse; the
/// composite-space H and every collapse channel have O(1) entries per column.
class LindbladGenerator {
public:
    LindbladGenerator(const CompositeSpace& space, const CMatrix& h,
                      const std::vector<CollapseOperator>& collapses);

    CMatrix rhs(const CMatrix& rho) const;

    /// One classical RK4 step. Trace is conserved identically (every RHS
    /// evaluation is traceless), so step size only controls accuracy.
    CMatrix step(const CMatrix& rho, Real dt) const;

    /// `steps` equal RK4 steps spanning total time t; stage buffers are
    /// allocated once and reused, which is what keeps long runs cheap.
    CMatrix evolve(const CMatrix& rho, Real t, int steps) const;

private:
    struct Entry {
        int row;
        int col;
        Complex value;
    };

    void rhs_into(const CMatrix& rho, CMatrix& out) const;

    int dim_ = 0;
    Eigen::SparseMatrix<Complex> k_;
    Eigen::SparseMatrix<Complex> k_adj_;
    // Collapse channels as entry lists; every channel here has at most one
    // entry per column, so L rho L^+ is a cheap pairwise scatter.
    std::vector<std::vector<Entry>> collapse_entries_;
};

/// One RK4 step of the master equation (convenience wrapper).
CMatrix lindblad_step(const CompositeSpace& space, const CMatrix& rho,
                      const CMatrix& h,
                      const std::vector<CollapseOperator>& collapses, Real dt);

/// Fixed-step RK4 integration over total time t.
CMatrix lindblad_evolve(const CompositeSpace& space, const CMatrix& rho,
                        const CMatrix& h,
                        const std::vector<CollapseOperator>& collapses, Real t,
                        int steps);

}  // namespace ccz
