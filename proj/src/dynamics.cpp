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

#include "ccz/dynamics.hpp"

#include <cmath>
#include <stdexcept>

namespace ccz {

namespace {

void check_coupling(const JcCoupling& c) {
    if (c.qudit < 1 || c.qudit > NUM_QUDITS) {
        throw std::domain_error("coupling qudit id must be 1, 2 or 3");
    }
    if (!(c.g > 0.0)) {
        throw std::domain_error("coupling rate g must be positive");
    }
}

void check_drive(const PulseDrive& d) {
    if (d.qudit < 1 || d.qudit > NUM_QUDITS) {
        throw std::domain_error("drive qudit id must be 1, 2 or 3");
    }
    const auto& tr = d.transition;
    if (tr.lower < 0 || tr.lower >= QUDIT_DIM || tr.upper < 0 ||
        tr.upper >= QUDIT_DIM || tr.lower == tr.upper) {
        throw std::domain_error("drive transition levels must be distinct and in range");
    }
    if (!(d.rabi > 0.0)) {
        throw std::domain_error("drive Rabi rate must be positive");
    }
    if (d.duration < 0.0) {
        throw std::domain_error("drive duration must be nonnegative");
    }
}

void check_hermitian_input(const CMatrix& h) {
    const Real scale = std::max<Real>(1.0, h.cwiseAbs().maxCoeff());
    if (hermiticity_defect(h) > 1e-10 * scale) {
        throw std::domain_error("Hamiltonian must be Hermitian");
    }
}

}  // namespace

CMatrix jc_hamiltonian(const CompositeSpace& space, const JcCoupling& coupling) {
    check_coupling(coupling);
    const CMatrix a = annihilation(space.n_max());
    const CMatrix lower_full = space.embed_cavity(CMatrix(a.adjoint())) *
                               space.embed_qudit(coupling.qudit, level_transfer(2, 3));
    return coupling.g * (lower_full + lower_full.adjoint());
}

CMatrix jc_hamiltonian(const CompositeSpace& space,
                       const std::vector<JcCoupling>& couplings) {
    CMatrix h = CMatrix::Zero(space.dim(), space.dim());
    for (const auto& c : couplings) {
        h += jc_hamiltonian(space, c);
    }
    return h;
}

CMatrix pulse_hamiltonian(const CompositeSpace& space, const PulseDrive& drive) {
    check_drive(drive);
    CMatrix local = CMatrix::Zero(QUDIT_DIM, QUDIT_DIM);
    const Complex amp = drive.rabi * std::exp(IMAG_UNIT * drive.phase);
    local(drive.transition.lower, drive.transition.upper) = amp;
    local(drive.transition.upper, drive.transition.lower) = std::conj(amp);
    return space.embed_qudit(drive.qudit, local);
}

CMatrix jc_propagator_closed(const CompositeSpace& space,
                             const JcCoupling& coupling, Real t) {
    check_coupling(coupling);
    if (t < 0.0) {
        throw std::domain_error("propagation time must be nonnegative");
    }
    CMatrix u = CMatrix::Zero(space.dim(), space.dim());
    for (int col = 0; col < space.dim(); ++col) {
        BasisTuple tup = space.tuple(col);
        int* level = (coupling.qudit == 1)   ? &tup.l1
                     : (coupling.qudit == 2) ? &tup.l2
                                             : &tup.l3;
        // Doublet partner of |3,n> is |2,n+1>; the edge state |3,n_max-1>
        // has none in the truncated space and stays dark.
        if (*level == 3 && tup.n + 1 < space.n_max()) {
            const Real theta = coupling.g * std::sqrt(Real(tup.n + 1)) * t;
            u(col, col) = std::cos(theta);
            *level = 2;
            tup.n += 1;
            u(space.index(tup), col) = -IMAG_UNIT * std::sin(theta);
        } else if (*level == 2 && tup.n >= 1) {
            const Real theta = coupling.g * std::sqrt(Real(tup.n)) * t;
            u(col, col) = std::cos(theta);
            *level = 3;
            tup.n -= 1;
            u(space.index(tup), col) = -IMAG_UNIT * std::sin(theta);
        } else {
            u(col, col) = 1.0;
        }
    }
    return u;
}

CMatrix pulse_propagator_closed(const CompositeSpace& space,
                                const PulseDrive& drive) {
    check_drive(drive);
    const Real theta = drive.rabi * drive.duration;
    const int i = drive.transition.lower;
    const int j = drive.transition.upper;
    CMatrix local = CMatrix::Identity(QUDIT_DIM, QUDIT_DIM);
    local(i, i) = std::cos(theta);
    local(j, j) = std::cos(theta);
    local(j, i) = -IMAG_UNIT * std::exp(-IMAG_UNIT * drive.phase) * std::sin(theta);
    local(i, j) = -IMAG_UNIT * std::exp(IMAG_UNIT * drive.phase) * std::sin(theta);
    return space.embed_qudit(drive.qudit, local);
}

SpectralPropagator::SpectralPropagator(const CMatrix& h) {
    check_hermitian_input(h);
    Eigen::SelfAdjointEigenSolver<CMatrix> solver(h);
    if (solver.info() != Eigen::Success) {
        throw std::runtime_error("eigendecomposition failed");
    }
    eigenvalues_ = solver.eigenvalues();
    eigenvectors_ = solver.eigenvectors();
}

CMatrix SpectralPropagator::at(Real t) const {
    const CVector phases =
        (-IMAG_UNIT * t * eigenvalues_.cast<Complex>().array()).exp();
    return eigenvectors_ * phases.asDiagonal() * eigenvectors_.adjoint();
}

CMatrix propagator(const CMatrix& h, Real t) {
    return SpectralPropagator(h).at(t);
}

CMatrix evolve_numeric(const CMatrix& h, Real t) {
    check_hermitian_input(h);
    const auto dim = h.rows();
    CMatrix a = -IMAG_UNIT * t * h;
    // Scale ||A||_1 below 1/2, exponentiate by Taylor series, square back.
    const Real norm1 = a.cwiseAbs().colwise().sum().maxCoeff();
    int squarings = 0;
    if (norm1 > 0.5) {
        squarings = static_cast<int>(std::ceil(std::log2(norm1 / 0.5)));
        a /= std::pow(2.0, squarings);
    }
    CMatrix result = CMatrix::Identity(dim, dim);
    CMatrix term = CMatrix::Identity(dim, dim);
    for (int k = 1; k <= 40; ++k) {
        term = CMatrix(term * a) / Real(k);
        result += term;
        if (term.cwiseAbs().maxCoeff() < 1e-18) break;
    }
    for (int s = 0; s < squarings; ++s) {
        result = CMatrix(result * result);
    }
    return result;
}

CMatrix collapse_matrix(const CompositeSpace& space, const CollapseOperator& op) {
    if (op.rate < 0.0) {
        throw std::domain_error("collapse rate must be nonnegative");
    }
    switch (op.kind) {
        case CollapseKind::Level3Relaxation: {
            if (op.relax_target != 1 && op.relax_target != 2) {
                throw std::domain_error("relaxation target must be level 1 or 2");
            }
            return std::sqrt(op.rate) *
                   space.embed_qudit(op.qudit, level_transfer(op.relax_target, 3));
        }
        case CollapseKind::Level3Dephasing:
            return std::sqrt(2.0 * op.rate) *
                   space.embed_qudit(op.qudit, level_projector(3));
        case CollapseKind::CavityDecay:
            return std::sqrt(op.rate) *
                   space.embed_cavity(annihilation(space.n_max()));
    }
    throw std::domain_error("unknown collapse kind");
}

std::vector<CollapseOperator> standard_collapse_set(Real gamma3r_inv,
                                                    Real gamma3p_inv,
                                                    Real kappa_inv,
                                                    int relax_target) {
    if (gamma3r_inv <= 0.0 || gamma3p_inv <= 0.0 || kappa_inv <= 0.0) {
        throw std::domain_error("decoherence lifetimes must be positive");
    }
    std::vector<CollapseOperator> ops;
    ops.reserve(2 * NUM_QUDITS + 1);
    for (int q = 1; q <= NUM_QUDITS; ++q) {
        ops.push_back({CollapseKind::Level3Relaxation, 1.0 / gamma3r_inv, q,
                       relax_target});
        ops.push_back({CollapseKind::Level3Dephasing, 1.0 / gamma3p_inv, q, 2});
    }
    ops.push_back({CollapseKind::CavityDecay, 1.0 / kappa_inv, 0, 2});
    return ops;
}

LindbladGenerator::LindbladGenerator(const CompositeSpace& space,
                                     const CMatrix& h,
                                     const std::vector<CollapseOperator>& collapses)
    : dim_(space.dim()) {
    check_hermitian_input(h);
    CMatrix k = -IMAG_UNIT * h;
    for (const auto& op : collapses) {
        const CMatrix l = collapse_matrix(space, op);
        k -= 0.5 * (l.adjoint() * l);
        std::vector<Entry> entries;
        for (int c = 0; c < dim_; ++c) {
            for (int r = 0; r < dim_; ++r) {
                if (l(r, c) != Complex{0.0, 0.0}) {
                    entries.push_back({r, c, l(r, c)});
                }
            }
        }
        collapse_entries_.push_back(std::move(entries));
    }
    k_ = k.sparseView();
    k_adj_ = CMatrix(k.adjoint()).sparseView();
}

void LindbladGenerator::rhs_into(const CMatrix& rho, CMatrix& out) const {
    out.noalias() = k_ * rho;
    out.noalias() += rho * k_adj_;
    for (const auto& entries : collapse_entries_) {
        for (const Entry& a : entries) {
            for (const Entry& b : entries) {
                out(a.row, b.row) += a.value * std::conj(b.value) * rho(a.col, b.col);
            }
        }
    }
}

CMatrix LindbladGenerator::rhs(const CMatrix& rho) const {
    CMatrix out(dim_, dim_);
    rhs_into(rho, out);
    return out;
}

CMatrix LindbladGenerator::step(const CMatrix& rho, Real dt) const {
    return evolve(rho, dt, 1);
}

CMatrix LindbladGenerator::evolve(const CMatrix& rho, Real t, int steps) const {
    if (steps < 1) {
        throw std::domain_error("step count must be positive");
    }
    if (t < 0.0) {
        throw std::domain_error("evolution time must be nonnegative");
    }
    if (rho.rows() != dim_ || rho.cols() != dim_) {
        throw std::domain_error("density matrix dimension mismatch");
    }
    const Real dt = t / steps;
    CMatrix cur = rho;
    CMatrix k1(dim_, dim_), k2(dim_, dim_), k3(dim_, dim_), k4(dim_, dim_);
    CMatrix stage(dim_, dim_);
    for (int i = 0; i < steps; ++i) {
        rhs_into(cur, k1);
        stage.noalias() = cur + (0.5 * dt) * k1;
        rhs_into(stage, k2);
        stage.noalias() = cur + (0.5 * dt) * k2;
        rhs_into(stage, k3);
        stage.noalias() = cur + dt * k3;
        rhs_into(stage, k4);
        cur.noalias() += (dt / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
    }
    return cur;
}

CMatrix lindblad_step(const CompositeSpace& space, const CMatrix& rho,
                      const CMatrix& h,
                      const std::vector<CollapseOperator>& collapses, Real dt) {
    return LindbladGenerator(space, h, collapses).step(rho, dt);
}

CMatrix lindblad_evolve(const CompositeSpace& space, const CMatrix& rho,
                        const CMatrix& h,
                        const std::vector<CollapseOperator>& collapses, Real t,
                        int steps) {
    return LindbladGenerator(space, h, collapses).evolve(rho, t, steps);
}

}  // namespace ccz
