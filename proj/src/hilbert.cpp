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

#include "ccz/hilbert.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace ccz {

LogicalEncoding::LogicalEncoding() : levels_{{{0, 1}, {0, 1}, {0, 1}}} {}

LogicalEncoding::LogicalEncoding(
    const std::array<std::array<int, 2>, NUM_QUDITS>& levels)
    : levels_(levels) {
    for (const auto& pair : levels_) {
        for (int lvl : pair) {
            if (lvl < 0 || lvl >= QUDIT_DIM) {
                throw std::domain_error("logical encoding level out of range");
            }
        }
        if (pair[0] == pair[1]) {
            throw std::domain_error("logical encoding must map 0 and 1 to distinct levels");
        }
    }
}

int LogicalEncoding::level(int qudit, int bit) const {
    if (qudit < 1 || qudit > NUM_QUDITS) {
        throw std::domain_error("qudit id must be 1, 2 or 3");
    }
    if (bit != 0 && bit != 1) {
        throw std::domain_error("logical bit must be 0 or 1");
    }
    return levels_[qudit - 1][bit];
}

CompositeSpace::CompositeSpace(int cavity_truncation) : n_max_(cavity_truncation) {
    if (n_max_ < 2) {
        throw std::domain_error("cavity truncation must be at least 2");
    }
    dim_ = QUDIT_DIM * QUDIT_DIM * QUDIT_DIM * n_max_;
}

int CompositeSpace::index(int l1, int l2, int l3, int n) const {
    for (int l : {l1, l2, l3}) {
        if (l < 0 || l >= QUDIT_DIM) {
            throw std::domain_error("qudit level out of range: " + std::to_string(l));
        }
    }
    if (n < 0 || n >= n_max_) {
        throw std::domain_error("photon number out of range: " + std::to_string(n));
    }
    return ((l1 * QUDIT_DIM + l2) * QUDIT_DIM + l3) * n_max_ + n;
}

BasisTuple CompositeSpace::tuple(int index) const {
    if (index < 0 || index >= dim_) {
        throw std::domain_error("basis index out of range: " + std::to_string(index));
    }
    BasisTuple t;
    t.n = index % n_max_;
    index /= n_max_;
    t.l3 = index % QUDIT_DIM;
    index /= QUDIT_DIM;
    t.l2 = index % QUDIT_DIM;
    t.l1 = index / QUDIT_DIM;
    return t;
}

CVector CompositeSpace::basis_state(int l1, int l2, int l3, int n) const {
    CVector psi = CVector::Zero(dim_);
    psi(index(l1, l2, l3, n)) = 1.0;
    return psi;
}

void CompositeSpace::check_qudit_id(int qudit) const {
    if (qudit < 1 || qudit > NUM_QUDITS) {
        throw std::domain_error("qudit id must be 1, 2 or 3");
    }
}

CMatrix CompositeSpace::embed_qudit(int qudit, const CMatrix& local) const {
    check_qudit_id(qudit);
    if (local.rows() != QUDIT_DIM || local.cols() != QUDIT_DIM) {
        throw std::invalid_argument("qudit operator must be 4x4");
    }
    CMatrix out = CMatrix::Zero(dim_, dim_);
    for (int col = 0; col < dim_; ++col) {
        BasisTuple t = tuple(col);
        int* level = (qudit == 1) ? &t.l1 : (qudit == 2) ? &t.l2 : &t.l3;
        const int from = *level;
        for (int to = 0; to < QUDIT_DIM; ++to) {
            const Complex v = local(to, from);
            if (v == Complex{0.0, 0.0}) continue;
            *level = to;
            out(index(t), col) = v;
        }
        *level = from;
    }
    return out;
}

CMatrix CompositeSpace::embed_cavity(const CMatrix& local) const {
    if (local.rows() != n_max_ || local.cols() != n_max_) {
        throw std::invalid_argument("cavity operator dimension must match the truncation");
    }
    CMatrix out = CMatrix::Zero(dim_, dim_);
    for (int col = 0; col < dim_; ++col) {
        BasisTuple t = tuple(col);
        const int from = t.n;
        for (int to = 0; to < n_max_; ++to) {
            const Complex v = local(to, from);
            if (v == Complex{0.0, 0.0}) continue;
            t.n = to;
            out(index(t), col) = v;
        }
        t.n = from;
    }
    return out;
}

CVector CompositeSpace::logical_basis_state(const std::array<int, 3>& bits,
                                            const LogicalEncoding& enc) const {
    return basis_state(enc.level(1, bits[0]), enc.level(2, bits[1]),
                       enc.level(3, bits[2]), 0);
}

CMatrix CompositeSpace::logical_projector(const LogicalEncoding& enc) const {
    CMatrix proj = CMatrix::Zero(dim_, dim_);
    for (int k = 0; k < 8; ++k) {
        const std::array<int, 3> bits = {(k >> 2) & 1, (k >> 1) & 1, k & 1};
        const CVector psi = logical_basis_state(bits, enc);
        proj += psi * psi.adjoint();
    }
    return proj;
}

CMatrix CompositeSpace::reduced_qudit(const CVector& psi, int qudit) const {
    return reduced_qudit(CMatrix(psi * psi.adjoint()), qudit);
}

CMatrix CompositeSpace::reduced_qudit(const CMatrix& rho, int qudit) const {
    check_qudit_id(qudit);
    if (rho.rows() != dim_ || rho.cols() != dim_) {
        throw std::invalid_argument("density matrix dimension mismatch");
    }
    CMatrix red = CMatrix::Zero(QUDIT_DIM, QUDIT_DIM);
    for (int col = 0; col < dim_; ++col) {
        BasisTuple t = tuple(col);
        int* level = (qudit == 1) ? &t.l1 : (qudit == 2) ? &t.l2 : &t.l3;
        const int b = *level;
        for (int a = 0; a < QUDIT_DIM; ++a) {
            *level = a;
            red(a, b) += rho(index(t), col);
        }
        *level = b;
    }
    return red;
}

CMatrix CompositeSpace::reduced_cavity(const CVector& psi) const {
    return reduced_cavity(CMatrix(psi * psi.adjoint()));
}

CMatrix CompositeSpace::reduced_cavity(const CMatrix& rho) const {
    if (rho.rows() != dim_ || rho.cols() != dim_) {
        throw std::invalid_argument("density matrix dimension mismatch");
    }
    CMatrix red = CMatrix::Zero(n_max_, n_max_);
    for (int col = 0; col < dim_; ++col) {
        BasisTuple t = tuple(col);
        const int b = t.n;
        for (int a = 0; a < n_max_; ++a) {
            t.n = a;
            red(a, b) += rho(index(t), col);
        }
        t.n = b;
    }
    return red;
}

CMatrix level_transfer(int to, int from) {
    if (to < 0 || to >= QUDIT_DIM || from < 0 || from >= QUDIT_DIM) {
        throw std::domain_error("qudit level out of range");
    }
    CMatrix op = CMatrix::Zero(QUDIT_DIM, QUDIT_DIM);
    op(to, from) = 1.0;
    return op;
}

CMatrix level_projector(int level) { return level_transfer(level, level); }

CMatrix annihilation(int n_max) {
    if (n_max < 1) {
        throw std::domain_error("Fock truncation must be positive");
    }
    CMatrix a = CMatrix::Zero(n_max, n_max);
    for (int n = 1; n < n_max; ++n) {
        a(n - 1, n) = std::sqrt(static_cast<Real>(n));
    }
    return a;
}

}  // namespace ccz
