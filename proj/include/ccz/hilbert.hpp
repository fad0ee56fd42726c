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

#include "ccz/types.hpp"

namespace ccz {

inline constexpr int NUM_QUDITS = 3;
inline constexpr int QUDIT_DIM = 4;

struct QuditSpec {
    int id = 1;  // 1, 2 or 3
    static constexpr int dimension = QUDIT_DIM;
};

struct CavitySpec {
    int truncation = 3;  // Fock states 0 .. truncation-1, at least 2
};

/// Map from the logical bit of each qudit to the physical level label that
/// stores it. Qudits 1 and 2 use their two lowest levels in label order;
/// qudit 3 has the label-to-energy ordering of its two lowest levels
/// inverted, but since all dynamics are label-driven the stored map is the
/// identity for it as well.
class LogicalEncoding {
public:
    LogicalEncoding();  // identity map, bit b -> level b on every qudit

    LogicalEncoding(const std::array<std::array<int, 2>, NUM_QUDITS>& levels);

    /// Physical level storing logical bit `bit` of qudit `qudit` (1-based).
    int level(int qudit, int bit) const;

private:
    std::array<std::array<int, 2>, NUM_QUDITS> levels_;
};

/// Flattened basis tuple (l1, l2, l3, n).
struct BasisTuple {
    int l1 = 0;
    int l2 = 0;
    int l3 = 0;
    int n = 0;

    bool operator==(const BasisTuple&) const = default;
};

/// Tensor product of three four-level qudits and one truncated cavity mode,
/// with row-major basis ordering (l1, l2, l3, n):
///
///   index = ((l1*4 + l2)*4 + l3)*n_max + n
///
/// Owns all index arithmetic and operator embeddings for the composite space.
class CompositeSpace {
public:
    explicit CompositeSpace(int cavity_truncation = 3);

    int n_max() const { return n_max_; }
    int dim() const { return dim_; }  // 64 * n_max

    /// Flat index of |l1 l2 l3> |n>. Throws std::domain_error when any level
    /// or the photon number is out of range.
    int index(int l1, int l2, int l3, int n) const;
    int index(const BasisTuple& t) const { return index(t.l1, t.l2, t.l3, t.n); }

    /// Inverse of index().
    BasisTuple tuple(int index) const;

    /// Unit ket on the given basis element.
    CVector basis_state(int l1, int l2, int l3, int n) const;

    /// I (x) ... (x) local (x) ... (x) I_cavity with `local` acting on the
    /// chosen qudit (1-based).
    CMatrix embed_qudit(int qudit, const CMatrix& local) const;

    /// I (x) I (x) I (x) local acting on the cavity factor.
    CMatrix embed_cavity(const CMatrix& local) const;

    /// Product state with each qudit at its encoded level for the given bits
    /// and the cavity in vacuum.
    CVector logical_basis_state(const std::array<int, 3>& bits,
                                const LogicalEncoding& enc = {}) const;

    /// Rank-8 projector onto the encoded computational subspace with the
    /// cavity in vacuum.
    CMatrix logical_projector(const LogicalEncoding& enc = {}) const;

    /// 4x4 reduced density matrix of one qudit (1-based).
    CMatrix reduced_qudit(const CVector& psi, int qudit) const;
    CMatrix reduced_qudit(const CMatrix& rho, int qudit) const;

    /// n_max x n_max reduced density matrix of the cavity mode.
    CMatrix reduced_cavity(const CVector& psi) const;
    CMatrix reduced_cavity(const CMatrix& rho) const;

private:
    void check_qudit_id(int qudit) const;

    int n_max_;
    int dim_;
};

/// |to><from| on a single qudit.
CMatrix level_transfer(int to, int from);

/// |level><level| on a single qudit.
CMatrix level_projector(int level);

/// Cavity annihilation operator a in an n_max-dimensional Fock basis,
/// a|n> = sqrt(n)|n-1>.
CMatrix annihilation(int n_max);

}  // namespace ccz
