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

#include <complex>

#include <Eigen/Dense>

namespace ccz {

using Real = double;
using Complex = std::complex<Real>;

// Dense complex types over the composite Hilbert space. Operators and
// density matrices are CMatrix, kets are CVector.
using CMatrix = Eigen::MatrixXcd;
using CVector = Eigen::VectorXcd;

inline constexpr Complex IMAG_UNIT{0.0, 1.0};

/// Largest absolute entry of A - A^dagger.
template <typename Derived>
Real hermiticity_defect(const Eigen::MatrixBase<Derived>& a) {
    return (a - a.adjoint()).cwiseAbs().maxCoeff();
}

/// Largest absolute entry of U^dagger U - I.
template <typename Derived>
Real unitarity_defect(const Eigen::MatrixBase<Derived>& u) {
    const auto dim = u.cols();
    return (u.adjoint() * u - CMatrix::Identity(dim, dim)).cwiseAbs().maxCoeff();
}

template <typename Derived>
bool is_hermitian(const Eigen::MatrixBase<Derived>& a, Real tol = 1e-12) {
    return hermiticity_defect(a) < tol;
}

template <typename Derived>
bool is_unitary(const Eigen::MatrixBase<Derived>& u, Real tol = 1e-10) {
    return unitarity_defect(u) < tol;
}

}  // namespace ccz
