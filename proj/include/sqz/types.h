// Copyright 2026 The sqz Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef SQZ_TYPES_H
#define SQZ_TYPES_H

#include <complex>
#include <numbers>

#include <Eigen/Dense>

namespace sqz {

using Complex = std::complex<double>;
using CMatrix = Eigen::MatrixXcd;
using CVector = Eigen::VectorXcd;
using RVector = Eigen::VectorXd;

inline constexpr double kPi = std::numbers::pi;
inline constexpr Complex kI{0.0, 1.0};

/// Structural tolerance used for symmetry / Hermiticity / unitarity checks:
/// 1e-12 * max(1, ||M||_F).
inline double structural_tolerance(const CMatrix &m) {
    return 1e-12 * std::max(1.0, m.norm());
}

/// Bilinear form (x, y) = sum_k x_k y_k. No conjugation.
inline Complex bilinear(const CVector &x, const CVector &y) {
    return (x.transpose() * y)(0, 0);
}

/// Operator 2-norm (largest singular value).
double norm2(const CMatrix &m);

/// Smallest singular value.
double min_singular_value(const CMatrix &m);

/// Stacks (v; conj(v)).
CVector stack_conj(const CVector &v);

}  // namespace sqz

#endif
