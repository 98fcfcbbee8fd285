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

#ifndef SQZ_MATFUN_H
#define SQZ_MATFUN_H

#include <vector>

#include "sqz/types.h"

namespace sqz {

/// Matrix exponential by Pade scaling-and-squaring (orders 3..13, 1-norm
/// backward-error bounds). Throws kDimension for non-square input and kRange
/// when the result overflows.
CMatrix expm(const CMatrix &m);

/// e^{Mt} together with the phi-functions
///   phi1(M, t) = t   (I + (Mt)/2! + (Mt)^2/3! + ...)
///   phi2(M, t) = t^2 (I/2! + (Mt)/3! + ...)
/// evaluated from a single exponential of an augmented block matrix, so that
/// singular and nilpotent M need no special handling.
struct PhiFunctions {
    CMatrix exp;
    CMatrix phi1;
    CMatrix phi2;
};
PhiFunctions phi_functions(const CMatrix &m, double t);

/// e^{Mt} and phi1(M, t) only (cheaper augmented exponential).
struct ExpPhi1 {
    CMatrix exp;
    CMatrix phi1;
};
ExpPhi1 exp_phi1(const CMatrix &m, double t);

CMatrix phi1(const CMatrix &m, double t);
CMatrix phi2(const CMatrix &m, double t);

/// Principal matrix logarithm. Refuses inputs with an eigenvalue within 1e-10
/// of the closed negative real axis (kDomain) rather than picking a branch.
CMatrix logm_principal(const CMatrix &m);

/// Hermitian PSD square root via eigendecomposition.
CMatrix sqrtm_psd(const CMatrix &h);

struct Polar {
    CMatrix unitary;
    CMatrix positive;
};
/// M = U P with U unitary and P = (M* M)^{1/2}. Singular M is a kRank error.
Polar polar(const CMatrix &m);

/// Takagi factorization in the convention A = U* diag(d) conj(U), so that
/// A conj(A) = U* diag(d)^2 U. Singular values come out nonincreasing.
struct Takagi {
    CMatrix unitary;
    RVector singular_values;
};
Takagi takagi(const CMatrix &a);

/// Square root following the fixed principal rule: arguments in (-pi, pi]
/// map to (-pi/2, pi/2], so the root is discontinuous across the negative
/// real axis and sqrt(-1) = i.
Complex principal_sqrt(Complex z);

/// Principal argument normalised to (-pi, pi].
double principal_arg(Complex z);

/// Wraps an angle to (-pi, pi].
double wrap_angle(double x);

/// Sum of principal logarithms of the eigenvalues. This is a continuous
/// determination of log det M on any convex set of matrices whose spectrum
/// stays in the open right half-plane.
Complex sum_log_eigenvalues(const CMatrix &m);

void require_square(const CMatrix &m, const char *what);

}  // namespace sqz

#endif
