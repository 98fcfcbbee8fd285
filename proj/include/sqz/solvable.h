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

#ifndef SQZ_SOLVABLE_H
#define SQZ_SOLVABLE_H

#include "sqz/symplectic.h"
#include "sqz/types.h"

namespace sqz {

/// A = U^* diag(Dd) conj(U), B = U^* diag(Lambda) U, so that B A = A conj(B).
struct CommutingInstance {
    int n = 0;
    CMatrix U;
    RVector Dd;
    RVector Lambda;
    CMatrix A;
    CMatrix B;
    CMatrix DHerm;  // A conj(A) - B^2

    HamiltonianSpec spec(const CVector &h) const;
    HamiltonianSpec spec() const;
};

struct CommutingResiduals {
    double commutator = 0.0;  // [A conj(A), B]
    double intertwine = 0.0;  // B A - A conj(B)
    double symmetry = 0.0;
    double hermiticity = 0.0;
};
CommutingResiduals commuting_residuals(const CMatrix &a, const CMatrix &b);

CommutingInstance build_commuting(const CMatrix &u, const RVector &dd, const RVector &lambda);

/// exp(Gt) through the spectral expansion of DHerm.
SymplecticBlock closed_propagator(const CommutingInstance &inst, double t);

/// G^-1 from D^-1; throws kDegenerate when DHerm is singular.
CMatrix closed_inverse_generator(const CommutingInstance &inst);

}  // namespace sqz

#endif
