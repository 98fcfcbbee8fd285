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

#ifndef SQZ_JORDANFN_H
#define SQZ_JORDANFN_H

#include <vector>

#include "sqz/types.h"

namespace sqz {

struct JordanBlock {
    Complex lambda = 0.0;
    int size = 1;
};

/// G = D J D^-1 with J block bidiagonal (ones on the superdiagonal).
struct JordanSpec {
    CMatrix D;
    std::vector<JordanBlock> blocks;
    double residual = 0.0;   // ||D J D^-1 - G|| when known
    double condition = 0.0;  // 2-norm condition number of D
};

/// int_0^t exp(J s) ds for a single block; upper triangular.
CMatrix block_F1(Complex lambda, int size, double t);

/// int_0^t int_0^tau exp(J s) ds dtau for a single block; upper triangular.
CMatrix block_F2(Complex lambda, int size, double t);

CMatrix jordan_matrix(const std::vector<JordanBlock> &blocks);

double condition_number(const CMatrix &m);

/// Fills residual and condition, throwing kAccuracy if D J D^-1 misses g by more than 1e-8 ||g||.
void check_jordan(JordanSpec &spec, const CMatrix &g);

/// D blockdiag(F_k) D^-1 for order 1 or 2.
CMatrix assemble(const JordanSpec &spec, double t, int order);

/// Numerical Jordan structure with eigenvalue clustering at tolerance tol.
JordanSpec cluster_jordan(const CMatrix &g, double tol = 1e-6);

}  // namespace sqz

#endif
