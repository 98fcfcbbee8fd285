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

#ifndef SQZ_GAUSSIAN_H
#define SQZ_GAUSSIAN_H

#include <string>
#include <vector>

#include "sqz/normalform.h"
#include "sqz/types.h"

namespace sqz {

/// psi(x) = exp(log_prefactor + |x|^2/2 - (x + shift, M (x + shift))).
struct GaussianState {
    int n = 0;
    Complex log_prefactor = 0.0;
    CMatrix M;
    CVector shift;
    std::string meta;
};

/// Image of exp(iHt)|z> in the position representation.
GaussianState to_gaussian(const NormalForm &nf, const CVector &z);

GaussianState vacuum_state(int n);

/// log <psi1|psi2>; the determinant root is the principal one since Re(Omega) > 0.
Complex inner_log(const GaussianState &psi1, const GaussianState &psi2);
Complex inner(const GaussianState &psi1, const GaussianState &psi2);

struct GramMatrix {
    int m = 0;
    CMatrix entries;
    std::vector<std::string> sources;
    std::string branch = "principal";
};

GramMatrix gram(const std::vector<GaussianState> &states);

enum class OrthoMethod { kLoewdin, kGramSchmidt };

/// W with W^* g W = I.
CMatrix orthonormalize(const GramMatrix &g, OrthoMethod method);

double orthonormality_residual(const GramMatrix &g, const CMatrix &w);

/// alpha_t of the norm identity for exp(iHt)|0>.
double norm_alpha(const NormalForm &nf);

/// |exp(iHt)|0>|^2 from the closed Gaussian integral.
double norm_squared(const NormalForm &nf);

struct DeterminantResiduals {
    double chain = 0.0;          // det Phi det conj(Phi) det(I - R conj(R)) - 1
    double five_factor = 0.0;    // det Phi det conj(Phi) det(I-R) det(I-conj R) det Omega - 1
    double omega_inverse = 0.0;  // Omega^-1 - (Phi^* - Psi^*)(Phi - Psi)
    double omega_symmetry = 0.0;
};
DeterminantResiduals determinant_identities(const NormalForm &nf);

}  // namespace sqz

#endif
