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

#ifndef SQZ_SYMPLECTIC_H
#define SQZ_SYMPLECTIC_H

#include <string>

#include "sqz/types.h"

namespace sqz {

/// Quadratic boson Hamiltonian
///   H = (i/2)[(a+, A a+) - (a, conj(A) a)] + (a+, B a) + i(a+, h) - i(a, conj(h))
/// with A complex symmetric, B Hermitian and h a complex drive vector.
struct HamiltonianSpec {
    int n = 0;
    CMatrix A;
    CMatrix B;
    CVector h;
    std::string label;

    /// Throws kValidation naming the violated invariant and offending entry.
    void validate() const;

    static HamiltonianSpec zero(int n);
};

/// 2n x 2n generator [[-iB, A], [conj(A), i conj(B)]] acting on (a; a+).
struct Generator {
    int n = 0;
    CMatrix G;
};

/// Residuals of the canonical commutation identities for (Phi, Psi):
///   Phi Phi* - Psi Psi* = I,   Phi* Phi - Psi^T conj(Psi) = I,
///   Phi Psi^T - Psi Phi^T = 0, Phi* Psi - Psi^T conj(Phi) = 0,
/// plus S^T J S = J for the full block matrix. Frobenius norms.
struct CcrResiduals {
    double phi_phistar = 0.0;
    double phistar_phi = 0.0;
    double phi_psit = 0.0;
    double phistar_psi = 0.0;
    double symplectic_form = 0.0;
    double tolerance = 0.0;  // 1e-10 (1 + ||Phi||_2^2)

    double max() const;
    bool ok() const {
        return max() <= tolerance;
    }
};

CcrResiduals ccr_residuals(const CMatrix &phi, const CMatrix &psi);

/// Blocks of S_t = e^{Gt} = [[Phi, Psi], [conj(Psi), conj(Phi)]].
struct SymplecticBlock {
    double t = 0.0;
    CMatrix Phi;
    CMatrix Psi;
    CcrResiduals ccr;

    int n() const {
        return static_cast<int>(Phi.rows());
    }
    CMatrix full() const;
    static SymplecticBlock identity(int n);
};

/// Inhomogeneous part of the Heisenberg evolution:
/// (h_t; hbar_t) = phi1(G, t) (h; conj(h)).
struct Drift {
    double t = 0.0;
    CVector h_t;
    CVector hbar_t;
};

Generator build_generator(const HamiltonianSpec &spec);

/// Extracts (Phi_t, Psi_t) from expm(Gt) and certifies the CCR identities;
/// kAccuracy if any residual exceeds the tolerance.
SymplecticBlock propagate(const Generator &gen, double t);

Drift drift(const Generator &gen, const CVector &h, double t);

/// Block at -t: (Phi*, -Psi^T).
SymplecticBlock invert(const SymplecticBlock &s);

/// Block product S1 S2 (Phi = Phi1 Phi2 + Psi1 conj(Psi2),
/// Psi = Phi1 Psi2 + Psi1 conj(Phi2)); times add.
SymplecticBlock compose(const SymplecticBlock &s1, const SymplecticBlock &s2);

/// J = [[0, I], [-I, 0]].
CMatrix symplectic_j(int n);

}  // namespace sqz

#endif
