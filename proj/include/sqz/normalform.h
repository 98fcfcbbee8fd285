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

#ifndef SQZ_NORMALFORM_H
#define SQZ_NORMALFORM_H

#include "sqz/quadrature.h"
#include "sqz/symplectic.h"
#include "sqz/types.h"

namespace sqz {

/// exp(iHt) = e^s exp(-(a+, R a+)/2 - (a+, g)) :exp((a+, (Phi^-1 - I) a)): exp((a, conj(rho) a)/2 + (conj(f), a)).
struct NormalForm {
    double t = 0.0;
    int n = 0;
    CMatrix Phi;
    CMatrix Psi;
    CMatrix R;
    CMatrix rho;
    CMatrix PhiInv;
    CVector h_t;
    CVector g;
    CVector f;
    Complex s = 0.0;
    int index = 0;
    CcrResiduals ccr;
};

/// Everything except s, evaluated from a single propagator factorization.
NormalForm coefficients(const Generator &gen, const CVector &h, double t);

/// Coefficients from a block and drift that were computed elsewhere.
NormalForm coefficients_from_block(const SymplecticBlock &block, const CVector &h_t);

/// Ind(0,t) from a trace and s from the algebraic route.
NormalForm normal_form(const HamiltonianSpec &spec, double t);
NormalForm normal_form(const HamiltonianSpec &spec, double t, int index);

Complex s_integral_rho(const HamiltonianSpec &spec, double t, const QuadratureOptions &options = {});
Complex s_integral_R(const HamiltonianSpec &spec, double t, const QuadratureOptions &options = {});

struct GammaValue {
    double t = 0.0;
    double gamma = 0.0;
};
GammaValue gamma_algebraic(const HamiltonianSpec &spec, double t);

/// Independent evaluations of gamma; each complex entry should be real.
struct GammaForms {
    double quadrature = 0.0;    // Im int (dh_s/ds, conj h_s) ds
    Complex bracket = 0.0;      // int (J (h_s; conj h_s), e^{Gs} (h; conj h)) ds / 2i
    Complex backward = 0.0;     // (J v, (I - Gt - e^{-Gt}) G^-2 v) / 2i
    Complex forward = 0.0;      // (J v, (e^{Gt} - Gt - I) G^-2 v) / 2i
};
GammaForms gamma_forms(const HamiltonianSpec &spec, double t, const QuadratureOptions &options = {});

/// Both algebraic forms are evaluated; they must agree to 1e-9.
Complex s_algebraic_general(const HamiltonianSpec &spec, double t, int index);

/// Requires det G away from zero; throws kDegenerate otherwise.
Complex s_algebraic_detG(const HamiltonianSpec &spec, double t, int index);

/// Berezin's normalizing factor, kept as a negative control.
Complex s_berezin(const HamiltonianSpec &spec, double t, const QuadratureOptions &options = {});

/// Squared norm of the state the Berezin factor would produce.
double berezin_implied_norm(const HamiltonianSpec &spec, double t);

struct TraceIdentity {
    double trace_residual = 0.0;     // |int tr(conj(rho) A) - tr(iBt - C_t)|
    double feynman_residual = 0.0;   // |int tr(conj(rho) A) - int tr(R conj(A))|
};
TraceIdentity trace_identity_check(const HamiltonianSpec &spec, double t);

struct NormalSymbolValue {
    CVector z;
    Complex value = 0.0;
};
NormalSymbolValue normal_symbol(const HamiltonianSpec &spec, double t, const CVector &z);
NormalSymbolValue normal_symbol(const NormalForm &nf, const CVector &z);

/// Normal form of exp(iH1 t1) exp(iH2 t2). The phase lives in s and index is 0.
NormalForm compose_normal_forms(const HamiltonianSpec &h1, double t1, const HamiltonianSpec &h2, double t2);

/// |a - b| after removing the nearest multiple of 2 pi i.
double log_distance(Complex a, Complex b);

}  // namespace sqz

#endif
