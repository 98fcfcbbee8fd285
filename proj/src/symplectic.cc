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

#include "sqz/symplectic.h"

#include <algorithm>
#include <sstream>

#include "sqz/error.h"
#include "sqz/matfun.h"

namespace sqz {

namespace {

std::string entry_name(const char *matrix, Eigen::Index i, Eigen::Index j) {
    std::ostringstream out;
    out << matrix << "[" << i << "][" << j << "]";
    return out.str();
}

// Largest deviation |M(i,j) - op(M)(i,j)| and where it happens.
template <typename Op>
void check_structure(const CMatrix &m, const char *name, const char *property, Op op) {
    const CMatrix diff = m - op(m);
    Eigen::Index bi = 0;
    Eigen::Index bj = 0;
    const double worst = diff.cwiseAbs().maxCoeff(&bi, &bj);
    if (worst > structural_tolerance(m)) {
        std::ostringstream out;
        out << "invariant violated: " << name << " must be " << property << "; " << entry_name(name, bi, bj)
            << " differs from its mirror entry by " << worst;
        fail(ErrorKind::kValidation, out.str());
    }
}

}  // namespace

void HamiltonianSpec::validate() const {
    if (n <= 0) {
        fail(ErrorKind::kValidation, "invariant violated: n must be positive");
    }
    if (A.rows() != n || A.cols() != n) {
        fail(ErrorKind::kValidation, "invariant violated: A must be n x n");
    }
    if (B.rows() != n || B.cols() != n) {
        fail(ErrorKind::kValidation, "invariant violated: B must be n x n");
    }
    if (h.size() != n) {
        fail(ErrorKind::kValidation, "invariant violated: h must have n entries");
    }
    for (Eigen::Index i = 0; i < n; ++i) {
        for (Eigen::Index j = 0; j < n; ++j) {
            if (!std::isfinite(A(i, j).real()) || !std::isfinite(A(i, j).imag())) {
                fail(ErrorKind::kValidation, "invariant violated: non-finite " + entry_name("A", i, j));
            }
            if (!std::isfinite(B(i, j).real()) || !std::isfinite(B(i, j).imag())) {
                fail(ErrorKind::kValidation, "invariant violated: non-finite " + entry_name("B", i, j));
            }
        }
        if (!std::isfinite(h(i).real()) || !std::isfinite(h(i).imag())) {
            fail(ErrorKind::kValidation, "invariant violated: non-finite h[" + std::to_string(i) + "]");
        }
    }
    check_structure(A, "A", "symmetric", [](const CMatrix &m) { return CMatrix(m.transpose()); });
    check_structure(B, "B", "Hermitian", [](const CMatrix &m) { return CMatrix(m.adjoint()); });
}

HamiltonianSpec HamiltonianSpec::zero(int n) {
    return {n, CMatrix::Zero(n, n), CMatrix::Zero(n, n), CVector::Zero(n), {}};
}

double CcrResiduals::max() const {
    return std::max({phi_phistar, phistar_phi, phi_psit, phistar_psi, symplectic_form});
}

CMatrix symplectic_j(int n) {
    CMatrix j = CMatrix::Zero(2 * n, 2 * n);
    j.block(0, n, n, n) = CMatrix::Identity(n, n);
    j.block(n, 0, n, n) = -CMatrix::Identity(n, n);
    return j;
}

CcrResiduals ccr_residuals(const CMatrix &phi, const CMatrix &psi) {
    const auto n = phi.rows();
    const CMatrix ident = CMatrix::Identity(n, n);
    CcrResiduals r;
    r.phi_phistar = (phi * phi.adjoint() - psi * psi.adjoint() - ident).norm();
    r.phistar_phi = (phi.adjoint() * phi - psi.transpose() * psi.conjugate() - ident).norm();
    r.phi_psit = (phi * psi.transpose() - psi * phi.transpose()).norm();
    r.phistar_psi = (phi.adjoint() * psi - psi.transpose() * phi.conjugate()).norm();
    CMatrix s(2 * n, 2 * n);
    s << phi, psi, psi.conjugate(), phi.conjugate();
    const CMatrix j = symplectic_j(static_cast<int>(n));
    r.symplectic_form = (s.transpose() * j * s - j).norm();
    const double phi_norm = norm2(phi);
    r.tolerance = 1e-10 * (1.0 + phi_norm * phi_norm);
    return r;
}

CMatrix SymplecticBlock::full() const {
    const auto k = Phi.rows();
    CMatrix s(2 * k, 2 * k);
    s << Phi, Psi, Psi.conjugate(), Phi.conjugate();
    return s;
}

SymplecticBlock SymplecticBlock::identity(int n) {
    SymplecticBlock s{0.0, CMatrix::Identity(n, n), CMatrix::Zero(n, n), {}};
    s.ccr = ccr_residuals(s.Phi, s.Psi);
    return s;
}

Generator build_generator(const HamiltonianSpec &spec) {
    spec.validate();
    const int n = spec.n;
    Generator gen{n, CMatrix(2 * n, 2 * n)};
    gen.G << -kI * spec.B, spec.A, spec.A.conjugate(), kI * spec.B.conjugate();
    return gen;
}

SymplecticBlock propagate(const Generator &gen, double t) {
    const int n = gen.n;
    if (!std::isfinite(t)) {
        fail(ErrorKind::kValidation, "propagate: time must be finite");
    }
    if (t == 0.0) {
        return SymplecticBlock::identity(n);
    }
    const CMatrix s = expm(gen.G * t);
    SymplecticBlock out{t, s.block(0, 0, n, n), s.block(0, n, n, n), {}};
    out.ccr = ccr_residuals(out.Phi, out.Psi);
    if (!out.ccr.ok()) {
        std::ostringstream msg;
        msg << "propagate: CCR residual " << out.ccr.max() << " exceeds tolerance " << out.ccr.tolerance
            << " at t = " << t;
        fail(ErrorKind::kAccuracy, msg.str());
    }
    return out;
}

Drift drift(const Generator &gen, const CVector &h, double t) {
    if (h.size() != gen.n) {
        fail(ErrorKind::kDimension, "drift: h has wrong length");
    }
    const CVector v = phi1(gen.G, t) * stack_conj(h);
    return {t, v.head(gen.n), v.tail(gen.n)};
}

SymplecticBlock invert(const SymplecticBlock &s) {
    SymplecticBlock out{-s.t, s.Phi.adjoint(), -s.Psi.transpose(), {}};
    out.ccr = ccr_residuals(out.Phi, out.Psi);
    return out;
}

SymplecticBlock compose(const SymplecticBlock &s1, const SymplecticBlock &s2) {
    if (s1.Phi.rows() != s2.Phi.rows()) {
        fail(ErrorKind::kDimension, "compose: blocks have different mode counts");
    }
    SymplecticBlock out{s1.t + s2.t, s1.Phi * s2.Phi + s1.Psi * s2.Psi.conjugate(),
                        s1.Phi * s2.Psi + s1.Psi * s2.Phi.conjugate(), {}};
    out.ccr = ccr_residuals(out.Phi, out.Psi);
    return out;
}

}  // namespace sqz
