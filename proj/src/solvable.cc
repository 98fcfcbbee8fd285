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

#include "sqz/solvable.h"

#include <cmath>
#include <sstream>

#include "sqz/error.h"

namespace sqz {

namespace {

struct CoshSinc {
    double c;  // cosh(sqrt(d) t)
    double s;  // sinh(sqrt(d) t) / sqrt(d)
};

CoshSinc cosh_sinc(double d, double t) {
    const double x = d * t * t;
    if (std::abs(x) < 1e-3) {
        return {1.0 + x / 2.0 + x * x / 24.0 + x * x * x / 720.0 + x * x * x * x / 40320.0,
                t * (1.0 + x / 6.0 + x * x / 120.0 + x * x * x / 5040.0 + x * x * x * x / 362880.0)};
    }
    const double r = std::sqrt(std::abs(d));
    if (d > 0.0) {
        return {std::cosh(r * t), std::sinh(r * t) / r};
    }
    return {std::cos(r * t), std::sin(r * t) / r};
}

}  // namespace

HamiltonianSpec CommutingInstance::spec(const CVector &h) const {
    return {n, A, B, h, "commuting"};
}

HamiltonianSpec CommutingInstance::spec() const {
    return spec(CVector::Zero(n));
}

CommutingResiduals commuting_residuals(const CMatrix &a, const CMatrix &b) {
    const CMatrix aa = a * a.conjugate();
    return {(aa * b - b * aa).norm(), (b * a - a * b.conjugate()).norm(), (a - a.transpose()).norm(),
            (b - b.adjoint()).norm()};
}

CommutingInstance build_commuting(const CMatrix &u, const RVector &dd, const RVector &lambda) {
    const auto n = u.rows();
    if (u.cols() != n || dd.size() != n || lambda.size() != n) {
        fail(ErrorKind::kDimension, "build_commuting: U, Dd and Lambda must share the mode count");
    }
    if ((u.adjoint() * u - CMatrix::Identity(n, n)).norm() > structural_tolerance(u) * std::max<double>(1.0, n)) {
        fail(ErrorKind::kValidation, "build_commuting: U is not unitary");
    }
    for (Eigen::Index k = 0; k < n; ++k) {
        if (!(dd(k) >= 0.0) || !std::isfinite(dd(k)) || !std::isfinite(lambda(k))) {
            fail(ErrorKind::kValidation, "build_commuting: Dd must be nonnegative and Lambda finite");
        }
    }
    CommutingInstance inst;
    inst.n = static_cast<int>(n);
    inst.U = u;
    inst.Dd = dd;
    inst.Lambda = lambda;
    inst.A = u.adjoint() * dd.cast<Complex>().asDiagonal() * u.conjugate();
    inst.A = (0.5 * (inst.A + inst.A.transpose())).eval();
    inst.B = u.adjoint() * lambda.cast<Complex>().asDiagonal() * u;
    inst.B = (0.5 * (inst.B + inst.B.adjoint())).eval();
    inst.DHerm = inst.A * inst.A.conjugate() - inst.B * inst.B;
    inst.DHerm = (0.5 * (inst.DHerm + inst.DHerm.adjoint())).eval();
    const CommutingResiduals r = commuting_residuals(inst.A, inst.B);
    const double tol = 10.0 * structural_tolerance(inst.A * inst.A.conjugate() + inst.B * inst.B);
    if (r.commutator > tol || r.intertwine > tol) {
        std::ostringstream out;
        out << "build_commuting: identity residuals " << r.commutator << ", " << r.intertwine << " exceed " << tol;
        fail(ErrorKind::kConsistency, out.str());
    }
    return inst;
}

SymplecticBlock closed_propagator(const CommutingInstance &inst, double t) {
    const int n = inst.n;
    Eigen::SelfAdjointEigenSolver<CMatrix> es(inst.DHerm);
    RVector c(n);
    RVector s(n);
    for (int k = 0; k < n; ++k) {
        const CoshSinc v = cosh_sinc(es.eigenvalues()(k), t);
        c(k) = v.c;
        s(k) = v.s;
    }
    const CMatrix &p = es.eigenvectors();
    const CMatrix cd = p * c.cast<Complex>().asDiagonal() * p.adjoint();
    const CMatrix sd = p * s.cast<Complex>().asDiagonal() * p.adjoint();
    // Upper blocks of G blockdiag(S(D), S(conj D)) + blockdiag(C(D), C(conj D)).
    SymplecticBlock out;
    out.t = t;
    out.Phi = -kI * inst.B * sd + cd;
    out.Psi = inst.A * sd.conjugate();
    out.ccr = ccr_residuals(out.Phi, out.Psi);
    return out;
}

CMatrix closed_inverse_generator(const CommutingInstance &inst) {
    const int n = inst.n;
    Eigen::SelfAdjointEigenSolver<CMatrix> es(inst.DHerm);
    const RVector &ev = es.eigenvalues();
    const double scale = std::max(std::abs(ev(0)), std::abs(ev(n - 1)));
    if (ev.cwiseAbs().minCoeff() <= 1e-10 * scale || scale == 0.0) {
        fail(ErrorKind::kDegenerate, "closed_inverse_generator: D = A conj(A) - B^2 is singular");
    }
    const CMatrix dinv = es.eigenvectors() * ev.cwiseInverse().cast<Complex>().asDiagonal() * es.eigenvectors().adjoint();
    const CMatrix dbar_inv = dinv.conjugate();
    CMatrix out(2 * n, 2 * n);
    out << -kI * dinv * inst.B, dinv * inst.A, dbar_inv * inst.A.conjugate(), kI * dbar_inv * inst.B.conjugate();
    return out;
}

}  // namespace sqz
