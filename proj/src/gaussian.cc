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

#include "sqz/gaussian.h"

#include <cmath>
#include <sstream>

#include "sqz/error.h"
#include "sqz/matfun.h"

namespace sqz {

namespace {

const double kLogPi = std::log(kPi);

void require_invertible(const CMatrix &m, const char *what) {
    if (min_singular_value(m) <= 1e-12 * std::max(1.0, norm2(m))) {
        fail(ErrorKind::kDegenerate, std::string(what) + " is numerically singular");
    }
}

}  // namespace

GaussianState to_gaussian(const NormalForm &nf, const CVector &z) {
    const int n = nf.n;
    if (z.size() != n) {
        fail(ErrorKind::kDimension, "to_gaussian: z has wrong length");
    }
    const CMatrix ident = CMatrix::Identity(n, n);
    const CMatrix i_minus_r = ident - nf.R;
    require_invertible(i_minus_r, "to_gaussian: I - R");
    const CVector big_g = nf.PhiInv * (nf.h_t - z);
    const Complex s_state =
        nf.s + bilinear(z, nf.f.conjugate() - 0.5 * (z.conjugate() - nf.rho.conjugate() * z));
    GaussianState out;
    out.n = n;
    out.M = i_minus_r.inverse();
    out.shift = big_g / std::sqrt(2.0);
    out.log_prefactor = s_state - 0.25 * n * kLogPi - 0.5 * sum_log_eigenvalues(i_minus_r);
    std::ostringstream meta;
    meta << "t=" << nf.t << " index=" << nf.index;
    out.meta = meta.str();
    return out;
}

GaussianState vacuum_state(int n) {
    GaussianState out;
    out.n = n;
    out.M = CMatrix::Identity(n, n);
    out.shift = CVector::Zero(n);
    out.log_prefactor = -0.25 * n * kLogPi;
    out.meta = "vacuum";
    return out;
}

Complex inner_log(const GaussianState &psi1, const GaussianState &psi2) {
    if (psi1.n != psi2.n) {
        fail(ErrorKind::kDimension, "inner: states have different mode counts");
    }
    const int n = psi1.n;
    const CMatrix m1 = psi1.M.conjugate();
    const CVector c1 = psi1.shift.conjugate();
    const CMatrix &m2 = psi2.M;
    const CVector &c2 = psi2.shift;
    const CMatrix omega = m1 + m2 - CMatrix::Identity(n, n);
    require_invertible(omega, "inner: Omega");
    const CVector y = std::sqrt(2.0) * (m1 * c1 + m2 * c2);
    const Complex sigma = std::conj(psi1.log_prefactor) + psi2.log_prefactor - bilinear(c1, m1 * c1) -
                          bilinear(c2, m2 * c2) + 0.5 * bilinear(y, omega.partialPivLu().solve(y)) +
                          0.5 * n * kLogPi;
    return sigma - 0.5 * sum_log_eigenvalues(omega);
}

Complex inner(const GaussianState &psi1, const GaussianState &psi2) {
    return std::exp(inner_log(psi1, psi2));
}

GramMatrix gram(const std::vector<GaussianState> &states) {
    if (states.empty()) {
        fail(ErrorKind::kValidation, "gram: empty state family");
    }
    const int m = static_cast<int>(states.size());
    GramMatrix out;
    out.m = m;
    out.entries.resize(m, m);
    for (int i = 0; i < m; ++i) {
        out.sources.push_back(states[i].meta);
        for (int j = 0; j < m; ++j) {
            try {
                out.entries(i, j) = inner(states[i], states[j]);
            } catch (const Error &e) {
                std::ostringstream msg;
                msg << "gram: entry (" << i << ", " << j << "): " << e.what();
                throw Error(e.kind(), msg.str());
            }
        }
    }
    out.entries = (0.5 * (out.entries + out.entries.adjoint())).eval();
    Eigen::SelfAdjointEigenSolver<CMatrix> es(out.entries);
    const double lowest = es.eigenvalues()(0);
    if (lowest < -1e-9) {
        std::ostringstream msg;
        msg << "gram: eigenvalue " << lowest << " is below the PSD floor";
        fail(ErrorKind::kConsistency, msg.str());
    }
    if (lowest < 0.0) {
        const RVector clipped = es.eigenvalues().cwiseMax(0.0);
        out.entries = es.eigenvectors() * clipped.cast<Complex>().asDiagonal() * es.eigenvectors().adjoint();
    }
    return out;
}

CMatrix orthonormalize(const GramMatrix &g, OrthoMethod method) {
    const CMatrix &a = g.entries;
    const auto m = a.rows();
    if (method == OrthoMethod::kLoewdin) {
        Eigen::SelfAdjointEigenSolver<CMatrix> es(a);
        for (Eigen::Index k = 0; k < m; ++k) {
            if (es.eigenvalues()(k) <= 1e-12) {
                std::ostringstream msg;
                msg << "orthonormalize: family is numerically dependent; eigenvalue " << k << " = "
                    << es.eigenvalues()(k);
                fail(ErrorKind::kRank, msg.str());
            }
        }
        const RVector inv_root = es.eigenvalues().cwiseSqrt().cwiseInverse();
        return es.eigenvectors() * inv_root.cast<Complex>().asDiagonal() * es.eigenvectors().adjoint();
    }
    // Cholesky g = L L^*, tracking the leading minors as it goes.
    CMatrix l = CMatrix::Zero(m, m);
    double minor = 1.0;
    for (Eigen::Index j = 0; j < m; ++j) {
        Complex diag = a(j, j);
        for (Eigen::Index k = 0; k < j; ++k) {
            diag -= l(j, k) * std::conj(l(j, k));
        }
        minor *= diag.real();
        if (!(diag.real() > 0.0) || minor <= 1e-12) {
            std::ostringstream msg;
            msg << "orthonormalize: family is numerically dependent; leading minor " << j + 1 << " = " << minor;
            fail(ErrorKind::kRank, msg.str());
        }
        const double root = std::sqrt(diag.real());
        l(j, j) = root;
        for (Eigen::Index i = j + 1; i < m; ++i) {
            Complex v = a(i, j);
            for (Eigen::Index k = 0; k < j; ++k) {
                v -= l(i, k) * std::conj(l(j, k));
            }
            l(i, j) = v / root;
        }
    }
    const CMatrix ident = CMatrix::Identity(m, m);
    return l.adjoint().triangularView<Eigen::Upper>().solve(ident);
}

double orthonormality_residual(const GramMatrix &g, const CMatrix &w) {
    return (w.adjoint() * g.entries * w - CMatrix::Identity(g.m, g.m)).norm();
}

double norm_alpha(const NormalForm &nf) {
    const CMatrix diff = nf.Phi - nf.Psi;
    const CVector x = diff.partialPivLu().solve(nf.h_t);
    const CVector re_x = x.real().cast<Complex>();
    return 2.0 * (diff * re_x).squaredNorm() - bilinear(nf.g, x).real();
}

double norm_squared(const NormalForm &nf) {
    const CMatrix ident = CMatrix::Identity(nf.n, nf.n);
    const double det = (ident - nf.R.conjugate() * nf.R).partialPivLu().determinant().real();
    return std::exp(2.0 * nf.s.real() + norm_alpha(nf)) / std::sqrt(det);
}

DeterminantResiduals determinant_identities(const NormalForm &nf) {
    const CMatrix ident = CMatrix::Identity(nf.n, nf.n);
    const Complex det_phi = nf.Phi.partialPivLu().determinant();
    const double phi2 = std::norm(det_phi);
    const CMatrix i_minus_r = ident - nf.R;
    const CMatrix i_minus_rbar = ident - nf.R.conjugate();
    const CMatrix omega = i_minus_rbar.inverse() + i_minus_r.inverse() - ident;
    DeterminantResiduals out;
    out.chain = std::abs(phi2 * (ident - nf.R * nf.R.conjugate()).determinant() - 1.0);
    out.five_factor = std::abs(phi2 * i_minus_r.determinant() * i_minus_rbar.determinant() * omega.determinant() - 1.0);
    const CMatrix diff = nf.Phi - nf.Psi;
    const CMatrix target = diff.adjoint() * diff;
    out.omega_inverse = (omega.inverse() - target).norm() / std::max(1.0, target.norm());
    out.omega_symmetry = (omega - omega.transpose()).norm();
    return out;
}

}  // namespace sqz
