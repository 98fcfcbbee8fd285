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

#include "sqz/matfun.h"

#include <algorithm>
#include <array>
#include <cmath>
#include <string>

#include <unsupported/Eigen/MatrixFunctions>

#include "sqz/error.h"

namespace sqz {

namespace {

double one_norm(const CMatrix &m) {
    return m.cwiseAbs().colwise().sum().maxCoeff();
}

// Pade approximant r_m(A) = (V - U)^{-1} (V + U).
template <size_t N>
CMatrix pade_low(const CMatrix &a, const std::array<double, N> &b) {
    const auto dim = a.rows();
    const CMatrix ident = CMatrix::Identity(dim, dim);
    const CMatrix a2 = a * a;
    CMatrix power = ident;
    CMatrix u_even = CMatrix::Zero(dim, dim);
    CMatrix v = CMatrix::Zero(dim, dim);
    for (size_t k = 0; k + 1 < N; k += 2) {
        v += b[k] * power;
        u_even += b[k + 1] * power;
        power = power * a2;
    }
    const CMatrix u = a * u_even;
    return (v - u).partialPivLu().solve(v + u);
}

CMatrix pade13(const CMatrix &a) {
    static constexpr std::array<double, 14> b = {
        64764752532480000.0, 32382376266240000.0, 7771770303897600.0, 1187353796428800.0,
        129060195264000.0,   10559470521600.0,    670442572800.0,     33522128640.0,
        1323241920.0,        40840800.0,          960960.0,           16380.0,
        182.0,               1.0};
    const auto dim = a.rows();
    const CMatrix ident = CMatrix::Identity(dim, dim);
    const CMatrix a2 = a * a;
    const CMatrix a4 = a2 * a2;
    const CMatrix a6 = a4 * a2;
    const CMatrix u =
        a * (a6 * (b[13] * a6 + b[11] * a4 + b[9] * a2) + b[7] * a6 + b[5] * a4 + b[3] * a2 + b[1] * ident);
    const CMatrix v = a6 * (b[12] * a6 + b[10] * a4 + b[8] * a2) + b[6] * a6 + b[4] * a4 + b[2] * a2 + b[0] * ident;
    return (v - u).partialPivLu().solve(v + u);
}

}  // namespace

void require_square(const CMatrix &m, const char *what) {
    if (m.rows() != m.cols() || m.rows() == 0) {
        fail(ErrorKind::kDimension, std::string(what) + ": expected a non-empty square matrix, got " +
                                        std::to_string(m.rows()) + "x" + std::to_string(m.cols()));
    }
    if (!m.allFinite()) {
        fail(ErrorKind::kValidation, std::string(what) + ": matrix has non-finite entries");
    }
}

CMatrix expm(const CMatrix &m) {
    require_square(m, "expm");
    static constexpr double theta3 = 1.495585217958292e-2;
    static constexpr double theta5 = 2.539398330063230e-1;
    static constexpr double theta7 = 9.504178996162932e-1;
    static constexpr double theta9 = 2.097847961257068e0;
    static constexpr double theta13 = 5.371920351148152e0;

    const double norm = one_norm(m);
    CMatrix result;
    if (norm <= theta3) {
        result = pade_low<4>(m, {120.0, 60.0, 12.0, 1.0});
    } else if (norm <= theta5) {
        result = pade_low<6>(m, {30240.0, 15120.0, 3360.0, 420.0, 30.0, 1.0});
    } else if (norm <= theta7) {
        result = pade_low<8>(m, {17297280.0, 8648640.0, 1995840.0, 277200.0, 25200.0, 1512.0, 56.0, 1.0});
    } else if (norm <= theta9) {
        result = pade_low<10>(m, {17643225600.0, 8821612800.0, 2075673600.0, 302702400.0, 30270240.0,
                                  2162160.0, 110880.0, 3960.0, 90.0, 1.0});
    } else {
        const int s = std::max(0, static_cast<int>(std::ceil(std::log2(norm / theta13))));
        result = pade13(m * std::ldexp(1.0, -s));
        for (int k = 0; k < s; ++k) {
            result = result * result;
        }
    }
    if (!result.allFinite()) {
        fail(ErrorKind::kRange, "expm: result overflows double range (||M||_1 = " + std::to_string(norm) + ")");
    }
    return result;
}

PhiFunctions phi_functions(const CMatrix &m, double t) {
    require_square(m, "phi_functions");
    const auto d = m.rows();
    // exp([[Mt, tI, 0], [0, 0, tI], [0, 0, 0]]) = [[e^{Mt}, phi1, phi2], ...]
    CMatrix aug = CMatrix::Zero(3 * d, 3 * d);
    aug.block(0, 0, d, d) = m * t;
    aug.block(0, d, d, d) = CMatrix::Identity(d, d) * t;
    aug.block(d, 2 * d, d, d) = CMatrix::Identity(d, d) * t;
    const CMatrix e = expm(aug);
    return {e.block(0, 0, d, d), e.block(0, d, d, d), e.block(0, 2 * d, d, d)};
}

ExpPhi1 exp_phi1(const CMatrix &m, double t) {
    require_square(m, "exp_phi1");
    const auto d = m.rows();
    CMatrix aug = CMatrix::Zero(2 * d, 2 * d);
    aug.block(0, 0, d, d) = m * t;
    aug.block(0, d, d, d) = CMatrix::Identity(d, d) * t;
    const CMatrix e = expm(aug);
    return {e.block(0, 0, d, d), e.block(0, d, d, d)};
}

CMatrix phi1(const CMatrix &m, double t) {
    return exp_phi1(m, t).phi1;
}

CMatrix phi2(const CMatrix &m, double t) {
    return phi_functions(m, t).phi2;
}

CMatrix logm_principal(const CMatrix &m) {
    require_square(m, "logm_principal");
    Eigen::ComplexEigenSolver<CMatrix> es(m, false);
    for (Eigen::Index k = 0; k < es.eigenvalues().size(); ++k) {
        const Complex lambda = es.eigenvalues()(k);
        if (std::abs(lambda) < 1e-300) {
            fail(ErrorKind::kDomain, "logm_principal: matrix is singular");
        }
        if (lambda.real() < 0.0 && std::abs(lambda.imag()) <= 1e-10 * std::max(1.0, std::abs(lambda))) {
            fail(ErrorKind::kDomain, "logm_principal: eigenvalue on the negative real branch cut");
        }
    }
    return m.log();
}

CMatrix sqrtm_psd(const CMatrix &h) {
    require_square(h, "sqrtm_psd");
    const double tol = structural_tolerance(h);
    if ((h - h.adjoint()).norm() > tol) {
        fail(ErrorKind::kValidation, "sqrtm_psd: input is not Hermitian");
    }
    Eigen::SelfAdjointEigenSolver<CMatrix> es(h);
    RVector roots(es.eigenvalues().size());
    for (Eigen::Index k = 0; k < roots.size(); ++k) {
        const double lambda = es.eigenvalues()(k);
        if (lambda < -tol) {
            fail(ErrorKind::kDomain, "sqrtm_psd: negative eigenvalue " + std::to_string(lambda));
        }
        roots(k) = std::sqrt(std::max(lambda, 0.0));
    }
    const CMatrix &v = es.eigenvectors();
    return v * roots.cast<Complex>().asDiagonal() * v.adjoint();
}

Polar polar(const CMatrix &m) {
    require_square(m, "polar");
    Eigen::JacobiSVD<CMatrix> svd(m, Eigen::ComputeFullU | Eigen::ComputeFullV);
    const RVector &sigma = svd.singularValues();
    if (sigma(sigma.size() - 1) <= 1e-14 * std::max(1.0, sigma(0))) {
        fail(ErrorKind::kRank, "polar: matrix is numerically singular");
    }
    const CMatrix &w = svd.matrixU();
    const CMatrix &v = svd.matrixV();
    CMatrix p = v * sigma.cast<Complex>().asDiagonal() * v.adjoint();
    p = (0.5 * (p + p.adjoint())).eval();
    return {w * v.adjoint(), p};
}

Takagi takagi(const CMatrix &a) {
    require_square(a, "takagi");
    const auto n = a.rows();
    if ((a - a.transpose()).norm() > structural_tolerance(a)) {
        fail(ErrorKind::kValidation, "takagi: input is not symmetric");
    }
    Eigen::JacobiSVD<CMatrix> svd(a, Eigen::ComputeFullU | Eigen::ComputeFullV);
    const RVector sigma = svd.singularValues();
    const CMatrix &w = svd.matrixU();
    const CMatrix vbar = svd.matrixV().conjugate();
    const double scale = sigma(0);
    const double cluster_tol = 1e-8 * std::max(scale, 1e-300);

    // A = sum_c sigma_c W_c X_c^T W_c^T with X_c = W_c^* conj(V_c) symmetric
    // unitary inside each singular-value cluster; Q_c = W_c sqrt(X_c).
    CMatrix q(n, n);
    Eigen::Index start = 0;
    while (start < n) {
        Eigen::Index stop = start + 1;
        while (stop < n && sigma(stop - 1) - sigma(stop) <= cluster_tol) {
            ++stop;
        }
        const Eigen::Index width = stop - start;
        const CMatrix wc = w.middleCols(start, width);
        if (sigma(start) <= cluster_tol) {
            q.middleCols(start, width) = wc;
        } else {
            const CMatrix x = wc.adjoint() * vbar.middleCols(start, width);
            Eigen::ComplexSchur<CMatrix> schur(x);
            const CMatrix &z = schur.matrixU();
            CVector roots(width);
            for (Eigen::Index k = 0; k < width; ++k) {
                roots(k) = principal_sqrt(schur.matrixT()(k, k));
            }
            const CMatrix y = z * roots.asDiagonal() * z.adjoint();
            q.middleCols(start, width) = wc * y;
        }
        start = stop;
    }
    return {q.adjoint(), sigma};
}

double principal_arg(Complex z) {
    const double phase = std::arg(z);
    return phase <= -kPi ? kPi : phase;
}

Complex principal_sqrt(Complex z) {
    return std::polar(std::sqrt(std::abs(z)), 0.5 * principal_arg(z));
}

double wrap_angle(double x) {
    double r = std::remainder(x, 2.0 * kPi);
    if (r <= -kPi) {
        r += 2.0 * kPi;
    }
    return r;
}

Complex sum_log_eigenvalues(const CMatrix &m) {
    require_square(m, "sum_log_eigenvalues");
    Eigen::ComplexEigenSolver<CMatrix> es(m, false);
    Complex total = 0.0;
    for (Eigen::Index k = 0; k < es.eigenvalues().size(); ++k) {
        total += std::log(es.eigenvalues()(k));
    }
    return total;
}

}  // namespace sqz
