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

#include <gtest/gtest.h>

#include "sqz/error.h"
#include "sqz/instances.h"
#include "sqz/symplectic.h"
#include "test_util.h"

using namespace sqz;

TEST(matfun, expm_zero_is_identity) {
    EXPECT_LT((expm(CMatrix::Zero(2, 2)) - CMatrix::Identity(2, 2)).norm(), 1e-15);
}

TEST(matfun, expm_diagonal) {
    CMatrix m = CMatrix::Zero(2, 2);
    m(0, 0) = Complex(0, kPi);
    CMatrix expected = CMatrix::Identity(2, 2);
    expected(0, 0) = -1.0;
    EXPECT_LT((expm(m) - expected).norm(), 1e-14);
}

TEST(matfun, expm_matches_taylor_oracle) {
    for (unsigned seed = 1; seed <= 5; ++seed) {
        CMatrix m = testutil::random_matrix(4, seed);
        m /= norm2(m);
        EXPECT_LT((expm(m) - testutil::taylor_expm(m)).norm(), 1e-12) << seed;
    }
}

TEST(matfun, expm_inverse_pair) {
    for (unsigned seed = 1; seed <= 5; ++seed) {
        CMatrix m = testutil::random_matrix(5, seed);
        m *= 2.0 / norm2(m);
        EXPECT_LT((expm(m) * expm(-m) - CMatrix::Identity(5, 5)).norm(), 1e-10);
    }
}

TEST(matfun, expm_errors) {
    EXPECT_THROW(expm(CMatrix::Zero(2, 3)), Error);
    CMatrix big = CMatrix::Identity(2, 2) * 1e4;
    try {
        expm(big);
        FAIL();
    } catch (const Error &e) {
        EXPECT_EQ(e.kind(), ErrorKind::kRange);
    }
}

TEST(matfun, phi_functions_scalar_and_zero) {
    const double t = 0.7;
    EXPECT_LT((phi1(CMatrix::Zero(3, 3), t) - t * CMatrix::Identity(3, 3)).norm(), 1e-15);
    EXPECT_LT((phi2(CMatrix::Zero(3, 3), t) - 0.5 * t * t * CMatrix::Identity(3, 3)).norm(), 1e-15);
    const Complex lambda(0.4, -1.3);
    CMatrix m(1, 1);
    m(0, 0) = lambda;
    const Complex e = std::exp(lambda * t);
    EXPECT_LT(std::abs(phi1(m, t)(0, 0) - (e - 1.0) / lambda), 1e-14);
    EXPECT_LT(std::abs(phi2(m, t)(0, 0) - (e - 1.0 - lambda * t) / (lambda * lambda)), 1e-14);
}

TEST(matfun, phi_functions_nilpotent_quadrature) {
    CMatrix nil = CMatrix::Zero(2, 2);
    nil(0, 1) = 1.0;
    auto e = [&](double s) { return CMatrix(testutil::taylor_expm(nil * s)); };
    const CMatrix q1 = testutil::composite_quad<CMatrix>(e, 0.0, 1.0, 4, CMatrix::Zero(2, 2));
    const CMatrix q2 = testutil::composite_quad<CMatrix>(
        [&](double tau) { return testutil::composite_quad<CMatrix>(e, 0.0, tau, 2, CMatrix::Zero(2, 2)); }, 0.0, 1.0,
        4, CMatrix::Zero(2, 2));
    CMatrix expected(2, 2);
    expected << 1.0, 0.5, 0.0, 1.0;
    EXPECT_LT((phi1(nil, 1.0) - expected).norm(), 1e-14);
    EXPECT_LT((phi1(nil, 1.0) - q1).norm(), 1e-12);
    EXPECT_LT((phi2(nil, 1.0) - q2).norm(), 1e-12);
}

TEST(matfun, phi_identities_singular) {
    CMatrix m = testutil::random_matrix(4, 11);
    m.col(0) = m.col(1);  // singular
    for (double t : {0.3, 1.0, 2.5}) {
        const CMatrix e = expm(m * t);
        const CMatrix ident = CMatrix::Identity(4, 4);
        EXPECT_LT((m * phi1(m, t) - (e - ident)).norm(), 1e-10 * std::max(1.0, e.norm()));
        EXPECT_LT((m * m * phi2(m, t) - (e - ident - m * t)).norm(), 1e-10 * std::max(1.0, e.norm()));
    }
}

TEST(matfun, logm_principal) {
    EXPECT_LT(logm_principal(CMatrix::Identity(3, 3)).norm(), 1e-15);
    CMatrix d = CMatrix::Zero(2, 2);
    d(0, 0) = std::exp(2.0);
    d(1, 1) = std::exp(kI);
    const CMatrix l = logm_principal(d);
    EXPECT_LT(std::abs(l(0, 0) - 2.0), 1e-13);
    EXPECT_LT(std::abs(l(1, 1) - kI), 1e-13);
    CMatrix cut = CMatrix::Identity(2, 2);
    cut(0, 0) = -1.0;
    try {
        logm_principal(cut);
        FAIL();
    } catch (const Error &e) {
        EXPECT_EQ(e.kind(), ErrorKind::kDomain);
    }
}

TEST(matfun, logm_round_trip_reference) {
    const Generator gen = build_generator(reference_instance());
    const SymplecticBlock s = propagate(gen, 0.1);
    const CMatrix c = logm_principal(s.Phi);
    EXPECT_LT((expm(c) - s.Phi).norm(), 1e-10 * s.Phi.norm());
    EXPECT_LT((expm(-c) * s.Phi - CMatrix::Identity(3, 3)).norm(), 1e-10);
}

TEST(matfun, sqrtm_psd) {
    EXPECT_LT((sqrtm_psd(CMatrix::Identity(2, 2)) - CMatrix::Identity(2, 2)).norm(), 1e-15);
    CMatrix d = CMatrix::Zero(2, 2);
    d(0, 0) = 4.0;
    d(1, 1) = 9.0;
    const CMatrix r = sqrtm_psd(d);
    EXPECT_LT(std::abs(r(0, 0) - 2.0) + std::abs(r(1, 1) - 3.0), 1e-14);
    const CMatrix a = reference_instance().A;
    const CMatrix aa = a * a.conjugate();
    const CMatrix root = sqrtm_psd(0.5 * (aa + aa.adjoint()));
    EXPECT_LT((root * root - aa).norm(), 1e-11 * aa.norm());
    try {
        sqrtm_psd(-CMatrix::Identity(2, 2));
        FAIL();
    } catch (const Error &e) {
        EXPECT_EQ(e.kind(), ErrorKind::kDomain);
    }
}

TEST(matfun, polar) {
    const Polar id = sqz::polar(CMatrix::Identity(2, 2));
    EXPECT_LT((id.unitary - CMatrix::Identity(2, 2)).norm(), 1e-14);
    CMatrix m(1, 1);
    m(0, 0) = Complex(0, 2);
    const Polar p = polar(m);
    EXPECT_LT(std::abs(p.unitary(0, 0) - kI), 1e-14);
    EXPECT_LT(std::abs(p.positive(0, 0) - 2.0), 1e-14);
    const SymplecticBlock s = propagate(build_generator(reference_instance()), 1.0);
    const Polar q = polar(s.Phi);
    EXPECT_LT((q.unitary.adjoint() * q.unitary - CMatrix::Identity(3, 3)).norm(), 1e-11);
    EXPECT_LT((q.unitary * q.positive - s.Phi).norm(), 1e-10 * s.Phi.norm());
    EXPECT_THROW(sqz::polar(CMatrix::Zero(2, 2)), Error);
}

TEST(matfun, takagi) {
    const Takagi zero = takagi(CMatrix::Zero(2, 2));
    EXPECT_LT(zero.singular_values.norm(), 1e-15);
    CMatrix three(1, 1);
    three(0, 0) = 3.0;
    EXPECT_NEAR(takagi(three).singular_values(0), 3.0, 1e-15);
    const CMatrix a = reference_instance().A;
    const Takagi t = takagi(a);
    const CMatrix u = t.unitary;
    const CMatrix back = u.adjoint() * t.singular_values.cast<Complex>().asDiagonal() * u.conjugate();
    EXPECT_LT((back - a).norm(), 1e-10 * a.norm());
    EXPECT_LT((u.adjoint() * u - CMatrix::Identity(3, 3)).norm(), 1e-12);
    for (int k = 0; k + 1 < 3; ++k) {
        EXPECT_GE(t.singular_values(k), t.singular_values(k + 1));
    }
    EXPECT_THROW(takagi(testutil::random_matrix(3, 2)), Error);
}

TEST(matfun, takagi_degenerate_cluster) {
    // A = W diag(2, 2, 1) W^T with W unitary: a repeated singular value.
    std::mt19937_64 rng(5);
    const CMatrix w = haar_unitary(3, rng);
    RVector d(3);
    d << 2.0, 2.0, 1.0;
    const CMatrix a = w * d.cast<Complex>().asDiagonal() * w.transpose();
    const Takagi t = takagi(a);
    const CMatrix back = t.unitary.adjoint() * t.singular_values.cast<Complex>().asDiagonal() * t.unitary.conjugate();
    EXPECT_LT((back - a).norm(), 1e-10 * a.norm());
}
