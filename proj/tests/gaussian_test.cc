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

#include <gtest/gtest.h>

#include "sqz/error.h"
#include "sqz/fockoracle.h"
#include "sqz/instances.h"
#include "test_util.h"

using namespace sqz;

namespace {

GaussianState evolved(const HamiltonianSpec &spec, double t, const CVector &z) {
    return to_gaussian(normal_form(spec, t), z);
}

GaussianState coherent(Complex z) {
    CVector v(1);
    v(0) = z;
    return evolved(HamiltonianSpec::zero(1), 0.0, v);
}

Complex wavefunction(const GaussianState &psi, const Eigen::VectorXd &x) {
    const CVector y = x.cast<Complex>() + psi.shift;
    return std::exp(psi.log_prefactor + 0.5 * x.squaredNorm() - bilinear(y, psi.M * y));
}

}  // namespace

TEST(gaussian, vacuum_image) {
    const GaussianState psi = evolved(reference_instance(), 0.0, CVector::Zero(3));
    EXPECT_LT((psi.M - CMatrix::Identity(3, 3)).norm(), 1e-15);
    EXPECT_LT(std::abs(psi.log_prefactor + 0.75 * std::log(kPi)), 1e-15);
    EXPECT_LT(std::abs(inner(vacuum_state(2), vacuum_state(2)) - 1.0), 1e-15);
}

TEST(gaussian, coherent_states) {
    const Complex z1(0.4, -0.3);
    const Complex z2(-0.2, 0.5);
    EXPECT_LT(std::abs(inner(coherent(z1), coherent(z1)) - 1.0), 1e-14);
    const Complex expected = std::exp(-0.5 * std::norm(z1) - 0.5 * std::norm(z2) + std::conj(z1) * z2);
    EXPECT_LT(std::abs(inner(coherent(z1), coherent(z2)) - expected), 1e-14);
}

TEST(gaussian, reference_unit_norm) {
    for (double t : {0.25, 0.5, 1.0, 2.0}) {
        const NormalForm nf = normal_form(reference_instance(), t);
        const GaussianState psi = to_gaussian(nf, CVector::Zero(3));
        EXPECT_LT(std::abs(inner(psi, psi) - 1.0), 1e-9) << t;
        EXPECT_LT(std::abs(norm_squared(nf) - 1.0), 1e-9) << t;
    }
}

TEST(gaussian, squeezed_pair_overlap) {
    const GaussianState a = evolved(squeezer_instance(0.3), 1.0, CVector::Zero(1));
    const GaussianState b = evolved(squeezer_instance(0.7), 1.0, CVector::Zero(1));
    EXPECT_LT(std::abs(inner(a, b) - 1.0 / std::sqrt(std::cosh(0.4))), 1e-13);
    const OracleValue oracle = state_inner(squeezer_instance(0.3), 1.0, squeezer_instance(0.7), 1.0, 40);
    EXPECT_LT(std::abs(inner(a, b) - oracle.value), 1e-6);
}

TEST(gaussian, displaced_states_match_fock) {
    const HamiltonianSpec a = random_instance(41, 2, 0.3);
    const HamiltonianSpec b = random_instance(42, 2, 0.3);
    CVector za(2);
    CVector zb(2);
    za << Complex(0.2, 0.0), Complex(0.0, 0.1);
    zb << Complex(-0.1, 0.0), Complex(0.3, 0.0);
    const Complex closed = inner(evolved(a, 0.7, za), evolved(b, 0.5, zb));
    const FockBasis basis(2, 20);
    const CVector pa = FockEvolution(a, basis).apply(0.7, coherent_vector(za, basis));
    const CVector pb = FockEvolution(b, basis).apply(0.5, coherent_vector(zb, basis));
    EXPECT_LT(std::abs(closed - pa.dot(pb)), 1e-6);
}

TEST(gaussian, inner_matches_direct_integration_one_mode) {
    const GaussianState a = evolved(random_instance(51, 1, 0.5), 0.8, CVector::Constant(1, Complex(0.2, 0.1)));
    const GaussianState b = evolved(random_instance(52, 1, 0.5), 1.1, CVector::Zero(1));
    const Complex direct = testutil::composite_quad<Complex>(
        [&](double x) {
            const Eigen::VectorXd v = Eigen::VectorXd::Constant(1, x);
            return std::conj(wavefunction(a, v)) * wavefunction(b, v);
        },
        -12.0, 12.0, 60, Complex(0.0));
    EXPECT_LT(std::abs(inner(a, b) - direct), 1e-8);
}

TEST(gaussian, inner_matches_direct_integration_two_modes) {
    const GaussianState a = evolved(random_instance(53, 2, 0.4), 0.6, CVector::Zero(2));
    CVector z(2);
    z << Complex(0.1, -0.2), Complex(0.0, 0.3);
    const GaussianState b = evolved(random_instance(54, 2, 0.4), 0.9, z);
    const Complex direct = testutil::composite_quad<Complex>(
        [&](double x) {
            return testutil::composite_quad<Complex>(
                [&](double y) {
                    Eigen::VectorXd v(2);
                    v << x, y;
                    return std::conj(wavefunction(a, v)) * wavefunction(b, v);
                },
                -10.0, 10.0, 20, Complex(0.0));
        },
        -10.0, 10.0, 20, Complex(0.0));
    EXPECT_LT(std::abs(inner(a, b) - direct), 1e-8);
}

TEST(gaussian, gram_cases) {
    const GramMatrix one = gram({evolved(reference_instance(), 1.0, CVector::Zero(3))});
    EXPECT_LT(std::abs(one.entries(0, 0) - 1.0), 1e-9);
    const GramMatrix far = gram({coherent(4.5), coherent(-4.5)});
    EXPECT_LT((far.entries - CMatrix::Identity(2, 2)).norm(), 1e-12);

    std::vector<GaussianState> family;
    std::vector<double> rs = {0.2, 0.5, 0.9};
    for (double r : rs) {
        family.push_back(evolved(squeezer_instance(r), 1.0, CVector::Zero(1)));
    }
    const GramMatrix g = gram(family);
    for (std::size_t i = 0; i < rs.size(); ++i) {
        for (std::size_t j = 0; j < rs.size(); ++j) {
            const OracleValue o = state_inner(squeezer_instance(rs[i]), 1.0, squeezer_instance(rs[j]), 1.0, 40);
            EXPECT_LT(std::abs(g.entries(i, j) - o.value), 1e-6);
        }
    }
    EXPECT_THROW(gram({}), Error);
}

TEST(gaussian, orthonormalize_cases) {
    GramMatrix id;
    id.m = 3;
    id.entries = CMatrix::Identity(3, 3);
    EXPECT_LT((orthonormalize(id, OrthoMethod::kLoewdin) - CMatrix::Identity(3, 3)).norm(), 1e-15);

    GramMatrix half;
    half.m = 2;
    half.entries.resize(2, 2);
    half.entries << 1.0, 0.5, 0.5, 1.0;
    // Eigenpairs (3/2, (1,1)/sqrt2) and (1/2, (1,-1)/sqrt2).
    const double p = 0.5 * (1.0 / std::sqrt(1.5) + 1.0 / std::sqrt(0.5));
    const double q = 0.5 * (1.0 / std::sqrt(1.5) - 1.0 / std::sqrt(0.5));
    CMatrix expected(2, 2);
    expected << p, q, q, p;
    const CMatrix w = orthonormalize(half, OrthoMethod::kLoewdin);
    EXPECT_LT((w - expected).norm(), 1e-14);
    EXPECT_LT(orthonormality_residual(half, w), 1e-14);
    const CMatrix c = orthonormalize(half, OrthoMethod::kGramSchmidt);
    EXPECT_LT(orthonormality_residual(half, c), 1e-14);
    EXPECT_EQ(std::abs(c(1, 0)), 0.0);

    const GaussianState s = evolved(squeezer_instance(0.4), 1.0, CVector::Zero(1));
    const GramMatrix dup = gram({s, s});
    for (OrthoMethod m : {OrthoMethod::kLoewdin, OrthoMethod::kGramSchmidt}) {
        try {
            orthonormalize(dup, m);
            FAIL();
        } catch (const Error &e) {
            EXPECT_EQ(e.kind(), ErrorKind::kRank);
        }
    }
}

TEST(gaussian, determinant_and_omega_identities) {
    for (std::uint64_t seed = 1; seed <= 8; ++seed) {
        const NormalForm nf = normal_form(bounded_instance(seed, 3, 2.0), 1.0);
        const DeterminantResiduals d = determinant_identities(nf);
        EXPECT_LT(d.chain, 1e-8);
        EXPECT_LT(d.five_factor, 1e-8);
        EXPECT_LT(d.omega_inverse, 1e-9);
        EXPECT_LT(d.omega_symmetry, 1e-10);
    }
}
