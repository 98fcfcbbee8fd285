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

#include "sqz/phaseindex.h"

#include <gtest/gtest.h>

#include "sqz/error.h"
#include "sqz/instances.h"
#include "sqz/matfun.h"
#include "sqz/normalform.h"

using namespace sqz;

TEST(phaseindex, eigenphase_sum_cases) {
    EXPECT_EQ(eigenphase_sum(CMatrix::Identity(3, 3)), 0.0);
    for (double omega : {0.3, 1.0, 2.5}) {
        CMatrix phi(1, 1);
        phi(0, 0) = std::exp(-kI * omega);
        EXPECT_NEAR(eigenphase_sum(phi), -omega / 2.0, 1e-14);
    }
    const SymplecticBlock s = propagate(build_generator(reference_instance()), 0.5);
    const CMatrix gram = s.Phi.adjoint() * s.Phi;
    Eigen::ComplexEigenSolver<CMatrix> es(s.Phi * sqrtm_psd(0.5 * (gram + gram.adjoint())).inverse());
    Complex product = 1.0;
    for (Eigen::Index k = 0; k < 3; ++k) {
        product *= es.eigenvalues()(k);
    }
    EXPECT_NEAR(eigenphase_sum(s.Phi), 0.5 * std::arg(product), 1e-10);
}

TEST(phaseindex, rotation_index_counts_wraps) {
    const IndexRecord rec = index_trace(rotation_instance(1.0), 4.0 * kPi);
    EXPECT_EQ(rec.ind.front(), 0);
    EXPECT_EQ(rec.ind.back(), 2);
    ASSERT_EQ(rec.jumps.size(), 2u);
    EXPECT_NEAR(rec.jumps[0].t, kPi, 4.0 * kPi / 256.0);
    EXPECT_NEAR(rec.jumps[1].t, 3.0 * kPi, 4.0 * kPi / 256.0);
    EXPECT_LT(max_phase_step(rec), 0.5 * kPi);
    for (std::size_t k = 0; k < rec.size(); ++k) {
        const double t = rec.grid[k];
        // exp(i pi Ind) / sqrt(det Phi) = exp(i t / 2) continuously.
        EXPECT_LT(std::abs(continuous_sqrt_det(rec, k) - std::exp(0.5 * kI * t)), 1e-12) << t;
    }
}

TEST(phaseindex, negative_time_is_mirror) {
    const IndexRecord rec = index_trace(rotation_instance(1.0), -4.0 * kPi);
    EXPECT_EQ(std::abs(rec.ind.back()), 2);
    EXPECT_LT(std::abs(continuous_sqrt_det(rec, rec.size() - 1) - std::exp(-2.0 * kI * kPi)), 1e-12);
}

TEST(phaseindex, trivial_and_real_squeezing) {
    const IndexRecord zero = index_trace(HamiltonianSpec::zero(2), 5.0);
    for (std::size_t k = 0; k < zero.size(); ++k) {
        EXPECT_EQ(zero.phi[k], 0.0);
        EXPECT_EQ(zero.ind[k], 0);
    }
    HamiltonianSpec sq = HamiltonianSpec::zero(2);
    sq.A << 0.5, 0.2, 0.2, 0.9;
    const IndexRecord rec = index_trace(sq, 6.0);
    for (std::size_t k = 0; k < rec.size(); ++k) {
        EXPECT_NEAR(rec.phi[k], 0.0, 1e-12);
        EXPECT_EQ(rec.ind[k], 0);
    }
}

TEST(phaseindex, reference_continuity_and_logdet) {
    const IndexRecord rec = index_trace(reference_instance(), 10.0);
    EXPECT_LT(max_phase_step(rec), 0.5 * kPi);
    for (std::size_t k = 0; k < rec.size(); ++k) {
        EXPECT_LT(std::abs(std::exp(rec.logdet[k]) - rec.det[k]), 1e-9 * std::abs(rec.det[k]));
        EXPECT_LT(std::abs(continuous_sqrt_det(rec, k) - std::exp(-0.5 * rec.logdet[k])),
                  1e-9 * std::abs(std::exp(-0.5 * rec.logdet[k])));
    }
    for (std::size_t k = 1; k < rec.size(); ++k) {
        const Complex a = continuous_sqrt_det(rec, k - 1);
        const Complex b = continuous_sqrt_det(rec, k);
        EXPECT_LT(std::abs(std::arg(b / a)), 0.5 * kPi);
    }
}

TEST(phaseindex, index_is_additive) {
    const HamiltonianSpec ref = reference_instance();
    const IndexRecord rec = index_trace(ref, 6.0);
    // Ind(0, 6) = Ind(0, s) + Ind(s, 6) for any grid node s.
    const std::size_t mid = rec.size() / 2;
    int later = 0;
    for (const IndexJump &j : rec.jumps) {
        if (j.t > rec.grid[mid]) {
            later += j.sign;
        }
    }
    EXPECT_EQ(rec.ind.back(), rec.ind[mid] + later);
    EXPECT_EQ(index_at(ref, rec.grid[mid]), rec.ind[mid]);
}

TEST(phaseindex, continuation_beats_principal_root) {
    const HamiltonianSpec rot = rotation_instance(1.0);
    const double t = kPi + 0.1;
    const IndexRecord rec = index_trace(rot, t);
    const Complex smooth = continuous_sqrt_det(rec, rec.size() - 1);
    const Complex raw = 1.0 / std::sqrt(rec.det.back());
    EXPECT_LT(std::abs(smooth - std::exp(0.5 * kI * t)), 1e-12);
    EXPECT_LT(std::abs(raw + std::exp(0.5 * kI * t)), 1e-12);
}

TEST(phaseindex, step_underflow_is_reported) {
    // Steps of 1 and 1/2 both move the phase by more than pi/2; one halving is allowed.
    TraceOptions options;
    options.dt0 = 1.0;
    options.max_halvings = 1;
    try {
        index_trace(rotation_instance(4.0), 1.0, options);
        FAIL();
    } catch (const Error &e) {
        EXPECT_EQ(e.kind(), ErrorKind::kPath);
    }
}
