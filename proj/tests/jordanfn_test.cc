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

#include "sqz/jordanfn.h"

#include <gtest/gtest.h>

#include "sqz/error.h"
#include "sqz/instances.h"
#include "sqz/matfun.h"
#include "sqz/symplectic.h"
#include "test_util.h"

using namespace sqz;

namespace {

// Entry (i, i+d) of exp(J tau) for a single Jordan block.
Complex block_exp_entry(Complex lambda, int d, double tau) {
    return std::pow(tau, d) / std::tgamma(d + 1.0) * std::exp(lambda * tau);
}

CMatrix quad_F(Complex lambda, int size, double t, int order) {
    CMatrix out = CMatrix::Zero(size, size);
    for (int d = 0; d < size; ++d) {
        const Complex v = testutil::composite_quad<Complex>(
            [&](double tau) {
                const double weight = order == 1 ? 1.0 : (t - tau);
                return weight * block_exp_entry(lambda, d, tau);
            },
            0.0, t, 8, Complex(0.0));
        for (int i = 0; i + d < size; ++i) {
            out(i, i + d) = v;
        }
    }
    return out;
}

}  // namespace

TEST(jordanfn, nilpotent_block) {
    const CMatrix f1 = block_F1(0.0, 3, 2.0);
    CMatrix expected(3, 3);
    expected << 2.0, 2.0, 4.0 / 3.0, 0.0, 2.0, 2.0, 0.0, 0.0, 2.0;
    EXPECT_LT((f1 - expected).norm(), 1e-15);
    const CMatrix f2 = block_F2(0.0, 3, 2.0);
    CMatrix expected2(3, 3);
    expected2 << 2.0, 4.0 / 3.0, 2.0 / 3.0, 0.0, 2.0, 4.0 / 3.0, 0.0, 0.0, 2.0;
    EXPECT_LT((f2 - expected2).norm(), 1e-15);
}

TEST(jordanfn, scalar_block) {
    const Complex lambda(0.7, -1.3);
    const double t = 1.7;
    const Complex e = std::exp(lambda * t);
    EXPECT_LT(std::abs(block_F1(lambda, 1, t)(0, 0) - (e - 1.0) / lambda), 1e-14);
    EXPECT_LT(std::abs(block_F2(lambda, 1, t)(0, 0) - (e - 1.0 - lambda * t) / (lambda * lambda)), 1e-14);
}

TEST(jordanfn, blocks_match_quadrature) {
    for (Complex lambda : {Complex(0.3, 0.2), Complex(-2.5, 1.0), Complex(4.0, -3.0), Complex(1e-9, 0.0)}) {
        for (double t : {0.5, 1.0, 3.0}) {
            const CMatrix q1 = quad_F(lambda, 4, t, 1);
            const CMatrix q2 = quad_F(lambda, 4, t, 2);
            EXPECT_LT((block_F1(lambda, 4, t) - q1).norm(), 1e-11 * std::max(1.0, q1.norm())) << lambda << " " << t;
            EXPECT_LT((block_F2(lambda, 4, t) - q2).norm(), 1e-11 * std::max(1.0, q2.norm())) << lambda << " " << t;
        }
    }
}

TEST(jordanfn, continuity_across_switch) {
    // Entry d switches form at |lambda t| = 1 + d; both sides must agree.
    for (int d = 0; d < 4; ++d) {
        const double edge = 1.0 + d;
        const Complex below(edge * (1.0 - 1e-12), 0.0);
        const Complex above(edge * (1.0 + 1e-12), 0.0);
        for (int order : {1, 2}) {
            const CMatrix lo = order == 1 ? block_F1(below, d + 1, 1.0) : block_F2(below, d + 1, 1.0);
            const CMatrix hi = order == 1 ? block_F1(above, d + 1, 1.0) : block_F2(above, d + 1, 1.0);
            EXPECT_LT(std::abs(lo(0, d) - hi(0, d)), 1e-10 * std::abs(lo(0, d))) << d << " " << order;
        }
    }
}

TEST(jordanfn, assemble_diagonalizable_generator) {
    const CMatrix g = build_generator(reference_instance()).G;
    const JordanSpec spec = cluster_jordan(g);
    for (const JordanBlock &b : spec.blocks) {
        EXPECT_EQ(b.size, 1);
    }
    const PhiFunctions pf = phi_functions(g, 1.0);
    EXPECT_LT((assemble(spec, 1.0, 1) - pf.phi1).norm(), 1e-8 * spec.condition * std::max(1.0, pf.phi1.norm()));
    EXPECT_LT((assemble(spec, 1.0, 2) - pf.phi2).norm(), 1e-8 * spec.condition * std::max(1.0, pf.phi2.norm()));
}

TEST(jordanfn, assemble_defective) {
    CMatrix d = testutil::random_matrix(4, 11) + 2.0 * CMatrix::Identity(4, 4);
    for (Complex lambda : {Complex(0.0), Complex(0.4, -0.9)}) {
        JordanSpec spec;
        spec.D = d;
        spec.blocks = {{lambda, 3}, {Complex(-1.2, 0.3), 1}};
        const CMatrix g = d * jordan_matrix(spec.blocks) * d.inverse();
        check_jordan(spec, g);
        EXPECT_GT(spec.condition, 1.0);
        for (double t : {0.3, 1.0, 2.5}) {
            const PhiFunctions pf = phi_functions(g, t);
            EXPECT_LT((assemble(spec, t, 1) - pf.phi1).norm(), 1e-9 * spec.condition * std::max(1.0, pf.phi1.norm()));
            EXPECT_LT((assemble(spec, t, 2) - pf.phi2).norm(), 1e-9 * spec.condition * std::max(1.0, pf.phi2.norm()));
        }
    }
}

TEST(jordanfn, cluster_recovers_structure) {
    const std::vector<JordanBlock> blocks = {{Complex(0.5), 2}, {Complex(0.5), 1}, {Complex(-1.0, 1.0), 2}};
    const CMatrix d = testutil::random_matrix(5, 7) + 3.0 * CMatrix::Identity(5, 5);
    const CMatrix g = d * jordan_matrix(blocks) * d.inverse();
    const JordanSpec spec = cluster_jordan(g);
    int total = 0;
    int largest_at_half = 0;
    for (const JordanBlock &b : spec.blocks) {
        total += b.size;
        if (std::abs(b.lambda - 0.5) < 1e-4) {
            largest_at_half = std::max(largest_at_half, b.size);
        }
    }
    EXPECT_EQ(total, 5);
    EXPECT_EQ(largest_at_half, 2);
    EXPECT_LT(spec.residual, 1e-6 * std::max(1.0, g.norm()));
}

TEST(jordanfn, errors) {
    EXPECT_THROW(block_F1(1.0, 0, 1.0), Error);
    JordanSpec spec;
    spec.D = CMatrix::Identity(2, 2);
    spec.blocks = {{Complex(1.0), 2}};
    CMatrix wrong = CMatrix::Identity(2, 2);
    try {
        check_jordan(spec, wrong);
        FAIL();
    } catch (const Error &e) {
        EXPECT_EQ(e.kind(), ErrorKind::kAccuracy);
    }
    spec.D << 1.0, 1.0, 1.0, 1.0 + 1e-12;
    spec.condition = condition_number(spec.D);
    EXPECT_THROW(assemble(spec, 1.0, 1), Error);
}
