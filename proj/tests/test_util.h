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

#ifndef SQZ_TESTS_TEST_UTIL_H
#define SQZ_TESTS_TEST_UTIL_H

#include <cmath>
#include <vector>

#include "sqz/types.h"

namespace sqz::testutil {

/// Gauss-Legendre nodes and weights on [-1, 1] by Newton iteration.
struct GaussLegendre {
    std::vector<double> nodes;
    std::vector<double> weights;

    explicit GaussLegendre(int order) {
        for (int i = 1; i <= order; ++i) {
            double x = std::cos(kPi * (i - 0.25) / (order + 0.5));
            double dp = 0.0;
            for (int iter = 0; iter < 100; ++iter) {
                double p0 = 1.0;
                double p1 = x;
                for (int k = 2; k <= order; ++k) {
                    const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
                    p0 = p1;
                    p1 = p2;
                }
                dp = order * (x * p1 - p0) / (x * x - 1.0);
                const double dx = p1 / dp;
                x -= dx;
                if (std::abs(dx) < 1e-16) {
                    break;
                }
            }
            nodes.push_back(x);
            weights.push_back(2.0 / ((1.0 - x * x) * dp * dp));
        }
    }
};

/// Composite Gauss-Legendre rule with `panels` equal panels of order 20.
template <typename Value, typename F>
Value composite_quad(F &&f, double a, double b, int panels, Value zero) {
    static const GaussLegendre rule(20);
    const double width = (b - a) / panels;
    Value total = zero;
    for (int p = 0; p < panels; ++p) {
        const double lo = a + p * width;
        const double mid = lo + 0.5 * width;
        for (std::size_t k = 0; k < rule.nodes.size(); ++k) {
            total = total + f(mid + 0.5 * width * rule.nodes[k]) * (0.5 * width * rule.weights[k]);
        }
    }
    return total;
}

/// Plain Taylor sum with scaling and squaring.
inline CMatrix taylor_expm(const CMatrix &m, int terms = 30) {
    const double norm = m.norm();
    int squarings = 0;
    while (norm / std::ldexp(1.0, squarings) > 0.5) {
        ++squarings;
    }
    const CMatrix scaled = m / std::ldexp(1.0, squarings);
    CMatrix term = CMatrix::Identity(m.rows(), m.cols());
    CMatrix sum = term;
    for (int k = 1; k < terms; ++k) {
        term = term * scaled / static_cast<double>(k);
        sum += term;
    }
    for (int k = 0; k < squarings; ++k) {
        sum = sum * sum;
    }
    return sum;
}

inline CMatrix random_matrix(int n, unsigned seed) {
    std::srand(seed);
    return CMatrix::Random(n, n);
}

}  // namespace sqz::testutil

#endif
