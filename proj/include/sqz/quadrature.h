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

#ifndef SQZ_QUADRATURE_H
#define SQZ_QUADRATURE_H

#include <array>
#include <cmath>
#include <complex>
#include <cstddef>
#include <queue>
#include <string>
#include <vector>

#include <Eigen/Core>

#include "sqz/error.h"

namespace sqz {

struct QuadratureOptions {
    double abs_tol = 1e-10;
    std::size_t max_evaluations = 1000000;
};

template <typename Value>
struct QuadratureResult {
    Value value;
    double error_estimate = 0.0;
    std::size_t evaluations = 0;
};

namespace detail {

inline double magnitude(double x) {
    return std::abs(x);
}
inline double magnitude(std::complex<double> x) {
    return std::abs(x);
}
template <typename Derived>
double magnitude(const Eigen::MatrixBase<Derived> &x) {
    return x.norm();
}

// 15-point Kronrod nodes on [-1, 1] (non-negative half) with the embedded
// 7-point Gauss rule at the odd positions.
inline constexpr std::array<double, 8> kKronrodNodes = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144845693013, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.000000000000000000000000000000000};
inline constexpr std::array<double, 8> kKronrodWeights = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
inline constexpr std::array<double, 4> kGaussWeights = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

template <typename Value>
struct Segment {
    double a;
    double b;
    Value value;
    double error;
    bool operator<(const Segment &other) const {
        return error < other.error;
    }
};

template <typename Value, typename F>
Segment<Value> gauss_kronrod_15(F &f, double a, double b) {
    const double center = 0.5 * (a + b);
    const double half = 0.5 * (b - a);
    const Value fc = f(center);
    Value kronrod = fc * kKronrodWeights[7];
    Value gauss = fc * kGaussWeights[3];
    for (std::size_t k = 0; k < 7; ++k) {
        const double dx = half * kKronrodNodes[k];
        const Value sum = f(center - dx) + f(center + dx);
        kronrod = kronrod + sum * kKronrodWeights[k];
        if (k % 2 == 1) {
            gauss = gauss + sum * kGaussWeights[k / 2];
        }
    }
    kronrod = kronrod * half;
    gauss = gauss * half;
    const double err = magnitude(kronrod - gauss);
    return {a, b, kronrod, err};
}

}  // namespace detail

/// Globally adaptive Gauss-Kronrod (G7/K15) quadrature of f over [a, b].
/// Value may be a real or complex scalar or an Eigen vector; `zero` fixes the
/// shape of vector-valued integrands. Bisects the worst segment until the
/// summed error estimate is below abs_tol; kConvergence when the evaluation cap
/// is reached first.
template <typename Value, typename F>
QuadratureResult<Value> integrate(F &&f, double a, double b, const Value &zero, const QuadratureOptions &options = {}) {
    QuadratureResult<Value> out{zero, 0.0, 0};
    if (a == b) {
        return out;
    }
    std::priority_queue<detail::Segment<Value>> heap;
    auto first = detail::gauss_kronrod_15<Value>(f, a, b);
    out.evaluations = 15;
    Value total = first.value;
    double total_error = first.error;
    heap.push(first);
    while (total_error > options.abs_tol) {
        if (out.evaluations + 30 > options.max_evaluations) {
            fail(ErrorKind::kConvergence, "quadrature: evaluation cap reached with error estimate " +
                                              std::to_string(total_error));
        }
        auto worst = heap.top();
        heap.pop();
        const double mid = 0.5 * (worst.a + worst.b);
        auto left = detail::gauss_kronrod_15<Value>(f, worst.a, mid);
        auto right = detail::gauss_kronrod_15<Value>(f, mid, worst.b);
        out.evaluations += 30;
        total = total - worst.value + left.value + right.value;
        total_error = total_error - worst.error + left.error + right.error;
        heap.push(left);
        heap.push(right);
        if (heap.size() > 1 && total_error <= options.abs_tol) {
            // Recompute from the segments to shed accumulated rounding.
            total_error = 0.0;
            auto copy = heap;
            Value sum = zero;
            while (!copy.empty()) {
                total_error += copy.top().error;
                sum = sum + copy.top().value;
                copy.pop();
            }
            total = sum;
        }
    }
    out.value = total;
    out.error_estimate = total_error;
    return out;
}

}  // namespace sqz

#endif
