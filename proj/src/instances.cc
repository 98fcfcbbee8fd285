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

#include "sqz/instances.h"

#include <algorithm>

#include "sqz/error.h"

namespace sqz {

namespace {

Complex gaussian(std::mt19937_64 &rng) {
    std::normal_distribution<double> normal(0.0, 1.0);
    const double re = normal(rng);
    const double im = normal(rng);
    return {re, im};
}

CMatrix gaussian_matrix(int n, std::mt19937_64 &rng) {
    CMatrix m(n, n);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            m(i, j) = gaussian(rng);
        }
    }
    return m;
}

}  // namespace

HamiltonianSpec reference_instance() {
    HamiltonianSpec s;
    s.n = 3;
    s.label = "reference-3mode";
    s.A.resize(3, 3);
    s.A << Complex(1.694, 0.3276), Complex(0.317, 0.54), Complex(0.509, 0.331),  //
        Complex(0.317, 0.54), Complex(0.0031, 1.9513), Complex(0.6619, 0.0605),   //
        Complex(0.509, 0.331), Complex(0.6619, 0.0605), Complex(0.5526, 0.5576);
    s.B.resize(3, 3);
    s.B << Complex(1.3802, 0.0), Complex(1.8946, 0.5657), Complex(1.1696, 1.1702),  //
        Complex(1.8946, -0.5657), Complex(1.2728, 0.0), Complex(1.7892, 1.3761),     //
        Complex(1.1696, -1.1702), Complex(1.7892, -1.3761), Complex(0.5547, 0.0);
    s.h.resize(3);
    s.h << Complex(-0.6898, 0.8259), Complex(-0.3758, 0.0629), Complex(-0.4417, -0.5016);
    return s;
}

HamiltonianSpec random_instance(std::uint64_t seed, int n, double scale) {
    if (n < 1) {
        fail(ErrorKind::kValidation, "random_instance: n must be positive");
    }
    if (!(scale > 0.0)) {
        fail(ErrorKind::kValidation, "random_instance: scale must be positive");
    }
    std::mt19937_64 rng(seed);
    const CMatrix x = gaussian_matrix(n, rng);
    const CMatrix y = gaussian_matrix(n, rng);
    CVector h(n);
    for (int i = 0; i < n; ++i) {
        h(i) = gaussian(rng);
    }
    HamiltonianSpec s;
    s.n = n;
    s.A = 0.5 * scale * (x + x.transpose());
    s.B = 0.5 * scale * (y + y.adjoint());
    s.h = scale * h;
    s.label = "random seed=" + std::to_string(seed);
    return s;
}

HamiltonianSpec bounded_instance(std::uint64_t seed, int n, double bound) {
    HamiltonianSpec s = random_instance(seed, n, 1.0);
    const auto shrink = [bound](double norm) { return norm > bound ? bound / norm : 1.0; };
    s.A *= shrink(norm2(s.A));
    s.B *= shrink(norm2(s.B));
    s.h *= shrink(s.h.norm());
    s.label = "bounded seed=" + std::to_string(seed);
    return s;
}

CMatrix haar_unitary(int n, std::mt19937_64 &rng) {
    const CMatrix z = gaussian_matrix(n, rng);
    Eigen::HouseholderQR<CMatrix> qr(z);
    const CMatrix q = qr.householderQ();
    const CMatrix r = qr.matrixQR().triangularView<Eigen::Upper>();
    CVector phases(n);
    for (int k = 0; k < n; ++k) {
        const Complex d = r(k, k);
        phases(k) = std::abs(d) > 0.0 ? d / std::abs(d) : Complex(1.0);
    }
    return q * phases.asDiagonal();
}

HamiltonianSpec rotation_instance(double omega) {
    HamiltonianSpec s = HamiltonianSpec::zero(1);
    s.B(0, 0) = omega;
    s.label = "rotation";
    return s;
}

HamiltonianSpec squeezer_instance(double r) {
    HamiltonianSpec s = HamiltonianSpec::zero(1);
    s.A(0, 0) = r;
    s.label = "squeezer";
    return s;
}

}  // namespace sqz
