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

#include <sstream>

#include "sqz/error.h"
#include "sqz/gaussian.h"
#include "sqz/normalform.h"

namespace sqz {

NormalForm compose_normal_forms(const HamiltonianSpec &h1, double t1, const HamiltonianSpec &h2, double t2) {
    if (h1.n != h2.n) {
        fail(ErrorKind::kDimension, "compose_normal_forms: instances have different mode counts");
    }
    const NormalForm first = normal_form(h1, t1);
    const NormalForm second = normal_form(h2, t2);
    const SymplecticBlock b1{t1, first.Phi, first.Psi, first.ccr};
    const SymplecticBlock b2{t2, second.Phi, second.Psi, second.ccr};
    const SymplecticBlock joint = compose(b2, b1);
    if (!joint.ccr.ok()) {
        std::ostringstream out;
        out << "compose_normal_forms: CCR residual " << joint.ccr.max() << " exceeds " << joint.ccr.tolerance;
        fail(ErrorKind::kConsistency, out.str());
    }
    const CVector h12 = second.Phi * first.h_t + second.Psi * first.h_t.conjugate() + second.h_t;
    NormalForm out = coefficients_from_block(joint, h12);
    const CVector zero = CVector::Zero(h1.n);
    const GaussianState bra = to_gaussian(normal_form(h1, -t1), zero);
    const GaussianState ket = to_gaussian(second, zero);
    out.s = inner_log(bra, ket);
    out.index = 0;
    return out;
}

}  // namespace sqz
