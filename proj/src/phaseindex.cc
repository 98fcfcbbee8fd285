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

#include <algorithm>
#include <cmath>
#include <sstream>

#include "sqz/error.h"
#include "sqz/matfun.h"

namespace sqz {

double eigenphase_sum(const CMatrix &phi) {
    const Polar p = polar(phi);
    Eigen::ComplexEigenSolver<CMatrix> es(p.unitary, false);
    double total = 0.0;
    for (Eigen::Index k = 0; k < es.eigenvalues().size(); ++k) {
        total += principal_arg(es.eigenvalues()(k));
    }
    return 0.5 * wrap_angle(total);
}

namespace {

struct Node {
    double t;
    Complex det;
    double theta;
    double phi;
};

Node evaluate(const Generator &gen, double t) {
    const SymplecticBlock s = propagate(gen, t);
    const Complex det = s.Phi.partialPivLu().determinant();
    return {t, det, principal_arg(det), eigenphase_sum(s.Phi)};
}

void push(IndexRecord &record, const Node &node, int ind, Complex logdet) {
    record.grid.push_back(node.t);
    record.phi.push_back(node.phi);
    record.det.push_back(node.det);
    record.logdet.push_back(logdet);
    record.ind.push_back(ind);
}

void cross_check(const IndexRecord &record) {
    const std::size_t k = record.size() - 1;
    const Complex by_index = continuous_sqrt_det(record, k);
    const Complex by_log = std::exp(-0.5 * record.logdet[k]);
    if (std::abs(by_index - by_log) > 1e-9 * std::abs(by_log)) {
        std::ostringstream out;
        out << "index_trace: index and unwrapped log det disagree at t = " << record.grid[k];
        fail(ErrorKind::kConsistency, out.str());
    }
}

}  // namespace

IndexRecord index_trace(const HamiltonianSpec &spec, double t_end, const TraceOptions &options) {
    if (!std::isfinite(t_end)) {
        fail(ErrorKind::kValidation, "index_trace: t_end must be finite");
    }
    const Generator gen = build_generator(spec);
    IndexRecord record;
    push(record, {0.0, 1.0, 0.0, 0.0}, 0, 0.0);
    if (t_end == 0.0) {
        return record;
    }
    const double direction = t_end > 0 ? 1.0 : -1.0;
    const double span = std::abs(t_end);
    const double dt0 = options.dt0 > 0 ? options.dt0 : span / 256.0;
    const double dt_min = dt0 * std::ldexp(1.0, -options.max_halvings);

    Node prev{0.0, 1.0, 0.0, 0.0};
    int ind = 0;
    double unwrapped = 0.0;
    double dt = dt0;
    double walked = 0.0;
    while (walked < span) {
        const bool last = walked + dt >= span;
        const double next = last ? span : walked + dt;
        const Node node = evaluate(gen, direction * next);
        const double raw = node.theta - prev.theta;
        const double step = wrap_angle(raw);
        if (std::abs(step) >= 0.5 * kPi) {
            dt *= 0.5;
            if (dt < dt_min) {
                std::ostringstream out;
                out << "index_trace: step underflow near t = " << direction * walked
                    << "; arg det Phi moves too fast to resolve";
                fail(ErrorKind::kPath, out.str());
            }
            continue;
        }
        if (raw > kPi) {
            ++ind;
            record.jumps.push_back({node.t, +1});
        } else if (raw < -kPi) {
            --ind;
            record.jumps.push_back({node.t, -1});
        }
        unwrapped += step;
        push(record, node, ind, Complex(std::log(std::abs(node.det)), unwrapped));
        cross_check(record);
        prev = node;
        walked = next;
        dt = std::min(2.0 * dt, dt0);
    }
    return record;
}

Complex continuous_sqrt_det(const IndexRecord &record, std::size_t k) {
    if (k >= record.size()) {
        fail(ErrorKind::kRange, "continuous_sqrt_det: grid position out of range");
    }
    const double sign = record.ind[k] % 2 == 0 ? 1.0 : -1.0;
    return sign / principal_sqrt(record.det[k]);
}

int index_at(const HamiltonianSpec &spec, double t) {
    return index_trace(spec, t).ind.back();
}

double max_phase_step(const IndexRecord &record) {
    double worst = 0.0;
    for (std::size_t k = 1; k < record.size(); ++k) {
        worst = std::max(worst, std::abs(record.logdet[k].imag() - record.logdet[k - 1].imag()));
    }
    return worst;
}

}  // namespace sqz
