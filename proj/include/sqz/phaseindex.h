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

#ifndef SQZ_PHASEINDEX_H
#define SQZ_PHASEINDEX_H

#include <cstddef>
#include <vector>

#include "sqz/symplectic.h"
#include "sqz/types.h"

namespace sqz {

/// Half the argument of det U, U the unitary polar factor of phi. Lies in (-pi/2, pi/2].
double eigenphase_sum(const CMatrix &phi);

struct IndexJump {
    double t = 0.0;
    int sign = 0;
};

struct IndexRecord {
    std::vector<double> grid;
    std::vector<double> phi;
    std::vector<Complex> det;
    std::vector<Complex> logdet;  // log det Phi continued along the grid
    std::vector<int> ind;
    std::vector<IndexJump> jumps;

    std::size_t size() const {
        return grid.size();
    }
};

struct TraceOptions {
    double dt0 = 0.0;          // <= 0 selects |t_end| / 256
    int max_halvings = 20;
};

/// Walks [0, t_end] (or [t_end, 0] when t_end < 0), halving steps until the
/// argument of det Phi moves by less than pi/2 between nodes.
IndexRecord index_trace(const HamiltonianSpec &spec, double t_end, const TraceOptions &options = {});

/// exp(i pi Ind) / sqrt(det Phi) with the principal root.
Complex continuous_sqrt_det(const IndexRecord &record, std::size_t k);

/// Ind(0, t) through a default trace.
int index_at(const HamiltonianSpec &spec, double t);

/// Largest wrapped change of arg det Phi between neighbouring nodes.
double max_phase_step(const IndexRecord &record);

}  // namespace sqz

#endif
