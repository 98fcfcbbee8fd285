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

#ifndef SQZ_FOCKORACLE_H
#define SQZ_FOCKORACLE_H

#include <cstddef>
#include <vector>

#include "sqz/symplectic.h"
#include "sqz/types.h"

namespace sqz {

class FockBasis {
   public:
    FockBasis(int n, int cutoff);

    int n() const {
        return n_;
    }
    int cutoff() const {
        return cutoff_;
    }
    std::size_t dim() const {
        return dim_;
    }
    std::vector<int> occupation(std::size_t flat) const;
    std::size_t flat(const std::vector<int> &occupation) const;
    /// Total |amp|^2 on states with some mode at the cutoff.
    double tail_mass(const CVector &amplitudes) const;

   private:
    int n_;
    int cutoff_;
    std::size_t dim_;
};

inline constexpr std::size_t kMaxFockDim = 20000;

/// The truncated Hamiltonian, assembled from ladder actions on basis states.
CMatrix build_hamiltonian(const HamiltonianSpec &spec, const FockBasis &basis);

/// Coherent state of a truncated basis; throws if the truncated tail exceeds 1e-10.
CVector coherent_vector(const CVector &z, const FockBasis &basis);

/// exp(iHt) on a fixed truncation via a Hermitian eigendecomposition.
class FockEvolution {
   public:
    FockEvolution(const HamiltonianSpec &spec, const FockBasis &basis);

    CVector apply(double t, const CVector &v) const;
    const FockBasis &basis() const {
        return basis_;
    }

   private:
    FockBasis basis_;
    RVector energies_;
    CMatrix vectors_;
};

struct OracleValue {
    Complex value = 0.0;
    double delta = 0.0;       // change under the last cutoff doubling
    int cutoff = 0;
    double tail_mass = 0.0;   // leakage into the top photon layer
};

/// <0|exp(iHt)|0>, doubling the cutoff until the change is below 1e-8.
OracleValue vacuum_amplitude(const HamiltonianSpec &spec, double t, int cutoff);

/// <z|exp(iHt)|z>.
OracleValue coherent_overlap(const HamiltonianSpec &spec, double t, const CVector &z, int cutoff);

/// <exp(iH1 t1) 0 | exp(iH2 t2) 0>.
OracleValue state_inner(const HamiltonianSpec &h1, double t1, const HamiltonianSpec &h2, double t2, int cutoff);

}  // namespace sqz

#endif
