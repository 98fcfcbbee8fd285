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

#ifndef SQZ_INSTANCES_H
#define SQZ_INSTANCES_H

#include <cstdint>
#include <random>

#include "sqz/symplectic.h"

namespace sqz {

/// Fixed 3-mode reference instance with four-digit entries.
HamiltonianSpec reference_instance();

/// A = sym(Z), B = herm(Z), h = z with standard complex Gaussian entries, all times scale.
HamiltonianSpec random_instance(std::uint64_t seed, int n, double scale);

/// As random_instance, then each of A, B, h rescaled so its 2-norm is at most bound.
HamiltonianSpec bounded_instance(std::uint64_t seed, int n, double bound);

/// Haar-distributed unitary from the QR factorization of a complex Gaussian matrix.
CMatrix haar_unitary(int n, std::mt19937_64 &rng);

/// Rotation-only single-mode instance (A = 0, B = omega, h = 0).
HamiltonianSpec rotation_instance(double omega);

/// Real single-mode squeezer (A = r, B = 0, h = 0).
HamiltonianSpec squeezer_instance(double r);

}  // namespace sqz

#endif
