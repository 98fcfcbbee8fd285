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

#include "sqz/fockoracle.h"

#include <cmath>
#include <functional>
#include <sstream>

#include "sqz/error.h"

namespace sqz {

FockBasis::FockBasis(int n, int cutoff) : n_(n), cutoff_(cutoff), dim_(1) {
    if (n < 1 || cutoff < 1) {
        fail(ErrorKind::kValidation, "FockBasis: mode count and cutoff must be positive");
    }
    if (n > 3) {
        fail(ErrorKind::kSize, "FockBasis: at most 3 modes are supported");
    }
    for (int k = 0; k < n; ++k) {
        dim_ *= static_cast<std::size_t>(cutoff + 1);
        if (dim_ > kMaxFockDim) {
            std::ostringstream out;
            out << "FockBasis: dimension exceeds the cap of " << kMaxFockDim;
            fail(ErrorKind::kSize, out.str());
        }
    }
}

std::vector<int> FockBasis::occupation(std::size_t flat) const {
    std::vector<int> occ(n_);
    for (int k = n_ - 1; k >= 0; --k) {
        occ[k] = static_cast<int>(flat % (cutoff_ + 1));
        flat /= cutoff_ + 1;
    }
    return occ;
}

std::size_t FockBasis::flat(const std::vector<int> &occupation) const {
    std::size_t out = 0;
    for (int k = 0; k < n_; ++k) {
        out = out * (cutoff_ + 1) + occupation[k];
    }
    return out;
}

double FockBasis::tail_mass(const CVector &amplitudes) const {
    double total = 0.0;
    for (std::size_t i = 0; i < dim_; ++i) {
        const auto occ = occupation(i);
        for (int k = 0; k < n_; ++k) {
            if (occ[k] == cutoff_) {
                total += std::norm(amplitudes(i));
                break;
            }
        }
    }
    return total;
}

namespace {

// Applies a (raise = false) or a^dagger (raise = true) on one mode; returns false past the cutoff or below zero.
bool ladder(std::vector<int> &occ, int mode, bool raise, int cutoff, double &factor) {
    if (raise) {
        if (occ[mode] + 1 > cutoff) {
            return false;
        }
        factor *= std::sqrt(occ[mode] + 1.0);
        ++occ[mode];
    } else {
        if (occ[mode] == 0) {
            return false;
        }
        factor *= std::sqrt(static_cast<double>(occ[mode]));
        --occ[mode];
    }
    return true;
}

OracleValue converge(int cutoff, const std::function<OracleValue(int)> &at_cutoff) {
    OracleValue prev = at_cutoff(cutoff);
    for (int c = 2 * cutoff;; c *= 2) {
        OracleValue next;
        try {
            next = at_cutoff(c);
        } catch (const Error &e) {
            if (e.kind() != ErrorKind::kSize) {
                throw;
            }
            std::ostringstream out;
            out << "Fock oracle did not converge before the size cap; last value " << prev.value << " at cutoff "
                << prev.cutoff << " changed by " << prev.delta;
            fail(ErrorKind::kConvergence, out.str());
        }
        next.delta = std::abs(next.value - prev.value);
        if (next.delta < 1e-8) {
            return next;
        }
        prev = next;
    }
}

}  // namespace

CMatrix build_hamiltonian(const HamiltonianSpec &spec, const FockBasis &basis) {
    spec.validate();
    if (spec.n != basis.n()) {
        fail(ErrorKind::kDimension, "build_hamiltonian: basis and instance mode counts differ");
    }
    const int n = spec.n;
    const int cutoff = basis.cutoff();
    const auto dim = static_cast<Eigen::Index>(basis.dim());
    CMatrix h = CMatrix::Zero(dim, dim);
    auto add = [&](const std::vector<int> &from, std::size_t col, Complex coeff,
                   std::initializer_list<std::pair<int, bool>> ops) {
        if (coeff == Complex(0.0)) {
            return;
        }
        std::vector<int> occ = from;
        double factor = 1.0;
        // Operators act right to left.
        for (auto it = std::rbegin(ops); it != std::rend(ops); ++it) {
            if (!ladder(occ, it->first, it->second, cutoff, factor)) {
                return;
            }
        }
        h(static_cast<Eigen::Index>(basis.flat(occ)), static_cast<Eigen::Index>(col)) += coeff * factor;
    };
    for (std::size_t col = 0; col < basis.dim(); ++col) {
        const auto occ = basis.occupation(col);
        for (int i = 0; i < n; ++i) {
            for (int j = 0; j < n; ++j) {
                add(occ, col, 0.5 * kI * spec.A(i, j), {{i, true}, {j, true}});
                add(occ, col, -0.5 * kI * std::conj(spec.A(i, j)), {{i, false}, {j, false}});
                add(occ, col, spec.B(i, j), {{i, true}, {j, false}});
            }
            add(occ, col, kI * spec.h(i), {{i, true}});
            add(occ, col, -kI * std::conj(spec.h(i)), {{i, false}});
        }
    }
    return 0.5 * (h + h.adjoint());
}

CVector coherent_vector(const CVector &z, const FockBasis &basis) {
    if (z.size() != basis.n()) {
        fail(ErrorKind::kDimension, "coherent_vector: z has wrong length");
    }
    const int cutoff = basis.cutoff();
    std::vector<std::vector<Complex>> modes(basis.n());
    double kept = 1.0;
    for (int k = 0; k < basis.n(); ++k) {
        Complex amp = std::exp(-0.5 * std::norm(z(k)));
        double mass = 0.0;
        for (int m = 0; m <= cutoff; ++m) {
            modes[k].push_back(amp);
            mass += std::norm(amp);
            amp *= z(k) / std::sqrt(m + 1.0);
        }
        kept *= mass;
    }
    if (1.0 - kept > 1e-10) {
        std::ostringstream out;
        out << "coherent_vector: truncated tail " << 1.0 - kept << " exceeds 1e-10";
        fail(ErrorKind::kConvergence, out.str());
    }
    CVector v(static_cast<Eigen::Index>(basis.dim()));
    for (std::size_t i = 0; i < basis.dim(); ++i) {
        const auto occ = basis.occupation(i);
        Complex a = 1.0;
        for (int k = 0; k < basis.n(); ++k) {
            a *= modes[k][occ[k]];
        }
        v(static_cast<Eigen::Index>(i)) = a;
    }
    return v;
}

FockEvolution::FockEvolution(const HamiltonianSpec &spec, const FockBasis &basis) : basis_(basis) {
    Eigen::SelfAdjointEigenSolver<CMatrix> es(build_hamiltonian(spec, basis));
    energies_ = es.eigenvalues();
    vectors_ = es.eigenvectors();
}

CVector FockEvolution::apply(double t, const CVector &v) const {
    CVector c = vectors_.adjoint() * v;
    for (Eigen::Index k = 0; k < c.size(); ++k) {
        c(k) *= std::polar(1.0, energies_(k) * t);
    }
    return vectors_ * c;
}

OracleValue vacuum_amplitude(const HamiltonianSpec &spec, double t, int cutoff) {
    return converge(cutoff, [&](int c) {
        const FockBasis basis(spec.n, c);
        const FockEvolution evo(spec, basis);
        CVector vac = CVector::Zero(static_cast<Eigen::Index>(basis.dim()));
        vac(0) = 1.0;
        const CVector psi = evo.apply(t, vac);
        return OracleValue{psi(0), 0.0, c, basis.tail_mass(psi)};
    });
}

OracleValue coherent_overlap(const HamiltonianSpec &spec, double t, const CVector &z, int cutoff) {
    return converge(cutoff, [&](int c) {
        const FockBasis basis(spec.n, c);
        const FockEvolution evo(spec, basis);
        const CVector zc = coherent_vector(z, basis);
        const CVector psi = evo.apply(t, zc);
        return OracleValue{zc.dot(psi), 0.0, c, basis.tail_mass(psi)};
    });
}

OracleValue state_inner(const HamiltonianSpec &h1, double t1, const HamiltonianSpec &h2, double t2, int cutoff) {
    if (h1.n != h2.n) {
        fail(ErrorKind::kDimension, "state_inner: instances have different mode counts");
    }
    return converge(cutoff, [&](int c) {
        const FockBasis basis(h1.n, c);
        CVector vac = CVector::Zero(static_cast<Eigen::Index>(basis.dim()));
        vac(0) = 1.0;
        const CVector psi1 = FockEvolution(h1, basis).apply(t1, vac);
        const CVector psi2 = FockEvolution(h2, basis).apply(t2, vac);
        return OracleValue{psi1.dot(psi2), 0.0, c, std::max(basis.tail_mass(psi1), basis.tail_mass(psi2))};
    });
}

}  // namespace sqz
