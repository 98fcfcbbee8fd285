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

#include <algorithm>
#include <functional>
#include <limits>
#include <cmath>
#include <numeric>
#include <sstream>

#include "sqz/error.h"

namespace sqz {

namespace {

double factorial(int k) {
    return std::tgamma(k + 1.0);
}

// Series in lambda t for the entries d = j - i of F1 (order 1) or F2 (order 2).
Complex entry_series(Complex lambda, int d, double t, int order) {
    const Complex x = lambda * t;
    Complex term = 1.0;  // x^k / k!
    Complex sum = 0.0;
    for (int k = 0; k < 400; ++k) {
        double denom = k + d + 1.0;
        if (order == 2) {
            denom *= k + d + 2.0;
        }
        const Complex add = term / denom;
        sum += add;
        if (k > std::abs(x) && std::abs(add) <= 1e-17 * std::abs(sum)) {
            break;
        }
        term *= x / (k + 1.0);
    }
    return std::pow(t, d + order) * sum / factorial(d);
}

Complex entry_closed(Complex lambda, int d, double t, int order) {
    const Complex x = lambda * t;
    const Complex e = std::exp(x);
    Complex partial = 0.0;
    Complex power = 1.0;  // (-x)^m / m!
    for (int m = 0; m <= d; ++m) {
        partial += (order == 1 ? 1.0 : static_cast<double>(d + 1 - m)) * power;
        power *= -x / (m + 1.0);
    }
    if (order == 1) {
        return (1.0 - e * partial) / std::pow(-lambda, d + 1);
    }
    const double sign = (d + 1) % 2 == 0 ? 1.0 : -1.0;
    return sign / std::pow(lambda, d + 2) * (static_cast<double>(d + 1) + x - e * partial);
}

CMatrix block_f(Complex lambda, int size, double t, int order) {
    if (size < 1) {
        fail(ErrorKind::kValidation, "Jordan block size must be positive");
    }
    CMatrix out = CMatrix::Zero(size, size);
    for (int d = 0; d < size; ++d) {
        const bool series = std::abs(lambda * t) <= 1.0 + d;
        const Complex v = series ? entry_series(lambda, d, t, order) : entry_closed(lambda, d, t, order);
        for (int i = 0; i + d < size; ++i) {
            out(i, i + d) = v;
        }
    }
    return out;
}

int numerical_rank(const CMatrix &m, double threshold) {
    if (m.size() == 0) {
        return 0;
    }
    Eigen::JacobiSVD<CMatrix> svd(m);
    const RVector &s = svd.singularValues();
    return static_cast<int>((s.array() > threshold).count());
}

// Orthonormal basis of the numerical kernel of m, given its rank.
CMatrix kernel_basis(const CMatrix &m, int rank) {
    Eigen::JacobiSVD<CMatrix> svd(m, Eigen::ComputeFullV);
    return svd.matrixV().rightCols(m.cols() - rank);
}

CMatrix matrix_power(const CMatrix &m, int k) {
    CMatrix out = CMatrix::Identity(m.rows(), m.cols());
    for (int i = 0; i < k; ++i) {
        out = out * m;
    }
    return out;
}

struct Chain {
    CVector top;
    int size;
};

// Jordan chains of a (numerically) nilpotent matrix nr.
std::vector<Chain> nilpotent_chains(const CMatrix &nr, double scale, double tol) {
    const int m = static_cast<int>(nr.rows());
    std::vector<int> rank(m + 2, 0);
    rank[0] = m;
    int height = m;
    for (int k = 1; k <= m; ++k) {
        rank[k] = numerical_rank(matrix_power(nr, k), tol * std::pow(scale, k));
        if (rank[k] == 0) {
            height = k;
            break;
        }
    }
    for (int k = height; k <= m + 1; ++k) {
        rank[k] = 0;
    }
    // at_least[k] = number of blocks with size >= k.
    auto at_least = [&](int k) { return rank[k - 1] - rank[k]; };

    std::vector<Chain> chains;
    for (int k = height; k >= 1; --k) {
        const int wanted = at_least(k) - (k < m ? at_least(k + 1) : 0);
        if (wanted <= 0) {
            continue;
        }
        std::vector<CVector> span;
        if (k > 1) {
            const CMatrix lower = kernel_basis(matrix_power(nr, k - 1), rank[k - 1]);
            for (Eigen::Index c = 0; c < lower.cols(); ++c) {
                span.push_back(lower.col(c));
            }
        }
        for (const Chain &chain : chains) {
            CVector v = chain.top;
            for (int j = 0; j < chain.size; ++j) {
                if (chain.size - j <= k) {
                    span.push_back(v);
                }
                v = nr * v;
            }
        }
        // Orthonormalize the span.
        std::vector<CVector> basis;
        auto project_out = [&](CVector v) {
            for (const CVector &b : basis) {
                v -= b * b.dot(v);
            }
            return v;
        };
        for (const CVector &v : span) {
            CVector r = project_out(v);
            if (r.norm() > 1e-8 * std::max(1.0, v.norm())) {
                basis.push_back(r.normalized());
            }
        }
        const CMatrix candidates = kernel_basis(matrix_power(nr, k), rank[k]);
        for (int pick = 0; pick < wanted; ++pick) {
            CVector best;
            double best_norm = -1.0;
            for (Eigen::Index c = 0; c < candidates.cols(); ++c) {
                const CVector r = project_out(candidates.col(c));
                if (r.norm() > best_norm) {
                    best_norm = r.norm();
                    best = r;
                }
            }
            if (best_norm <= 1e-8) {
                fail(ErrorKind::kAccuracy, "cluster_jordan: could not complete a Jordan chain");
            }
            best.normalize();
            basis.push_back(best);
            chains.push_back({best, k});
        }
    }
    return chains;
}

}  // namespace

CMatrix block_F1(Complex lambda, int size, double t) {
    return block_f(lambda, size, t, 1);
}

CMatrix block_F2(Complex lambda, int size, double t) {
    return block_f(lambda, size, t, 2);
}

CMatrix jordan_matrix(const std::vector<JordanBlock> &blocks) {
    int total = 0;
    for (const auto &b : blocks) {
        total += b.size;
    }
    CMatrix j = CMatrix::Zero(total, total);
    int at = 0;
    for (const auto &b : blocks) {
        for (int i = 0; i < b.size; ++i) {
            j(at + i, at + i) = b.lambda;
            if (i + 1 < b.size) {
                j(at + i, at + i + 1) = 1.0;
            }
        }
        at += b.size;
    }
    return j;
}

double condition_number(const CMatrix &m) {
    Eigen::JacobiSVD<CMatrix> svd(m);
    const RVector &s = svd.singularValues();
    const double low = s(s.size() - 1);
    return low > 0.0 ? s(0) / low : std::numeric_limits<double>::infinity();
}

void check_jordan(JordanSpec &spec, const CMatrix &g) {
    const CMatrix j = jordan_matrix(spec.blocks);
    if (j.rows() != spec.D.rows() || spec.D.rows() != spec.D.cols() || g.rows() != spec.D.rows()) {
        fail(ErrorKind::kDimension, "Jordan spec: block sizes do not match D");
    }
    spec.condition = condition_number(spec.D);
    spec.residual = (spec.D * j * spec.D.inverse() - g).norm();
    if (spec.residual > 1e-8 * std::max(1.0, g.norm())) {
        std::ostringstream out;
        out << "Jordan spec: reconstruction residual " << spec.residual << " is too large";
        fail(ErrorKind::kAccuracy, out.str());
    }
}

CMatrix assemble(const JordanSpec &spec, double t, int order) {
    if (order != 1 && order != 2) {
        fail(ErrorKind::kValidation, "assemble: order must be 1 or 2");
    }
    const CMatrix j = jordan_matrix(spec.blocks);
    if (j.rows() != spec.D.rows() || spec.D.rows() != spec.D.cols()) {
        fail(ErrorKind::kDimension, "assemble: block sizes do not match D");
    }
    const double cond = spec.condition > 0.0 ? spec.condition : condition_number(spec.D);
    if (cond > 1e10) {
        std::ostringstream out;
        out << "assemble: similarity transform condition number " << cond << " exceeds 1e10";
        fail(ErrorKind::kDegenerate, out.str());
    }
    CMatrix f = CMatrix::Zero(j.rows(), j.cols());
    int at = 0;
    for (const auto &b : spec.blocks) {
        f.block(at, at, b.size, b.size) = order == 1 ? block_F1(b.lambda, b.size, t) : block_F2(b.lambda, b.size, t);
        at += b.size;
    }
    return spec.D * f * spec.D.inverse();
}

JordanSpec cluster_jordan(const CMatrix &g, double tol) {
    if (g.rows() != g.cols() || g.rows() == 0) {
        fail(ErrorKind::kDimension, "cluster_jordan: matrix must be square");
    }
    const int dim = static_cast<int>(g.rows());
    const double scale = std::max(1.0, g.norm());
    Eigen::ComplexEigenSolver<CMatrix> es(g, true);
    const CVector &ev = es.eigenvalues();

    // Single-linkage clustering of the spectrum.
    std::vector<int> label(dim);
    std::iota(label.begin(), label.end(), 0);
    std::function<int(int)> root = [&](int i) { return label[i] == i ? i : label[i] = root(label[i]); };
    for (int i = 0; i < dim; ++i) {
        for (int j = i + 1; j < dim; ++j) {
            if (std::abs(ev(i) - ev(j)) <= tol * scale) {
                label[root(i)] = root(j);
            }
        }
    }

    JordanSpec spec;
    spec.D.resize(dim, dim);
    int column = 0;
    std::vector<bool> done(dim, false);
    for (int i = 0; i < dim; ++i) {
        const int r = root(i);
        if (done[r]) {
            continue;
        }
        done[r] = true;
        std::vector<int> members;
        for (int j = 0; j < dim; ++j) {
            if (root(j) == r) {
                members.push_back(j);
            }
        }
        const int m = static_cast<int>(members.size());
        Complex mu = 0.0;
        for (int j : members) {
            mu += ev(j);
        }
        mu /= static_cast<double>(m);
        if (m == 1) {
            spec.D.col(column++) = es.eigenvectors().col(members[0]).normalized();
            spec.blocks.push_back({mu, 1});
            continue;
        }
        const CMatrix nmat = g - mu * CMatrix::Identity(dim, dim);
        const CMatrix v = kernel_basis(matrix_power(nmat, m), dim - m);
        const CMatrix nr = v.adjoint() * nmat * v;
        for (const Chain &chain : nilpotent_chains(nr, scale, tol)) {
            std::vector<CVector> vectors;
            CVector x = chain.top;
            for (int j = 0; j < chain.size; ++j) {
                vectors.push_back(v * x);
                x = nr * x;
            }
            for (int j = chain.size - 1; j >= 0; --j) {
                spec.D.col(column++) = vectors[j];
            }
            spec.blocks.push_back({mu, chain.size});
        }
    }
    if (column != dim) {
        fail(ErrorKind::kAccuracy, "cluster_jordan: chains do not span the space");
    }
    spec.condition = condition_number(spec.D);
    if (spec.condition > 1e10) {
        std::ostringstream out;
        out << "cluster_jordan: similarity transform condition number " << spec.condition << " exceeds 1e10";
        fail(ErrorKind::kDegenerate, out.str());
    }
    spec.residual = (spec.D * jordan_matrix(spec.blocks) * spec.D.inverse() - g).norm();
    if (spec.residual > 1e-6 * scale) {
        std::ostringstream out;
        out << "cluster_jordan: reconstruction residual " << spec.residual << " exceeds 1e-6 ||G||";
        fail(ErrorKind::kAccuracy, out.str());
    }
    return spec;
}

}  // namespace sqz
