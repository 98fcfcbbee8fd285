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

#include "sqz/normalform.h"

#include <cmath>
#include <sstream>

#include "sqz/error.h"
#include "sqz/gaussian.h"
#include "sqz/matfun.h"
#include "sqz/phaseindex.h"

namespace sqz {

namespace {

CVector backward_drift(const NormalForm &c) {
    return -(c.Phi.adjoint() * c.h_t - c.Psi.transpose() * c.h_t.conjugate());
}

Complex principal_logdet(const CMatrix &m) {
    return std::log(m.partialPivLu().determinant());
}

Complex gamma_term(const Generator &gen, const CVector &h, double t) {
    const int n = gen.n;
    const CVector v = stack_conj(h);
    CVector jv(2 * n);
    jv << h.conjugate(), -h;
    const CVector w = -phi2(-gen.G, t) * v;
    return 0.5 * bilinear(w, jv);
}

double checked_gamma(const Generator &gen, const CVector &h, double t) {
    const Complex ig = gamma_term(gen, h, t);
    if (std::abs(ig.real()) > 1e-8 * std::max(1.0, std::abs(ig))) {
        std::ostringstream out;
        out << "gamma: real residue " << ig.real() << " in i*gamma";
        fail(ErrorKind::kConsistency, out.str());
    }
    return ig.imag();
}

struct GeneralForms {
    Complex by_rho;
    Complex by_backward_drift;
};

GeneralForms general_forms(const HamiltonianSpec &spec, const Generator &gen, const NormalForm &c, int index) {
    const double t = c.t;
    const Complex base = kI * kPi * static_cast<double>(index) + kI * checked_gamma(gen, spec.h, t) -
                         0.5 * kI * t * spec.B.trace() - 0.5 * principal_logdet(c.Phi);
    const CVector hbar = c.h_t.conjugate();
    const Complex by_rho = base - 0.5 * bilinear(c.h_t, hbar - c.rho.conjugate() * c.h_t);
    const Complex by_back = base + 0.5 * bilinear(backward_drift(c).conjugate(), c.PhiInv * c.h_t);
    return {by_rho, by_back};
}

Complex general_from(const HamiltonianSpec &spec, const Generator &gen, const NormalForm &c, int index) {
    if (c.t == 0.0) {
        return 0.0;
    }
    const GeneralForms forms = general_forms(spec, gen, c, index);
    const double gap = std::abs(forms.by_rho - forms.by_backward_drift);
    if (gap > 1e-9 * std::max(1.0, std::abs(forms.by_rho))) {
        std::ostringstream out;
        out << "s_algebraic_general: the two vacuum forms differ by " << gap;
        fail(ErrorKind::kConsistency, out.str());
    }
    return forms.by_rho;
}

template <typename Integrand>
Complex integrate_s(Integrand &&integrand, double t, const QuadratureOptions &options) {
    return integrate<Complex>(integrand, 0.0, t, Complex(0.0), options).value;
}

}  // namespace

NormalForm coefficients_from_block(const SymplecticBlock &block, const CVector &h_t) {
    NormalForm c;
    c.t = block.t;
    c.n = block.n();
    c.Phi = block.Phi;
    c.Psi = block.Psi;
    c.ccr = block.ccr;
    c.h_t = h_t;
    c.PhiInv = block.Phi.partialPivLu().inverse();
    c.R = c.PhiInv * c.Psi;
    c.rho = (c.Psi.conjugate() * c.PhiInv).conjugate();
    c.g = c.PhiInv * h_t;
    c.f = h_t - c.rho * h_t.conjugate();
    return c;
}

NormalForm coefficients(const Generator &gen, const CVector &h, double t) {
    const int n = gen.n;
    if (h.size() != n) {
        fail(ErrorKind::kDimension, "coefficients: h has wrong length");
    }
    if (t == 0.0) {
        return coefficients_from_block(SymplecticBlock::identity(n), CVector::Zero(n));
    }
    const ExpPhi1 ep = exp_phi1(gen.G, t);
    SymplecticBlock block{t, ep.exp.topLeftCorner(n, n), ep.exp.topRightCorner(n, n), {}};
    block.ccr = ccr_residuals(block.Phi, block.Psi);
    const CVector v = ep.phi1 * stack_conj(h);
    return coefficients_from_block(block, v.head(n));
}

NormalForm normal_form(const HamiltonianSpec &spec, double t) {
    return normal_form(spec, t, t == 0.0 ? 0 : index_at(spec, t));
}

NormalForm normal_form(const HamiltonianSpec &spec, double t, int index) {
    const Generator gen = build_generator(spec);
    NormalForm c = coefficients(gen, spec.h, t);
    if (!c.ccr.ok()) {
        std::ostringstream out;
        out << "normal_form: CCR residual " << c.ccr.max() << " exceeds " << c.ccr.tolerance;
        fail(ErrorKind::kAccuracy, out.str());
    }
    c.index = index;
    c.s = general_from(spec, gen, c, index);
    return c;
}

Complex s_integral_rho(const HamiltonianSpec &spec, double t, const QuadratureOptions &options) {
    const Generator gen = build_generator(spec);
    const CVector &h = spec.h;
    const CMatrix &a = spec.A;
    return integrate_s(
        [&](double tau) {
            const NormalForm c = coefficients(gen, h, tau);
            const CVector fb = c.f.conjugate();
            return -(bilinear(fb, h) + 0.5 * bilinear(fb, a * fb) + 0.5 * (c.rho.conjugate() * a).trace());
        },
        t, options);
}

Complex s_integral_R(const HamiltonianSpec &spec, double t, const QuadratureOptions &options) {
    const Generator gen = build_generator(spec);
    const CVector hbar = spec.h.conjugate();
    const CMatrix abar = spec.A.conjugate();
    return integrate_s(
        [&](double tau) {
            const NormalForm c = coefficients(gen, spec.h, tau);
            const CVector back = backward_drift(c);
            const CVector ft = back + c.R * back.conjugate();
            return bilinear(ft, hbar) + 0.5 * bilinear(ft, abar * ft) - 0.5 * (c.R * abar).trace();
        },
        t, options);
}

GammaValue gamma_algebraic(const HamiltonianSpec &spec, double t) {
    const Generator gen = build_generator(spec);
    if (t == 0.0) {
        return {0.0, 0.0};
    }
    return {t, checked_gamma(gen, spec.h, t)};
}

GammaForms gamma_forms(const HamiltonianSpec &spec, double t, const QuadratureOptions &options) {
    const Generator gen = build_generator(spec);
    const int n = spec.n;
    const CVector v = stack_conj(spec.h);
    const auto j_of = [n](const CVector &w) {
        CVector out(2 * n);
        out << w.tail(n), -w.head(n);
        return out;
    };
    const CVector jv = j_of(v);
    GammaForms out;
    using Pair = Eigen::Vector2cd;
    const Pair both = integrate<Pair>(
                          [&](double s) {
                              const ExpPhi1 ep = exp_phi1(gen.G, s);
                              const CVector hs = ep.phi1 * v;
                              const CVector moved = ep.exp * v;
                              const Complex rate = bilinear(moved.head(n), hs.tail(n));
                              return Pair(Complex(rate.imag(), 0.0), bilinear(j_of(hs), moved));
                          },
                          0.0, t, Pair::Zero(), options)
                          .value;
    out.quadrature = both(0).real();
    out.bracket = both(1) / (2.0 * kI);
    out.backward = bilinear(jv, -phi2(-gen.G, t) * v) / (2.0 * kI);
    out.forward = bilinear(jv, phi2(gen.G, t) * v) / (2.0 * kI);
    return out;
}

Complex s_algebraic_general(const HamiltonianSpec &spec, double t, int index) {
    const Generator gen = build_generator(spec);
    return general_from(spec, gen, coefficients(gen, spec.h, t), index);
}

Complex s_algebraic_detG(const HamiltonianSpec &spec, double t, int index) {
    const Generator gen = build_generator(spec);
    const int n = spec.n;
    const double scale = std::pow(norm2(gen.G), 2 * n);
    const Eigen::PartialPivLU<CMatrix> lu(gen.G);
    const Complex det = lu.determinant();
    if (!(scale > 0.0) || std::abs(det) <= 1e-12 * scale) {
        fail(ErrorKind::kDegenerate,
             "s_algebraic_detG: generator is numerically singular; use s_algebraic_general");
    }
    if (t == 0.0) {
        return 0.0;
    }
    const NormalForm c = coefficients(gen, spec.h, t);
    const CVector zz = lu.solve(stack_conj(spec.h));
    const CVector z = zz.head(n);
    const CVector zb = zz.tail(n);
    const CMatrix ident = CMatrix::Identity(n, n);
    const Complex q = 0.5 * bilinear(z, (c.rho.conjugate() - spec.A.conjugate() * t) * z) -
                      0.5 * bilinear(zb, (c.R - spec.A * t) * zb) +
                      bilinear(zb, (c.PhiInv - ident - kI * t * spec.B) * z);
    return kI * kPi * static_cast<double>(index) - 0.5 * kI * t * spec.B.trace() - 0.5 * principal_logdet(c.Phi) + q;
}

Complex s_berezin(const HamiltonianSpec &spec, double t, const QuadratureOptions &options) {
    const Generator gen = build_generator(spec);
    const CVector hbar = spec.h.conjugate();
    const CMatrix abar = spec.A.conjugate();
    const Complex integral = integrate_s(
        [&](double tau) {
            const NormalForm c = coefficients(gen, spec.h, tau);
            const CVector q = c.PhiInv * c.h_t;
            return bilinear(q, abar * q) - bilinear(q, hbar);
        },
        t, options);
    const Complex logdet = index_trace(spec, t).logdet.back();
    return -0.5 * kI * t * spec.B.trace() - 0.5 * logdet + integral;
}

double berezin_implied_norm(const HamiltonianSpec &spec, double t) {
    NormalForm nf = normal_form(spec, t);
    nf.s = s_berezin(spec, t);
    return norm_squared(nf);
}

TraceIdentity trace_identity_check(const HamiltonianSpec &spec, double t) {
    const Generator gen = build_generator(spec);
    const CMatrix &a = spec.A;
    const CMatrix abar = a.conjugate();
    using Pair = Eigen::Vector2cd;
    const Pair traces = integrate<Pair>(
                            [&](double tau) {
                                const NormalForm c = coefficients(gen, spec.h, tau);
                                return Pair((c.rho.conjugate() * a).trace(), (c.R * abar).trace());
                            },
                            0.0, t, Pair::Zero())
                            .value;
    const Complex logdet = index_trace(spec, t).logdet.back();
    TraceIdentity out;
    out.trace_residual = std::abs(traces(0) - (kI * t * spec.B.trace() + logdet));
    out.feynman_residual = std::abs(traces(0) - traces(1));
    return out;
}

NormalSymbolValue normal_symbol(const NormalForm &nf, const CVector &z) {
    if (z.size() != nf.n) {
        fail(ErrorKind::kDimension, "normal_symbol: z has wrong length");
    }
    const CVector zb = z.conjugate();
    const CMatrix ident = CMatrix::Identity(nf.n, nf.n);
    const Complex exponent = nf.s - 0.5 * bilinear(zb, nf.R * zb) - bilinear(nf.g, zb) +
                             bilinear(zb, (nf.PhiInv - ident) * z) + 0.5 * bilinear(z, nf.rho.conjugate() * z) +
                             bilinear(nf.f.conjugate(), z);
    return {z, std::exp(exponent)};
}

NormalSymbolValue normal_symbol(const HamiltonianSpec &spec, double t, const CVector &z) {
    return normal_symbol(normal_form(spec, t), z);
}

double log_distance(Complex a, Complex b) {
    const Complex d = a - b;
    return std::hypot(d.real(), std::remainder(d.imag(), 2.0 * kPi));
}

}  // namespace sqz
