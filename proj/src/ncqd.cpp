/**
 * @file ncqd.cpp
 * @brief Noncompact quantum dilogarithm: contour quadrature, residue series,
 *        shift recursion, functional-equation residuals, and the modular
 *        double R/K integral kernels.
 */
#include "qt/ncqd.hpp"

#include <cmath>
#include <functional>
#include <stdexcept>

namespace qt {

namespace {

constexpr double kPi = 3.14159265358979323846;
const Cx kI(0.0, 1.0);

/// Composite Simpson rule for a complex integrand on [lo, hi] with at most
/// `step` spacing (the node count is rounded up to an even interval count).
Cx simpson(const std::function<Cx(double)>& f, double lo, double hi,
           double step) {
    int n = static_cast<int>(std::ceil((hi - lo) / step));
    if (n < 2) n = 2;
    if (n % 2) ++n;
    const double h = (hi - lo) / n;
    Cx acc = f(lo) + f(hi);
    for (int k = 1; k < n; ++k) acc += f(lo + k * h) * (k % 2 ? 4.0 : 2.0);
    return acc * (h / 3.0);
}

/// e^{-2izw} / (4 sinh(wb) sinh(w/b) w): the log-phi integrand.
Cx phi_integrand(Cx w, Cx z, const ModularParams& mp) {
    return std::exp(-2.0 * kI * z * w) /
           (4.0 * std::sinh(w * mp.b) * std::sinh(w / mp.b) * w);
}

/// Residue series for log phi(z), obtained by closing the contour through
/// the upper half plane; converges when both e^{2 pi z b} and e^{2 pi z / b}
/// are well inside the unit disk.
bool phi_series_log(Cx z, const ModularParams& mp, Cx* out) {
    const Cx eb = std::exp(2.0 * kPi * z * mp.b);
    const Cx ei = std::exp(2.0 * kPi * z / mp.b);
    if (std::abs(eb) > 0.55 || std::abs(ei) > 0.55) return false;
    Cx sum = 0.0, pb = 1.0, pi_ = 1.0;
    for (int k = 1; k <= 400; ++k) {
        pb *= eb;
        pi_ *= ei;
        const Cx sb = std::sin(kPi * static_cast<double>(k) * mp.b * mp.b);
        const Cx si = std::sin(kPi * static_cast<double>(k) / (mp.b * mp.b));
        // A near-zero sine (rational b^2) would amplify roundoff.
        if (std::abs(sb) < 1e-6 || std::abs(si) < 1e-6) return false;
        const double sgn = (k % 2) ? 1.0 : -1.0;
        const Cx term = (kI / 2.0) * (sgn / k) * (pb / sb + pi_ / si);
        sum += term;
        if (std::abs(term) < 1e-18 * (1.0 + std::abs(sum)) && k > 4) {
            *out = sum;
            return true;
        }
    }
    return false;
}

Cx inversion_rhs(Cx z, const ModularParams& mp) {
    return std::exp(kI * kPi * z * z -
                    kI * kPi * (1.0 - 2.0 * mp.eta * mp.eta) / 6.0);
}

/// phi at a point with |Im z| already reduced well inside the strip.
Cx phi_core(Cx z, const ModularParams& mp) {
    Cx logphi;
    if (z.real() <= -0.35 && phi_series_log(z, mp, &logphi))
        return std::exp(logphi);
    if (z.real() >= 0.35 && phi_series_log(-z, mp, &logphi))
        return inversion_rhs(z, mp) * std::exp(-logphi);
    return ncqd_phi_quadrature(z, mp);
}

double relative_residual(Cx a, Cx b) {
    return std::abs(a - b) / (1.0 + std::max(std::abs(a), std::abs(b)));
}

/// Simpson integral of f over the horizontal line Im t = shift, |Re t| <= T,
/// with a numeric decay check at the truncation ends.
Cx line_integral(const std::function<Cx(Cx)>& f, double T, double step,
                 double shift) {
    double peak = 0.0;
    for (double t = -2.0; t <= 2.0; t += 0.25)
        peak = std::max(peak, std::abs(f(Cx(t, shift))));
    const double tail =
        std::max(std::abs(f(Cx(-T, shift))), std::abs(f(Cx(T, shift))));
    if (!(tail < 1e-11 * (peak + 1e-300)))
        throw std::runtime_error(
            "ncqd quadrature non-convergence: integrand tail ~" +
            std::to_string(tail) + " vs peak ~" + std::to_string(peak));
    return simpson([&](double t) { return f(Cx(t, shift)); }, -T, T, step);
}

Cx ramanujan_K(const ModularParams& mp) {
    return std::exp(-kI * kPi * (4.0 * mp.eta * mp.eta + 1.0) / 12.0);
}

}  // namespace

ModularParams::ModularParams(Cx b_value) : b(b_value) {
    if (std::abs(b) == 0.0) throw std::domain_error("ncqd: b must be nonzero");
    q = std::exp(kI * kPi * b * b);
    qbar = std::exp(-kI * kPi / (b * b));
    eta = (b + 1.0 / b) / 2.0;
    eta_tilde = (2.0 * b + 1.0 / b) / 2.0;
    if (!(eta.real() > 0.0))
        throw std::domain_error("ncqd: working regime requires Re(eta) > 0");
}

Cx ncqd_phi_quadrature(Cx z, const ModularParams& mp) {
    const double margin = mp.eta.real() - std::abs(z.imag());
    if (!(margin > 0.02))
        throw std::runtime_error(
            "ncqd_phi_quadrature: z too close to the strip boundary");
    const double r = std::min(0.1, mp.eta.real() / 4.0);
    const double W = std::max(8.0, 20.0 / margin);
    const double step = std::min(0.01, 0.5 / (1.0 + 2.0 * std::abs(z)));
    // Straight pieces of the indented contour, with a mesh graded toward the
    // origin where the integrand behaves like 1/w^3.
    auto fre = [&](double w) { return phi_integrand(Cx(w, 0.0), z, mp); };
    Cx I = 0.0;
    double lo = r;
    for (double fac : {40.0, 10.0, 1.0}) {
        const double hi = (fac > 1.0) ? std::min(4.0 * lo, W) : W;
        if (hi > lo) {
            I += simpson(fre, lo, hi, step / fac);
            I += simpson(fre, -hi, -lo, step / fac);
        }
        lo = hi;
    }
    // Semicircle above the origin, w = r e^{i theta}, theta: pi -> 0.
    I -= simpson(
        [&](double th) {
            const Cx w = r * std::exp(kI * th);
            return phi_integrand(w, z, mp) * kI * w;
        },
        0.0, kPi, kPi / 2000.0);
    return std::exp(I);
}

Cx ncqd_phi_product(Cx z, const ModularParams& mp) {
    const Cx q2 = mp.q * mp.q, qb2 = mp.qbar * mp.qbar;
    if (!(std::abs(q2) < 0.999 && std::abs(qb2) < 0.999))
        throw std::domain_error(
            "ncqd_phi_product: requires |q| < 1 (complex b)");
    auto pochhammer = [](Cx x, Cx base) {
        Cx prod = 1.0, xk = x;
        for (int k = 0; k < 4000; ++k) {
            prod *= (1.0 - xk);
            xk *= base;
            if (std::abs(xk) < 1e-18) break;
        }
        return prod;
    };
    const Cx num = pochhammer(std::exp(2.0 * kPi * (z + kI * mp.eta) * mp.b),
                              q2);
    const Cx den = pochhammer(
        std::exp(2.0 * kPi * (z - kI * mp.eta) / mp.b), qb2);
    return num / den;
}

Cx ncqd_phi(Cx z, const ModularParams& mp) {
    // Reduce |Im z| into the interior of the strip by the b-shift recursion.
    Cx factor = 1.0;
    int guard = 0;
    while (std::abs(z.imag()) > 0.6 * mp.eta.real()) {
        if (++guard > 200)
            throw std::runtime_error("ncqd_phi: recursion reduction diverges");
        if (z.imag() > 0.0) {
            // phi(z) = phi(z - ib) / (1 + e^{2 pi b (z - ib/2)})
            factor /= 1.0 + std::exp(2.0 * kPi * mp.b * (z - kI * mp.b / 2.0));
            z -= kI * mp.b;
        } else {
            // phi(z) = phi(z + ib) * (1 + e^{2 pi b (z + ib/2)})
            factor *= 1.0 + std::exp(2.0 * kPi * mp.b * (z + kI * mp.b / 2.0));
            z += kI * mp.b;
        }
    }
    return factor * phi_core(z, mp);
}

int ncqd_identity_samples(NcqdIdentity id) {
    switch (id) {
        case NcqdIdentity::Ram1: return 3;
        case NcqdIdentity::Heine: return 2;
        default: return 1;
    }
}

double ncqd_check_identity(NcqdIdentity id, const ModularParams& mp,
                           int sample) {
    const Cx K = ramanujan_K(mp);
    const double im_cap = 0.3 * mp.eta.real();
    switch (id) {
        case NcqdIdentity::Inversion: {
            // 10 deterministic points in the strip, both sides by direct
            // contour quadrature.
            double worst = 0.0;
            for (int j = 0; j < 10; ++j) {
                const Cx z(-1.2 + 0.27 * j, im_cap * std::sin(1.7 * j + 0.4));
                const Cx lhs = ncqd_phi_quadrature(z, mp) *
                               ncqd_phi_quadrature(-z, mp);
                worst = std::max(worst,
                                 relative_residual(lhs, inversion_rhs(z, mp)));
            }
            return worst;
        }
        case NcqdIdentity::RecursionB:
        case NcqdIdentity::RecursionBinv: {
            const Cx s = (id == NcqdIdentity::RecursionB) ? mp.b : 1.0 / mp.b;
            double worst = 0.0;
            for (double x : {-0.9, -0.3, 0.2, 0.8}) {
                const Cx z(x, 0.05);
                const Cx lhs = ncqd_phi_quadrature(z - kI * s / 2.0, mp) /
                               ncqd_phi_quadrature(z + kI * s / 2.0, mp);
                const Cx rhs = 1.0 + std::exp(2.0 * kPi * z * s);
                worst = std::max(worst, relative_residual(lhs, rhs));
            }
            return worst;
        }
        case NcqdIdentity::Ram1: {
            // integral dt e^{2 pi i w t} / phi(t + v)
            //   = phi(w + i eta) / K * e^{-2 pi i w (v + i eta)};
            // decay needs Im w < 0 and Im v < Im w.
            static const Cx V[3] = {Cx(0.0, -0.55), Cx(0.3, -0.6),
                                    Cx(-0.2, -0.65)};
            static const Cx W[3] = {Cx(0.0, -0.25), Cx(0.1, -0.3),
                                    Cx(-0.15, -0.35)};
            const Cx v = V[sample % 3], w = W[sample % 3];
            const Cx lhs = line_integral(
                [&](Cx t) {
                    return std::exp(2.0 * kPi * kI * w * t) /
                           ncqd_phi(t + v, mp);
                },
                18.0, 0.002, 0.0);
            const Cx rhs = ncqd_phi(w + kI * mp.eta, mp) / K *
                           std::exp(-2.0 * kPi * kI * w * (v + kI * mp.eta));
            return relative_residual(lhs, rhs);
        }
        case NcqdIdentity::Ram2: {
            // integral dt phi(t + u) e^{2 pi i w t}
            //   = K / phi(-w - i eta) * e^{-2 pi i w (u - i eta)};
            // decay needs Im w < 0 and Im u > -Im w.
            const Cx u(0.0, 0.8), w(0.2, -0.4);
            const Cx lhs = line_integral(
                [&](Cx t) {
                    return ncqd_phi(t + u, mp) *
                           std::exp(2.0 * kPi * kI * w * t);
                },
                18.0, 0.002, 0.0);
            const Cx rhs = K / ncqd_phi(-w - kI * mp.eta, mp) *
                           std::exp(-2.0 * kPi * kI * w * (u - kI * mp.eta));
            return relative_residual(lhs, rhs);
        }
        case NcqdIdentity::RamanujanFull: {
            // integral dt phi(t+u)/phi(t+v) e^{2 pi i w t} against both
            // closed forms; decay needs Im w < 0 and Im(u - v + w) > 0.
            const Cx u(0.3, 0.5), v(0.0, -0.1), w(-0.1, -0.3);
            const Cx lhs = line_integral(
                [&](Cx t) {
                    return ncqd_phi(t + u, mp) / ncqd_phi(t + v, mp) *
                           std::exp(2.0 * kPi * kI * w * t);
                },
                18.0, 0.002, 0.0);
            const Cx rhs1 =
                ncqd_phi(u - v - kI * mp.eta, mp) *
                ncqd_phi(w + kI * mp.eta, mp) /
                (K * ncqd_phi(u - v + w - kI * mp.eta, mp)) *
                std::exp(-2.0 * kPi * kI * w * (v + kI * mp.eta));
            const Cx rhs2 =
                K * ncqd_phi(v - u - w + kI * mp.eta, mp) /
                (ncqd_phi(v - u + kI * mp.eta, mp) *
                 ncqd_phi(-w - kI * mp.eta, mp)) *
                std::exp(-2.0 * kPi * kI * w * (u - kI * mp.eta));
            return std::max(relative_residual(lhs, rhs1),
                            relative_residual(lhs, rhs2));
        }
        case NcqdIdentity::Heine: {
            // integral dt phi(t+a) phi(t+b) / phi(t+c) e^{2 pi i t d}
            //   = e^{-2 pi i (b - i eta) d} phi(a - c - i eta)
            //     * integral dz phi(z + i eta) e^{2 pi i z (b - c - 2 i eta)}
            //       / (phi(z - d - i eta) phi(z + a - c - i eta)),
            // the z contour separating the upward pole family of
            // phi(z + i eta) (z = 0 and above) from the downward families at
            // z = d and z = c - a and below; decay needs Im d < 0 and
            // Im(a + b - c + d) > 0.
            static const Cx A[2] = {Cx(0.2, 0.4), Cx(-0.3, 0.35)};
            static const Cx B[2] = {Cx(-0.1, 0.45), Cx(0.2, 0.4)};
            static const Cx C[2] = {Cx(0.1, -0.1), Cx(-0.1, -0.15)};
            static const Cx D[2] = {Cx(0.0, -0.3), Cx(0.1, -0.35)};
            const Cx a = A[sample % 2], bb = B[sample % 2], c = C[sample % 2],
                     d = D[sample % 2];
            const Cx lhs = line_integral(
                [&](Cx t) {
                    return ncqd_phi(t + a, mp) * ncqd_phi(t + bb, mp) /
                           ncqd_phi(t + c, mp) *
                           std::exp(2.0 * kPi * kI * t * d);
                },
                16.0, 0.002, 0.0);
            const Cx inner = line_integral(
                [&](Cx z) {
                    return ncqd_phi(z + kI * mp.eta, mp) *
                           std::exp(2.0 * kPi * kI * z *
                                    (bb - c - 2.0 * kI * mp.eta)) /
                           (ncqd_phi(z - d - kI * mp.eta, mp) *
                            ncqd_phi(z + a - c - kI * mp.eta, mp));
                },
                16.0, 0.002, -0.15);
            const Cx rhs =
                std::exp(-2.0 * kPi * kI * (bb - kI * mp.eta) * d) *
                ncqd_phi(a - c - kI * mp.eta, mp) * inner;
            return relative_residual(lhs, rhs);
        }
    }
    throw std::logic_error("ncqd_check_identity: unknown identity");
}

RKernelForm r_coord_form(Cx xi, Cx zeta) {
    RKernelForm f;
    // phi( u + (xi - zeta)/2 * l23 + i eta )
    f.phi_arg.c_u = 1.0;
    f.phi_arg.c_l23 = (xi - zeta) / 2.0;
    f.phi_arg.c_ieta = 1.0;
    // e^{ i pi (u + xi l23)(v + zeta l13 - 2 i eta) }
    f.fac_a.c_u = 1.0;
    f.fac_a.c_l23 = xi;
    f.fac_b.c_v = 1.0;
    f.fac_b.c_l13 = zeta;
    f.fac_b.c_ieta = -2.0;
    return f;
}

RKernelForm r_coord_form_plain() {
    // Literal transcription of the plain kernel:
    // phi(u + l23 + i eta) e^{i pi (u + l23)(v - l13 - 2 i eta)}.
    RKernelForm f;
    f.phi_arg.c_u = 1.0;
    f.phi_arg.c_l23 = 1.0;
    f.phi_arg.c_ieta = 1.0;
    f.fac_a.c_u = 1.0;
    f.fac_a.c_l23 = 1.0;
    f.fac_b.c_v = 1.0;
    f.fac_b.c_l13 = -1.0;
    f.fac_b.c_ieta = -2.0;
    return f;
}

namespace {

Cx eval_lin(const KernelLinForm& f, Cx u, Cx v, double l23, double l13,
            Cx eta) {
    return f.c_const + f.c_u * u + f.c_v * v + f.c_l23 * l23 + f.c_l13 * l13 +
           f.c_ieta * kI * eta;
}

Cx r_amplitude(const RKernelForm& form, Cx u, Cx v, double l23, double l13,
               const ModularParams& mp) {
    const Cx arg = eval_lin(form.phi_arg, u, v, l23, l13, mp.eta);
    const Cx fa = eval_lin(form.fac_a, u, v, l23, l13, mp.eta);
    const Cx fb = eval_lin(form.fac_b, u, v, l23, l13, mp.eta);
    return ncqd_phi(arg, mp) * std::exp(kI * kPi * fa * fb);
}

/// phi_{sqrt2 b}(z / sqrt2), the doubled-weight dilogarithm of the K kernel.
Cx phi_tilde(Cx z, const ModularParams& mp, const ModularParams& mp2) {
    (void)mp;
    return ncqd_phi(z / std::sqrt(2.0), mp2);
}

}  // namespace

KernelValue kernel_R_coord(const std::array<double, 3>& x,
                           const std::array<double, 3>& xp,
                           const std::array<double, 3>& ell, Cx xi, Cx zeta,
                           const ModularParams& mp) {
    KernelValue kv;
    kv.constraint_names = {"x2 - x'1 - x'3", "x'2 - x1 - x3"};
    kv.constraints = {x[1] - xp[0] - xp[2], xp[1] - x[0] - x[2]};
    const double l23 = ell[1] - ell[2], l13 = ell[0] - ell[2];
    const Cx rho_x = 1.0 / (2.0 * ramanujan_K(mp));
    kv.amplitude = rho_x * r_amplitude(r_coord_form(xi, zeta),
                                       x[0] - xp[0], x[1] - xp[1], l23, l13,
                                       mp);
    return kv;
}

KernelValue kernel_R_mom(const std::array<double, 3>& p,
                         const std::array<double, 3>& pp,
                         const std::array<double, 3>& ell, Cx xi, Cx zeta,
                         const ModularParams& mp) {
    KernelValue kv;
    kv.constraint_names = {"p1 + p2 - p'1 - p'2", "p2 + p3 - p'2 - p'3"};
    kv.constraints = {p[0] + p[1] - pp[0] - pp[1],
                      p[1] + p[2] - pp[1] - pp[2]};
    const double l23 = ell[1] - ell[2], l13 = ell[0] - ell[2];
    const Cx rho_x = 1.0 / (2.0 * ramanujan_K(mp));
    const Cx rho_p =
        8.0 * rho_x *
        std::exp(kI * kPi * xi * l23 * (zeta * l13 - 2.0 * kI * mp.eta));
    const Cx s = p[1] - pp[2], t = p[2] - p[0];
    kv.amplitude =
        rho_p *
        ncqd_phi(s - (xi + zeta) / 2.0 * l23 + kI * mp.eta, mp) *
        std::exp(kI * kPi * (s - xi * l23) *
                 (t + zeta * l13 - 2.0 * kI * mp.eta));
    return kv;
}

KernelValue kernel_K_coord(const std::array<double, 4>& x,
                           const std::array<double, 4>& xp,
                           const ModularParams& mp) {
    KernelValue kv;
    kv.normalization_known = false;  // overall constant set to 1
    kv.constraint_names = {"x1 + x3 - x'1 - x'3", "x2 + x4 - x'2 - x'4"};
    kv.constraints = {x[0] + x[2] - xp[0] - xp[2],
                      x[1] + x[3] - xp[1] - xp[3]};
    const ModularParams mp2(mp.b * std::sqrt(2.0));
    const Cx ie = kI * mp.eta, iet = kI * mp.eta_tilde;
    const Cx alpha =
        (x[1] + x[2] + x[3]) * xp[0] - x[0] * xp[2] +
        (x[3] * xp[3] - x[1] * xp[1]) / 2.0 +
        (x[0] - xp[0]) * (2.0 * xp[0] + xp[3] - 2.0 * ie) +
        (x[1] - 2.0 * xp[0] - xp[3]) *
            (x[1] + 2.0 * x[2] - 2.0 * xp[0] - xp[3]) / 2.0;
    kv.amplitude =
        std::exp(kI * kPi * alpha) * ncqd_phi(x[0] - xp[0] + ie, mp) *
        phi_tilde(-2.0 * x[0] + 2.0 * xp[0] - iet, mp, mp2) /
        (phi_tilde(-2.0 * x[0] + x[1] - xp[3] - iet, mp, mp2) *
         phi_tilde(x[3] + 2.0 * xp[0] - xp[1] - iet, mp, mp2));
    return kv;
}

KernelValue kernel_K_mom(const std::array<double, 4>& p,
                         const std::array<double, 4>& pp,
                         const ModularParams& mp) {
    KernelValue kv;
    kv.normalization_known = false;  // overall constant set to 1
    kv.constraint_names = {"p1 + p2 + p3 - p'1 - p'2 - p'3",
                           "p2 + 2p3 + p4 - p'2 - 2p'3 - p'4"};
    kv.constraints = {p[0] + p[1] + p[2] - pp[0] - pp[1] - pp[2],
                      p[1] + 2.0 * p[2] + p[3] - pp[1] - 2.0 * pp[2] - pp[3]};
    const ModularParams mp2(mp.b * std::sqrt(2.0));
    const Cx ie = kI * mp.eta, iet = kI * mp.eta_tilde;
    const Cx beta =
        (p[1] * p[1] + p[3] * p[3] - 5.0 * pp[1] * pp[1] -
         5.0 * pp[3] * pp[3]) / 4.0 -
        p[0] * p[0] + pp[0] * (3.0 * p[0] - 2.0 * pp[0]) +
        pp[1] * (3.0 * p[0] - p[3] - 4.0 * pp[0]) +
        pp[2] * (p[1] + p[2] - pp[2]) +
        pp[3] * (p[0] + 3.0 * p[1] + 3.0 * p[2] - 4.0 * pp[2]) +
        2.0 * (p[0] - pp[0] - pp[1] + pp[3]) * ie;
    kv.amplitude =
        std::exp(kI * kPi * beta) *
        ncqd_phi(p[1] + p[2] - pp[2] - pp[3] + ie, mp) *
        phi_tilde(-p[1] + p[3] - pp[1] + pp[3] - iet, mp, mp2) /
        (phi_tilde(p[3] - pp[1] - iet, mp, mp2) *
         phi_tilde(pp[3] - p[1] - iet, mp, mp2));
    return kv;
}

double fourier_cross_check_R(Cx xi, Cx zeta, const std::array<double, 3>& ell,
                             double s, double t, const ModularParams& mp) {
    const double l23 = ell[1] - ell[2], l13 = ell[0] - ell[2];
    const RKernelForm form = r_coord_form(xi, zeta);
    const Cx rho_x = 1.0 / (2.0 * ramanujan_K(mp));
    // Stationary point of the v-oscillation: u0 + xi l23 = s.
    const double u0 = s - (xi * l23).real();
    // F_eps = 4 rho_x * double integral of A(u,v) e^{i pi (u t - v s)}
    // with Gaussian regulator e^{-eps v^2}; quadratic Richardson in eps.
    auto F = [&](double eps) {
        // The regulated v-integral localizes u near u0 with Gaussian width
        // ~ 2 sqrt(eps)/pi; +-0.45 keeps the truncated tail below 1e-9.
        const double ulo = u0 - 0.45, uhi = u0 + 0.45;
        const double V = std::sqrt(38.0 / eps);
        const int Nu = 240;
        int Nv = static_cast<int>(std::ceil(2.0 * V / 0.04));
        if (Nv % 2) ++Nv;
        const double hu = (uhi - ulo) / Nu, hv = 2.0 * V / Nv;
        // phi depends only on u: cache along the u grid.
        std::vector<Cx> phiu(Nu + 1);
        for (int iu = 0; iu <= Nu; ++iu) {
            const double u = ulo + iu * hu;
            phiu[iu] = ncqd_phi(
                eval_lin(form.phi_arg, u, 0.0, l23, l13, mp.eta), mp);
        }
        Cx acc = 0.0;
        for (int iu = 0; iu <= Nu; ++iu) {
            const double u = ulo + iu * hu;
            const Cx fa = eval_lin(form.fac_a, u, 0.0, l23, l13, mp.eta);
            const Cx fb0 = eval_lin(form.fac_b, u, 0.0, l23, l13, mp.eta);
            Cx inner = 0.0;
            for (int iv = 0; iv <= Nv; ++iv) {
                const double v = -V + iv * hv;
                const double wv = (iv == 0 || iv == Nv) ? 1.0
                                  : (iv % 2 ? 4.0 : 2.0);
                inner += wv * std::exp(kI * kPi * fa * (fb0 + v) +
                                       kI * kPi * (u * t - v * s) -
                                       eps * v * v);
            }
            const double wu = (iu == 0 || iu == Nu) ? 1.0
                              : (iu % 2 ? 4.0 : 2.0);
            acc += wu * phiu[iu] * inner * (hv / 3.0);
        }
        return 4.0 * rho_x * acc * (hu / 3.0);
    };
    const Cx f1 = F(0.005), f2 = F(0.01), f3 = F(0.02);
    const Cx lhs = (8.0 * f1 - 6.0 * f2 + f3) / 3.0;
    // Momentum amplitude at a point on the delta support realizing
    // p2 - p'3 = s and p3 - p1 = t (take p = (0, s, t), p'3 = 0).
    const std::array<double, 3> pm{0.0, s, t};
    const std::array<double, 3> ppm{-t, s + t, 0.0};
    const KernelValue mom = kernel_R_mom(pm, ppm, ell, xi, zeta, mp);
    return relative_residual(lhs, mom.amplitude);
}

}  // namespace qt
