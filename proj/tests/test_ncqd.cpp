/**
 * @file test_ncqd.cpp
 * @brief Noncompact quantum dilogarithm: quadrature/series/product agreement,
 *        functional-equation residuals on the parameter grid, and the modular
 *        double R/K integral kernels with the Fourier cross-check.
 */
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "qt/ncqd.hpp"

using namespace qt;

namespace {
const Cx I(0.0, 1.0);
}

TEST_CASE("phi basics and evaluation-route consistency") {
    ModularParams mp(Cx(0.7, 0.0));
    CHECK(mp.eta.real() == doctest::Approx((0.7 + 1.0 / 0.7) / 2).epsilon(1e-14));
    // phi(z) -> 1 for z -> -infinity along the real axis.
    CHECK(std::abs(ncqd_phi(Cx(-8.0, 0.0), mp) - 1.0) < 1e-10);
    // phi(0)^2 = e^{-i pi (1 - 2 eta^2)/6}.
    const Cx p0 = ncqd_phi_quadrature(Cx(0.0, 0.0), mp);
    const Cx rhs = std::exp(-I * 3.14159265358979323846 *
                            (1.0 - 2.0 * mp.eta * mp.eta) / 6.0);
    CHECK(std::abs(p0 * p0 - rhs) < 1e-9);
    // The fast dispatch (series / inversion / recursion) agrees with direct
    // contour quadrature wherever the latter converges.
    for (double x : {-2.0, -1.0, -0.4, 0.0, 0.5, 1.3})
        for (double y : {-0.4, 0.0, 0.3}) {
            const Cx z(x, y);
            CHECK(std::abs(ncqd_phi(z, mp) - ncqd_phi_quadrature(z, mp)) <
                  1e-8);
        }
    // Outside the strip only the recursion extension applies; it must still
    // satisfy the shift relation against in-strip quadrature values.
    const Cx z(0.3, 1.4);  // |Im z| > Re eta
    const Cx lhs = ncqd_phi(z, mp);
    const Cx via = ncqd_phi_quadrature(z - I * mp.b, mp) /
                   (1.0 + std::exp(2.0 * 3.14159265358979323846 * mp.b *
                                   (z - I * mp.b / 2.0)));
    CHECK(std::abs(lhs - via) < 1e-8);
    CHECK_THROWS(ncqd_phi_quadrature(Cx(0.0, 2.0), mp));
    CHECK_THROWS(ncqd_phi_product(Cx(0.0, 0.0), mp));  // |q| = 1 at real b
}

TEST_CASE("pointwise identities on the parameter grid") {
    for (Cx b : {Cx(0.7, 0.0), Cx(0.9, 0.0), Cx(1.0, 0.1)}) {
        ModularParams mp(b);
        CHECK(ncqd_check_identity(NcqdIdentity::Inversion, mp) < 1e-8);
        CHECK(ncqd_check_identity(NcqdIdentity::RecursionB, mp) < 1e-8);
        CHECK(ncqd_check_identity(NcqdIdentity::RecursionBinv, mp) < 1e-8);
    }
}

TEST_CASE("infinite product agrees with the integral at complex b") {
    ModularParams mp(Cx(1.0, 0.1));
    CHECK(std::abs(mp.q) < 1.0);
    for (double x : {-1.2, -0.3, 0.4, 0.9})
        for (double y : {-0.2, 0.2}) {
            const Cx z(x, y);
            CHECK(std::abs(ncqd_phi_product(z, mp) - ncqd_phi(z, mp)) < 1e-8);
        }
}

TEST_CASE("Ramanujan-type integral identities") {
    for (Cx b : {Cx(0.7, 0.0), Cx(0.9, 0.0)}) {
        ModularParams mp(b);
        for (int s = 0; s < ncqd_identity_samples(NcqdIdentity::Ram1); ++s)
            CHECK(ncqd_check_identity(NcqdIdentity::Ram1, mp, s) < 1e-6);
        CHECK(ncqd_check_identity(NcqdIdentity::Ram2, mp) < 1e-6);
        CHECK(ncqd_check_identity(NcqdIdentity::RamanujanFull, mp) < 1e-6);
    }
}

TEST_CASE("Heine transformation") {
    for (Cx b : {Cx(0.7, 0.0), Cx(0.9, 0.0)}) {
        ModularParams mp(b);
        for (int s = 0; s < ncqd_identity_samples(NcqdIdentity::Heine); ++s)
            CHECK(ncqd_check_identity(NcqdIdentity::Heine, mp, s) < 1e-5);
    }
}

TEST_CASE("R kernels: constraints, special cases, Fourier cross-check") {
    ModularParams mp(Cx(0.7, 0.0));
    const std::array<double, 3> ell{0.2, -0.1, 0.3};
    // Delta constraints are returned exactly as stated.
    const std::array<double, 3> x{0.5, 0.7, -0.2}, xp{0.3, 0.3, 0.4};
    KernelValue kc = kernel_R_coord(x, xp, ell, 1.0, -1.0, mp);
    CHECK(kc.constraints[0] == doctest::Approx(x[1] - xp[0] - xp[2]));
    CHECK(kc.constraints[1] == doctest::Approx(xp[1] - x[0] - x[2]));
    CHECK(kc.normalization_known);
    KernelValue km = kernel_R_mom(x, xp, ell, 1.0, -1.0, mp);
    CHECK(km.constraints[0] == doctest::Approx(x[0] + x[1] - xp[0] - xp[1]));
    CHECK(km.constraints[1] == doctest::Approx(x[1] + x[2] - xp[1] - xp[2]));
    // xi = zeta = 0: the amplitude is independent of ell.
    const std::array<double, 3> ell2{-0.5, 0.8, 0.1};
    CHECK(std::abs(kernel_R_coord(x, xp, ell, 0.0, 0.0, mp).amplitude -
                   kernel_R_coord(x, xp, ell2, 0.0, 0.0, mp).amplitude) <
          1e-12);
    CHECK(std::abs(kernel_R_mom(x, xp, ell, 0.0, 0.0, mp).amplitude -
                   kernel_R_mom(x, xp, ell2, 0.0, 0.0, mp).amplitude) < 1e-12);
    // Structural match of the general amplitude at (xi, zeta) = (1, -1) with
    // the literal plain-kernel transcription.
    CHECK(r_coord_form(1.0, -1.0) == r_coord_form_plain());
    CHECK(r_coord_form(0.5, 0.5) != r_coord_form_plain());
    // Fourier transform of the coordinate amplitude reproduces the momentum
    // amplitude.
    for (Cx b : {Cx(0.7, 0.0), Cx(0.9, 0.0)})
        CHECK(fourier_cross_check_R(1.0, -1.0, ell, 0.8, -0.25,
                                    ModularParams(b)) < 1e-4);
}

TEST_CASE("K kernels: constraints and symbolic normalization") {
    ModularParams mp(Cx(0.7, 0.0));
    const std::array<double, 4> x{0.4, 0.1, -0.3, 0.6}, xp{0.2, -0.2, -0.1,
                                                           0.9};
    KernelValue kc = kernel_K_coord(x, xp, mp);
    CHECK_FALSE(kc.normalization_known);
    CHECK(kc.constraints[0] ==
          doctest::Approx(x[0] + x[2] - xp[0] - xp[2]));
    CHECK(kc.constraints[1] ==
          doctest::Approx(x[1] + x[3] - xp[1] - xp[3]));
    CHECK(std::isfinite(std::abs(kc.amplitude)));
    KernelValue km = kernel_K_mom(x, xp, mp);
    CHECK_FALSE(km.normalization_known);
    CHECK(km.constraints[0] ==
          doctest::Approx(x[0] + x[1] + x[2] - xp[0] - xp[1] - xp[2]));
    CHECK(km.constraints[1] == doctest::Approx(x[1] + 2 * x[2] + x[3] -
                                               xp[1] - 2 * xp[2] - xp[3]));
    CHECK(std::isfinite(std::abs(km.amplitude)));
    // Ratios of kernel values at two points do not depend on the unknown
    // overall constant; with the constant set to 1 they equal the amplitude
    // ratio and stay finite.
    const std::array<double, 4> y{0.1, 0.5, 0.2, -0.4}, yp{-0.3, 0.0, 0.6,
                                                           0.1};
    KernelValue kc2 = kernel_K_coord(y, yp, mp);
    const Cx ratio = kc.amplitude / kc2.amplitude;
    CHECK(std::isfinite(std::abs(ratio)));
    CHECK(std::abs(ratio) > 0.0);
}
