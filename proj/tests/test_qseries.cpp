/**
 * @file test_qseries.cpp
 * @brief Unit tests for the exact q-series layer: Laurent/rational arithmetic,
 *        q-Pochhammer symbols, dilogarithm series coefficients, and the
 *        q-binomial duality identity.
 */
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "qt/qseries.hpp"

#include <random>

using namespace qt;

namespace {

LaurentQ lp(std::initializer_list<std::pair<long, long>> terms) {
    LaurentQ p;
    for (auto& [e, c] : terms) p.add_term(e, Rat(c));
    return p;
}

}  // namespace

TEST_CASE("LaurentQ canonical arithmetic") {
    LaurentQ a = lp({{0, 1}, {2, -1}});  // 1 - q^2
    LaurentQ b = lp({{0, 1}, {2, 1}});   // 1 + q^2
    CHECK(a + b == lp({{0, 2}}));
    CHECK(a - a == LaurentQ());
    CHECK(a * b == lp({{0, 1}, {4, -1}}));
    CHECK(a.shifted(-3) == lp({{-3, 1}, {-1, -1}}));
    CHECK(exact_div(a * b, b) == a);
    CHECK_THROWS(exact_div(lp({{0, 1}, {1, 1}}), a));
}

TEST_CASE("laurent_gcd reduces common factors") {
    LaurentQ a = lp({{0, 1}, {1, -1}});            // 1 - q
    LaurentQ b = lp({{0, 1}, {1, -2}, {2, 1}});    // (1-q)^2
    LaurentQ g = laurent_gcd(a * lp({{0, 3}}), b); // gcd(3(1-q), (1-q)^2)
    // monic normalization: highest coefficient 1
    CHECK(exact_div(b, g * g) == LaurentQ::one());
}

TEST_CASE("RatQ canonical form and field ops") {
    RatQ half(Rat(1, 2));
    CHECK(half + half == RatQ(1));
    RatQ x(lp({{0, 1}, {1, -1}}), lp({{0, 1}, {2, -1}}));  // (1-q)/(1-q^2)
    // reduces to 1/(1+q)
    CHECK(x == RatQ(LaurentQ::one(), lp({{0, 1}, {1, 1}})));
    CHECK(x * x.inverse() == RatQ::one());
    CHECK((x - x).is_zero());
    // denominator normalization: lowest den coefficient is 1, exponent 0
    RatQ y(LaurentQ::one(), lp({{2, -2}, {3, 2}}));  // 1/(-2q^2+2q^3)
    CHECK(y.den().coeff(0) == 1);
    CHECK(y.den().lo_exp() == 0);
}

TEST_CASE("qpochhammer basic values") {
    // (q;q)_0 = 1
    CHECK(qpochhammer(1, 1, 0) == RatQ::one());
    // (q^2;q^2)_2 = (1-q^2)(1-q^4)
    CHECK(qpochhammer(2, 2, 2) == RatQ(lp({{0, 1}, {2, -1}}) * lp({{0, 1}, {4, -1}})));
    // (q^2;q)_{-1} = 1/(1-q)
    CHECK(qpochhammer(1, 2, -1) == RatQ(LaurentQ::one(), lp({{0, 1}, {1, -1}})));
    // pole: (q;q)_{-1} has the factor 1 - q^0 = 0 in the denominator
    CHECK_THROWS(qpochhammer(1, 1, -1));
}

TEST_CASE("qpochhammer shift identity over a window") {
    for (long n = -4; n <= 4; ++n) {
        // (z;q)_{n+1} = (z;q)_n (1 - z q^n), z = q^3, base 2
        RatQ lhs = qpochhammer(2, 3, n + 1);
        LaurentQ f = LaurentQ::one();
        f.add_term(3 + 2 * n, Rat(-1));
        CHECK(lhs == qpochhammer(2, 3, n) * RatQ(f));
    }
}

TEST_CASE("inv_qfactorial") {
    CHECK(inv_qfactorial(0, 4) == RatQ::one());
    CHECK(inv_qfactorial(-3, 2).is_zero());
    CHECK(inv_qfactorial(1, 2) == RatQ(LaurentQ::one(), lp({{0, 1}, {2, -1}})));
    for (long n = 0; n <= 6; ++n)
        CHECK(inv_qfactorial(n, 2) * qpochhammer(2, 2, n) == RatQ::one());
}

TEST_CASE("psi_series_coeff matches the closed expansion") {
    CHECK(psi_series_coeff(0, false, 1) == RatQ::one());
    // n=1: -q/(1-q^2)
    CHECK(psi_series_coeff(1, false, 1) ==
          RatQ(lp({{1, -1}}), lp({{0, 1}, {2, -1}})));
    // inverse, n=2: q^4/((1-q^2)(1-q^4))
    CHECK(psi_series_coeff(2, true, 1) ==
          RatQ(lp({{4, 1}}), lp({{0, 1}, {2, -1}}) * lp({{0, 1}, {4, -1}})));
}

TEST_CASE("psi recursion: Psi(q^2 U) Psi(U)^{-1} = 1 + qU to order 12") {
    // coefficient of U^N in the product: sum_k psi(k) q^{2k} * psiinv(N-k)
    for (long N = 0; N <= 12; ++N) {
        RatQ c(0);
        for (long k = 0; k <= N; ++k) {
            RatQ a = psi_series_coeff(k, false, 1).shifted(2 * k);
            c += a * psi_series_coeff(N - k, true, 1);
        }
        if (N == 0) CHECK(c == RatQ::one());
        else if (N == 1) CHECK(c == RatQ::q_power(1));
        else CHECK(c.is_zero());
    }
}

TEST_CASE("q-binomial duality") {
    // r = s: both sides literally identical
    CHECK(verify_qbinomial_duality(2, 2, 3));
    // small hand case
    auto d = qbinomial_duality(0, 1, 1);
    CHECK(d.equal);
    CHECK_FALSE(d.lhs.is_zero());
    // brute-force case
    CHECK(verify_qbinomial_duality(3, 5, 4));
    // structural swap symmetry
    auto a = qbinomial_duality(1, 4, 2);
    auto b = qbinomial_duality(4, 1, 2);
    CHECK(a.lhs == b.rhs);
    CHECK(a.rhs == b.lhs);
    // negative inputs allowed
    std::mt19937 rng(7);
    std::uniform_int_distribution<long> dist(-3, 8);
    for (int i = 0; i < 25; ++i)
        CHECK(verify_qbinomial_duality(dist(rng), dist(rng), dist(rng)));
}
