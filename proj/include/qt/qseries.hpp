/**
 * @file qseries.hpp
 * @brief q-Pochhammer symbols, inverse q-factorials, quantum dilogarithm
 *        series coefficients, and the distilled q-binomial duality check.
 *
 * Conventions:
 *   (z;q)_n with z = q^{z_power}, q -> q^{base}; the shift identity
 *   (z;q)_{n+1} = (z;q)_n (1 - z q^n) defines negative orders.
 *   1/(q;q)_n = 0 for n < 0.
 *   Psi(U)      = sum_n (-q U)^n / (q^2;q^2)_n          (base rescales q)
 *   Psi(U)^{-1} = sum_n q^{n^2} U^n / (q^2;q^2)_n
 */
#pragma once

#include "qt/ratq.hpp"

namespace qt {

/// (q^{z_power}; q^{base})_n for any integer n.  Throws on a pole in the
/// n < 0 branch (a vanishing factor in the denominator product).
RatQ qpochhammer(long base_exponent, long z_power, long n);

/// Cyclotomic polynomial Phi_d(q); q^m - 1 = prod_{d | m} Phi_d(q).
/// Thread-safe memoized; the factored form of Pochhammer denominators.
LaurentQ cyclotomic(long d);

/// 1/(q^{base}; q^{base})_n; exactly 0 for n < 0.  Thread-safe memoized.
RatQ inv_qfactorial(long n, long base_exponent);

/// Coefficient of U^n in Psi_{q^base}(U) (inverse=false) or its inverse.
RatQ psi_series_coeff(long n, bool inverse, long base_exponent);

struct QBinomialDuality {
    RatQ lhs;
    RatQ rhs;
    bool equal;
};

/// Both sides of the distilled duality identity
///   1/(q^2)_{s+t} sum_n (-1)^n q^{n(n+1+2s)} / [(q^2)_n (q^2)_{t-n} (q^2)_{n+r}]
///   = (same with r <-> s),
/// evaluated exactly.
QBinomialDuality qbinomial_duality(long r, long s, long t);

inline bool verify_qbinomial_duality(long r, long s, long t) {
    return qbinomial_duality(r, s, t).equal;
}

}  // namespace qt
