/**
 * @file qweylrep.hpp
 * @brief Integer-basis representations of the three-leg R and four-leg K
 *        operators: closed-form matrix elements in the u- and p-bases, an
 *        independent operator-action oracle, and exact verification of the
 *        tetrahedron and 3D reflection equations as finite sums of matrix
 *        elements.
 *
 * Conventions:
 *  - u-basis: e^{p}|a> = |a-1>, e^{u}|a> = q^{w a}|a> with leg weight w in
 *    {1,2}; p-basis: e^{p}|c> = q^{w c}|c>, e^{u}|c> = |c+1>.
 *  - R acts on three weight-1 legs and carries integer spectral parameters
 *    n_i = lambda_i / hbar; K acts on four legs of weights (1,2,1,2) and is
 *    taken at all lambda_i = 0.
 *  - All values are exact rational functions of q (RatQ); every closed form
 *    returns 0 outside its support (failed Kronecker delta or a negative
 *    inverse Pochhammer order).
 */
#pragma once

#include "qt/ratq.hpp"

#include <array>
#include <cstdint>
#include <string>
#include <vector>

namespace qt {

enum class RepBasis { U, P };
enum class RepOp { R, K };

/// <a|R|b> in the u-basis with spectral integers n = (n_1,n_2,n_3).
RatQ r_elem_u(const std::array<long, 3>& a, const std::array<long, 3>& b,
              const std::array<long, 3>& n);
/// <c|R|d> in the p-basis (requires only the differences of n).
RatQ r_elem_p(const std::array<long, 3>& c, const std::array<long, 3>& d,
              const std::array<long, 3>& n);
/// <a|K|b> in the u-basis, lambda = 0, leg weights (1,2,1,2).
RatQ k_elem_u(const std::array<long, 4>& a, const std::array<long, 4>& b);
/// <c|K|d> in the p-basis, lambda = 0.
RatQ k_elem_p(const std::array<long, 4>& c, const std::array<long, 4>& d);

/// Independent oracle: composes the exact action of each constituent factor
/// (index swap, quadratic exponential, spectral exponential, dilogarithm
/// series) on basis vectors, solving for the finitely many series orders that
/// connect |in> to <out|.  n is ignored for K (lambda = 0).
RatQ oracle_elem(RepOp op, RepBasis basis, const std::vector<long>& out,
                 const std::vector<long>& in, const std::vector<long>& n);

/// Tetrahedron equation at fixed boundary indices: contracts
/// R_124 R_135 R_236 R_456 (and the reverse order) over the six internal
/// indices, which the Kronecker deltas reduce to a finite one-parameter sum,
/// and compares the two exact values.
bool verify_tetrahedron_rep(RepBasis basis, const std::array<long, 6>& a,
                            const std::array<long, 6>& c,
                            const std::array<long, 6>& n);

/// 3D reflection equation at fixed boundary indices (u-basis, lambda = 0):
/// contracts R_457 K_4689 K_2379 R_258 R_178 K_1356 R_124 against the
/// reversed product over the fifteen internal indices.  `enlarge` widens
/// every mechanically derived summation range by that amount (the extra
/// terms must all vanish; used as a range-correctness assertion).
bool verify_reflection_rep(const std::array<long, 9>& a,
                           const std::array<long, 9>& c, int enlarge = 0);

/// Result of an exhaustive window sweep.
struct SweepReport {
    unsigned long long pairs_checked = 0;
    bool ok = true;
    std::string counterexample;  // empty when ok
};

/// Checks verify_tetrahedron_rep on every conservation-consistent pair
/// (a, c) in {-radius..radius}^12 at n = 0, plus `random_n_samples` random
/// consistent pairs with n drawn from {-1,0,1}^6.
SweepReport sweep_tetra_rep_window(RepBasis basis, int radius,
                                   int random_n_samples, unsigned seed,
                                   int jobs = 1);

/// Checks verify_reflection_rep on every conservation-consistent pair (a, c)
/// in {-radius..radius}^18, parallel over `jobs` workers; also re-checks 20
/// evenly sampled pairs with all summation ranges enlarged by 2.
SweepReport sweep_reflection_rep_window(int radius, int jobs);

/// The conserved boundary combinations of the tetrahedron (6 legs) or
/// reflection (9 legs) contraction, derived mechanically from the delta
/// systems.  Both sides of the equation vanish unless the out-side value of
/// a equals the in-side value of c componentwise.  (In the u-basis the two
/// functional families coincide; in the p-basis they differ.)
std::vector<long> tetra_conserved(RepBasis basis, bool out_side,
                                  const std::array<long, 6>& x);
std::vector<long> reflection_conserved(bool out_side,
                                       const std::array<long, 9>& x);

}  // namespace qt
