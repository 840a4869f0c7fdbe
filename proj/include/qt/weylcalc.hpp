/**
 * @file weylcalc.hpp
 * @brief Exact symbolic calculus in q-Weyl algebras: monomials in q-commuting
 *        canonical pairs (p_i, u_i), the embeddings of quantum y-variables
 *        into them, and the affine operators (index permutation + linear map
 *        + lambda translation) realizing the wiring-diagram moves.  Provides
 *        exact verification of the tetrahedron and 3D reflection equations
 *        for those operators and of the dilogarithm conjugation chains that
 *        factor the full solutions.
 *
 * Conventions fixed here once:
 *  - [p_i, u_i] = w_i * hbar with weight w_i in {1,2}; all other brackets of
 *    generators vanish.  q = e^{hbar}.
 *  - A WeylMono is stored normal-ordered: q^{qpow} * prod_i kappa_i^{lam_i} *
 *    e^{a.p} e^{b.u}, with kappa_i = e^{lambda_i}.  The single-exponential
 *    form e^{a.p + b.u} equals q^{-(1/2) sum w_i a_i b_i} e^{a.p} e^{b.u}.
 *  - An AffineOp represents the adjoint action of a group element (index
 *    permutation times an exponential of (1/hbar)-graded quadratic terms);
 *    scalars never arise for the operators built here, so group equality is
 *    checked as equality of (perm, linear part, lambda translation).
 *  - Ad(e^{(c/hbar) u_a}) shifts p_a by -c w_a and Ad(e^{(c/hbar) p_a})
 *    shifts u_a by +c w_a; this sign convention reproduces the printed
 *    substitution rules exactly and is asserted at construction.
 */
#pragma once

#include "qt/qtorus.hpp"
#include "qt/quiver.hpp"

#include <gmpxx.h>

#include <string>
#include <vector>

namespace qt {

/// Ambient q-Weyl algebra: one canonical pair per index, with weights.
struct WeylCtx {
    std::vector<int> w;  // each 1 or 2
    int n() const { return static_cast<int>(w.size()); }
};

WeylCtx weyl_ctx_a2();  // 3 pairs, all weight 1
WeylCtx weyl_ctx_c2();  // 4 pairs, weights (1,2,1,2)
WeylCtx weyl_ctx_a3();  // 6 pairs, all weight 1
WeylCtx weyl_ctx_c3();  // 9 pairs, weight 2 at indices 2,5,8 (0-based)

/// q^{qpow} * prod kappa_i^{lam_i} * e^{a.p} e^{b.u}, normal-ordered.
struct WeylMono {
    Rat qpow;
    std::vector<Rat> lam;
    std::vector<Rat> a;
    std::vector<Rat> b;

    friend bool operator==(const WeylMono&, const WeylMono&) = default;
};

/// Entry list (index, coefficient) for building sparse exponent vectors.
using ECoeffs = std::vector<std::pair<int, long>>;

/// The single exponential e^{a.p + b.u} * prod kappa^{lam}, normal-ordered.
WeylMono mono_exp_dense(const WeylCtx& ctx, const std::vector<Rat>& a,
                        const std::vector<Rat>& b, const std::vector<Rat>& lam);
WeylMono mono_exp(const WeylCtx& ctx, const ECoeffs& a, const ECoeffs& b,
                  const ECoeffs& lam);
WeylMono mono_one(const WeylCtx& ctx);
WeylMono mono_mul(const WeylCtx& ctx, const WeylMono& x, const WeylMono& y);
/// Commutation exponent m with X Y = q^m Y X: sum_i w_i (a_i b'_i - b_i a'_i).
Rat weyl_pair(const WeylCtx& ctx, const WeylMono& x, const WeylMono& y);
std::string mono_to_string(const WeylMono& m);

enum class PhiName {
    A2_121,
    A2_212,
    C2_1212,
    C2_2121,
    A3_123121,
    C3_123123123,
};

/// Images of the quantum torus generators Y_i as Weyl monomials.
struct PhiEmbedding {
    WeylCtx ctx;
    std::vector<WeylMono> img;
};

PhiEmbedding build_phi(PhiName name);

/// phi(Y^alpha): exponents combine linearly, normal-ordered at the end, so
/// phi(Y^alpha) phi(Y^beta) = q^{<alpha,beta>} phi(Y^{alpha+beta}).
WeylMono phi_apply(const PhiEmbedding& phi, const LVec& alpha);

/// Checks phi(Y_i) phi(Y_j) = q^{2 bhat_ij} phi(Y_j) phi(Y_i) for all pairs.
bool check_phi_commutation(const PhiEmbedding& phi, const Seed& seed);

/// Adjoint action of a permutation-times-exponential group element: exponent
/// coefficient vectors v = (a; b) map to A v, and the lambda prefactor gains
/// L v.  No scalar factors arise for the operators constructed here, so none
/// are stored; equality is (perm, A, L).
struct AffineOp {
    int n = 0;
    std::vector<int> perm;               // S_n part (image of each index)
    std::vector<std::vector<Rat>> A;     // 2n x 2n on coefficient vectors
    std::vector<std::vector<Rat>> L;     // n x 2n lambda translation

    friend bool operator==(const AffineOp&, const AffineOp&) = default;
};

AffineOp op_identity(const WeylCtx& ctx);
/// Ad(f g) = Ad(f) after Ad(g).
AffineOp op_compose(const AffineOp& f, const AffineOp& g);
AffineOp op_inverse(const AffineOp& op);
WeylMono op_apply(const WeylCtx& ctx, const AffineOp& op, const WeylMono& m);

/// Primitive generators of the adjoint action.
AffineOp op_rho(const WeylCtx& ctx, int i, int j);                  // index swap
AffineOp op_ad_pu(const WeylCtx& ctx, int a, int b, const Rat& c);  // e^{(c/h) p_a u_b}, a != b
/// e^{(1/h) u_a * (c . lambda)}: p_a -> p_a - w_a (c . lambda).
AffineOp op_ad_lu(const WeylCtx& ctx, int a, const std::vector<Rat>& c);
/// e^{(1/h) p_a * (c . lambda)}: u_a -> u_a + w_a (c . lambda).
AffineOp op_ad_lp(const WeylCtx& ctx, int a, const std::vector<Rat>& c);

/// The R-move substitution with parameter alpha, built directly from the
/// printed rules (alpha = 0 recovers the plain version).
AffineOp make_pi(const WeylCtx& ctx, int i, int j, int k, const Rat& alpha);
/// The K-move substitution with parameters beta, gamma.
AffineOp make_piK(const WeylCtx& ctx, int i, int j, int k, int l,
                  const Rat& beta, const Rat& gamma);

/// Same operators assembled from the primitive generators; throws if the
/// result disagrees with make_pi / make_piK (construction-time consistency).
AffineOp make_P(const WeylCtx& ctx, int i, int j, int k, const Rat& alpha);
AffineOp make_PK(const WeylCtx& ctx, int i, int j, int k, int l,
                 const Rat& beta, const Rat& gamma);

/// pi_456 pi_236 pi_135 pi_124 = pi_124 pi_135 pi_236 pi_456 on 6 pairs.
bool verify_pi_tetrahedron(const Rat& alpha);
/// pi_457 piK_4689 piK_2379 pi_258 pi_178 piK_1356 pi_124 = reverse, 9 pairs.
bool verify_pi_reflection(const Rat& alpha, const Rat& beta, const Rat& gamma);
/// Same equalities for the group elements built from primitives, comparing
/// permutation and affine parts.
bool verify_P_tetrahedron(const Rat& alpha);
bool verify_P_reflection(const Rat& alpha, const Rat& beta, const Rat& gamma);

enum class DiagramCase { R, K };

/// Commutative squares: pi . phi' = phi . (monomial map) on every generator;
/// R: A2 embeddings with tau_{4,+}, K: C2 embeddings with tau_2+ tau_5+ tau_2-.
bool verify_diagram(DiagramCase c);

enum class ChainCase { Tetra, Reflection };
enum class ChainSide { L, R };

/// Conjugating each truncated-dilogarithm argument of the quantum identity by
/// the accumulated affine operators lands exactly on the printed argument of
/// the corresponding single-dilog (R) or dilog-triple (K) factor.
bool verify_full_conjugation_chain(ChainSide side, ChainCase c);

}  // namespace qt
