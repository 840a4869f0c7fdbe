/**
 * @file qtorus.hpp
 * @brief The quantum torus algebra attached to a seed: basis elements Y^alpha
 *        with q^{<a,b>} Y^a Y^b = Y^{a+b}, positive-cone series truncated at a
 *        total degree, truncated quantum dilogarithms, monomial (tau) maps,
 *        adjoint dilogarithm actions, quantum y-variable mutation, and the
 *        identity checks built from them.
 *
 * Conventions fixed here once and used everywhere:
 *  - The basis is Y^alpha itself; all q-powers live in coefficients, so a
 *    product Y^a * Y^b contributes q^{<a,b>} with <a,b> = a . Bhat b.  The
 *    pairing must be an integer wherever a product is actually formed.
 *  - tau maps are pure lattice maps e'_k -> -e_k, e'_i -> e_i + [eps b_ik]_+ e_k
 *    with no extra q-power: the generator prefactor q^{-b_ik [eps b_ik]_+} is
 *    exactly the normal-ordering factor absorbed by the Y^alpha basis.
 */
#pragma once

#include "qt/quiver.hpp"
#include "qt/ratq.hpp"

#include <map>

namespace qt {

using LVec = std::vector<long>;

/// Ambient seed plus the skew pairing 2<a,b> = sum_ij a_i B2[i][j] d_j b_j.
struct TorusContext {
    Seed seed;

    explicit TorusContext(Seed s) : seed(std::move(s)) {}
    int n() const { return seed.n; }

    /// 2 * <alpha, beta>; always an integer.
    long pair2(const LVec& a, const LVec& b) const;
    /// <alpha, beta>; throws if half-integral (such a product is never formed
    /// by the paper's computations).
    long pairing(const LVec& a, const LVec& b) const;
};

LVec unit_vec(int n, int i);
LVec vec_add(const LVec& a, const LVec& b);
LVec vec_neg(const LVec& a);
long vec_total(const LVec& a);
bool vec_is_zero(const LVec& a);
bool in_positive_cone(const LVec& a);

/// Finite Q(q)-linear combination of basis elements Y^alpha.
struct TorusElem {
    std::map<LVec, RatQ> terms;  // canonical: no zero coefficients

    void add_term(const LVec& alpha, const RatQ& c);
    bool is_zero() const { return terms.empty(); }
    friend bool operator==(const TorusElem&, const TorusElem&) = default;
};

TorusElem te_monomial(long qpow, const LVec& alpha);
TorusElem te_one(int n);
TorusElem te_add(const TorusElem& a, const TorusElem& b);
TorusElem te_scale(const TorusElem& a, const RatQ& c);
TorusElem te_mul(const TorusContext& ctx, const TorusElem& a, const TorusElem& b);
/// S * Y^beta = Y^beta * te_conj(S, beta): multiplies each coefficient by
/// q^{2<gamma,beta>}.
TorusElem te_conj(const TorusContext& ctx, const TorusElem& a, const LVec& beta);
/// Drop cone terms of total degree > N; throws on negative exponents.
TorusElem te_truncate(const TorusElem& a, int N);
std::string te_to_string(const TorusElem& a);

/// q^qpow * Y^alpha * tail, with tail a positive-cone series whose constant
/// term is 1, truncated at total degree N.
struct ConeSeries {
    long qpow = 0;
    LVec alpha;
    TorusElem tail;
    int N = 0;
};

ConeSeries cs_one(int n, int N);
ConeSeries cs_monomial(long qpow, const LVec& alpha, int N);
TorusElem cs_expand(const TorusContext& ctx, const ConeSeries& a);
/// Factor a TorusElem as q^a Y^m (1 + positive-cone tail); m is the
/// componentwise minimum of the support.  Throws if the minimal coefficient
/// is not a pure q-power or the remainder leaves the cone.
ConeSeries cs_normalize(const TorusContext& ctx, const TorusElem& x, int N);
ConeSeries cs_mul(const TorusContext& ctx, const ConeSeries& a, const ConeSeries& b);
ConeSeries cs_inverse(const TorusContext& ctx, const ConeSeries& a);
ConeSeries cs_pow(const TorusContext& ctx, const ConeSeries& a, long m);
/// 1 + q^w * v, renormalized to monomial-times-cone form.
ConeSeries cs_one_plus(const TorusContext& ctx, long w, const ConeSeries& v);
ConeSeries cs_retruncate(const ConeSeries& a, int N);
bool cs_equal(const ConeSeries& a, const ConeSeries& b);

/// Truncated quantum dilogarithm Psi_{q^base}(Y^alpha)^{+-1} for alpha in the
/// positive cone, nonzero.
ConeSeries psi_truncated(const TorusContext& ctx, const LVec& alpha,
                         long base_exponent, bool inverse, int N);

/// Column i is the image of e_i.
struct LatticeMap {
    int n = 0;
    IMat cols;
};

LatticeMap lm_identity(int n);
LVec lm_apply(const LatticeMap& m, const LVec& a);
/// (a then b) as maps: returns a composed with b acting first on exponents,
/// i.e. apply(result, x) = apply(a, apply(b, x)).
LatticeMap lm_compose(const LatticeMap& a, const LatticeMap& b);
/// Relabeling sigma as a morphism from the renamed torus back: e_j -> e_{perm^{-1}(j)}.
LatticeMap lm_from_permutation(const std::vector<int>& perm);
bool lm_equal(const LatticeMap& a, const LatticeMap& b);

/// Monomial map tau_{k,eps}: T(mu_k B) -> T(B), as a pure lattice map.
/// `before` is the seed B being mutated.
LatticeMap tau_map(const Seed& before, int k, int eps);

/// Pentagon identity Psi(U)Psi(W) = Psi(W)Psi(q^{-1}UW)Psi(U) at truncation N,
/// for U = Y^aU, W = Y^aW with UW = q^2 WU (precondition, checked).
bool pentagon_check(const TorusContext& ctx, const LVec& alphaU, const LVec& alphaW,
                    int N);

/// Ad(Psi_{q^base}(Y^arg)^sign) applied to a monomial-times-cone element, via
/// the exact finite product formula; the expansion is truncated at N.
ConeSeries ad_psi(const TorusContext& ctx, const ConeSeries& on, const LVec& arg,
                  long base_exponent, int sign, int N);

/// Quantum y-variables along a mutation path, expressed in the initial torus.
struct QuantumYState {
    Seed current;
    std::vector<ConeSeries> Y;
    int N = 0;

    static QuantumYState initial(const Seed& s, int N);
};

QuantumYState mutate_quantum_y(const TorusContext& ctx, const QuantumYState& st,
                               int k);

/// Checks Y_i(L+1) = Ad(Psi(Y^{d_1 b_1})^{d_1}) ... Ad(Psi(Y^{d_L b_L})^{d_L})
/// (tau composite)(e_i) against the mutation-formula path, for all i, at
/// truncation N.  Signs are the tropical signs (pass them in from module
/// tropical; they are never guessed here).
bool verify_ad_tau_decomposition(const Seed& start, const std::vector<int>& seq,
                                 const std::vector<int>& signs, int N);

struct PsiFactor {
    LVec alpha;
    long base_exponent = 1;
    bool inverse = false;
};

/// Expands both ordered dilogarithm products in the initial torus to degree N
/// and compares exactly.
bool verify_dilog_identity(const Seed& start, const std::vector<PsiFactor>& lhs,
                           const std::vector<PsiFactor>& rhs, int N);

struct TauSpec {
    int k = 0;
    int eps = +1;
};

/// Compares the composite monomial maps tau_{i_1,e_1}...tau_{i_L,e_L} sigma of
/// both sides (as lattice maps into the initial torus) and their final seeds.
bool verify_tau_identity(const Seed& start, const std::vector<TauSpec>& lhs_taus,
                         const std::vector<int>& lhs_perm,
                         const std::vector<TauSpec>& rhs_taus,
                         const std::vector<int>& rhs_perm);

}  // namespace qt
