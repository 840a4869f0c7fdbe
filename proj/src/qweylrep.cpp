/**
 * @file qweylrep.cpp
 * @brief Closed-form R/K matrix elements, the operator-action oracle, and the
 *        exact contraction engine behind the tetrahedron and 3D reflection
 *        equation checks in representation.
 *
 * The contraction engine works from the Kronecker-delta structure alone:
 * internal indices are solved symbolically by rational Gaussian elimination,
 * the leftover free directions are bounded by Fourier-Motzkin elimination of
 * the support inequalities (negative inverse-Pochhammer orders vanish), and
 * each lattice point contributes a memoized product of closed-form elements.
 */
#include "qt/qweylrep.hpp"

#include "qt/qseries.hpp"

#include <gmpxx.h>

#include <algorithm>
#include <atomic>
#include <functional>
#include <map>
#include <mutex>
#include <random>
#include <sstream>
#include <stdexcept>
#include <thread>
#include <unordered_map>

namespace qt {

namespace {

// ---------------------------------------------------------------------------
// Closed-form helpers
// ---------------------------------------------------------------------------

bool odd(long x) { return (x % 2) != 0; }

}  // namespace

RatQ r_elem_u(const std::array<long, 3>& a, const std::array<long, 3>& b,
              const std::array<long, 3>& n) {
    if (a[0] + a[1] != b[0] + b[1] || a[1] + a[2] != b[1] + b[2]) return RatQ();
    long m = a[1] - b[2];
    RatQ f = inv_qfactorial(m, 2);  // 1/(q^2;q^2)_m, zero for m < 0
    if (f.is_zero()) return f;
    long n13 = n[0] - n[2], n23 = n[1] - n[2];
    long e = m + (b[0] - b[2] + n13) * (m - n23) + n13 * n23;
    RatQ v = f.shifted(e);
    return odd(m) ? -v : v;
}

RatQ r_elem_p(const std::array<long, 3>& c, const std::array<long, 3>& d,
              const std::array<long, 3>& n) {
    if (c[1] != d[0] + d[2] || c[0] + c[2] != d[1]) return RatQ();
    long n13 = n[0] - n[2], n23 = n[1] - n[2];
    long m = c[0] - d[0] + n23;
    RatQ f = inv_qfactorial(m, 2);
    if (f.is_zero()) return f;
    long e = m + m * (d[1] - c[1] + n13);
    RatQ v = f.shifted(e);
    return odd(m) ? -v : v;
}

RatQ k_elem_u(const std::array<long, 4>& a, const std::array<long, 4>& b) {
    if (a[1] + a[2] + a[3] != b[1] + b[2] + b[3]) return RatQ();
    if (a[0] + 2 * a[1] + a[2] != b[0] + 2 * b[1] + b[2]) return RatQ();
    long M = a[1] + b[1] - a[3] - b[3];  // (q^2;q^2) order
    long m = b[1] - a[3];                // (q^4;q^4) order
    RatQ f = inv_qfactorial(m, 4) * inv_qfactorial(M, 2);
    if (f.is_zero()) return f;
    long e = M * (b[0] + 2 * b[1] - b[2] - 2 * b[3] + 1) +
             2 * m * (a[1] - a[3] + 1);
    RatQ v = (qpochhammer(4, -4 * M, m) * f).shifted(e);
    return odd(a[1] - b[3]) ? -v : v;
}

RatQ k_elem_p(const std::array<long, 4>& c, const std::array<long, 4>& d) {
    if (c[0] + c[2] != d[0] + d[2] || c[1] + c[3] != d[1] + d[3]) return RatQ();
    long m1 = c[0] - d[0];
    long m2 = c[1] - d[0] - d[3];
    RatQ f = inv_qfactorial(m2, 4) * inv_qfactorial(m1, 2);
    if (f.is_zero()) return f;
    long e = m1 * (-d[0] + d[2] - 2 * d[3] + 1) +
             2 * m2 * (d[1] + d[3] - c[2] + 1);
    RatQ v = (qpochhammer(4, -4 * m1, m2) * f).shifted(e);
    return odd(c[0] + c[1] - d[3]) ? -v : v;
}

// ---------------------------------------------------------------------------
// Oracle: direct factor-by-factor operator action on basis states
// ---------------------------------------------------------------------------

namespace {

/// One factor of an operator, applied right-to-left to kets.
struct RepFactor {
    enum Kind {
        kSwap,  // rho_{ij}
        kQuad,  // e^{(1/hbar) p_i (s . u)}  with s_i = 0
        kSpec,  // e^{n_const (s . u)}       (spectral exponential)
        kPsi,   // dilogarithm series of kappa^{kap} e^{a.p} e^{b.u}
    };
    Kind kind = kSwap;
    int i = 0, j = 0;            // kSwap / kQuad
    std::vector<long> s;         // kQuad / kSpec
    long n_const = 0;            // kSpec
    std::vector<long> a, b, kap; // kPsi
    long base = 1;               // kPsi
    bool inverse = false;        // kPsi
};

struct RepSpec {
    std::vector<int> w;              // leg weights
    std::vector<RepFactor> factors;  // operator order, leftmost first
};

RepSpec rep_spec(RepOp op) {
    RepSpec r;
    auto psi = [](std::vector<long> a, std::vector<long> b, std::vector<long> k,
                  long base, bool inv) {
        RepFactor f;
        f.kind = RepFactor::kPsi;
        f.a = std::move(a);
        f.b = std::move(b);
        f.kap = std::move(k);
        f.base = base;
        f.inverse = inv;
        return f;
    };
    auto swp = [](int i, int j) {
        RepFactor f;
        f.kind = RepFactor::kSwap;
        f.i = i;
        f.j = j;
        return f;
    };
    auto quad = [](int i, std::vector<long> s) {
        RepFactor f;
        f.kind = RepFactor::kQuad;
        f.i = i;
        f.s = std::move(s);
        return f;
    };
    if (op == RepOp::R) {
        r.w = {1, 1, 1};
        r.factors = {psi({1, -1, 1}, {1, 0, -1}, {1, 0, -1}, 1, false),
                     swp(1, 2), quad(0, {0, -1, 1})};
        RepFactor spec;  // e^{n_23 (u_3 - u_1)}
        spec.kind = RepFactor::kSpec;
        spec.s = {-1, 0, 1};
        r.factors.push_back(spec);
        return r;
    }
    r.w = {1, 2, 1, 2};
    r.factors = {psi({0, 1, -2, 1}, {0, 1, 0, -1}, {0, 0, 0, 0}, 2, false),
                 psi({1, -1, 1, 0}, {1, 0, -1, 0}, {0, 0, 0, 0}, 1, false),
                 psi({0, 1, -2, 1}, {0, 1, 0, -1}, {0, 0, 0, 0}, 2, true),
                 swp(1, 3), quad(0, {0, -1, 0, 1})};
    return r;
}

/// Affine form c0 + sum_i c_i t_i with long coefficients.
using AffL = std::vector<long>;

AffL aff_const(long c, size_t nvars) {
    AffL v(nvars + 1, 0);
    v[0] = c;
    return v;
}

/// Solves the small integer linear system "final(t) == out" by rational
/// elimination and enumerates the nonnegative integer solutions.
std::vector<std::vector<long>> solve_orders(
    const std::vector<AffL>& fin, const std::vector<long>& out, long cap) {
    size_t legs = fin.size();
    size_t k = fin.empty() ? 0 : fin[0].size() - 1;
    if (k == 0) {
        for (size_t l = 0; l < legs; ++l)
            if (fin[l][0] != out[l]) return {};
        return {std::vector<long>{}};
    }
    // Rational row reduction of [M | rhs].
    std::vector<std::vector<mpq_class>> m(legs,
                                          std::vector<mpq_class>(k + 1));
    for (size_t l = 0; l < legs; ++l) {
        for (size_t i = 0; i < k; ++i) m[l][i] = fin[l][i + 1];
        m[l][k] = out[l] - fin[l][0];
    }
    std::vector<int> pivot_col;
    size_t row = 0;
    for (size_t col = 0; col < k && row < legs; ++col) {
        size_t piv = row;
        while (piv < legs && m[piv][col] == 0) ++piv;
        if (piv == legs) continue;
        std::swap(m[piv], m[row]);
        mpq_class d = m[row][col];
        for (size_t j = 0; j <= k; ++j) m[row][j] /= d;
        for (size_t r = 0; r < legs; ++r) {
            if (r == row) continue;
            mpq_class f = m[r][col];
            if (f == 0) continue;
            for (size_t j = 0; j <= k; ++j) m[r][j] -= f * m[row][j];
        }
        pivot_col.push_back(static_cast<int>(col));
        ++row;
    }
    for (size_t r = row; r < legs; ++r)
        if (m[r][k] != 0) return {};  // inconsistent
    std::vector<int> free_col;
    for (size_t c = 0; c < k; ++c)
        if (std::find(pivot_col.begin(), pivot_col.end(),
                      static_cast<int>(c)) == pivot_col.end())
            free_col.push_back(static_cast<int>(c));
    std::vector<std::vector<long>> sols;
    std::vector<long> freev(free_col.size(), 0);
    // Enumerate free orders in [0, cap]; solutions beyond cap would mean the
    // truncation is wrong, so probe a margin and fail loudly if it is hit.
    long probe = cap + 4;
    std::function<void(size_t)> rec = [&](size_t idx) {
        if (idx == free_col.size()) {
            std::vector<long> n(k, 0);
            bool over_cap = false;
            for (size_t i = 0; i < free_col.size(); ++i) {
                n[static_cast<size_t>(free_col[i])] = freev[i];
                if (freev[i] > cap) over_cap = true;
            }
            for (size_t r = 0; r < pivot_col.size(); ++r) {
                mpq_class v = m[r][k];
                for (int fc : free_col)
                    v -= m[r][static_cast<size_t>(fc)] *
                         n[static_cast<size_t>(fc)];
                if (v.get_den() != 1 || v < 0) return;
                n[static_cast<size_t>(pivot_col[r])] = v.get_num().get_si();
            }
            if (over_cap)
                throw std::runtime_error(
                    "oracle_elem: series truncation cap exceeded");
            sols.push_back(std::move(n));
            return;
        }
        for (long v = 0; v <= probe; ++v) {
            freev[idx] = v;
            rec(idx + 1);
        }
    };
    rec(0);
    return sols;
}

}  // namespace

RatQ oracle_elem(RepOp op, RepBasis basis, const std::vector<long>& out,
                 const std::vector<long>& in, const std::vector<long>& n) {
    RepSpec spec = rep_spec(op);
    size_t legs = spec.w.size();
    if (out.size() != legs || in.size() != legs)
        throw std::invalid_argument("oracle_elem: wrong index count");
    std::vector<long> ns(legs, 0);
    if (op == RepOp::R) {
        if (n.size() != legs)
            throw std::invalid_argument("oracle_elem: wrong spectral count");
        ns = n;
    }
    // Collect the dilogarithm factors (rightmost factor acts first).
    std::vector<size_t> psi_pos;
    for (size_t f = 0; f < spec.factors.size(); ++f)
        if (spec.factors[f].kind == RepFactor::kPsi) psi_pos.push_back(f);
    size_t k = psi_pos.size();
    // Symbolic pass: track the state as affine forms in the series orders to
    // find which order tuples connect |in> to <out|.
    std::vector<AffL> st(legs);
    for (size_t l = 0; l < legs; ++l) st[l] = aff_const(in[l], k);
    for (size_t f = spec.factors.size(); f-- > 0;) {
        const RepFactor& fac = spec.factors[f];
        switch (fac.kind) {
            case RepFactor::kSwap:
                std::swap(st[static_cast<size_t>(fac.i)],
                          st[static_cast<size_t>(fac.j)]);
                break;
            case RepFactor::kQuad:
                if (basis == RepBasis::U) {
                    // p_i shifts by the u-eigenvalue sum.
                    for (size_t l = 0; l < legs; ++l)
                        if (fac.s[l] != 0)
                            for (size_t t = 0; t <= k; ++t)
                                st[static_cast<size_t>(fac.i)][t] -=
                                    fac.s[l] * spec.w[l] * st[l][t];
                } else {
                    // u-legs shift by the p_i eigenvalue.
                    AffL pi = st[static_cast<size_t>(fac.i)];
                    for (size_t l = 0; l < legs; ++l)
                        if (fac.s[l] != 0)
                            for (size_t t = 0; t <= k; ++t)
                                st[l][t] += fac.s[l] *
                                            spec.w[static_cast<size_t>(fac.i)] *
                                            pi[t];
                }
                break;
            case RepFactor::kSpec: {
                long nc = 0;  // n_23 for the R spectral exponential
                if (op == RepOp::R) nc = ns[1] - ns[2];
                if (basis == RepBasis::P)
                    for (size_t l = 0; l < legs; ++l) st[l][0] += nc * fac.s[l];
                break;
            }
            case RepFactor::kPsi: {
                size_t which =
                    static_cast<size_t>(std::find(psi_pos.begin(),
                                                  psi_pos.end(), f) -
                                        psi_pos.begin());
                for (size_t l = 0; l < legs; ++l) {
                    if (basis == RepBasis::U)
                        st[l][which + 1] -= fac.a[l];
                    else
                        st[l][which + 1] += fac.b[l];
                }
                break;
            }
        }
    }
    long cap = 8;
    for (size_t l = 0; l < legs; ++l) cap += std::abs(out[l]) + std::abs(in[l]);
    for (long v : ns) cap += std::abs(v);
    std::vector<std::vector<long>> orders = solve_orders(st, out, cap);
    // Numeric replay for each admissible order tuple.
    RatQ total;
    for (const std::vector<long>& ord : orders) {
        std::vector<long> s(in);
        long qexp = 0;
        RatQ coeff = RatQ::one();
        size_t which = k;
        for (size_t f = spec.factors.size(); f-- > 0;) {
            const RepFactor& fac = spec.factors[f];
            switch (fac.kind) {
                case RepFactor::kSwap:
                    std::swap(s[static_cast<size_t>(fac.i)],
                              s[static_cast<size_t>(fac.j)]);
                    break;
                case RepFactor::kQuad: {
                    long dot = 0;
                    for (size_t l = 0; l < legs; ++l)
                        dot += fac.s[l] * spec.w[l] * s[l];
                    if (basis == RepBasis::U) {
                        s[static_cast<size_t>(fac.i)] -= dot;
                    } else {
                        long pi = spec.w[static_cast<size_t>(fac.i)] *
                                  s[static_cast<size_t>(fac.i)];
                        for (size_t l = 0; l < legs; ++l)
                            s[l] += fac.s[l] * pi;
                    }
                    break;
                }
                case RepFactor::kSpec: {
                    long nc = (op == RepOp::R) ? ns[1] - ns[2] : 0;
                    if (basis == RepBasis::U) {
                        long dot = 0;
                        for (size_t l = 0; l < legs; ++l)
                            dot += fac.s[l] * spec.w[l] * s[l];
                        qexp += nc * dot;
                    } else {
                        for (size_t l = 0; l < legs; ++l)
                            s[l] += nc * fac.s[l];
                    }
                    break;
                }
                case RepFactor::kPsi: {
                    --which;
                    long m = ord[which];
                    coeff *= psi_series_coeff(m, fac.inverse, fac.base);
                    for (size_t l = 0; l < legs; ++l)
                        qexp += m * fac.kap[l] * ns[l];
                    if (basis == RepBasis::U) {
                        for (size_t l = 0; l < legs; ++l)
                            qexp += m * spec.w[l] * fac.b[l] * s[l];
                        for (size_t l = 0; l < legs; ++l) s[l] -= m * fac.a[l];
                    } else {
                        for (size_t l = 0; l < legs; ++l) s[l] += m * fac.b[l];
                        for (size_t l = 0; l < legs; ++l)
                            qexp += m * spec.w[l] * fac.a[l] * s[l];
                    }
                    break;
                }
            }
        }
        for (size_t l = 0; l < legs; ++l)
            if (s[l] != out[l])
                throw std::logic_error("oracle_elem: replay state mismatch");
        total += coeff.shifted(qexp);
    }
    return total;
}

// ---------------------------------------------------------------------------
// Contraction engine
// ---------------------------------------------------------------------------

namespace {

using AffQ = std::vector<mpq_class>;  // affine form over [1, a, c, ns, free]

/// Integer-compiled affine form: den * value = c[0] + sum_i c[i+1] * vals[i].
/// All coefficients in the networks built here are tiny, so plain long
/// arithmetic keeps GMP out of the evaluation hot path.
struct AffZ {
    long den = 1;  // > 0
    std::vector<long> c;
};

AffZ compile_aff(const AffQ& f) {
    AffZ out;
    mpz_class lcm = 1;
    for (const mpq_class& v : f)
        mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), v.get_den().get_mpz_t());
    out.den = lcm.get_si();
    out.c.reserve(f.size());
    for (const mpq_class& v : f)
        out.c.push_back(mpq_class(v * lcm).get_num().get_si());
    return out;
}

std::vector<AffZ> compile_affs(const std::vector<AffQ>& fs) {
    std::vector<AffZ> out;
    out.reserve(fs.size());
    for (const AffQ& f : fs) out.push_back(compile_aff(f));
    return out;
}

struct NetFactor {
    RepOp op;
    std::vector<int> legs;        // global leg ids
    std::vector<AffZ> out_slots;  // affine forms after pivot substitution
    std::vector<AffZ> in_slots;
};

/// One side of an equation in representation, preprocessed for evaluation.
struct Network {
    RepBasis basis;
    int nlegs = 0;
    int nspec = 0;                    // spectral slots (0 for reflection)
    int nfree = 0;                    // free summation directions
    std::vector<AffZ> conservation;   // over [1, a, c, ns]; must vanish
    std::vector<NetFactor> factors;
    // Fourier-Motzkin data: level L bounds depend on [1, a, c, ns, t_1..t_L-1].
    std::vector<std::vector<AffZ>> lower;  // per level, forms: t_L >= form
    std::vector<std::vector<AffZ>> upper;  // per level, forms: t_L <= form
    std::vector<AffZ> flat;                // t-independent support conditions
};

// ---------------------------------------------------------------------------
// Factored rational values: num / prod_d Phi_d^m.  Element denominators are
// Pochhammer products, hence products of cyclotomics, so sums and products of
// element values never need a polynomial gcd: products merge multiplicity
// lists, sums scale both numerators to the max-multiplicity common
// denominator.  This keeps the sweep hot path free of laurent_gcd, which
// otherwise dominates it.
// ---------------------------------------------------------------------------

struct FacQ {
    LaurentQ num;                             // zero iff the value is zero
    std::vector<std::pair<long, long>> phi;   // (d, multiplicity), d ascending

    bool is_zero() const { return num.is_zero(); }
    static FacQ one() {
        FacQ f;
        f.num = LaurentQ::one();
        return f;
    }
};

/// prod Phi_d^{target_d - have_d} (requires have <= target pointwise).
LaurentQ phi_scale(const std::vector<std::pair<long, long>>& target,
                   const std::vector<std::pair<long, long>>& have) {
    LaurentQ s = LaurentQ::one();
    size_t j = 0;
    for (const auto& [d, m] : target) {
        long hm = 0;
        while (j < have.size() && have[j].first < d) ++j;
        if (j < have.size() && have[j].first == d) hm = have[j].second;
        for (long i = hm; i < m; ++i) s *= cyclotomic(d);
    }
    return s;
}

std::vector<std::pair<long, long>> phi_max(
    const std::vector<std::pair<long, long>>& a,
    const std::vector<std::pair<long, long>>& b) {
    std::vector<std::pair<long, long>> out;
    size_t i = 0, j = 0;
    while (i < a.size() || j < b.size()) {
        if (j == b.size() || (i < a.size() && a[i].first < b[j].first))
            out.push_back(a[i++]);
        else if (i == a.size() || b[j].first < a[i].first)
            out.push_back(b[j++]);
        else {
            out.emplace_back(a[i].first, std::max(a[i].second, b[j].second));
            ++i, ++j;
        }
    }
    return out;
}

void fac_mul(FacQ& a, const FacQ& b) {
    a.num *= b.num;
    std::vector<std::pair<long, long>> merged;
    size_t i = 0, j = 0;
    while (i < a.phi.size() || j < b.phi.size()) {
        if (j == b.phi.size() ||
            (i < a.phi.size() && a.phi[i].first < b.phi[j].first))
            merged.push_back(a.phi[i++]);
        else if (i == a.phi.size() || b.phi[j].first < a.phi[i].first)
            merged.push_back(b.phi[j++]);
        else {
            merged.emplace_back(a.phi[i].first,
                                a.phi[i].second + b.phi[j].second);
            ++i, ++j;
        }
    }
    a.phi = std::move(merged);
}

void fac_add(FacQ& a, const FacQ& b) {
    if (b.is_zero()) return;
    if (a.is_zero()) {
        a = b;
        return;
    }
    auto merged = phi_max(a.phi, b.phi);
    a.num = a.num * phi_scale(merged, a.phi) + b.num * phi_scale(merged, b.phi);
    a.phi = std::move(merged);
}

bool fac_eq(const FacQ& a, const FacQ& b) {
    if (a.is_zero() || b.is_zero()) return a.is_zero() == b.is_zero();
    auto merged = phi_max(a.phi, b.phi);
    return a.num * phi_scale(merged, a.phi) == b.num * phi_scale(merged, b.phi);
}

/// Splits a canonical RatQ into factored form; the denominator of every
/// closed-form element is a unit times a product of cyclotomics, so trial
/// division is exhaustive.
FacQ fac_from(const RatQ& v) {
    FacQ f;
    f.num = v.num();
    LaurentQ den = v.den();
    std::map<long, long> mult;
    // Phi_d has degree phi(d), which can be far below d (phi(d) >= sqrt(d/2)),
    // so bound the trial index by the squared degree, not the degree.
    long deg0 = den.is_zero() ? 0 : den.hi_exp() - den.lo_exp();
    long cap = 2 * deg0 * deg0 + 8;
    long d = 1;
    while (!den.is_zero() && den.hi_exp() > den.lo_exp() && d <= cap) {
        try {
            den = exact_div(den, cyclotomic(d));
            ++mult[d];
        } catch (const std::domain_error&) {
            ++d;
        }
    }
    if (!den.is_zero() && den.hi_exp() > den.lo_exp())
        throw std::logic_error("fac_from: non-cyclotomic denominator");
    // Remaining unit c * q^k folds into the numerator.
    if (!f.num.is_zero() && !den.is_one()) {
        long sh = den.lo_exp();
        f.num = f.num.shifted(-sh).scaled(Rat(1) / den.coeff(sh));
    }
    f.phi.assign(mult.begin(), mult.end());
    return f;
}

/// Per-worker memoization of closed-form element values in factored form.
struct ElemCache {
    std::map<std::array<long, 9>, FacQ> r;  // out(3), in(3), n(3)
    std::map<std::array<long, 8>, FacQ> k;  // out(4), in(4)
};

const FacQ& cached_elem(ElemCache& cache, RepOp op, RepBasis basis,
                        const std::array<long, 4>& out,
                        const std::array<long, 4>& in,
                        const std::array<long, 3>& n) {
    if (op == RepOp::R) {
        std::array<long, 9> key{out[0], out[1], out[2], in[0], in[1], in[2],
                                n[0],  n[1],  n[2]};
        auto it = cache.r.find(key);
        if (it == cache.r.end()) {
            std::array<long, 3> o{out[0], out[1], out[2]};
            std::array<long, 3> i{in[0], in[1], in[2]};
            RatQ v = (basis == RepBasis::U) ? r_elem_u(o, i, n)
                                            : r_elem_p(o, i, n);
            it = cache.r.emplace(key, fac_from(v)).first;
        }
        return it->second;
    }
    std::array<long, 8> key{out[0], out[1], out[2], out[3],
                            in[0],  in[1],  in[2],  in[3]};
    auto it = cache.k.find(key);
    if (it == cache.k.end()) {
        RatQ v = (basis == RepBasis::U) ? k_elem_u(out, in) : k_elem_p(out, in);
        it = cache.k.emplace(key, fac_from(v)).first;
    }
    return it->second;
}

/// Kronecker-delta equations of one factor as linear forms over its slots:
/// each pair (out coefficients, in coefficients) must contract to zero.
std::vector<std::pair<std::vector<long>, std::vector<long>>> delta_forms(
    RepOp op, RepBasis basis) {
    if (op == RepOp::R) {
        if (basis == RepBasis::U)
            return {{{1, 1, 0}, {-1, -1, 0}}, {{0, 1, 1}, {0, -1, -1}}};
        return {{{0, 1, 0}, {-1, 0, -1}}, {{1, 0, 1}, {0, -1, 0}}};
    }
    if (basis == RepBasis::U)
        return {{{0, 1, 1, 1}, {0, -1, -1, -1}},
                {{1, 2, 1, 0}, {-1, -2, -1, 0}}};
    return {{{1, 0, 1, 0}, {-1, 0, -1, 0}}, {{0, 1, 0, 1}, {0, -1, 0, -1}}};
}

/// Support conditions (form >= 0 wherever the element is nonzero), as slot
/// coefficient pairs plus the coefficient of this factor's n_23 = n_j - n_k.
struct SupportForm {
    std::vector<long> out, in;
    long n23 = 0;
};

std::vector<SupportForm> support_forms(RepOp op, RepBasis basis) {
    if (op == RepOp::R) {
        if (basis == RepBasis::U) return {{{0, 1, 0}, {0, 0, -1}, 0}};
        return {{{1, 0, 0}, {-1, 0, 0}, 1}};
    }
    if (basis == RepBasis::U)
        return {{{0, 0, 0, -1}, {0, 1, 0, 0}, 0},
                {{0, 1, 0, -1}, {0, 1, 0, -1}, 0}};
    return {{{1, 0, 0, 0}, {-1, 0, 0, 0}, 0}, {{0, 1, 0, 0}, {-1, 0, 0, -1}, 0}};
}

AffQ aff_zero(size_t dim) { return AffQ(dim, 0); }

/// Builds the preprocessed network for a factor sequence over `nlegs` legs.
Network build_network(RepBasis basis, int nlegs, bool with_spectral,
                      const std::vector<std::pair<RepOp, std::vector<int>>>&
                          factor_list) {
    Network net;
    net.basis = basis;
    net.nlegs = nlegs;
    net.nspec = with_spectral ? nlegs : 0;
    size_t known = 1 + 2 * static_cast<size_t>(nlegs) +
                   static_cast<size_t>(net.nspec);  // [1, a, c, ns]
    // Assign internal variables by walking the operator product left to
    // right: each factor's out slots are the current line variables, its in
    // slots are fresh; the final line variables are identified with c.
    int nint = 0;
    std::vector<int> cur(static_cast<size_t>(nlegs), -1);  // -1: still a_leg
    struct RawFactor {
        RepOp op;
        std::vector<int> legs;
        std::vector<int> out_var, in_var;  // >=0 internal id, else -(leg+1)=a
    };
    std::vector<RawFactor> raw;
    for (auto& [op, legs] : factor_list) {
        RawFactor rf;
        rf.op = op;
        rf.legs = legs;
        for (int l : legs) {
            int v = cur[static_cast<size_t>(l)];
            rf.out_var.push_back(v >= 0 ? v : -(l + 1));
            int nv = nint++;
            rf.in_var.push_back(nv);
            cur[static_cast<size_t>(l)] = nv;
        }
        raw.push_back(std::move(rf));
    }
    size_t dim0 = known + static_cast<size_t>(nint);
    auto var_form = [&](int v, int leg) {
        AffQ f = aff_zero(dim0);
        if (v >= 0)
            f[known + static_cast<size_t>(v)] = 1;
        else
            f[1 + static_cast<size_t>(leg)] = 1;  // a_leg
        return f;
    };
    // Delta equations plus the end-of-line identifications with c.
    std::vector<AffQ> eqs;
    for (const RawFactor& rf : raw) {
        for (auto& [oc, ic] : delta_forms(rf.op, basis)) {
            AffQ e = aff_zero(dim0);
            for (size_t s = 0; s < rf.legs.size(); ++s) {
                AffQ of = var_form(rf.out_var[s], rf.legs[s]);
                AffQ inf = var_form(rf.in_var[s], rf.legs[s]);
                for (size_t t = 0; t < dim0; ++t)
                    e[t] += oc[s] * of[t] + ic[s] * inf[t];
            }
            eqs.push_back(std::move(e));
        }
    }
    for (int l = 0; l < nlegs; ++l) {
        AffQ e = var_form(cur[static_cast<size_t>(l)], l);
        e[1 + static_cast<size_t>(nlegs) + static_cast<size_t>(l)] -= 1;  // c_l
        eqs.push_back(std::move(e));
    }
    // Gaussian elimination over the internal columns.
    std::vector<int> pivot_of_row;
    size_t row = 0;
    for (size_t col = known; col < dim0 && row < eqs.size(); ++col) {
        size_t piv = row;
        while (piv < eqs.size() && eqs[piv][col] == 0) ++piv;
        if (piv == eqs.size()) continue;
        std::swap(eqs[piv], eqs[row]);
        mpq_class d = eqs[row][col];
        for (size_t t = 0; t < dim0; ++t) eqs[row][t] /= d;
        for (size_t r = 0; r < eqs.size(); ++r) {
            if (r == row) continue;
            mpq_class f = eqs[r][col];
            if (f == 0) continue;
            for (size_t t = 0; t < dim0; ++t) eqs[r][t] -= f * eqs[row][t];
        }
        pivot_of_row.push_back(static_cast<int>(col));
        ++row;
    }
    for (size_t r = row; r < eqs.size(); ++r) {
        bool nontrivial = false;
        for (size_t t = 0; t < known; ++t)
            if (eqs[r][t] != 0) nontrivial = true;
        if (nontrivial) {
            AffQ c(eqs[r].begin(), eqs[r].begin() + static_cast<long>(known));
            net.conservation.push_back(compile_aff(c));
        }
    }
    std::vector<int> free_cols;
    for (size_t c = known; c < dim0; ++c)
        if (std::find(pivot_of_row.begin(), pivot_of_row.end(),
                      static_cast<int>(c)) == pivot_of_row.end())
            free_cols.push_back(static_cast<int>(c));
    net.nfree = static_cast<int>(free_cols.size());
    size_t dim = known + free_cols.size();  // [1, a, c, ns, t...]
    // Express every internal variable over [1, a, c, ns, t...].
    std::vector<AffQ> internal(static_cast<size_t>(nint), aff_zero(dim));
    for (size_t i = 0; i < free_cols.size(); ++i) {
        size_t v = static_cast<size_t>(free_cols[i]) - known;
        internal[v][known + i] = 1;
    }
    for (size_t r = 0; r < pivot_of_row.size(); ++r) {
        size_t v = static_cast<size_t>(pivot_of_row[r]) - known;
        AffQ f = aff_zero(dim);
        for (size_t t = 0; t < known; ++t) f[t] = -eqs[r][t];
        for (size_t i = 0; i < free_cols.size(); ++i)
            f[known + i] -= eqs[r][static_cast<size_t>(free_cols[i])];
        internal[v] = std::move(f);
    }
    auto slot_form = [&](int v, int leg) {
        if (v >= 0) return internal[static_cast<size_t>(v)];
        AffQ f = aff_zero(dim);
        f[1 + static_cast<size_t>(leg)] = 1;
        return f;
    };
    std::vector<AffQ> conds;  // support conditions over [1, a, c, ns, t...]
    for (const RawFactor& rf : raw) {
        NetFactor nf;
        nf.op = rf.op;
        nf.legs = rf.legs;
        std::vector<AffQ> out_forms, in_forms;
        for (size_t s = 0; s < rf.legs.size(); ++s) {
            out_forms.push_back(slot_form(rf.out_var[s], rf.legs[s]));
            in_forms.push_back(slot_form(rf.in_var[s], rf.legs[s]));
            nf.out_slots.push_back(compile_aff(out_forms.back()));
            nf.in_slots.push_back(compile_aff(in_forms.back()));
        }
        for (const SupportForm& sf : support_forms(rf.op, basis)) {
            AffQ cform = aff_zero(dim);
            for (size_t s = 0; s < rf.legs.size(); ++s)
                for (size_t t = 0; t < dim; ++t)
                    cform[t] += sf.out[s] * out_forms[s][t] +
                                sf.in[s] * in_forms[s][t];
            if (sf.n23 != 0 && with_spectral) {
                size_t ns0 = 1 + 2 * static_cast<size_t>(nlegs);
                cform[ns0 + static_cast<size_t>(rf.legs[1])] += sf.n23;
                cform[ns0 + static_cast<size_t>(rf.legs[2])] -= sf.n23;
            }
            conds.push_back(std::move(cform));
        }
        net.factors.push_back(std::move(nf));
    }
    // Fourier-Motzkin elimination of t_nfree .. t_1: level L keeps bounds in
    // terms of the outer variables t_1 .. t_{L-1}.
    net.lower.resize(static_cast<size_t>(net.nfree));
    net.upper.resize(static_cast<size_t>(net.nfree));
    for (int lev = net.nfree; lev >= 1; --lev) {
        size_t tc = known + static_cast<size_t>(lev) - 1;
        std::vector<AffQ> lows, ups, rest;
        for (AffQ& f : conds) {
            mpq_class c = f[tc];
            if (c == 0) {
                rest.push_back(f);
                continue;
            }
            // c*t + g >= 0  ->  t >= -g/c (c>0) or t <= -g/c (c<0)
            AffQ g(f.begin(), f.begin() + static_cast<long>(tc));
            for (auto& x : g) x /= -c;
            if (c > 0)
                lows.push_back(std::move(g));
            else
                ups.push_back(std::move(g));
        }
        if (lows.empty() || ups.empty())
            throw std::runtime_error(
                "contraction network: unbounded summation direction");
        net.lower[static_cast<size_t>(lev) - 1] = compile_affs(lows);
        net.upper[static_cast<size_t>(lev) - 1] = compile_affs(ups);
        conds = std::move(rest);
        // Combined conditions keep the outer problem bounded.
        for (const AffQ& lo : lows)
            for (const AffQ& up : ups) {
                AffQ g(tc, 0);
                for (size_t t = 0; t < tc; ++t) g[t] = up[t] - lo[t];
                conds.push_back(std::move(g));
            }
    }
    net.flat = compile_affs(conds);
    return net;
}

/// den * value of the form at `vals`.
long aff_eval_num(const AffZ& f, const std::vector<long>& vals) {
    long v = f.c[0];
    for (size_t t = 1; t < f.c.size(); ++t) v += f.c[t] * vals[t - 1];
    return v;
}

long floor_div(long num, long den) {  // den > 0
    long q = num / den;
    return (num % den != 0 && num < 0) ? q - 1 : q;
}

long ceil_div(long num, long den) {  // den > 0
    long q = num / den;
    return (num % den != 0 && num > 0) ? q + 1 : q;
}

/// Evaluates one side of an equation at fixed boundary data.
FacQ eval_network(const Network& net, ElemCache& cache,
                  const std::vector<long>& a, const std::vector<long>& c,
                  const std::vector<long>& ns, int enlarge) {
    std::vector<long> vals;  // [a, c, ns, t...]
    vals.reserve(a.size() + c.size() + ns.size() +
                 static_cast<size_t>(net.nfree));
    vals.insert(vals.end(), a.begin(), a.end());
    vals.insert(vals.end(), c.begin(), c.end());
    vals.insert(vals.end(), ns.begin(), ns.end());
    for (const AffZ& f : net.conservation)
        if (aff_eval_num(f, vals) != 0) return FacQ();
    for (const AffZ& f : net.flat)
        if (aff_eval_num(f, vals) < 0) return FacQ();
    vals.resize(vals.size() + static_cast<size_t>(net.nfree), 0);
    size_t tbase = a.size() + c.size() + ns.size();
    FacQ total;
    std::array<long, 4> oidx{}, iidx{};
    std::array<long, 3> nidx{};
    std::function<void(int)> rec = [&](int lev) {
        if (lev == net.nfree) {
            FacQ term = FacQ::one();
            for (const NetFactor& nf : net.factors) {
                size_t slots = nf.legs.size();
                for (size_t s = 0; s < slots; ++s) {
                    long on = aff_eval_num(nf.out_slots[s], vals);
                    long in = aff_eval_num(nf.in_slots[s], vals);
                    if (on % nf.out_slots[s].den != 0 ||
                        in % nf.in_slots[s].den != 0)
                        return;
                    oidx[s] = on / nf.out_slots[s].den;
                    iidx[s] = in / nf.in_slots[s].den;
                }
                if (nf.op == RepOp::R)
                    for (size_t s = 0; s < 3; ++s)
                        nidx[s] = ns.empty()
                                      ? 0
                                      : ns[static_cast<size_t>(nf.legs[s])];
                const FacQ& v =
                    cached_elem(cache, nf.op, net.basis, oidx, iidx, nidx);
                if (v.is_zero()) return;
                fac_mul(term, v);
            }
            fac_add(total, term);
            return;
        }
        bool first = true;
        long lo = 0, hi = 0;
        for (const AffZ& f : net.lower[static_cast<size_t>(lev)]) {
            long v = ceil_div(aff_eval_num(f, vals), f.den);
            if (first || v > lo) lo = v;
            first = false;
        }
        first = true;
        for (const AffZ& f : net.upper[static_cast<size_t>(lev)]) {
            long v = floor_div(aff_eval_num(f, vals), f.den);
            if (first || v < hi) hi = v;
            first = false;
        }
        long l = lo - enlarge, h = hi + enlarge;
        for (long t = l; t <= h; ++t) {
            vals[tbase + static_cast<size_t>(lev)] = t;
            rec(lev + 1);
        }
        vals[tbase + static_cast<size_t>(lev)] = 0;
    };
    rec(0);
    return total;
}

// Factor sequences of the two equations (0-based legs, operator order).
const std::vector<std::pair<RepOp, std::vector<int>>> kTetraL = {
    {RepOp::R, {0, 1, 3}}, {RepOp::R, {0, 2, 4}},
    {RepOp::R, {1, 2, 5}}, {RepOp::R, {3, 4, 5}}};
const std::vector<std::pair<RepOp, std::vector<int>>> kTetraR = {
    {RepOp::R, {3, 4, 5}}, {RepOp::R, {1, 2, 5}},
    {RepOp::R, {0, 2, 4}}, {RepOp::R, {0, 1, 3}}};
const std::vector<std::pair<RepOp, std::vector<int>>> kReflL = {
    {RepOp::R, {3, 4, 6}}, {RepOp::K, {3, 5, 7, 8}}, {RepOp::K, {1, 2, 6, 8}},
    {RepOp::R, {1, 4, 7}}, {RepOp::R, {0, 6, 7}},    {RepOp::K, {0, 2, 4, 5}},
    {RepOp::R, {0, 1, 3}}};
const std::vector<std::pair<RepOp, std::vector<int>>> kReflR = {
    {RepOp::R, {0, 1, 3}}, {RepOp::K, {0, 2, 4, 5}}, {RepOp::R, {0, 6, 7}},
    {RepOp::R, {1, 4, 7}}, {RepOp::K, {1, 2, 6, 8}}, {RepOp::K, {3, 5, 7, 8}},
    {RepOp::R, {3, 4, 6}}};

const Network& tetra_net(RepBasis basis, bool lhs) {
    static const Network uL = build_network(RepBasis::U, 6, true, kTetraL);
    static const Network uR = build_network(RepBasis::U, 6, true, kTetraR);
    static const Network pL = build_network(RepBasis::P, 6, true, kTetraL);
    static const Network pR = build_network(RepBasis::P, 6, true, kTetraR);
    if (basis == RepBasis::U) return lhs ? uL : uR;
    return lhs ? pL : pR;
}

const Network& refl_net(bool lhs) {
    static const Network L = build_network(RepBasis::U, 9, false, kReflL);
    static const Network R = build_network(RepBasis::U, 9, false, kReflR);
    return lhs ? L : R;
}

/// The conservation rows split into an out-side part (acting on a) and an
/// in-side part (acting on c): a boundary pair supports nonzero terms only
/// if fa . a == fc . c rowwise.
struct ConservedFunctionals {
    std::vector<std::vector<long>> fa, fc;
};

ConservedFunctionals conserved_functionals(const Network& net) {
    size_t n = static_cast<size_t>(net.nlegs);
    ConservedFunctionals out;
    for (const AffZ& row : net.conservation) {
        // rows are already integer-scaled by compile_aff
        std::vector<long> fa(n), fc(n);
        for (size_t l = 0; l < n; ++l) {
            fa[l] = row.c[1 + l];
            fc[l] = -row.c[1 + n + l];
        }
        out.fa.push_back(std::move(fa));
        out.fc.push_back(std::move(fc));
    }
    return out;
}

std::vector<long> apply_functionals(
    const std::vector<std::vector<long>>& fs, const long* x, size_t n) {
    std::vector<long> v;
    v.reserve(fs.size());
    for (const auto& f : fs) {
        long s = 0;
        for (size_t l = 0; l < n; ++l) s += f[l] * x[l];
        v.push_back(s);
    }
    return v;
}

std::string tuple_str(const long* a, size_t na, const long* c, size_t nc) {
    std::ostringstream os;
    os << "a=(";
    for (size_t i = 0; i < na; ++i) os << (i ? "," : "") << a[i];
    os << ") c=(";
    for (size_t i = 0; i < nc; ++i) os << (i ? "," : "") << c[i];
    os << ")";
    return os.str();
}

}  // namespace

bool verify_tetrahedron_rep(RepBasis basis, const std::array<long, 6>& a,
                            const std::array<long, 6>& c,
                            const std::array<long, 6>& n) {
    ElemCache cache;
    std::vector<long> av(a.begin(), a.end()), cv(c.begin(), c.end()),
        nv(n.begin(), n.end());
    FacQ lhs = eval_network(tetra_net(basis, true), cache, av, cv, nv, 0);
    FacQ rhs = eval_network(tetra_net(basis, false), cache, av, cv, nv, 0);
    return fac_eq(lhs, rhs);
}

bool verify_reflection_rep(const std::array<long, 9>& a,
                           const std::array<long, 9>& c, int enlarge) {
    ElemCache cache;
    std::vector<long> av(a.begin(), a.end()), cv(c.begin(), c.end()), nv;
    FacQ lhs = eval_network(refl_net(true), cache, av, cv, nv, enlarge);
    FacQ rhs = eval_network(refl_net(false), cache, av, cv, nv, enlarge);
    return fac_eq(lhs, rhs);
}

std::vector<long> tetra_conserved(RepBasis basis, bool out_side,
                                  const std::array<long, 6>& x) {
    static const ConservedFunctionals fu =
        conserved_functionals(tetra_net(RepBasis::U, true));
    static const ConservedFunctionals fp =
        conserved_functionals(tetra_net(RepBasis::P, true));
    const ConservedFunctionals& f = (basis == RepBasis::U) ? fu : fp;
    return apply_functionals(out_side ? f.fa : f.fc, x.data(), 6);
}

std::vector<long> reflection_conserved(bool out_side,
                                       const std::array<long, 9>& x) {
    static const ConservedFunctionals fs =
        conserved_functionals(refl_net(true));
    return apply_functionals(out_side ? fs.fa : fs.fc, x.data(), 9);
}

namespace {

/// Enumerates {-radius..radius}^n tuples; returns false when done.
bool next_tuple(std::vector<long>& t, int radius) {
    for (size_t i = 0; i < t.size(); ++i) {
        if (t[i] < radius) {
            ++t[i];
            return true;
        }
        t[i] = -radius;
    }
    return false;
}

}  // namespace

SweepReport sweep_tetra_rep_window(RepBasis basis, int radius,
                                   int random_n_samples, unsigned seed,
                                   int jobs) {
    (void)jobs;  // window is small; kept for interface symmetry
    SweepReport rep;
    const Network& L = tetra_net(basis, true);
    const Network& R = tetra_net(basis, false);
    const auto fs = conserved_functionals(L);
    ElemCache cache;
    // Bucket c-tuples by their in-side conserved values.
    std::map<std::vector<long>, std::vector<std::vector<long>>> buckets;
    std::vector<long> t(6, -radius);
    do {
        buckets[apply_functionals(fs.fc, t.data(), 6)].push_back(t);
    } while (next_tuple(t, radius));
    std::vector<long> zeros(6, 0);
    std::vector<std::vector<long>> consistent_a;
    t.assign(6, -radius);
    do {
        auto key = apply_functionals(fs.fa, t.data(), 6);
        auto it = buckets.find(key);
        if (it == buckets.end()) continue;
        consistent_a.push_back(t);
        for (const std::vector<long>& c : it->second) {
            FacQ lhs = eval_network(L, cache, t, c, zeros, 0);
            FacQ rhs = eval_network(R, cache, t, c, zeros, 0);
            ++rep.pairs_checked;
            if (!fac_eq(lhs, rhs)) {
                rep.ok = false;
                rep.counterexample = tuple_str(t.data(), 6, c.data(), 6);
                return rep;
            }
        }
    } while (next_tuple(t, radius));
    // Random spectral parameters on random consistent pairs.
    std::mt19937 rng(seed);
    std::uniform_int_distribution<int> dn(-1, 1);
    std::uniform_int_distribution<size_t> da(0, consistent_a.size() - 1);
    for (int s = 0; s < random_n_samples; ++s) {
        const std::vector<long>& a = consistent_a[da(rng)];
        auto key = apply_functionals(fs.fa, a.data(), 6);
        const auto& cs = buckets.at(key);
        std::uniform_int_distribution<size_t> dc(0, cs.size() - 1);
        const std::vector<long>& c = cs[dc(rng)];
        std::vector<long> ns(6);
        for (auto& v : ns) v = dn(rng);
        FacQ lhs = eval_network(L, cache, a, c, ns, 0);
        FacQ rhs = eval_network(R, cache, a, c, ns, 0);
        ++rep.pairs_checked;
        if (!fac_eq(lhs, rhs)) {
            rep.ok = false;
            rep.counterexample = tuple_str(a.data(), 6, c.data(), 6);
            return rep;
        }
    }
    return rep;
}

SweepReport sweep_reflection_rep_window(int radius, int jobs) {
    SweepReport rep;
    const Network& L = refl_net(true);
    const Network& R = refl_net(false);
    const auto fs = conserved_functionals(L);
    // Bucket the window by conserved values; only matching (a, c) pairs can
    // be nonzero, and non-matching pairs vanish on both sides by the shared
    // conservation rows.
    std::map<std::vector<long>, std::vector<std::vector<long>>> cbuckets;
    std::vector<long> t(9, -radius);
    do {
        cbuckets[apply_functionals(fs.fc, t.data(), 9)].push_back(t);
    } while (next_tuple(t, radius));
    std::vector<std::vector<long>> all_a;
    t.assign(9, -radius);
    do {
        all_a.push_back(t);
    } while (next_tuple(t, radius));
    std::vector<std::pair<const std::vector<long>*,
                          const std::vector<std::vector<long>>*>> work;
    unsigned long long total_pairs = 0;
    for (const std::vector<long>& a : all_a) {
        auto it = cbuckets.find(apply_functionals(fs.fa, a.data(), 9));
        if (it == cbuckets.end()) continue;
        work.push_back({&a, &it->second});
        total_pairs += it->second.size();
    }
    unsigned long long enlarge_stride = std::max<unsigned long long>(
        1, total_pairs / 20);
    if (jobs < 1) jobs = 1;
    std::atomic<size_t> next{0};
    std::atomic<bool> ok{true};
    std::mutex mu;
    std::vector<unsigned long long> counts(static_cast<size_t>(jobs), 0);
    auto worker = [&](int id) {
        ElemCache cache;
        std::vector<long> nv;
        unsigned long long done = 0;
        while (ok.load(std::memory_order_relaxed)) {
            size_t i = next.fetch_add(1);
            if (i >= work.size()) break;
            const std::vector<long>& a = *work[i].first;
            for (const std::vector<long>& c : *work[i].second) {
                FacQ lhs = eval_network(L, cache, a, c, nv, 0);
                FacQ rhs = eval_network(R, cache, a, c, nv, 0);
                ++done;
                bool good = fac_eq(lhs, rhs);
                if (good && (done % enlarge_stride) == 0) {
                    // Range-correctness assertion: widening every summation
                    // range must not change either side.
                    good = fac_eq(eval_network(L, cache, a, c, nv, 2), lhs) &&
                           fac_eq(eval_network(R, cache, a, c, nv, 2), rhs);
                }
                if (!good) {
                    std::lock_guard<std::mutex> g(mu);
                    ok = false;
                    rep.counterexample =
                        tuple_str(a.data(), 9, c.data(), 9);
                    return;
                }
            }
        }
        counts[static_cast<size_t>(id)] = done;
    };
    std::vector<std::thread> pool;
    for (int j = 0; j < jobs; ++j) pool.emplace_back(worker, j);
    for (auto& th : pool) th.join();
    for (auto c : counts) rep.pairs_checked += c;
    rep.ok = ok.load();
    return rep;
}

}  // namespace qt
