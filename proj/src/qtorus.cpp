#include "qt/qtorus.hpp"

#include "qt/qseries.hpp"

#include <algorithm>
#include <sstream>

namespace qt {

long TorusContext::pair2(const LVec& a, const LVec& b) const {
    long r = 0;
    for (int i = 0; i < seed.n; ++i) {
        if (a[static_cast<size_t>(i)] == 0) continue;
        for (int j = 0; j < seed.n; ++j) {
            if (b[static_cast<size_t>(j)] == 0) continue;
            r += a[static_cast<size_t>(i)] * seed.B2hat(i, j) * b[static_cast<size_t>(j)];
        }
    }
    return r;  // = 2<a,b> since B2hat = 2*bhat
}

long TorusContext::pairing(const LVec& a, const LVec& b) const {
    long p2 = pair2(a, b);
    if (p2 % 2 != 0) throw std::logic_error("pairing: half-integer <a,b>");
    return p2 / 2;
}

LVec unit_vec(int n, int i) {
    LVec v(static_cast<size_t>(n), 0);
    v[static_cast<size_t>(i)] = 1;
    return v;
}

LVec vec_add(const LVec& a, const LVec& b) {
    LVec r = a;
    for (size_t i = 0; i < r.size(); ++i) r[i] += b[i];
    return r;
}

LVec vec_neg(const LVec& a) {
    LVec r = a;
    for (long& v : r) v = -v;
    return r;
}

long vec_total(const LVec& a) {
    long t = 0;
    for (long v : a) t += v;
    return t;
}

bool vec_is_zero(const LVec& a) {
    return std::all_of(a.begin(), a.end(), [](long v) { return v == 0; });
}

bool in_positive_cone(const LVec& a) {
    return std::all_of(a.begin(), a.end(), [](long v) { return v >= 0; });
}

void TorusElem::add_term(const LVec& alpha, const RatQ& c) {
    if (c.is_zero()) return;
    auto it = terms.find(alpha);
    if (it == terms.end()) {
        terms.emplace(alpha, c);
        return;
    }
    it->second += c;
    if (it->second.is_zero()) terms.erase(it);
}

TorusElem te_monomial(long qpow, const LVec& alpha) {
    TorusElem e;
    e.add_term(alpha, RatQ::q_power(qpow));
    return e;
}

TorusElem te_one(int n) { return te_monomial(0, LVec(static_cast<size_t>(n), 0)); }

TorusElem te_add(const TorusElem& a, const TorusElem& b) {
    TorusElem r = a;
    for (const auto& [alpha, c] : b.terms) r.add_term(alpha, c);
    return r;
}

TorusElem te_scale(const TorusElem& a, const RatQ& c) {
    TorusElem r;
    if (c.is_zero()) return r;
    for (const auto& [alpha, v] : a.terms) r.terms.emplace(alpha, v * c);
    return r;
}

TorusElem te_mul(const TorusContext& ctx, const TorusElem& a, const TorusElem& b) {
    TorusElem r;
    for (const auto& [ga, ca] : a.terms)
        for (const auto& [gb, cb] : b.terms) {
            RatQ c = ca * cb;
            long p = ctx.pairing(ga, gb);
            r.add_term(vec_add(ga, gb), c.shifted(p));
        }
    return r;
}

TorusElem te_conj(const TorusContext& ctx, const TorusElem& a, const LVec& beta) {
    TorusElem r;
    for (const auto& [gamma, c] : a.terms)
        r.terms.emplace(gamma, c.shifted(ctx.pair2(gamma, beta)));
    return r;
}

TorusElem te_truncate(const TorusElem& a, int N) {
    TorusElem r;
    for (const auto& [gamma, c] : a.terms) {
        if (!in_positive_cone(gamma))
            throw std::logic_error("te_truncate: exponent outside the cone");
        if (vec_total(gamma) <= N) r.terms.emplace(gamma, c);
    }
    return r;
}

std::string te_to_string(const TorusElem& a) {
    std::ostringstream os;
    bool first = true;
    for (const auto& [gamma, c] : a.terms) {
        if (!first) os << " + ";
        first = false;
        os << "(" << c.to_string() << ")*Y^(";
        for (size_t i = 0; i < gamma.size(); ++i) os << (i ? "," : "") << gamma[i];
        os << ")";
    }
    if (first) os << "0";
    return os.str();
}

ConeSeries cs_one(int n, int N) {
    return ConeSeries{0, LVec(static_cast<size_t>(n), 0), te_one(n), N};
}

ConeSeries cs_monomial(long qpow, const LVec& alpha, int N) {
    return ConeSeries{qpow, alpha, te_one(static_cast<int>(alpha.size())), N};
}

TorusElem cs_expand(const TorusContext& ctx, const ConeSeries& a) {
    return te_mul(ctx, te_monomial(a.qpow, a.alpha), a.tail);
}

namespace {

bool is_pure_q_power(const RatQ& c, long& pow) {
    if (c.is_zero()) return false;
    if (!(c.den() == LaurentQ::one())) return false;
    const LaurentQ& n = c.num();
    if (n.terms().size() != 1) return false;
    auto [e, v] = *n.terms().begin();
    if (!(v == Rat(1))) return false;
    pow = e;
    return true;
}

}  // namespace

ConeSeries cs_normalize(const TorusContext& ctx, const TorusElem& x, int N) {
    if (x.is_zero()) throw std::logic_error("cs_normalize: zero element");
    size_t n = x.terms.begin()->first.size();
    LVec m(n, 0);
    bool first = true;
    for (const auto& [gamma, c] : x.terms) {
        (void)c;
        if (first) {
            m = gamma;
            first = false;
        } else {
            for (size_t i = 0; i < n; ++i) m[i] = std::min(m[i], gamma[i]);
        }
    }
    auto it = x.terms.find(m);
    if (it == x.terms.end())
        throw std::logic_error("cs_normalize: no minimal monomial (mixed cone)");
    long a = 0;
    if (!is_pure_q_power(it->second, a))
        throw std::logic_error("cs_normalize: leading coefficient is not a q-power");
    TorusElem tail = te_mul(ctx, te_monomial(-a, vec_neg(m)), x);
    return ConeSeries{a, m, te_truncate(tail, N), N};
}

ConeSeries cs_mul(const TorusContext& ctx, const ConeSeries& a, const ConeSeries& b) {
    int N = std::min(a.N, b.N);
    TorusElem s = te_truncate(te_mul(ctx, te_conj(ctx, a.tail, b.alpha), b.tail), N);
    return ConeSeries{a.qpow + b.qpow + ctx.pairing(a.alpha, b.alpha),
                      vec_add(a.alpha, b.alpha), std::move(s), N};
}

ConeSeries cs_inverse(const TorusContext& ctx, const ConeSeries& a) {
    // tail = 1 + E with E of total degree >= 1; invert by Neumann iteration
    TorusElem one = te_one(static_cast<int>(a.alpha.size()));
    TorusElem e = te_add(a.tail, te_scale(one, RatQ(-1)));
    TorusElem inv = one;
    for (int k = 0; k < a.N; ++k)
        inv = te_add(one, te_scale(te_truncate(te_mul(ctx, e, inv), a.N), RatQ(-1)));
    return ConeSeries{-a.qpow, vec_neg(a.alpha), te_conj(ctx, inv, vec_neg(a.alpha)),
                      a.N};
}

ConeSeries cs_pow(const TorusContext& ctx, const ConeSeries& a, long m) {
    ConeSeries base = m >= 0 ? a : cs_inverse(ctx, a);
    ConeSeries r = cs_one(static_cast<int>(a.alpha.size()), a.N);
    for (long i = 0; i < std::abs(m); ++i) r = cs_mul(ctx, r, base);
    return r;
}

ConeSeries cs_one_plus(const TorusContext& ctx, long w, const ConeSeries& v) {
    TorusElem x = te_add(te_one(static_cast<int>(v.alpha.size())),
                         te_scale(cs_expand(ctx, v), RatQ::q_power(w)));
    return cs_normalize(ctx, x, v.N);
}

ConeSeries cs_retruncate(const ConeSeries& a, int N) {
    return ConeSeries{a.qpow, a.alpha, te_truncate(a.tail, N), N};
}

bool cs_equal(const ConeSeries& a, const ConeSeries& b) {
    return a.qpow == b.qpow && a.alpha == b.alpha && a.tail == b.tail;
}

ConeSeries psi_truncated(const TorusContext& ctx, const LVec& alpha,
                         long base_exponent, bool inverse, int N) {
    if (!in_positive_cone(alpha) || vec_is_zero(alpha))
        throw std::invalid_argument("psi_truncated: argument outside the positive cone");
    long deg = vec_total(alpha);
    ConeSeries r = cs_one(ctx.n(), N);
    LVec cur(alpha.size(), 0);
    for (long k = 1; k * deg <= N; ++k) {
        cur = vec_add(cur, alpha);
        r.tail.add_term(cur, psi_series_coeff(k, inverse, base_exponent));
    }
    return r;
}

LatticeMap lm_identity(int n) {
    LatticeMap m{n, IMat(static_cast<size_t>(n), IVec(static_cast<size_t>(n), 0))};
    for (int i = 0; i < n; ++i) m.cols[static_cast<size_t>(i)][static_cast<size_t>(i)] = 1;
    return m;
}

LVec lm_apply(const LatticeMap& m, const LVec& a) {
    LVec r(static_cast<size_t>(m.n), 0);
    for (int i = 0; i < m.n; ++i) {
        long c = a[static_cast<size_t>(i)];
        if (c == 0) continue;
        for (int j = 0; j < m.n; ++j)
            r[static_cast<size_t>(j)] += c * m.cols[static_cast<size_t>(i)][static_cast<size_t>(j)];
    }
    return r;
}

LatticeMap lm_compose(const LatticeMap& a, const LatticeMap& b) {
    LatticeMap r{a.n, IMat()};
    r.cols.reserve(static_cast<size_t>(a.n));
    for (int i = 0; i < a.n; ++i) r.cols.push_back(lm_apply(a, b.cols[static_cast<size_t>(i)]));
    return r;
}

LatticeMap lm_from_permutation(const std::vector<int>& perm) {
    int n = static_cast<int>(perm.size());
    std::vector<int> inv(perm.size());
    for (int i = 0; i < n; ++i) inv[static_cast<size_t>(perm[static_cast<size_t>(i)])] = i;
    LatticeMap m{n, IMat()};
    for (int j = 0; j < n; ++j) m.cols.push_back(unit_vec(n, inv[static_cast<size_t>(j)]));
    return m;
}

bool lm_equal(const LatticeMap& a, const LatticeMap& b) {
    return a.n == b.n && a.cols == b.cols;
}

LatticeMap tau_map(const Seed& before, int k, int eps) {
    if (!before.is_mutable(k)) throw std::invalid_argument("tau_map: frozen vertex");
    int n = before.n;
    LatticeMap m{n, IMat()};
    for (int i = 0; i < n; ++i) {
        if (i == k) {
            m.cols.push_back(vec_neg(unit_vec(n, k)));
            continue;
        }
        long b2ik = before.B2[static_cast<size_t>(i)][static_cast<size_t>(k)];
        if (b2ik % 2 != 0) throw std::logic_error("tau_map: non-integer b_ik");
        long plus = std::max(0L, eps * (b2ik / 2));
        LVec col = unit_vec(n, i);
        col[static_cast<size_t>(k)] += plus;
        m.cols.push_back(std::move(col));
    }
    // algebra-morphism check: the map must intertwine the pairings
    TorusContext src(mutate_seed(before, k)), dst(before);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (dst.pair2(m.cols[static_cast<size_t>(i)], m.cols[static_cast<size_t>(j)]) !=
                src.pair2(unit_vec(n, i), unit_vec(n, j)))
                throw std::logic_error("tau_map: pairing not preserved");
    return m;
}

bool pentagon_check(const TorusContext& ctx, const LVec& alphaU, const LVec& alphaW,
                    int N) {
    if (!in_positive_cone(alphaU) || !in_positive_cone(alphaW))
        throw std::invalid_argument("pentagon_check: arguments must be in the cone");
    if (ctx.pair2(alphaU, alphaW) != 2)
        throw std::invalid_argument("pentagon hypothesis violated");
    ConeSeries pu = psi_truncated(ctx, alphaU, 1, false, N);
    ConeSeries pw = psi_truncated(ctx, alphaW, 1, false, N);
    ConeSeries puw = psi_truncated(ctx, vec_add(alphaU, alphaW), 1, false, N);
    ConeSeries lhs = cs_mul(ctx, pu, pw);
    ConeSeries rhs = cs_mul(ctx, cs_mul(ctx, pw, puw), pu);
    return cs_equal(lhs, rhs);
}

ConeSeries ad_psi(const TorusContext& ctx, const ConeSeries& on, const LVec& arg,
                  long base_exponent, int sign, int N) {
    if (!in_positive_cone(arg) || vec_is_zero(arg))
        throw std::invalid_argument("ad_psi: argument outside the positive cone");
    if (sign != 1 && sign != -1) throw std::invalid_argument("ad_psi: bad sign");
    // Ad(Psi_{q_b}(x)^sign)(Y^g) = Y^g prod_{j=1}^{|m|} (1 + q_b^{-s(2j-1)} x)^{-s*sign}
    // with m = <g, arg>/base and s = sgn(m).
    std::map<long, TorusElem> cache;  // m -> expanded product factor
    auto factor_for = [&](long m) -> const TorusElem& {
        auto it = cache.find(m);
        if (it != cache.end()) return it->second;
        ConeSeries f = cs_one(ctx.n(), N);
        long s = m > 0 ? 1 : -1;
        for (long j = 1; j <= std::labs(m); ++j) {
            ConeSeries g = cs_one(ctx.n(), N);
            g.tail.add_term(arg, RatQ::q_power(-s * (2 * j - 1) * base_exponent));
            if (-s * sign == 1)
                f = cs_mul(ctx, f, g);
            else
                f = cs_mul(ctx, f, cs_inverse(ctx, g));
        }
        return cache.emplace(m, cs_expand(ctx, f)).first->second;
    };
    TorusElem x = cs_expand(ctx, on);
    TorusElem acc;
    for (const auto& [gamma, c] : x.terms) {
        long num = ctx.pairing(gamma, arg);
        if (num % base_exponent != 0)
            throw std::logic_error("ad_psi: non-integer commutation exponent");
        long m = num / base_exponent;
        if (m == 0) {
            acc.add_term(gamma, c);
            continue;
        }
        TorusElem part = te_scale(te_mul(ctx, te_monomial(0, gamma), factor_for(m)), c);
        acc = te_add(acc, part);
    }
    return cs_normalize(ctx, acc, N);
}

QuantumYState QuantumYState::initial(const Seed& s, int N) {
    QuantumYState st;
    st.current = s;
    st.N = N;
    for (int i = 0; i < s.n; ++i) st.Y.push_back(cs_monomial(0, unit_vec(s.n, i), N));
    return st;
}

QuantumYState mutate_quantum_y(const TorusContext& ctx, const QuantumYState& st,
                               int k) {
    if (!st.current.is_mutable(k)) throw std::invalid_argument("mutate_quantum_y: frozen vertex");
    QuantumYState r = st;
    long dk = st.current.d[static_cast<size_t>(k)];
    ConeSeries yk_inv = cs_inverse(ctx, st.Y[static_cast<size_t>(k)]);
    for (int i = 0; i < st.current.n; ++i) {
        if (i == k) {
            r.Y[static_cast<size_t>(i)] = yk_inv;
            continue;
        }
        long b2ik = st.current.B2[static_cast<size_t>(i)][static_cast<size_t>(k)];
        if (b2ik % 2 != 0) throw std::logic_error("mutate_quantum_y: non-integer b_ik");
        long bik = b2ik / 2;
        if (bik == 0) continue;
        long s = bik > 0 ? 1 : -1;
        const ConeSeries& w = (s > 0) ? yk_inv : st.Y[static_cast<size_t>(k)];
        ConeSeries acc = st.Y[static_cast<size_t>(i)];
        for (long j = 1; j <= std::labs(bik); ++j) {
            ConeSeries f = cs_one_plus(ctx, dk * (2 * j - 1), w);
            acc = cs_mul(ctx, acc, s > 0 ? cs_inverse(ctx, f) : f);
        }
        r.Y[static_cast<size_t>(i)] = std::move(acc);
    }
    r.current = mutate_seed(st.current, k);
    return r;
}

bool verify_ad_tau_decomposition(const Seed& start, const std::vector<int>& seq,
                                 const std::vector<int>& signs, int N) {
    if (seq.size() != signs.size())
        throw std::invalid_argument("verify_ad_tau_decomposition: size mismatch");
    TorusContext ctx(start);
    QuantumYState st = QuantumYState::initial(start, N);
    Seed cur = start;
    LatticeMap total = lm_identity(start.n);
    std::vector<LVec> betas;
    for (size_t t = 0; t < seq.size(); ++t) {
        betas.push_back(lm_apply(total, unit_vec(start.n, seq[t])));
        total = lm_compose(total, tau_map(cur, seq[t], signs[t]));
        cur = mutate_seed(cur, seq[t]);
        st = mutate_quantum_y(ctx, st, seq[t]);
    }
    for (int i = 0; i < start.n; ++i) {
        ConeSeries x = cs_monomial(0, lm_apply(total, unit_vec(start.n, i)), N);
        for (size_t t = seq.size(); t-- > 0;) {
            LVec arg = signs[t] > 0 ? betas[t] : vec_neg(betas[t]);
            x = ad_psi(ctx, x, arg, start.d[static_cast<size_t>(seq[t])], signs[t], N);
        }
        if (!cs_equal(x, st.Y[static_cast<size_t>(i)])) return false;
    }
    return true;
}

bool verify_dilog_identity(const Seed& start, const std::vector<PsiFactor>& lhs,
                           const std::vector<PsiFactor>& rhs, int N) {
    TorusContext ctx(start);
    auto product = [&](const std::vector<PsiFactor>& fs) {
        ConeSeries r = cs_one(start.n, N);
        for (const PsiFactor& f : fs)
            r = cs_mul(ctx, r, psi_truncated(ctx, f.alpha, f.base_exponent, f.inverse, N));
        return r;
    };
    return cs_equal(product(lhs), product(rhs));
}

namespace {

struct TauComposite {
    LatticeMap map;
    Seed final_seed;
};

TauComposite compose_taus(const Seed& start, const std::vector<TauSpec>& taus,
                          const std::vector<int>& perm) {
    LatticeMap total = lm_identity(start.n);
    Seed cur = start;
    for (const TauSpec& t : taus) {
        total = lm_compose(total, tau_map(cur, t.k, t.eps));
        cur = mutate_seed(cur, t.k);
    }
    total = lm_compose(total, lm_from_permutation(perm));
    return TauComposite{std::move(total), apply_vertex_permutation(cur, perm)};
}

}  // namespace

bool verify_tau_identity(const Seed& start, const std::vector<TauSpec>& lhs_taus,
                         const std::vector<int>& lhs_perm,
                         const std::vector<TauSpec>& rhs_taus,
                         const std::vector<int>& rhs_perm) {
    TauComposite a = compose_taus(start, lhs_taus, lhs_perm);
    TauComposite b = compose_taus(start, rhs_taus, rhs_perm);
    return lm_equal(a.map, b.map) && a.final_seed == b.final_seed;
}

}  // namespace qt
