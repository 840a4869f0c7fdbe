/**
 * @file test_qtorus.cpp
 * @brief Unit tests for the quantum torus layer: basis arithmetic, cone
 *        series, truncated dilogarithms, tau maps, adjoint actions, quantum
 *        y-mutation, and the dilogarithm/tau identity checks.
 */
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "qt/qtorus.hpp"
#include "qt/qseries.hpp"
#include "qt/tropical.hpp"

using namespace qt;

namespace {

LVec ev(int n, std::initializer_list<std::pair<int, long>> entries) {
    LVec v(static_cast<size_t>(n), 0);
    for (auto& [i, c] : entries) v[static_cast<size_t>(i)] += c;
    return v;
}

}  // namespace

TEST_CASE("generator relation Y_i Y_j = q^{2 bhat_ij} Y_j Y_i") {
    for (QuiverName name : {QuiverName::J121, QuiverName::J1212, QuiverName::J123123123}) {
        TorusContext ctx(builtin_quiver(name));
        int n = ctx.n();
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) {
                long b2hat = ctx.seed.B2hat(i, j);
                // the commutation exponent is 2<e_i,e_j> = 2 bhat_ij always
                CHECK(ctx.pair2(unit_vec(n, i), unit_vec(n, j)) == b2hat);
                if (b2hat % 2 != 0) continue;  // frozen pair: <e_i,e_j> half-integral
                TorusElem lhs = te_mul(ctx, te_monomial(0, unit_vec(n, i)),
                                       te_monomial(0, unit_vec(n, j)));
                TorusElem rhs = te_mul(ctx, te_monomial(0, unit_vec(n, j)),
                                       te_monomial(0, unit_vec(n, i)));
                rhs = te_scale(rhs, RatQ::q_power(b2hat));  // q^{2 bhat_ij}
                CHECK(lhs == rhs);
            }
    }
}

TEST_CASE("torus product is associative") {
    TorusContext ctx(builtin_quiver(QuiverName::J1212));
    int n = 6;
    TorusElem a = te_add(te_monomial(1, ev(n, {{0, 1}, {4, -2}})), te_monomial(0, ev(n, {{1, 3}})));
    TorusElem b = te_add(te_monomial(-2, ev(n, {{2, 1}, {3, 1}})), te_one(n));
    TorusElem c = te_monomial(3, ev(n, {{5, -1}, {1, 1}}));
    CHECK(te_mul(ctx, te_mul(ctx, a, b), c) == te_mul(ctx, a, te_mul(ctx, b, c)));
}

TEST_CASE("cone series inverse and normalization") {
    TorusContext ctx(builtin_quiver(QuiverName::J1212));
    int n = 6, N = 8;
    ConeSeries y2 = cs_monomial(0, unit_vec(n, 1), N);
    ConeSeries f = cs_one_plus(ctx, 2, y2);             // 1 + q^2 Y_2
    CHECK(cs_equal(cs_mul(ctx, f, cs_inverse(ctx, f)), cs_one(n, N)));
    CHECK(cs_equal(cs_mul(ctx, cs_inverse(ctx, f), f), cs_one(n, N)));
    // 1 + q^2 Y_2^{-1} renormalizes to q^2 Y_2^{-1} (1 + q^{-2} Y_2)
    ConeSeries g = cs_one_plus(ctx, 2, cs_inverse(ctx, y2));
    CHECK(g.qpow == 2);
    CHECK(g.alpha == vec_neg(unit_vec(n, 1)));
    TorusElem expect = te_one(n);
    expect.add_term(unit_vec(n, 1), RatQ::q_power(-2));
    CHECK(g.tail == expect);
    // mixed-cone sums cannot be normalized
    TorusElem bad = te_add(te_monomial(0, ev(n, {{0, 1}, {1, -1}})), te_one(n));
    CHECK_THROWS(cs_normalize(ctx, bad, N));
}

TEST_CASE("truncated dilogarithm: coefficients, inverse pair, recursion") {
    TorusContext ctx(builtin_quiver(QuiverName::J121));
    int n = 5, N = 6;
    LVec e4 = unit_vec(n, 3);
    ConeSeries psi = psi_truncated(ctx, e4, 1, false, 2);
    TorusElem expect = te_one(n);
    expect.add_term(e4, RatQ(LaurentQ::q_power(1), LaurentQ::one()) *
                            -inv_qfactorial(1, 2));
    expect.add_term(ev(n, {{3, 2}}), inv_qfactorial(2, 2).shifted(2));
    CHECK(psi.tail == expect);

    ConeSeries inv = psi_truncated(ctx, e4, 1, true, N);
    CHECK(cs_equal(cs_mul(ctx, psi_truncated(ctx, e4, 1, false, N), inv), cs_one(n, N)));
    // base q^2 inverse pair as well
    ConeSeries p2 = psi_truncated(ctx, e4, 2, false, N);
    ConeSeries p2i = psi_truncated(ctx, e4, 2, true, N);
    CHECK(cs_equal(cs_mul(ctx, p2, p2i), cs_one(n, N)));

    // Psi(q^2 U) Psi(U)^{-1} = 1 + qU with U = Y^{e4}
    ConeSeries shifted = cs_one(n, N);
    for (long k = 1; k <= N; ++k)
        shifted.tail.add_term(ev(n, {{3, k}}),
                              psi_series_coeff(k, false, 1).shifted(2 * k));
    ConeSeries prod = cs_mul(ctx, shifted, inv);
    ConeSeries rhs = cs_one_plus(ctx, 1, cs_monomial(0, e4, N));
    CHECK(cs_equal(prod, rhs));

    CHECK_THROWS(psi_truncated(ctx, vec_neg(e4), 1, false, N));
}

TEST_CASE("pentagon identity") {
    TorusContext ctx(builtin_quiver(QuiverName::J121));
    int n = 5;
    LVec e2 = unit_vec(n, 1), e4 = unit_vec(n, 3);
    REQUIRE(ctx.pair2(e2, e4) == 2);  // U W = q^2 W U
    CHECK(pentagon_check(ctx, e2, e4, 8));
    CHECK(pentagon_check(ctx, e2, e4, 0));
    CHECK_THROWS(pentagon_check(ctx, e4, e2, 4));  // pairing -2
}

TEST_CASE("tau maps reproduce the printed monomial images") {
    Seed j121 = builtin_quiver(QuiverName::J121);
    LatticeMap t4 = tau_map(j121, 3, +1);
    // Y'_2 -> q^{-1} Y_2 Y_4 = Y^{e_2+e_4}; Y'_4 -> Y_4^{-1}
    CHECK(t4.cols[1] == ev(5, {{1, 1}, {3, 1}}));
    CHECK(t4.cols[3] == ev(5, {{3, -1}}));
    CHECK(t4.cols[0] == ev(5, {{0, 1}}));
    CHECK_THROWS(tau_map(j121, 0, +1));  // frozen

    // composite tau_{2,+} tau_{5,+} tau_{2,-} on J_1212:
    // (Y_1, Y_2, Y_3, q^{-1}Y_4Y_5, q^2 Y_5^{-1}Y_2^{-1}, q^{-3}Y_6Y_2Y_5)
    Seed s = builtin_quiver(QuiverName::J1212);
    LatticeMap m = tau_map(s, 1, +1);
    Seed s2 = mutate_seed(s, 1);
    // intermediate: tau_{2,+}(Y_i(2)) = (q^{-2}Y_1Y_2, Y_2^{-1}, Y_3, Y_4, Y_5, q^{-2}Y_6Y_2)
    CHECK(m.cols[0] == ev(6, {{0, 1}, {1, 1}}));
    CHECK(m.cols[5] == ev(6, {{5, 1}, {1, 1}}));
    m = lm_compose(m, tau_map(s2, 4, +1));
    Seed s3 = mutate_seed(s2, 4);
    m = lm_compose(m, tau_map(s3, 1, -1));
    CHECK(m.cols[0] == ev(6, {{0, 1}}));
    CHECK(m.cols[1] == ev(6, {{1, 1}}));
    CHECK(m.cols[2] == ev(6, {{2, 1}}));
    CHECK(m.cols[3] == ev(6, {{3, 1}, {4, 1}}));
    CHECK(m.cols[4] == ev(6, {{4, -1}, {1, -1}}));
    CHECK(m.cols[5] == ev(6, {{5, 1}, {1, 1}, {4, 1}}));
    // q-powers of the printed images are exactly the normal-ordering factors:
    // Y^{e_4+e_5} = q^{-1} Y_4 Y_5 and Y^{-e_5-e_2} = q^2 Y_5^{-1} Y_2^{-1}
    TorusContext ctx(s);
    TorusElem y4y5 = te_mul(ctx, te_monomial(0, ev(6, {{3, 1}})), te_monomial(0, ev(6, {{4, 1}})));
    CHECK(te_scale(y4y5, RatQ::q_power(-1)) == te_monomial(0, ev(6, {{3, 1}, {4, 1}})));
    TorusElem y5iy2i = te_mul(ctx, te_monomial(0, ev(6, {{4, -1}})), te_monomial(0, ev(6, {{1, -1}})));
    CHECK(te_scale(y5iy2i, RatQ::q_power(2)) == te_monomial(0, ev(6, {{4, -1}, {1, -1}})));
}

TEST_CASE("adjoint dilogarithm action: closed form vs truncated conjugation") {
    TorusContext ctx(builtin_quiver(QuiverName::J1212));
    int n = 6, N = 5;
    // Ad(Psi(Y^arg)^sign)(Y^gamma) must equal Psi^sign Y^gamma Psi^{-sign}
    std::vector<LVec> gammas = {ev(n, {{0, 1}}), ev(n, {{3, 1}, {4, 1}}),
                                ev(n, {{4, -1}, {1, -1}}), ev(n, {{5, 1}, {1, 1}, {4, 1}})};
    std::vector<std::pair<LVec, long>> args = {{ev(n, {{1, 1}}), 2},
                                               {ev(n, {{4, 1}}), 1},
                                               {ev(n, {{1, 1}, {4, 1}}), 1}};
    for (const auto& [arg, base] : args)
        for (const LVec& g : gammas)
            for (int sign : {+1, -1}) {
                ConeSeries on = cs_monomial(0, g, N);
                ConeSeries closed = ad_psi(ctx, on, arg, base, sign, N);
                ConeSeries psi = psi_truncated(ctx, arg, base, false, N);
                ConeSeries a = sign > 0 ? psi : cs_inverse(ctx, psi);
                ConeSeries direct = cs_mul(ctx, cs_mul(ctx, a, on), cs_inverse(ctx, a));
                CHECK(cs_equal(closed, direct));
            }
    // m = 0 leaves the operand unchanged
    ConeSeries y3 = cs_monomial(0, ev(n, {{2, 1}}), N);
    CHECK(cs_equal(ad_psi(ctx, y3, ev(n, {{2, 1}}), 2, +1, N), y3));
}

TEST_CASE("quantum y-mutation reproduces the printed variables") {
    Seed s = builtin_quiver(QuiverName::J1212);
    TorusContext ctx(s);
    int n = 6, N = 6;
    auto Y = [&](int i) { return cs_monomial(0, unit_vec(n, i), N); };
    QuantumYState st = QuantumYState::initial(s, N);
    QuantumYState st2 = mutate_quantum_y(ctx, st, 1);

    ConeSeries y2inv = cs_inverse(ctx, Y(1));
    // Y(2) = (Y_1(1+q^2Y_2^{-1})^{-1}, Y_2^{-1}, Y_3(1+q^2Y_2), Y_4,
    //         Y_5(1+q^2Y_2), Y_6(1+q^2Y_2^{-1})^{-1})
    CHECK(cs_equal(st2.Y[0], cs_mul(ctx, Y(0), cs_inverse(ctx, cs_one_plus(ctx, 2, y2inv)))));
    CHECK(cs_equal(st2.Y[1], y2inv));
    CHECK(cs_equal(st2.Y[2], cs_mul(ctx, Y(2), cs_one_plus(ctx, 2, Y(1)))));
    CHECK(cs_equal(st2.Y[3], Y(3)));
    CHECK(cs_equal(st2.Y[4], cs_mul(ctx, Y(4), cs_one_plus(ctx, 2, Y(1)))));
    CHECK(cs_equal(st2.Y[5], cs_mul(ctx, Y(5), cs_inverse(ctx, cs_one_plus(ctx, 2, y2inv)))));

    // involution
    QuantumYState back = mutate_quantum_y(ctx, st2, 1);
    CHECK(back.current == s);
    for (int i = 0; i < n; ++i) CHECK(cs_equal(back.Y[i], st.Y[i]));

    // mu_{2,5,2}: entry 5 of Y(4) is q^2 Y_5^{-1} Y_2^{-1} Lambda with
    // Lambda = 1 + (q+q^3) Y_5 + q^4 Y_5^2 (1 + q^2 Y_2)
    QuantumYState st4 = mutate_quantum_y(ctx, mutate_quantum_y(ctx, st2, 4), 1);
    LaurentQ qq3;
    qq3.add_term(1, Rat(1));
    qq3.add_term(3, Rat(1));
    TorusElem lambda = te_one(n);
    lambda = te_add(lambda, te_scale(te_monomial(0, unit_vec(n, 4)), RatQ(qq3)));
    TorusElem high = te_mul(ctx, te_monomial(4, ev(n, {{4, 2}})),
                            te_add(te_one(n), te_monomial(2, unit_vec(n, 1))));
    lambda = te_add(lambda, high);
    // q^2 Y_5^{-1} Y_2^{-1} = Y^{-e_5-e_2} under the normal-order convention
    TorusElem entry5 = te_mul(ctx, te_monomial(0, ev(n, {{4, -1}, {1, -1}})), lambda);
    CHECK(cs_equal(st4.Y[4], cs_normalize(ctx, entry5, N)));

    // entry 2 of Y(4): (1+q^3Y_5(1+q^2Y_2))^{-1} (1+qY_5(1+q^2Y_2))^{-1} Y_2
    ConeSeries block = cs_mul(ctx, Y(4), cs_one_plus(ctx, 2, Y(1)));  // Y_5(1+q^2Y_2)
    ConeSeries e2 = cs_mul(ctx, cs_mul(ctx, cs_inverse(ctx, cs_one_plus(ctx, 3, block)),
                                       cs_inverse(ctx, cs_one_plus(ctx, 1, block))),
                           Y(1));
    CHECK(cs_equal(st4.Y[1], e2));
}

TEST_CASE("Ad-tau decomposition paths agree") {
    CHECK(verify_ad_tau_decomposition(builtin_quiver(QuiverName::J121), {3}, {+1}, 6));
    CHECK(verify_ad_tau_decomposition(builtin_quiver(QuiverName::J1212), {1, 4, 1},
                                      {+1, +1, -1}, 6));
    CHECK(verify_ad_tau_decomposition(builtin_quiver(QuiverName::J121), {}, {}, 4));
}

TEST_CASE("dilogarithm argument exponents equal the tropical c-vectors") {
    Seed s = builtin_quiver(QuiverName::J123121);
    std::vector<int> seq = {7, 3, 6, 7};
    TropSeed trop = TropSeed::initial(s);
    LatticeMap total = lm_identity(s.n);
    Seed cur = s;
    for (int k : seq) {
        LVec beta = lm_apply(total, unit_vec(s.n, k));
        CHECK(beta == trop.C[static_cast<size_t>(k)]);
        auto [nt, eps] = mutate_tropical(trop, k);
        total = lm_compose(total, tau_map(cur, k, eps));
        cur = mutate_seed(cur, k);
        trop = std::move(nt);
    }
}

TEST_CASE("tetrahedron dilogarithm identity") {
    Seed s = builtin_quiver(QuiverName::J123121);
    int n = 9;
    auto f = [&](std::initializer_list<int> is) {
        PsiFactor p;
        p.alpha = LVec(static_cast<size_t>(n), 0);
        for (int i : is) p.alpha[static_cast<size_t>(i)] += 1;
        return p;
    };
    std::vector<PsiFactor> lhs = {f({7}), f({3}), f({6, 7}), f({6})};
    std::vector<PsiFactor> rhs = {f({6}), f({3, 6}), f({7}), f({3})};
    CHECK(verify_dilog_identity(s, lhs, rhs, 6));
    // degree stability: also true at a higher truncation
    CHECK(verify_dilog_identity(s, lhs, rhs, 8));
    // negative control
    std::vector<PsiFactor> bad = {f({6}), f({3, 6}), f({7}), f({7})};
    CHECK_FALSE(verify_dilog_identity(s, lhs, bad, 6));
    // single factor vs itself
    CHECK(verify_dilog_identity(s, {f({3})}, {f({3})}, 6));
}

TEST_CASE("reflection dilogarithm identity") {
    Seed s = builtin_quiver(QuiverName::J123123123);
    int n = 12;
    auto f = [&](std::initializer_list<int> is, long base, bool inv) {
        PsiFactor p;
        p.alpha = LVec(static_cast<size_t>(n), 0);
        for (int i : is) p.alpha[static_cast<size_t>(i)] += 1;
        p.base_exponent = base;
        p.inverse = inv;
        return p;
    };
    std::vector<PsiFactor> lhs = {
        f({9}, 1, false),
        f({1}, 2, false), f({5, 9}, 1, false), f({1}, 2, true),
        f({1, 5, 6, 9}, 1, false),
        f({10}, 1, false),
        f({2}, 2, false), f({6, 10}, 1, false), f({2}, 2, true),
        f({1}, 2, false), f({5}, 1, false), f({1}, 2, true),
        f({1, 5, 6}, 1, false),
    };
    std::vector<PsiFactor> rhs = {
        f({10}, 1, false),
        f({2}, 2, false), f({6, 10}, 1, false), f({2}, 2, true),
        f({1}, 2, false), f({5}, 1, false), f({1}, 2, true),
        f({1, 5, 6}, 1, false),
        f({9, 10}, 1, false),
        f({2}, 2, false), f({6, 9, 10}, 1, false), f({2}, 2, true),
        f({9}, 1, false),
    };
    CHECK(verify_dilog_identity(s, lhs, rhs, 4));
}

TEST_CASE("tau identities") {
    // tetrahedron: tau_{8,+}tau_{4,+}tau_{7,+}tau_{8,+}sigma_{4,7}
    //            = tau_{7,+}tau_{4,+}tau_{8,+}tau_{7,+}sigma_{4,8}
    Seed s = builtin_quiver(QuiverName::J123121);
    std::vector<TauSpec> lt = {{7, +1}, {3, +1}, {6, +1}, {7, +1}};
    std::vector<TauSpec> rt = {{6, +1}, {3, +1}, {7, +1}, {6, +1}};
    CHECK(verify_tau_identity(s, lt, transposition(9, 3, 6), rt, transposition(9, 3, 7)));
    CHECK_FALSE(verify_tau_identity(s, lt, transposition(9, 3, 7), rt, transposition(9, 3, 6)));
    CHECK(verify_tau_identity(s, {}, identity_perm(9), {}, identity_perm(9)));

    // reflection: signs are the tropical ones, blocks mu_{i,j,i} carry (+,+,-)
    Seed r = builtin_quiver(QuiverName::J123123123);
    auto taus = [&](const std::vector<int>& seq) {
        std::vector<int> signs = sign_sequence(r, seq);
        std::vector<TauSpec> ts;
        for (size_t i = 0; i < seq.size(); ++i) ts.push_back({seq[i], signs[i]});
        return ts;
    };
    std::vector<int> seqA = {9, 1, 5, 1, 6, 10, 2, 5, 2, 1, 9, 1, 10};
    std::vector<int> seqB = {10, 2, 6, 2, 1, 5, 1, 10, 9, 2, 5, 2, 6};
    CHECK(verify_tau_identity(r, taus(seqA), identity_perm(12), taus(seqB),
                              identity_perm(12)));
}
