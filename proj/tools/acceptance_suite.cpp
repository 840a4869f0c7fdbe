/**
 * @file acceptance_suite.cpp
 * @brief Implementation of the desk-scale acceptance criteria.  Every check
 *        is exact except the floating-point dilogarithm residuals, whose
 *        tolerances are pinned here.
 */
#include "acceptance_suite.hpp"

#include "qt/ncqd.hpp"
#include "qt/qseries.hpp"
#include "qt/qtorus.hpp"
#include "qt/quiver.hpp"
#include "qt/qweylrep.hpp"
#include "qt/tropical.hpp"
#include "qt/weylcalc.hpp"

#include <chrono>
#include <iomanip>
#include <ostream>
#include <random>
#include <sstream>

namespace qt::accept {

namespace {

using Clock = std::chrono::steady_clock;

// Mutation sequences of the two periodicity identities (0-based vertices).
const std::vector<int> kTetraSeqA = {7, 3, 6, 7};
const std::vector<int> kTetraSeqB = {6, 3, 7, 6};
const std::vector<int> kReflSeqA = {9, 1, 5, 1, 6, 10, 2, 5, 2, 1, 9, 1, 10};
const std::vector<int> kReflSeqB = {10, 2, 6, 2, 1, 5, 1, 10, 9, 2, 5, 2, 6};

// Pinned ground-truth matrices for the J_1212 seed (doubled entries).
const IMat kB2_J1212 = {
    {0, 2, 0, 2, -4, 0},  {-2, 0, 2, 0, 4, -4}, {0, -2, 0, 0, 0, 2},
    {-1, 0, 0, 0, 2, 0},  {2, -2, 0, -2, 0, 2}, {0, 2, -1, 0, -2, 0},
};
const IMat kB2hat_J1212 = {
    {0, 4, 0, 2, -4, 0},  {-4, 0, 4, 0, 4, -4}, {0, -4, 0, 0, 0, 2},
    {-2, 0, 0, 0, 2, 0},  {4, -4, 0, -2, 0, 2}, {0, 4, -2, 0, -2, 0},
};
const IMat kSigma2_J1212 = {
    {0, 2, 0, 1, -2, 0},  {-2, 0, 2, 0, 2, -2}, {0, -2, 0, 0, 0, 1},
    {-1, 0, 0, 0, 2, 0},  {2, -2, 0, -2, 0, 2}, {0, 2, -1, 0, -2, 0},
};

LVec ev(int n, std::initializer_list<std::pair<int, long>> entries) {
    LVec v(static_cast<size_t>(n), 0);
    for (auto& [i, c] : entries) v[static_cast<size_t>(i)] += c;
    return v;
}

PsiFactor pf(int n, std::initializer_list<int> is, long base, bool inv) {
    PsiFactor p;
    p.alpha = LVec(static_cast<size_t>(n), 0);
    for (int i : is) p.alpha[static_cast<size_t>(i)] += 1;
    p.base_exponent = base;
    p.inverse = inv;
    return p;
}

Rat rand_rat(std::mt19937& rng) {
    long num = static_cast<long>(rng() % 11) - 5;
    long den = 1 + static_cast<long>(rng() % 4);
    Rat r(num, den);
    r.canonicalize();
    return r;
}

bool fail(std::string& detail, const std::string& what) {
    if (detail.empty()) detail = what;
    return false;
}

// --- criterion bodies -------------------------------------------------------

bool crit_quiver_ground_truth(std::string& detail) {
    Seed s = builtin_quiver(QuiverName::J1212);
    if (s.B2 != kB2_J1212) return fail(detail, "exchange matrix mismatch");
    for (int i = 0; i < 6; ++i)
        for (int j = 0; j < 6; ++j)
            if (s.B2hat(i, j) != kB2hat_J1212[i][j])
                return fail(detail, "skew companion matrix mismatch");
    if (weighted_quiver(s).sigma2 != kSigma2_J1212)
        return fail(detail, "weighted quiver matrix mismatch");
    if (s.d != IVec{2, 2, 2, 1, 1, 1}) return fail(detail, "weight mismatch");
    return true;
}

bool crit_tropical(std::string& detail) {
    Seed j1212 = builtin_quiver(QuiverName::J1212);
    if (sign_sequence(j1212, {1, 4, 1}) != std::vector<int>{1, 1, -1})
        return fail(detail, "three-step sign sequence != (+,+,-)");
    Seed tetra = builtin_quiver(QuiverName::J123121);
    const std::vector<int> all_plus(4, 1);
    if (sign_sequence(tetra, kTetraSeqA) != all_plus ||
        sign_sequence(tetra, kTetraSeqB) != all_plus)
        return fail(detail, "four-step sign sequences not all +");
    Seed refl = builtin_quiver(QuiverName::J123123123);
    const std::vector<int> expA = {1, 1, 1, -1, 1, 1, 1, 1, -1, 1, 1, -1, 1};
    const std::vector<int> expB = {1, 1, 1, -1, 1, 1, -1, 1, 1, 1, 1, -1, 1};
    if (sign_sequence(refl, kReflSeqA) != expA ||
        sign_sequence(refl, kReflSeqB) != expB)
        return fail(detail, "thirteen-step sign patterns mismatch");

    std::vector<int> permA = transposition(9, 3, 6);
    std::vector<int> permB = transposition(9, 3, 7);
    if (!verify_tropical_periodicity(tetra, kTetraSeqA, permA, kTetraSeqB,
                                     permB))
        return fail(detail, "tetrahedron tropical periodicity failed");
    auto id12 = identity_perm(12);
    if (!verify_tropical_periodicity(refl, kReflSeqA, id12, kReflSeqB, id12))
        return fail(detail, "reflection tropical periodicity failed");

    TropSeed endT = apply_sequence(TropSeed::initial(tetra), kTetraSeqA, permA);
    if (endT.seed != builtin_quiver(QuiverName::J321323))
        return fail(detail, "tetrahedron final quiver mismatch");
    TropSeed endR = apply_sequence(TropSeed::initial(refl), kReflSeqA, id12);
    std::vector<int> relabel = {0, 1, 2, 3, 4, 6, 10, 7, 8, 5, 9, 11};
    if (apply_vertex_permutation(endR.seed, relabel) !=
        builtin_quiver(QuiverName::J321321321))
        return fail(detail, "reflection final quiver mismatch");
    return true;
}

bool crit_quantum_torus(std::string& detail) {
    const int N = 6;
    // Pentagon identity on the five-vertex seed.
    {
        TorusContext ctx(builtin_quiver(QuiverName::J121));
        if (!pentagon_check(ctx, unit_vec(5, 1), unit_vec(5, 3), N))
            return fail(detail, "pentagon identity failed");
        // Dilogarithm recursion: Psi(q^2 U) Psi(U)^{-1} = 1 + q U.
        LVec e4 = unit_vec(5, 3);
        ConeSeries shifted = cs_one(5, N);
        for (long k = 1; k <= N; ++k)
            shifted.tail.add_term(ev(5, {{3, static_cast<int>(k)}}),
                                  psi_series_coeff(k, false, 1).shifted(2 * k));
        ConeSeries prod =
            cs_mul(ctx, shifted, psi_truncated(ctx, e4, 1, true, N));
        ConeSeries rhs = cs_one_plus(ctx, 1, cs_monomial(0, e4, N));
        if (!cs_equal(prod, rhs))
            return fail(detail, "dilogarithm recursion failed");
    }
    // Four-term dilogarithm identity behind the tetrahedron equation.
    {
        Seed s = builtin_quiver(QuiverName::J123121);
        std::vector<PsiFactor> lhs = {pf(9, {7}, 1, false), pf(9, {3}, 1, false),
                                      pf(9, {6, 7}, 1, false),
                                      pf(9, {6}, 1, false)};
        std::vector<PsiFactor> rhs = {pf(9, {6}, 1, false),
                                      pf(9, {3, 6}, 1, false),
                                      pf(9, {7}, 1, false), pf(9, {3}, 1, false)};
        if (!verify_dilog_identity(s, lhs, rhs, N))
            return fail(detail, "four-term dilogarithm identity failed");
    }
    // Thirteen-factor dilogarithm identity behind the reflection equation.
    {
        Seed s = builtin_quiver(QuiverName::J123123123);
        std::vector<PsiFactor> lhs = {
            pf(12, {9}, 1, false),
            pf(12, {1}, 2, false), pf(12, {5, 9}, 1, false), pf(12, {1}, 2, true),
            pf(12, {1, 5, 6, 9}, 1, false),
            pf(12, {10}, 1, false),
            pf(12, {2}, 2, false), pf(12, {6, 10}, 1, false), pf(12, {2}, 2, true),
            pf(12, {1}, 2, false), pf(12, {5}, 1, false), pf(12, {1}, 2, true),
            pf(12, {1, 5, 6}, 1, false),
        };
        std::vector<PsiFactor> rhs = {
            pf(12, {10}, 1, false),
            pf(12, {2}, 2, false), pf(12, {6, 10}, 1, false), pf(12, {2}, 2, true),
            pf(12, {1}, 2, false), pf(12, {5}, 1, false), pf(12, {1}, 2, true),
            pf(12, {1, 5, 6}, 1, false),
            pf(12, {9, 10}, 1, false),
            pf(12, {2}, 2, false), pf(12, {6, 9, 10}, 1, false), pf(12, {2}, 2, true),
            pf(12, {9}, 1, false),
        };
        if (!verify_dilog_identity(s, lhs, rhs, N))
            return fail(detail, "thirteen-factor dilogarithm identity failed");
    }
    // Monomial-map identities paired with the two dilogarithm identities.
    {
        Seed s = builtin_quiver(QuiverName::J123121);
        std::vector<TauSpec> lt = {{7, +1}, {3, +1}, {6, +1}, {7, +1}};
        std::vector<TauSpec> rt = {{6, +1}, {3, +1}, {7, +1}, {6, +1}};
        if (!verify_tau_identity(s, lt, transposition(9, 3, 6), rt,
                                 transposition(9, 3, 7)))
            return fail(detail, "tetrahedron monomial-map identity failed");
        Seed r = builtin_quiver(QuiverName::J123123123);
        auto taus = [&](const std::vector<int>& seq) {
            std::vector<int> signs = sign_sequence(r, seq);
            std::vector<TauSpec> ts;
            for (size_t i = 0; i < seq.size(); ++i)
                ts.push_back({seq[i], signs[i]});
            return ts;
        };
        if (!verify_tau_identity(r, taus(kReflSeqA), identity_perm(12),
                                 taus(kReflSeqB), identity_perm(12)))
            return fail(detail, "reflection monomial-map identity failed");
    }
    // Adjoint-dilogarithm decomposition of quantum y-mutation.
    if (!verify_ad_tau_decomposition(builtin_quiver(QuiverName::J121), {3},
                                     {+1}, N))
        return fail(detail, "single-step Ad-decomposition failed");
    if (!verify_ad_tau_decomposition(builtin_quiver(QuiverName::J1212),
                                     {1, 4, 1}, {+1, +1, -1}, N))
        return fail(detail, "three-step Ad-decomposition failed");
    // The printed middle factor of the three-step mutation:
    // entry 5 of Y(4) is q^2 Y_5^{-1} Y_2^{-1} Lambda with
    // Lambda = 1 + (q + q^3) Y_5 + q^4 Y_5^2 (1 + q^2 Y_2).
    {
        Seed s = builtin_quiver(QuiverName::J1212);
        TorusContext ctx(s);
        QuantumYState st = QuantumYState::initial(s, N);
        QuantumYState st4 = mutate_quantum_y(
            ctx, mutate_quantum_y(ctx, mutate_quantum_y(ctx, st, 1), 4), 1);
        LaurentQ qq3;
        qq3.add_term(1, Rat(1));
        qq3.add_term(3, Rat(1));
        TorusElem lambda = te_one(6);
        lambda = te_add(lambda,
                        te_scale(te_monomial(0, unit_vec(6, 4)), RatQ(qq3)));
        lambda = te_add(
            lambda, te_mul(ctx, te_monomial(4, ev(6, {{4, 2}})),
                           te_add(te_one(6), te_monomial(2, unit_vec(6, 1)))));
        TorusElem entry5 =
            te_mul(ctx, te_monomial(0, ev(6, {{4, -1}, {1, -1}})), lambda);
        if (!cs_equal(st4.Y[4], cs_normalize(ctx, entry5, N)))
            return fail(detail, "printed middle factor of Y(4) mismatch");
    }
    return true;
}

bool crit_weyl_calculus(std::string& detail) {
    if (!verify_diagram(DiagramCase::R) || !verify_diagram(DiagramCase::K))
        return fail(detail, "commutative square failed");
    if (!verify_pi_tetrahedron(Rat(0)) || !verify_P_tetrahedron(Rat(0)))
        return fail(detail, "operator tetrahedron equation failed at 0");
    if (!verify_pi_reflection(Rat(0), Rat(0), Rat(0)) ||
        !verify_P_reflection(Rat(0), Rat(0), Rat(0)))
        return fail(detail, "operator reflection equation failed at 0");
    std::mt19937 rng(19);
    for (int trial = 0; trial < 25; ++trial) {
        Rat al = rand_rat(rng), be = rand_rat(rng), ga = rand_rat(rng);
        if (!verify_pi_tetrahedron(al) || !verify_P_tetrahedron(al))
            return fail(detail, "operator tetrahedron sweep failed");
        if (!verify_pi_reflection(al, be, ga) ||
            !verify_P_reflection(al, be, ga))
            return fail(detail, "operator reflection sweep failed");
    }
    for (ChainSide side : {ChainSide::L, ChainSide::R})
        for (ChainCase c : {ChainCase::Tetra, ChainCase::Reflection})
            if (!verify_full_conjugation_chain(side, c))
                return fail(detail, "conjugation chain failed");
    return true;
}

bool crit_elements_vs_oracle(std::string& detail) {
    // Three-leg operator: boundary window [-2,2]^6, spectral window {-1,0,1}^3.
    std::array<long, 3> o{}, i{}, n{};
    for (o[0] = -2; o[0] <= 2; ++o[0])
        for (o[1] = -2; o[1] <= 2; ++o[1])
            for (o[2] = -2; o[2] <= 2; ++o[2])
                for (i[0] = -2; i[0] <= 2; ++i[0])
                    for (i[1] = -2; i[1] <= 2; ++i[1])
                        for (i[2] = -2; i[2] <= 2; ++i[2]) {
                            for (n[0] = -1; n[0] <= 1; ++n[0])
                                for (n[1] = -1; n[1] <= 1; ++n[1])
                                    for (n[2] = -1; n[2] <= 1; ++n[2]) {
                                        std::vector<long> ov(o.begin(), o.end()),
                                            iv(i.begin(), i.end()),
                                            nv(n.begin(), n.end());
                                        if (oracle_elem(RepOp::R, RepBasis::U,
                                                        ov, iv, nv) !=
                                            r_elem_u(o, i, n))
                                            return fail(detail,
                                                        "u-basis R mismatch");
                                        if (oracle_elem(RepOp::R, RepBasis::P,
                                                        ov, iv, nv) !=
                                            r_elem_p(o, i, n))
                                            return fail(detail,
                                                        "p-basis R mismatch");
                                    }
                        }
    // Four-leg operator: boundary window [-2,2]^8.
    std::array<long, 4> ko{}, ki{};
    std::vector<long> no_n;
    for (ko[0] = -2; ko[0] <= 2; ++ko[0])
        for (ko[1] = -2; ko[1] <= 2; ++ko[1])
            for (ko[2] = -2; ko[2] <= 2; ++ko[2])
                for (ko[3] = -2; ko[3] <= 2; ++ko[3])
                    for (ki[0] = -2; ki[0] <= 2; ++ki[0])
                        for (ki[1] = -2; ki[1] <= 2; ++ki[1])
                            for (ki[2] = -2; ki[2] <= 2; ++ki[2])
                                for (ki[3] = -2; ki[3] <= 2; ++ki[3]) {
                                    std::vector<long> ov(ko.begin(), ko.end()),
                                        iv(ki.begin(), ki.end());
                                    if (oracle_elem(RepOp::K, RepBasis::U, ov,
                                                    iv, no_n) != k_elem_u(ko, ki))
                                        return fail(detail,
                                                    "u-basis K mismatch");
                                    if (oracle_elem(RepOp::K, RepBasis::P, ov,
                                                    iv, no_n) != k_elem_p(ko, ki))
                                        return fail(detail,
                                                    "p-basis K mismatch");
                                }
    return true;
}

bool crit_tetra_sweep(std::string& detail, int jobs) {
    for (RepBasis basis : {RepBasis::U, RepBasis::P}) {
        SweepReport rep = sweep_tetra_rep_window(basis, 1, 200, 42, jobs);
        if (!rep.ok)
            return fail(detail, "counterexample " + rep.counterexample);
    }
    return true;
}

bool crit_duality(std::string& detail) {
    for (long r = 0; r <= 6; ++r)
        for (long s = 0; s <= 6; ++s)
            for (long t = 0; t <= 6; ++t)
                if (!verify_qbinomial_duality(r, s, t)) {
                    std::ostringstream os;
                    os << "grid failure at (" << r << "," << s << "," << t
                       << ")";
                    return fail(detail, os.str());
                }
    std::mt19937 rng(42);
    std::uniform_int_distribution<long> d(-3, 8);
    for (int k = 0; k < 50; ++k) {
        long r = d(rng), s = d(rng), t = d(rng);
        if (!verify_qbinomial_duality(r, s, t)) {
            std::ostringstream os;
            os << "random failure at (" << r << "," << s << "," << t << ")";
            return fail(detail, os.str());
        }
    }
    return true;
}

bool crit_reflection_sweep(std::string& detail, int jobs) {
    SweepReport rep = sweep_reflection_rep_window(1, jobs);
    if (!rep.ok) return fail(detail, "counterexample " + rep.counterexample);
    return true;
}

bool crit_ncqd(std::string& detail) {
    for (double b : {0.7, 0.9}) {
        ModularParams mp(Cx(b, 0.0));
        if (ncqd_check_identity(NcqdIdentity::Inversion, mp) >= 1e-8)
            return fail(detail, "inversion residual >= 1e-8");
        if (ncqd_check_identity(NcqdIdentity::RecursionB, mp) >= 1e-8 ||
            ncqd_check_identity(NcqdIdentity::RecursionBinv, mp) >= 1e-8)
            return fail(detail, "recursion residual >= 1e-8");
        for (int s = 0; s < ncqd_identity_samples(NcqdIdentity::Ram1); ++s)
            if (ncqd_check_identity(NcqdIdentity::Ram1, mp, s) >= 1e-6)
                return fail(detail, "integral-sum residual >= 1e-6");
        for (int s = 0; s < ncqd_identity_samples(NcqdIdentity::Heine); ++s)
            if (ncqd_check_identity(NcqdIdentity::Heine, mp, s) >= 1e-5)
                return fail(detail, "two-integral residual >= 1e-5");
    }
    return true;
}

bool crit_kernel_fourier(std::string& detail) {
    const std::array<double, 3> ell{0.2, -0.1, 0.3};
    double res = fourier_cross_check_R(1.0, -1.0, ell, 0.8, -0.25,
                                       ModularParams(Cx(0.7, 0.0)));
    if (res >= 1e-4) {
        std::ostringstream os;
        os << "coordinate/momentum kernel residual " << res << " >= 1e-4";
        return fail(detail, os.str());
    }
    return true;
}

}  // namespace

SuiteResult run_acceptance(int jobs, std::ostream& out) {
    struct Entry {
        const char* name;
        double budget;
        bool (*body)(std::string&, int);
    };
    const std::vector<Entry> entries = {
        {"quiver ground truth (six-vertex seed matrices)", 1.0,
         [](std::string& d, int) { return crit_quiver_ground_truth(d); }},
        {"tropical sign sequences and periodicity", 1.0,
         [](std::string& d, int) { return crit_tropical(d); }},
        {"quantum torus identities at truncation 6", 60.0,
         [](std::string& d, int) { return crit_quantum_torus(d); }},
        {"q-Weyl operator equations and conjugation chains", 10.0,
         [](std::string& d, int) { return crit_weyl_calculus(d); }},
        {"closed-form matrix elements vs operator oracle", 300.0,
         [](std::string& d, int) { return crit_elements_vs_oracle(d); }},
        {"tetrahedron equation sweep (window 1, 200 spectral samples)", 600.0,
         [](std::string& d, int j) { return crit_tetra_sweep(d, j); }},
        {"q-binomial duality grid and random triples", 10.0,
         [](std::string& d, int) { return crit_duality(d); }},
        {"reflection equation sweep (window 1, exhaustive)", 1800.0,
         [](std::string& d, int j) { return crit_reflection_sweep(d, j); }},
        {"noncompact dilogarithm residuals", 120.0,
         [](std::string& d, int) { return crit_ncqd(d); }},
        {"kernel Fourier cross-check", 0.0,
         [](std::string& d, int) { return crit_kernel_fourier(d); }},
    };
    SuiteResult suite;
    auto suite_start = Clock::now();
    int idx = 0;
    for (const Entry& e : entries) {
        ++idx;
        CriterionResult r;
        r.name = e.name;
        r.budget_seconds = e.budget;
        auto t0 = Clock::now();
        try {
            r.pass = e.body(r.detail, jobs);
        } catch (const std::exception& ex) {
            r.pass = false;
            r.detail = std::string("exception: ") + ex.what();
        }
        r.seconds = std::chrono::duration<double>(Clock::now() - t0).count();
        if (r.pass && r.budget_seconds > 0 && r.seconds > r.budget_seconds) {
            r.pass = false;
            r.detail = "time budget exceeded";
        }
        out << (r.pass ? "PASS" : "FAIL") << "  [" << idx << "/"
            << entries.size() << "] " << r.name << "  (" << std::fixed
            << std::setprecision(2) << r.seconds << "s";
        if (r.budget_seconds > 0)
            out << " / budget " << std::setprecision(0) << r.budget_seconds
                << "s";
        out << ")";
        if (!r.detail.empty()) out << "  -- " << r.detail;
        out << "\n" << std::flush;
        suite.all_pass = suite.all_pass && r.pass;
        suite.criteria.push_back(std::move(r));
    }
    suite.seconds =
        std::chrono::duration<double>(Clock::now() - suite_start).count();
    return suite;
}

}  // namespace qt::accept
