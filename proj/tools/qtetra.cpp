/**
 * @file qtetra.cpp
 * @brief Command-line entry point: quiver/tropical data queries, identity
 *        verifications at chosen truncation, q-Weyl operator checks, matrix
 *        elements and equation sweeps in representation, noncompact
 *        dilogarithm evaluation/checks, and the full acceptance suite.
 *
 * Exit codes: 0 all requested checks pass, 1 a verification failed,
 * 2 usage error.  `--json FILE` writes a machine-readable report
 * (schema version 1) that parses back to the identical document.
 */
#include "CLI11.hpp"
#include "json.hpp"

#include "acceptance_suite.hpp"
#include "qt/ncqd.hpp"
#include "qt/qseries.hpp"
#include "qt/qtorus.hpp"
#include "qt/quiver.hpp"
#include "qt/qweylrep.hpp"
#include "qt/tropical.hpp"
#include "qt/weylcalc.hpp"

#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>

using json = nlohmann::json;
using namespace qt;

namespace {

struct CaseRecord {
    std::string name;
    json inputs;
    json expected;
    json got;
    bool pass = true;
};

struct Report {
    std::string suite;
    std::vector<CaseRecord> cases;

    json to_json(double wall_seconds) const {
        json doc;
        doc["schema"] = 1;
        doc["suite"] = suite;
        doc["cases"] = json::array();
        int npass = 0;
        for (const CaseRecord& c : cases) {
            doc["cases"].push_back({{"name", c.name},
                                    {"inputs", c.inputs},
                                    {"expected", c.expected},
                                    {"got", c.got},
                                    {"pass", c.pass}});
            if (c.pass) ++npass;
        }
        doc["totals"] = {{"pass", npass},
                         {"fail", static_cast<int>(cases.size()) - npass}};
        doc["wall_seconds"] = wall_seconds;
        return doc;
    }
};

std::vector<int> parse_int_list(const std::string& s) {
    std::vector<int> v;
    std::stringstream ss(s);
    std::string tok;
    while (std::getline(ss, tok, ','))
        if (!tok.empty()) v.push_back(std::stoi(tok));
    return v;
}

std::vector<long> parse_long_list(const std::string& s) {
    std::vector<long> v;
    std::stringstream ss(s);
    std::string tok;
    while (std::getline(ss, tok, ','))
        if (!tok.empty()) v.push_back(std::stol(tok));
    return v;
}

/// "i:j,k:l,..." with 1-based vertex labels -> permutation vector.
std::vector<int> parse_perm(const std::string& s, int n) {
    std::vector<int> perm = identity_perm(n);
    std::stringstream ss(s);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        auto colon = tok.find(':');
        if (colon == std::string::npos)
            throw CLI::ValidationError("--perm", "expected i:j pairs");
        int i = std::stoi(tok.substr(0, colon));
        int j = std::stoi(tok.substr(colon + 1));
        if (i < 1 || i > n || j < 1 || j > n)
            throw CLI::ValidationError("--perm", "vertex label out of range");
        perm[static_cast<size_t>(i - 1)] = j - 1;
    }
    return perm;
}

Seed load_seed(const std::string& name_or_file) {
    try {
        return builtin_quiver(quiver_name_from_string(name_or_file));
    } catch (const std::exception&) {
    }
    std::ifstream in(name_or_file);
    if (!in)
        throw CLI::ValidationError("--seed",
                                   "not a builtin name or readable file");
    std::stringstream buf;
    buf << in.rdbuf();
    return seed_from_json(buf.str());
}

Rat parse_rat(const std::string& s) {
    Rat r(s);
    r.canonicalize();
    return r;
}

Cx parse_cx(const std::string& s) {
    auto comma = s.find(',');
    if (comma == std::string::npos) return Cx(std::stod(s), 0.0);
    return Cx(std::stod(s.substr(0, comma)), std::stod(s.substr(comma + 1)));
}

// Fixed data of the truncated-identity checks (0-based vertex labels).
PsiFactor pf(int n, std::initializer_list<int> is, long base, bool inv) {
    PsiFactor p;
    p.alpha = LVec(static_cast<size_t>(n), 0);
    for (int i : is) p.alpha[static_cast<size_t>(i)] += 1;
    p.base_exponent = base;
    p.inverse = inv;
    return p;
}

bool run_identity(const std::string& which, int order) {
    if (which == "pentagon") {
        TorusContext ctx(builtin_quiver(QuiverName::J121));
        return pentagon_check(ctx, unit_vec(5, 1), unit_vec(5, 3), order);
    }
    if (which == "ad-tau") {
        return verify_ad_tau_decomposition(builtin_quiver(QuiverName::J121),
                                           {3}, {+1}, order) &&
               verify_ad_tau_decomposition(builtin_quiver(QuiverName::J1212),
                                           {1, 4, 1}, {+1, +1, -1}, order);
    }
    if (which == "dilog-r") {
        Seed s = builtin_quiver(QuiverName::J123121);
        std::vector<PsiFactor> lhs = {pf(9, {7}, 1, false), pf(9, {3}, 1, false),
                                      pf(9, {6, 7}, 1, false),
                                      pf(9, {6}, 1, false)};
        std::vector<PsiFactor> rhs = {pf(9, {6}, 1, false),
                                      pf(9, {3, 6}, 1, false),
                                      pf(9, {7}, 1, false), pf(9, {3}, 1, false)};
        return verify_dilog_identity(s, lhs, rhs, order);
    }
    if (which == "dilog-k") {
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
        return verify_dilog_identity(s, lhs, rhs, order);
    }
    if (which == "tau-r") {
        Seed s = builtin_quiver(QuiverName::J123121);
        std::vector<TauSpec> lt = {{7, +1}, {3, +1}, {6, +1}, {7, +1}};
        std::vector<TauSpec> rt = {{6, +1}, {3, +1}, {7, +1}, {6, +1}};
        return verify_tau_identity(s, lt, transposition(9, 3, 6), rt,
                                   transposition(9, 3, 7));
    }
    if (which == "tau-k") {
        Seed r = builtin_quiver(QuiverName::J123123123);
        const std::vector<int> seqA = {9, 1, 5, 1, 6, 10, 2, 5, 2, 1, 9, 1, 10};
        const std::vector<int> seqB = {10, 2, 6, 2, 1, 5, 1, 10, 9, 2, 5, 2, 6};
        auto taus = [&](const std::vector<int>& seq) {
            std::vector<int> signs = sign_sequence(r, seq);
            std::vector<TauSpec> ts;
            for (size_t i = 0; i < seq.size(); ++i)
                ts.push_back({seq[i], signs[i]});
            return ts;
        };
        return verify_tau_identity(r, taus(seqA), identity_perm(12),
                                   taus(seqB), identity_perm(12));
    }
    throw CLI::ValidationError("identity", "unknown identity name");
}

bool run_weyl(const std::string& which, const Rat& al, const Rat& be,
              const Rat& ga) {
    if (which == "pi-tetra") return verify_pi_tetrahedron(al);
    if (which == "p-tetra") return verify_P_tetrahedron(al);
    if (which == "pi-refl") return verify_pi_reflection(al, be, ga);
    if (which == "p-refl") return verify_P_reflection(al, be, ga);
    if (which == "diagrams")
        return verify_diagram(DiagramCase::R) && verify_diagram(DiagramCase::K);
    if (which == "chains") {
        for (ChainSide side : {ChainSide::L, ChainSide::R})
            for (ChainCase c : {ChainCase::Tetra, ChainCase::Reflection})
                if (!verify_full_conjugation_chain(side, c)) return false;
        return true;
    }
    throw CLI::ValidationError("weyl verify", "unknown check name");
}

NcqdIdentity parse_identity_name(const std::string& s) {
    if (s == "inversion") return NcqdIdentity::Inversion;
    if (s == "recursion-b") return NcqdIdentity::RecursionB;
    if (s == "recursion-binv") return NcqdIdentity::RecursionBinv;
    if (s == "ram-full") return NcqdIdentity::RamanujanFull;
    if (s == "ram1") return NcqdIdentity::Ram1;
    if (s == "ram2") return NcqdIdentity::Ram2;
    if (s == "heine") return NcqdIdentity::Heine;
    throw CLI::ValidationError("--identity", "unknown identity name");
}

json seed_json(const Seed& s) { return json::parse(seed_to_json(s)); }

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact verification toolkit for quantum cluster algebra "
                 "identities and the tetrahedron / 3D reflection equations"};
    app.require_subcommand(1);
    std::string json_path;
    app.add_option("--json", json_path, "write a JSON report to this file");
    app.fallthrough();  // allow --json after the subcommand

    Report report;
    bool all_pass = true;
    // The selected action, bound during parsing and executed afterwards.
    std::function<void()> action;

    auto record = [&](CaseRecord c) {
        all_pass = all_pass && c.pass;
        report.cases.push_back(std::move(c));
    };

    // --- quiver mutate ------------------------------------------------------
    auto* quiver = app.add_subcommand("quiver", "seed data and mutation");
    {
        auto* mut = quiver->add_subcommand("mutate",
                                           "mutate a seed at a vertex");
        auto seed_name = std::make_shared<std::string>();
        auto at = std::make_shared<int>(0);
        auto perm = std::make_shared<std::string>();
        mut->add_option("--seed", *seed_name, "builtin name or JSON file")
            ->required();
        mut->add_option("--at", *at, "vertex to mutate (1-based)")->required();
        mut->add_option("--perm", *perm, "relabeling i:j,... (1-based)");
        mut->callback([&, seed_name, at, perm] {
            action = [&, seed_name, at, perm] {
                report.suite = "quiver mutate";
                Seed s = load_seed(*seed_name);
                Seed m = mutate_seed(s, *at - 1);
                if (!perm->empty())
                    m = apply_vertex_permutation(m, parse_perm(*perm, m.n));
                std::cout << seed_to_json(m) << "\n";
                record({"mutate",
                        {{"seed", *seed_name}, {"at", *at}, {"perm", *perm}},
                        nullptr,
                        seed_json(m),
                        true});
            };
        });
    }

    // --- tropical signs -----------------------------------------------------
    auto* trop = app.add_subcommand("tropical", "tropical sign data");
    {
        auto* signs = trop->add_subcommand(
            "signs", "tropical signs along a mutation sequence");
        auto seed_name = std::make_shared<std::string>();
        auto seq = std::make_shared<std::string>();
        signs->add_option("--seed", *seed_name, "builtin name or JSON file")
            ->required();
        signs->add_option("--seq", *seq, "vertices, 1-based, e.g. 2,5,2")
            ->required();
        signs->callback([&, seed_name, seq] {
            action = [&, seed_name, seq] {
                report.suite = "tropical signs";
                Seed s = load_seed(*seed_name);
                std::vector<int> seq0 = parse_int_list(*seq);
                for (int& k : seq0) --k;
                std::vector<int> sg = sign_sequence(s, seq0);
                TropSeed end = apply_sequence(TropSeed::initial(s), seq0,
                                              identity_perm(s.n));
                json out = {{"signs", sg},
                            {"finalC", end.C},
                            {"finalB2", end.seed.B2}};
                std::cout << out.dump(2) << "\n";
                record({"signs",
                        {{"seed", *seed_name}, {"seq", *seq}},
                        nullptr,
                        out,
                        true});
            };
        });
    }

    // --- identity -----------------------------------------------------------
    {
        auto* ident = app.add_subcommand(
            "identity", "truncated operator-identity checks");
        auto which = std::make_shared<std::string>();
        auto order = std::make_shared<int>(6);
        ident
            ->add_option("name", *which,
                         "pentagon|ad-tau|dilog-r|dilog-k|tau-r|tau-k")
            ->required();
        ident->add_option("--order", *order, "series truncation degree");
        ident->callback([&, which, order] {
            action = [&, which, order] {
                report.suite = "identity";
                bool ok = run_identity(*which, *order);
                std::cout << *which << ": " << (ok ? "pass" : "fail") << "\n";
                record({*which,
                        {{"order", *order}},
                        true,
                        ok,
                        ok});
            };
        });
    }

    // --- weyl verify ----------------------------------------------------------
    auto* weyl = app.add_subcommand("weyl", "q-Weyl operator checks");
    {
        auto* wv = weyl->add_subcommand("verify", "operator equation checks");
        auto which = std::make_shared<std::string>();
        auto al = std::make_shared<std::string>("0");
        auto be = std::make_shared<std::string>("0");
        auto ga = std::make_shared<std::string>("0");
        wv->add_option("name", *which,
                       "pi-tetra|pi-refl|p-tetra|p-refl|diagrams|chains")
            ->required();
        wv->add_option("--alpha", *al, "rational parameter p/q");
        wv->add_option("--beta", *be, "rational parameter p/q");
        wv->add_option("--gamma", *ga, "rational parameter p/q");
        wv->callback([&, which, al, be, ga] {
            action = [&, which, al, be, ga] {
                report.suite = "weyl verify";
                bool ok = run_weyl(*which, parse_rat(*al), parse_rat(*be),
                                   parse_rat(*ga));
                std::cout << *which << ": " << (ok ? "pass" : "fail") << "\n";
                record({*which,
                        {{"alpha", *al}, {"beta", *be}, {"gamma", *ga}},
                        true,
                        ok,
                        ok});
            };
        });
    }

    // --- rep element ----------------------------------------------------------
    auto* rep = app.add_subcommand("rep", "matrix elements in representation");
    {
        auto* el = rep->add_subcommand("element", "one matrix element");
        auto op = std::make_shared<std::string>();
        auto basis = std::make_shared<std::string>();
        auto in = std::make_shared<std::string>();
        auto out = std::make_shared<std::string>();
        auto ns = std::make_shared<std::string>();
        el->add_option("--op", *op, "r|k")->required();
        el->add_option("--basis", *basis, "u|p")->required();
        el->add_option("--in", *in, "in-state indices, e.g. 0,1,-1")
            ->required();
        el->add_option("--out", *out, "out-state indices")->required();
        el->add_option("--n", *ns, "spectral integers (three-leg op only)");
        el->callback([&, op, basis, in, out, ns] {
            action = [&, op, basis, in, out, ns] {
                report.suite = "rep element";
                RepOp o = (*op == "k") ? RepOp::K : RepOp::R;
                if (*op != "r" && *op != "k")
                    throw CLI::ValidationError("--op", "expected r or k");
                if (*basis != "u" && *basis != "p")
                    throw CLI::ValidationError("--basis", "expected u or p");
                RepBasis b = (*basis == "p") ? RepBasis::P : RepBasis::U;
                std::vector<long> iv = parse_long_list(*in);
                std::vector<long> ov = parse_long_list(*out);
                std::vector<long> nv =
                    ns->empty() ? std::vector<long>{} : parse_long_list(*ns);
                size_t legs = (o == RepOp::R) ? 3 : 4;
                if (iv.size() != legs || ov.size() != legs)
                    throw CLI::ValidationError("--in/--out",
                                               "wrong index count");
                if (o == RepOp::R && nv.size() != 3)
                    throw CLI::ValidationError("--n",
                                               "three spectral integers "
                                               "required for --op r");
                RatQ v = oracle_elem(o, b, ov, iv, nv);
                std::cout << v.to_string() << "\n";
                record({"element",
                        {{"op", *op},
                         {"basis", *basis},
                         {"in", *in},
                         {"out", *out},
                         {"n", *ns}},
                        nullptr,
                        v.to_string(),
                        true});
            };
        });
    }

    // --- verify ---------------------------------------------------------------
    auto* verify = app.add_subcommand("verify", "equation sweeps and suites");
    int jobs = 1;
    verify->add_option("--jobs", jobs, "worker threads for sweeps");
    {
        auto* tet = verify->add_subcommand(
            "tetra-rep", "tetrahedron equation window sweep");
        auto window = std::make_shared<int>(1);
        auto nrange = std::make_shared<int>(1);
        auto samples = std::make_shared<int>(200);
        auto basis = std::make_shared<std::string>("u");
        tet->add_option("--window", *window, "boundary index radius");
        tet->add_option("--n-range", *nrange,
                        "spectral sample radius (must be 1)");
        tet->add_option("--samples", *samples, "random spectral samples");
        tet->add_option("--basis", *basis, "u|p");
        tet->callback([&, window, nrange, samples, basis] {
            action = [&, window, nrange, samples, basis] {
                report.suite = "verify tetra-rep";
                if (*nrange != 1)
                    throw CLI::ValidationError(
                        "--n-range", "only radius 1 is supported");
                RepBasis b = (*basis == "p") ? RepBasis::P : RepBasis::U;
                SweepReport r = sweep_tetra_rep_window(
                    b, *window, *samples, 42, jobs);
                std::cout << (r.ok ? "pass" : "fail") << " ("
                          << r.pairs_checked << " boundary pairs)\n";
                if (!r.ok) std::cout << r.counterexample << "\n";
                record({"tetra-rep",
                        {{"window", *window},
                         {"samples", *samples},
                         {"basis", *basis}},
                        true,
                        r.ok,
                        r.ok});
            };
        });

        auto* refl = verify->add_subcommand(
            "refl-rep", "reflection equation window sweep");
        auto rwindow = std::make_shared<int>(1);
        refl->add_option("--window", *rwindow, "boundary index radius");
        refl->callback([&, rwindow] {
            action = [&, rwindow] {
                report.suite = "verify refl-rep";
                SweepReport r = sweep_reflection_rep_window(*rwindow, jobs);
                std::cout << (r.ok ? "pass" : "fail") << " ("
                          << r.pairs_checked << " boundary pairs)\n";
                if (!r.ok) std::cout << r.counterexample << "\n";
                record({"refl-rep", {{"window", *rwindow}}, true, r.ok, r.ok});
            };
        });

        auto* allv = verify->add_subcommand("all", "full acceptance suite");
        auto level = std::make_shared<std::string>("desk");
        allv->add_option("--level", *level, "suite scale (desk)");
        allv->callback([&, level] {
            action = [&, level] {
                report.suite = "verify all";
                if (*level != "desk")
                    throw CLI::ValidationError("--level",
                                               "only 'desk' is available");
                qt::accept::SuiteResult r =
                    qt::accept::run_acceptance(jobs, std::cout);
                for (const auto& c : r.criteria)
                    record({c.name,
                            {{"budget_seconds", c.budget_seconds}},
                            true,
                            c.pass,
                            c.pass});
            };
        });
    }

    // --- ncqd -----------------------------------------------------------------
    auto* ncqd = app.add_subcommand("ncqd", "noncompact quantum dilogarithm");
    {
        auto* ev = ncqd->add_subcommand("eval", "evaluate phi(z)");
        auto z = std::make_shared<std::string>();
        auto b = std::make_shared<std::string>();
        ev->add_option("--z", *z, "argument re[,im]")->required();
        ev->add_option("--b", *b, "modular parameter re[,im]")->required();
        ev->callback([&, z, b] {
            action = [&, z, b] {
                report.suite = "ncqd eval";
                ModularParams mp(parse_cx(*b));
                Cx v = ncqd_phi(parse_cx(*z), mp);
                std::cout << v.real() << (v.imag() < 0 ? " - " : " + ")
                          << std::abs(v.imag()) << "i\n";
                record({"eval",
                        {{"z", *z}, {"b", *b}},
                        nullptr,
                        {{"re", v.real()}, {"im", v.imag()}},
                        true});
            };
        });

        auto* chk = ncqd->add_subcommand("check", "functional-equation check");
        auto ident = std::make_shared<std::string>();
        auto cb = std::make_shared<std::string>();
        auto tol = std::make_shared<double>(1e-6);
        auto sample = std::make_shared<int>(0);
        chk->add_option("--identity", *ident,
                        "inversion|recursion-b|recursion-binv|ram-full|ram1|"
                        "ram2|heine")
            ->required();
        chk->add_option("--b", *cb, "modular parameter re[,im]")->required();
        chk->add_option("--tol", *tol, "residual tolerance");
        chk->add_option("--sample", *sample, "built-in parameter sample");
        chk->callback([&, ident, cb, tol, sample] {
            action = [&, ident, cb, tol, sample] {
                report.suite = "ncqd check";
                ModularParams mp(parse_cx(*cb));
                double res = ncqd_check_identity(parse_identity_name(*ident),
                                                 mp, *sample);
                bool ok = res < *tol;
                std::cout << *ident << ": residual " << res << " ("
                          << (ok ? "pass" : "fail") << " at tol " << *tol
                          << ")\n";
                record({*ident,
                        {{"b", *cb}, {"tol", *tol}, {"sample", *sample}},
                        true,
                        {{"residual", res}, {"pass", ok}},
                        ok});
            };
        });
    }

    auto wall_start = std::chrono::steady_clock::now();
    try {
        app.parse(argc, argv);
        if (action) action();
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;  // --help is 0; any usage error is 2
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    if (!json_path.empty()) {
        double wall = std::chrono::duration<double>(
                          std::chrono::steady_clock::now() - wall_start)
                          .count();
        std::ofstream out(json_path);
        out << report.to_json(wall).dump(2) << "\n";
    }
    return all_pass ? 0 : 1;
}
