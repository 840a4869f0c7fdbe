#include "qt/quiver.hpp"

#include <nlohmann/json.hpp>

#include <algorithm>
#include <map>

namespace qt {

namespace {

long gcdl(long a, long b) { return std::gcd(a, b); }

/// Build a Seed from figure data: solid arrows add 1 to sigma_ij, dashed
/// arrows set sigma_ij = 1/2 (stored doubled).
struct FigureData {
    int n;
    IVec d;
    std::vector<std::pair<int, int>> solid;   // 1-based i -> j
    std::vector<std::pair<int, int>> dashed;  // 1-based i -> j (half arrow)
};

Seed seed_from_figure(const FigureData& f) {
    WeightedQuiver w;
    w.n = f.n;
    w.d = f.d;
    w.sigma2.assign(static_cast<size_t>(f.n), IVec(static_cast<size_t>(f.n), 0));
    for (auto [i, j] : f.solid) {
        w.sigma2[static_cast<size_t>(i - 1)][static_cast<size_t>(j - 1)] += 2;
        w.sigma2[static_cast<size_t>(j - 1)][static_cast<size_t>(i - 1)] -= 2;
    }
    for (auto [i, j] : f.dashed) {
        w.sigma2[static_cast<size_t>(i - 1)][static_cast<size_t>(j - 1)] += 1;
        w.sigma2[static_cast<size_t>(j - 1)][static_cast<size_t>(i - 1)] -= 1;
    }
    Seed s = seed_from_weighted(w);
    s.validate();
    return s;
}

}  // namespace

std::set<int> Seed::frozen() const {
    std::set<int> f;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (B2[static_cast<size_t>(i)][static_cast<size_t>(j)] % 2 != 0) {
                f.insert(i);
                f.insert(j);
            }
    return f;
}

void Seed::validate() const {
    if (static_cast<int>(B2.size()) != n || static_cast<int>(d.size()) != n)
        throw std::invalid_argument("Seed: dimension mismatch");
    long g = 0;
    for (long w : d) {
        if (w <= 0) throw std::invalid_argument("Seed: nonpositive weight");
        g = gcdl(g, w);
    }
    if (n > 0 && g != 1) throw std::invalid_argument("Seed: gcd(d) != 1");
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (B2hat(i, j) != -B2hat(j, i))
                throw std::invalid_argument("Seed: B*d not skew-symmetric");
}

Seed mutate_seed(const Seed& s, int k) {
    if (k < 0 || k >= s.n) throw std::out_of_range("mutate_seed: bad vertex");
    if (!s.is_mutable(k)) throw std::invalid_argument("mutate_seed: frozen vertex");
    Seed r = s;
    auto uk = static_cast<size_t>(k);
    for (int i = 0; i < s.n; ++i) {
        for (int j = 0; j < s.n; ++j) {
            auto ui = static_cast<size_t>(i), uj = static_cast<size_t>(j);
            if (i == k || j == k) {
                r.B2[ui][uj] = -s.B2[ui][uj];
            } else {
                // 2b'_ij = 2b_ij + (|2b_ik|*2b_kj + 2b_ik*|2b_kj|)/4;
                // exact because b_ik, b_kj are integers for mutable k.
                long num = std::abs(s.B2[ui][uk]) * s.B2[uk][uj] +
                           s.B2[ui][uk] * std::abs(s.B2[uk][uj]);
                if (num % 4 != 0)
                    throw std::logic_error("mutate_seed: non-integral correction");
                r.B2[ui][uj] = s.B2[ui][uj] + num / 4;
            }
        }
    }
    return r;
}

WeightedQuiver weighted_quiver(const Seed& s) {
    WeightedQuiver w;
    w.n = s.n;
    w.d = s.d;
    w.sigma2.assign(static_cast<size_t>(s.n), IVec(static_cast<size_t>(s.n), 0));
    for (int i = 0; i < s.n; ++i)
        for (int j = 0; j < s.n; ++j) {
            auto ui = static_cast<size_t>(i), uj = static_cast<size_t>(j);
            long num = s.B2[ui][uj] * gcdl(s.d[ui], s.d[uj]);
            if (num % s.d[ui] != 0)
                throw std::logic_error("weighted_quiver: non half-integral sigma");
            w.sigma2[ui][uj] = num / s.d[ui];
        }
    return w;
}

Seed seed_from_weighted(const WeightedQuiver& w) {
    Seed s;
    s.n = w.n;
    s.d = w.d;
    s.B2.assign(static_cast<size_t>(w.n), IVec(static_cast<size_t>(w.n), 0));
    for (int i = 0; i < w.n; ++i)
        for (int j = 0; j < w.n; ++j) {
            auto ui = static_cast<size_t>(i), uj = static_cast<size_t>(j);
            long num = w.sigma2[ui][uj] * w.d[ui];
            long g = gcdl(w.d[ui], w.d[uj]);
            if (num % g != 0)
                throw std::logic_error("seed_from_weighted: non half-integral b");
            s.B2[ui][uj] = num / g;
        }
    return s;
}

WeightedQuiver mutate_weighted(const WeightedQuiver& w, int k) {
    Seed s = seed_from_weighted(w);
    if (!s.is_mutable(k)) throw std::invalid_argument("mutate_weighted: frozen vertex");
    WeightedQuiver r = w;
    auto uk = static_cast<size_t>(k);
    for (int i = 0; i < w.n; ++i)
        for (int j = 0; j < w.n; ++j) {
            auto ui = static_cast<size_t>(i), uj = static_cast<size_t>(j);
            if (i == k || j == k) {
                r.sigma2[ui][uj] = -w.sigma2[ui][uj];
            } else {
                long alpha_num = w.d[uk] * gcdl(w.d[ui], w.d[uj]);
                long alpha_den = gcdl(w.d[uk], w.d[ui]) * gcdl(w.d[uk], w.d[uj]);
                // 2sigma'_ij = 2sigma_ij + (|2s_ik|*2s_kj + 2s_ik*|2s_kj|)/4 * alpha
                long num = (std::abs(w.sigma2[ui][uk]) * w.sigma2[uk][uj] +
                            w.sigma2[ui][uk] * std::abs(w.sigma2[uk][uj])) *
                           alpha_num;
                if (num % (4 * alpha_den) != 0)
                    throw std::logic_error("mutate_weighted: non-integral correction");
                r.sigma2[ui][uj] = w.sigma2[ui][uj] + num / (4 * alpha_den);
            }
        }
    return r;
}

Seed builtin_quiver(QuiverName name) {
    switch (name) {
        case QuiverName::J121:
            return seed_from_figure({5,
                                     {1, 1, 1, 1, 1},
                                     {{3, 4}, {4, 1}, {1, 2}, {2, 4}, {4, 5}},
                                     {{1, 3}, {5, 2}}});
        case QuiverName::J212:
            return seed_from_figure({5,
                                     {1, 1, 1, 1, 1},
                                     {{1, 4}, {4, 2}, {3, 5}, {5, 4}, {4, 3}},
                                     {{3, 1}, {2, 5}}});
        case QuiverName::J1212:
            return seed_from_figure({6,
                                     {2, 2, 2, 1, 1, 1},
                                     {{4, 5}, {5, 6}, {1, 2}, {2, 3}, {2, 5}, {5, 1}, {6, 2}},
                                     {{1, 4}, {3, 6}}});
        case QuiverName::J2121:
            return seed_from_figure({6,
                                     {2, 2, 2, 1, 1, 1},
                                     {{4, 5}, {5, 6}, {1, 2}, {2, 3}, {5, 2}, {2, 4}, {3, 5}},
                                     {{4, 1}, {6, 3}}});
        case QuiverName::B2ofC2:
            return seed_from_figure({6,
                                     {2, 2, 2, 1, 1, 1},
                                     {{4, 5}, {6, 5}, {2, 1}, {3, 2}, {1, 3}, {2, 6}, {5, 2}},
                                     {{1, 4}, {6, 3}}});
        case QuiverName::B3ofC2:
            return seed_from_figure({6,
                                     {2, 2, 2, 1, 1, 1},
                                     {{5, 4}, {5, 6}, {2, 1}, {3, 2}, {1, 3}, {2, 5}, {4, 2}},
                                     {{1, 4}, {6, 3}}});
        case QuiverName::J123121:
            return seed_from_figure(
                {9,
                 {1, 1, 1, 1, 1, 1, 1, 1, 1},
                 {{1, 2}, {3, 4}, {4, 5}, {6, 7}, {7, 8}, {8, 9},
                  {5, 8}, {8, 4}, {4, 7}, {7, 3}, {2, 4}, {4, 1}},
                 {{9, 5}, {5, 2}, {1, 3}, {3, 6}}});
        case QuiverName::J321323:
            return seed_from_figure(
                {9,
                 {1, 1, 1, 1, 1, 1, 1, 1, 1},
                 {{1, 7}, {7, 8}, {8, 2}, {3, 4}, {4, 5}, {6, 9},
                  {9, 4}, {4, 6}, {5, 8}, {8, 4}, {4, 7}, {7, 3}},
                 {{2, 5}, {5, 9}, {6, 3}, {3, 1}}});
        case QuiverName::J123123123:
            return seed_from_figure(
                {12,
                 {2, 2, 2, 2, 1, 1, 1, 1, 1, 1, 1, 1},
                 {{1, 2}, {2, 3}, {3, 4},
                  {5, 6}, {6, 7}, {7, 8},
                  {9, 10}, {10, 11}, {11, 12},
                  {8, 3}, {3, 7}, {7, 2}, {2, 6}, {6, 1},
                  {12, 7}, {7, 11}, {11, 6}, {6, 10}, {10, 5}},
                 {{4, 8}, {1, 5}, {5, 9}, {8, 12}}});
        case QuiverName::J321321321:
            return seed_from_figure(
                {12,
                 {2, 2, 2, 2, 1, 1, 1, 1, 1, 1, 1, 1},
                 {{1, 2}, {2, 3}, {3, 4},
                  {5, 6}, {6, 7}, {7, 8},
                  {9, 10}, {10, 11}, {11, 12},
                  {4, 7}, {7, 3}, {3, 6}, {6, 2}, {2, 5},
                  {8, 11}, {11, 7}, {7, 10}, {10, 6}, {6, 9}},
                 {{8, 4}, {5, 1}, {9, 5}, {12, 8}}});
    }
    throw std::invalid_argument("builtin_quiver: unknown name");
}

QuiverName quiver_name_from_string(const std::string& s) {
    static const std::map<std::string, QuiverName> m = {
        {"J121", QuiverName::J121},
        {"J212", QuiverName::J212},
        {"J1212", QuiverName::J1212},
        {"J2121", QuiverName::J2121},
        {"B2ofC2", QuiverName::B2ofC2},
        {"B3ofC2", QuiverName::B3ofC2},
        {"J123121", QuiverName::J123121},
        {"J321323", QuiverName::J321323},
        {"J123123123", QuiverName::J123123123},
        {"J321321321", QuiverName::J321321321},
    };
    auto it = m.find(s);
    if (it == m.end()) throw std::invalid_argument("unknown quiver name: " + s);
    return it->second;
}

std::string quiver_name_to_string(QuiverName name) {
    switch (name) {
        case QuiverName::J121: return "J121";
        case QuiverName::J212: return "J212";
        case QuiverName::J1212: return "J1212";
        case QuiverName::J2121: return "J2121";
        case QuiverName::B2ofC2: return "B2ofC2";
        case QuiverName::B3ofC2: return "B3ofC2";
        case QuiverName::J123121: return "J123121";
        case QuiverName::J321323: return "J321323";
        case QuiverName::J123123123: return "J123123123";
        case QuiverName::J321321321: return "J321321321";
    }
    return "?";
}

Seed apply_vertex_permutation(const Seed& s, const std::vector<int>& perm) {
    if (static_cast<int>(perm.size()) != s.n)
        throw std::invalid_argument("apply_vertex_permutation: size mismatch");
    std::vector<bool> seen(static_cast<size_t>(s.n), false);
    for (int p : perm) {
        if (p < 0 || p >= s.n || seen[static_cast<size_t>(p)])
            throw std::invalid_argument("apply_vertex_permutation: not a bijection");
        seen[static_cast<size_t>(p)] = true;
    }
    Seed r;
    r.n = s.n;
    r.B2.assign(static_cast<size_t>(s.n), IVec(static_cast<size_t>(s.n), 0));
    r.d.assign(static_cast<size_t>(s.n), 0);
    for (int i = 0; i < s.n; ++i) {
        r.d[static_cast<size_t>(perm[static_cast<size_t>(i)])] = s.d[static_cast<size_t>(i)];
        for (int j = 0; j < s.n; ++j)
            r.B2[static_cast<size_t>(perm[static_cast<size_t>(i)])]
                [static_cast<size_t>(perm[static_cast<size_t>(j)])] =
                s.B2[static_cast<size_t>(i)][static_cast<size_t>(j)];
    }
    return r;
}

std::string seed_to_json(const Seed& s) {
    nlohmann::json j;
    j["n"] = s.n;
    j["B2"] = s.B2;
    j["d"] = s.d;
    return j.dump();
}

Seed seed_from_json(const std::string& text) {
    nlohmann::json j = nlohmann::json::parse(text);
    Seed s;
    s.n = j.at("n").get<int>();
    s.B2 = j.at("B2").get<IMat>();
    s.d = j.at("d").get<IVec>();
    s.validate();
    return s;
}

}  // namespace qt
