#include "qt/tropical.hpp"

namespace qt {

TropSeed TropSeed::initial(const Seed& s) {
    TropSeed t;
    t.seed = s;
    t.C.assign(static_cast<size_t>(s.n), IVec(static_cast<size_t>(s.n), 0));
    for (int i = 0; i < s.n; ++i) t.C[static_cast<size_t>(i)][static_cast<size_t>(i)] = 1;
    return t;
}

int TropSeed::row_sign(int k) const {
    bool pos = false, neg = false;
    for (long v : C[static_cast<size_t>(k)]) {
        if (v > 0) pos = true;
        if (v < 0) neg = true;
    }
    if (pos && neg) throw std::logic_error("sign coherence violated");
    if (!pos && !neg) throw std::logic_error("zero c-vector has no sign");
    return pos ? 1 : -1;
}

std::pair<TropSeed, int> mutate_tropical(const TropSeed& t, int k) {
    if (!t.seed.is_mutable(k)) throw std::invalid_argument("mutate_tropical: frozen vertex");
    int eps = t.row_sign(k);
    TropSeed r = t;
    r.seed = mutate_seed(t.seed, k);
    auto uk = static_cast<size_t>(k);
    for (int i = 0; i < t.seed.n; ++i) {
        auto ui = static_cast<size_t>(i);
        if (i == k) {
            for (long& v : r.C[ui]) v = -v;
            continue;
        }
        long b2ik = t.seed.B2[ui][uk];
        if (b2ik % 2 != 0) throw std::logic_error("mutate_tropical: non-integer b_ik");
        long m = std::max(0L, eps * (b2ik / 2));  // [eps * b_ik]_+
        if (m != 0)
            for (int j = 0; j < t.seed.n; ++j)
                r.C[ui][static_cast<size_t>(j)] += m * t.C[uk][static_cast<size_t>(j)];
    }
    // assert sign coherence of the result
    for (int i = 0; i < r.seed.n; ++i) (void)r.row_sign(i);
    return {r, eps};
}

std::vector<int> sign_sequence(const Seed& start, const std::vector<int>& seq) {
    TropSeed t = TropSeed::initial(start);
    std::vector<int> signs;
    signs.reserve(seq.size());
    for (int k : seq) {
        auto [nt, eps] = mutate_tropical(t, k);
        signs.push_back(eps);
        t = std::move(nt);
    }
    return signs;
}

TropSeed apply_sequence(const TropSeed& t0, const std::vector<int>& seq,
                        const std::vector<int>& perm) {
    TropSeed t = t0;
    for (int k : seq) t = mutate_tropical(t, k).first;
    TropSeed r = t;
    r.seed = apply_vertex_permutation(t.seed, perm);
    // Relabeling moves the variable labels (rows); the ambient initial
    // coordinates (columns) stay put.
    for (int i = 0; i < t.seed.n; ++i)
        r.C[static_cast<size_t>(perm[static_cast<size_t>(i)])] = t.C[static_cast<size_t>(i)];
    return r;
}

bool verify_tropical_periodicity(const Seed& start, const std::vector<int>& seqA,
                                 const std::vector<int>& permA,
                                 const std::vector<int>& seqB,
                                 const std::vector<int>& permB) {
    TropSeed t0 = TropSeed::initial(start);
    return apply_sequence(t0, seqA, permA) == apply_sequence(t0, seqB, permB);
}

std::vector<int> identity_perm(int n) {
    std::vector<int> p(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) p[static_cast<size_t>(i)] = i;
    return p;
}

std::vector<int> transposition(int n, int a, int b) {
    auto p = identity_perm(n);
    std::swap(p[static_cast<size_t>(a)], p[static_cast<size_t>(b)]);
    return p;
}

}  // namespace qt
