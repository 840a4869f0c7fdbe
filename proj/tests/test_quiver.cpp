/**
 * @file test_quiver.cpp
 * @brief Unit tests for seeds, mutation, weighted quivers, built-in quiver
 *        data (checked against the printed ground-truth matrices), vertex
 *        permutations, and JSON round-trips.
 */
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "qt/quiver.hpp"

#include <random>

using namespace qt;

namespace {

// Ground truth for J_1212 (doubled matrices).
const IMat kB2_J1212 = {
    {0, 2, 0, 2, -4, 0},
    {-2, 0, 2, 0, 4, -4},
    {0, -2, 0, 0, 0, 2},
    {-1, 0, 0, 0, 2, 0},
    {2, -2, 0, -2, 0, 2},
    {0, 2, -1, 0, -2, 0},
};
const IMat kB2hat_J1212 = {
    {0, 4, 0, 2, -4, 0},
    {-4, 0, 4, 0, 4, -4},
    {0, -4, 0, 0, 0, 2},
    {-2, 0, 0, 0, 2, 0},
    {4, -4, 0, -2, 0, 2},
    {0, 4, -2, 0, -2, 0},
};
const IMat kSigma2_J1212 = {
    {0, 2, 0, 1, -2, 0},
    {-2, 0, 2, 0, 2, -2},
    {0, -2, 0, 0, 0, 1},
    {-1, 0, 0, 0, 2, 0},
    {2, -2, 0, -2, 0, 2},
    {0, 2, -1, 0, -2, 0},
};

std::vector<int> mutable_vertices(const Seed& s) {
    std::vector<int> v;
    for (int i = 0; i < s.n; ++i)
        if (s.is_mutable(i)) v.push_back(i);
    return v;
}

const QuiverName kAllNames[] = {
    QuiverName::J121,       QuiverName::J212,       QuiverName::J1212,
    QuiverName::J2121,      QuiverName::B2ofC2,     QuiverName::B3ofC2,
    QuiverName::J123121,    QuiverName::J321323,    QuiverName::J123123123,
    QuiverName::J321321321,
};

}  // namespace

TEST_CASE("J_1212 ground truth: B, Bhat, sigma match the printed matrices") {
    Seed s = builtin_quiver(QuiverName::J1212);
    CHECK(s.B2 == kB2_J1212);
    for (int i = 0; i < 6; ++i)
        for (int j = 0; j < 6; ++j)
            CHECK(s.B2hat(i, j) == kB2hat_J1212[i][j]);
    CHECK(weighted_quiver(s).sigma2 == kSigma2_J1212);
    CHECK(s.d == IVec{2, 2, 2, 1, 1, 1});
}

TEST_CASE("J_121 entries and single mutation to J_212") {
    Seed s = builtin_quiver(QuiverName::J121);
    CHECK(s.B2[0][2] == 1);   // b_13 = 1/2
    CHECK(s.B2[3][4] == 2);   // b_45 = 1
    CHECK(s.B2[1][3] == 2);   // b_24 = 1
    CHECK(mutable_vertices(s) == std::vector<int>{3});
    CHECK(mutate_seed(s, 3) == builtin_quiver(QuiverName::J212));
}

TEST_CASE("J_1212 mutations reach J_2121, B(2), B(3)") {
    Seed s = builtin_quiver(QuiverName::J1212);
    CHECK(mutate_seed(s, 1) == builtin_quiver(QuiverName::B2ofC2));
    Seed b3 = mutate_seed(mutate_seed(s, 1), 4);
    CHECK(b3 == builtin_quiver(QuiverName::B3ofC2));
    Seed j2121 = mutate_seed(b3, 1);
    CHECK(j2121 == builtin_quiver(QuiverName::J2121));
}

TEST_CASE("mutation is an involution and preserves structure") {
    std::mt19937 rng(11);
    for (QuiverName name : kAllNames) {
        Seed s = builtin_quiver(name);
        auto mut = mutable_vertices(s);
        REQUIRE_FALSE(mut.empty());
        for (int k : mut) CHECK(mutate_seed(mutate_seed(s, k), k) == s);
        // random walks keep skew-symmetrizability and weights
        Seed cur = s;
        for (int step = 0; step < 20; ++step) {
            auto m = mutable_vertices(cur);
            int k = m[rng() % m.size()];
            cur = mutate_seed(cur, k);
            CHECK_NOTHROW(cur.validate());
            CHECK(cur.d == s.d);
        }
    }
}

TEST_CASE("commuting mutations when b_jk = 0") {
    for (QuiverName name : kAllNames) {
        Seed s = builtin_quiver(name);
        auto mut = mutable_vertices(s);
        for (int a : mut)
            for (int b : mut) {
                if (a >= b) continue;
                if (s.B2[a][b] != 0 || s.B2[b][a] != 0) continue;
                CHECK(mutate_seed(mutate_seed(s, a), b) ==
                      mutate_seed(mutate_seed(s, b), a));
            }
    }
}

TEST_CASE("weighted mutation: Figure 1 example") {
    // d = (2,2,1); arrows 2->1, 1->3, 3->2
    WeightedQuiver w;
    w.n = 3;
    w.d = {2, 2, 1};
    w.sigma2 = {{0, -2, 2}, {2, 0, -2}, {-2, 2, 0}};
    WeightedQuiver r = mutate_weighted(w, 2);
    // expected: 1->2, 3->1, 2->3 (the 1->2 arrow appears due to alpha = 2)
    IMat expect = {{0, 2, -2}, {-2, 0, 2}, {2, -2, 0}};
    CHECK(r.sigma2 == expect);
    // same weights, all weight 1: no 1->2 arrow
    WeightedQuiver w1 = w;
    w1.d = {1, 1, 1};
    WeightedQuiver r1 = mutate_weighted(w1, 2);
    CHECK(r1.sigma2[0][1] == 0);
}

TEST_CASE("weighted and seed mutation commute on all built-ins") {
    for (QuiverName name : kAllNames) {
        Seed s = builtin_quiver(name);
        for (int k : mutable_vertices(s)) {
            WeightedQuiver via_seed = weighted_quiver(mutate_seed(s, k));
            WeightedQuiver via_weighted = mutate_weighted(weighted_quiver(s), k);
            CHECK(via_seed == via_weighted);
        }
    }
}

TEST_CASE("vertex permutations") {
    Seed s = builtin_quiver(QuiverName::J1212);
    CHECK(apply_vertex_permutation(s, {0, 1, 2, 3, 4, 5}) == s);
    std::vector<int> t = {0, 1, 2, 5, 4, 3};
    CHECK(apply_vertex_permutation(apply_vertex_permutation(s, t), t) == s);
    CHECK_THROWS(apply_vertex_permutation(s, {0, 0, 2, 3, 4, 5}));
}

TEST_CASE("JSON round trip") {
    for (QuiverName name : kAllNames) {
        Seed s = builtin_quiver(name);
        CHECK(seed_from_json(seed_to_json(s)) == s);
    }
}

TEST_CASE("frozen vertex errors") {
    Seed s = builtin_quiver(QuiverName::J121);
    CHECK_THROWS(mutate_seed(s, 0));
    CHECK_THROWS(quiver_name_from_string("nope"));
}
