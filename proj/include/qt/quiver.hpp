/**
 * @file quiver.hpp
 * @brief Seeds (exchange matrix + weights), mutation, weighted quivers,
 *        vertex permutations, and the built-in Fock-Goncharov quivers.
 *
 * The exchange matrix B may have half-integer entries; it is stored doubled
 * as the integer matrix B2 = 2B.  Weights d are invariant under mutation and
 * Bd is skew-symmetric.  The frozen set I0 consists of the vertices touching
 * a non-integer entry of B.
 */
#pragma once

#include <cstdint>
#include <numeric>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

namespace qt {

using IMat = std::vector<std::vector<long>>;
using IVec = std::vector<long>;

struct Seed {
    int n = 0;
    IMat B2;  // 2 * b_ij
    IVec d;   // weights

    /// Frozen vertices: those meeting a non-integer (odd B2) entry.
    std::set<int> frozen() const;
    bool is_mutable(int k) const { return frozen().count(k) == 0; }

    /// 2 * bhat_ij where bhat = B d (skew-symmetric companion).
    long B2hat(int i, int j) const { return B2[i][j] * d[j]; }

    void validate() const;  // skew-symmetrizability, gcd(d) = 1

    friend bool operator==(const Seed&, const Seed&) = default;
};

struct WeightedQuiver {
    int n = 0;
    IMat sigma2;  // 2 * sigma_ij
    IVec d;

    friend bool operator==(const WeightedQuiver&, const WeightedQuiver&) = default;
};

/// Exchange-matrix mutation at a mutable vertex k (0-based).
Seed mutate_seed(const Seed& s, int k);

/// sigma_ij = b_ij * gcd(d_i, d_j) / d_i.
WeightedQuiver weighted_quiver(const Seed& s);

/// Recover the Seed from a weighted quiver: b_ij = sigma_ij * d_i / gcd(d_i,d_j).
Seed seed_from_weighted(const WeightedQuiver& w);

/// Weighted-quiver mutation with the alpha_ij^k correction factor.
WeightedQuiver mutate_weighted(const WeightedQuiver& w, int k);

enum class QuiverName {
    J121,
    J212,
    J1212,
    J2121,
    B2ofC2,
    B3ofC2,
    J123121,
    J321323,
    J123123123,
    J321321321,
};

/// The paper's ten quivers, transcribed from the figures (1-based labels in
/// the figures map to 0-based vertex indices here).
Seed builtin_quiver(QuiverName name);

QuiverName quiver_name_from_string(const std::string& s);
std::string quiver_name_to_string(QuiverName name);

/// Relabeling by a bijection: b'_{perm[i], perm[j]} = b_{ij}, d'_{perm[i]} = d_i.
Seed apply_vertex_permutation(const Seed& s, const std::vector<int>& perm);

/// JSON round-trip: {"n": int, "B2": [[int]], "d": [int]}.
std::string seed_to_json(const Seed& s);
Seed seed_from_json(const std::string& text);

}  // namespace qt
