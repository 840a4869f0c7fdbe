/**
 * @file tropical.hpp
 * @brief Tropical y-seeds via c-vectors: tropical mutation, sign coherence,
 *        sign-sequence extraction, and tropical periodicity checks.
 *
 * The i-th row of C is the exponent vector (c-vector) of the tropical
 * variable y_i in the initial semifield coordinates.  Mutation at k:
 *   c'_k = -c_k,  c'_i = c_i + c_k [eps_k b_ik]_+  (i != k),
 * where eps_k is the sign of the (sign-coherent) row k.
 */
#pragma once

#include "qt/quiver.hpp"

namespace qt {

struct TropSeed {
    Seed seed;
    IMat C;  // rows are c-vectors

    static TropSeed initial(const Seed& s);

    /// +1 if row k is >= 0 (and nonzero), -1 if <= 0; throws on mixed signs
    /// or the zero vector.
    int row_sign(int k) const;

    friend bool operator==(const TropSeed&, const TropSeed&) = default;
};

/// One tropical mutation step; returns the new seed and the tropical sign
/// consumed at vertex k.
std::pair<TropSeed, int> mutate_tropical(const TropSeed& t, int k);

/// Signs of y_{i_t}(t) along the sequence (1-based verdict order).
std::vector<int> sign_sequence(const Seed& start, const std::vector<int>& seq);

/// Apply a whole sequence then a relabeling permutation to (B, C).
TropSeed apply_sequence(const TropSeed& t, const std::vector<int>& seq,
                        const std::vector<int>& perm);

/// True iff both mutation-sequence/permutation paths from `start` give the
/// same final (B, C).
bool verify_tropical_periodicity(const Seed& start, const std::vector<int>& seqA,
                                 const std::vector<int>& permA,
                                 const std::vector<int>& seqB,
                                 const std::vector<int>& permB);

std::vector<int> identity_perm(int n);

/// Transposition of a and b (0-based) as a relabeling permutation.
std::vector<int> transposition(int n, int a, int b);

}  // namespace qt
