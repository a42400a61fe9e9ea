#pragma once

#include <functional>
#include <vector>

#include "slgap/bigint.hpp"

namespace slgap::walks {

/// Exact return/level probabilities for the uniform walk on the free group
/// F_m. P[l] is the probability that the 2k-step walk ends at one FIXED
/// reduced word of length l (constant across B_l by tree symmetry);
/// walk_counts[l] counts all 2k-step letter sequences whose reduction has
/// length l.
struct FreeWalkStats {
  unsigned m = 2;
  unsigned k = 1;
  std::vector<BigInt> walk_counts;  // index l = 0..2k
  std::vector<BigRat> P;            // P[l]
  BigInt total;                     // (2m)^{2k}
};

FreeWalkStats free_walk_stats(unsigned m, unsigned k);

/// |B_l| = 2m (2m-1)^{l-1} for l >= 1, and 1 for l = 0.
BigInt reduced_word_count(unsigned m, unsigned l);

/// Exact Kesten bound P_k(0) <= ((2m-1)/m^2)^k.
bool kesten_bound_holds(const FreeWalkStats& s);

/// Exact normalization 1 = P_k(0) + sum_{l>=1} |B_l| P_k(l).
bool level_normalization_holds(const FreeWalkStats& s);

/// Depth-first enumeration of reduced words over letters 0..2m-1 where
/// letter 2i+1 is the inverse of letter 2i. enter(letter, depth) is called
/// when a letter is appended, leave() when it is popped; depth counts from
/// 1. Enumeration is in letter order, so runs are reproducible.
void walk_reduced_words(unsigned m, unsigned lmax,
                        const std::function<void(unsigned, unsigned)>& enter,
                        const std::function<void()>& leave);

/// Count, for each l <= lmax, the reduced words whose group image passes a
/// predicate. The caller supplies push/pop maintaining the image of the
/// current word and test() evaluating the predicate on it.
std::vector<BigInt> count_words_matching(
    unsigned m, unsigned lmax,
    const std::function<void(unsigned)>& push, const std::function<void()>& pop,
    const std::function<bool()>& test);

}  // namespace slgap::walks
