#pragma once

#include <cstdint>
#include <vector>

#include "slgap/groups/subgroups.hpp"

namespace slgap::growth {

using groups::GroupElem;

struct TreeRegularization {
  std::vector<GroupElem> regular_subset;   // A, a subset of the input
  std::vector<std::uint64_t> degrees;      // D_i per CRT factor level
  double loss_bound = 1;                   // prod_i (2 log2 |G_i| + 1)
};

/// Regularizes the CRT projection tree of S (levels ordered as the ring
/// orders its factors: ascending prime, then residue degree). Levels are
/// processed bottom-up; at each level the parents are bucketed dyadically
/// by child count, the bucket with maximal retained mass wins, and every
/// surviving parent keeps the bucket-minimum number of children (the
/// lexicographically first ones, for reproducibility). The result is a
/// regular tree: level i vertices all have exactly D_i children.
TreeRegularization tree_regularize(const std::vector<GroupElem>& S);

struct CosetStripResult {
  std::vector<GroupElem> kept;             // B
  std::vector<std::size_t> stripped;       // factor indices moved to J_b
  std::vector<std::size_t> surviving;      // J_g
};

/// Iteratively restricts S to a coset wherever some CRT factor sees atlas
/// coset mass >= |G_i|^{-delta'}; each restriction retires that factor.
/// On return every surviving factor has all atlas-coset masses below the
/// threshold (re-verified by a full scan).
CosetStripResult coset_strip(const std::vector<GroupElem>& S,
                             double delta_prime);

/// Postcondition scan used by coset_strip and its tests.
bool coset_strip_verified(const CosetStripResult& result, double delta_prime);

}  // namespace slgap::growth
