#pragma once

#include <cstdint>
#include <vector>

#include "slgap/walks/measure.hpp"

namespace slgap::walks {

/// Output of the level-set extraction: a symmetric candidate approximate
/// subgroup together with the diagnostics that quantify how good a witness
/// it is. The inner refinement of the usual product-set argument is
/// deliberately skipped; level sets are used directly, which the reported
/// tripling ratio makes visible.
struct BsgResult {
  int level_i = 0;
  int level_j = 0;
  std::vector<std::uint32_t> level_set;  // A = A_i
  std::vector<std::uint32_t> witness;    // S, symmetric
  std::size_t prod3_size = 0;
  double tripling_ratio = 0;   // |prod_3 S| / |S|
  double min_correlation = 0;  // min_{g in S} (mu~ * mu)(g) * |S|
  double threshold_c = 0;      // C = 2 |A.A~| / |A|
};

/// Requires ||mu * nu||_2 > ||mu||_2^{1/2} ||nu||_2^{1/2} / K
/// (HypothesisNotMet otherwise), scans dyadic level sets of mu and nu for
/// |i| < 10 log K, and extracts S = {g : |A cap A.g| > |A| / C}.
BsgResult bsg_extract(const WalkMeasure& mu, const WalkMeasure& nu, double K);

}  // namespace slgap::walks
