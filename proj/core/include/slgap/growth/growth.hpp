#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "json.hpp"
#include "slgap/groups/table.hpp"

namespace slgap::growth {

using groups::TablePtr;
using IndexSet = std::vector<std::uint32_t>;  // sorted, unique

IndexSet make_set(std::vector<std::uint32_t> v);
bool is_symmetric_set(const groups::GroupTable& T, const IndexSet& S);
IndexSet symmetrize(const groups::GroupTable& T, IndexSet S);

/// A.B = {gh : g in A, h in B}, exact.
IndexSet product_set(const groups::GroupTable& T, const IndexSet& A,
                     const IndexSet& B, std::size_t cap = 1u << 24);

/// k-fold iterated product of S.
IndexSet iterated_product(const groups::GroupTable& T, const IndexSet& S,
                          unsigned k, std::size_t cap = 1u << 24);

struct GrowthReport {
  std::size_t size_1 = 0;
  std::size_t size_3 = 0;
  std::map<unsigned, std::size_t> sizes_k;
  double delta_hat = 0;
  bool regime_ok = true;  // |S| <= |G|^{1-eps}
  /// |prod_k S|/|S| <= (|S.S.S|/|S|)^{k-2}, exact; this is a theorem, so
  /// a false entry means an implementation bug.
  std::map<unsigned, bool> iterated_inequality;

  nlohmann::json to_json() const;
};

/// Exact cardinalities, the tripling exponent with base
/// min(|S|, |G|/|S|), and the iterated-product inequality for each k.
GrowthReport tripling_report(const groups::GroupTable& T, const IndexSet& S,
                             const std::vector<unsigned>& k_list,
                             double regime_epsilon = 0.1);

struct GowersReport {
  double product_of_sizes = 0;
  double threshold = 0;  // |G|^3 / min_rep_dimension
  bool threshold_met = false;
  bool full_cover = false;
};

/// Covering check: A.B.C = G is guaranteed when |A||B||C| > |G|^3 / m(G)
/// with m(G) the minimal nontrivial representation dimension; computed
/// exhaustively with early exit either way.
GowersReport gowers_cover_check(const groups::GroupTable& T, const IndexSet& A,
                                const IndexSet& B, const IndexSet& C,
                                unsigned long min_dim);

}  // namespace slgap::growth
