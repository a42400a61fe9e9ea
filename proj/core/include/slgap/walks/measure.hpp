#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "slgap/bigint.hpp"
#include "slgap/groups/table.hpp"

namespace slgap::walks {

using groups::TablePtr;

/// Measure on an indexed group. Exact mode keeps big-integer numerators
/// over a shared denominator (|S|^k for walk measures); float mode is only
/// reached through an explicit cast. Flattening exponents are the point of
/// these objects, so drift across ~40 convolutions is not acceptable.
class WalkMeasure {
 public:
  enum class Mode { Exact, Float };

  static WalkMeasure zero(TablePtr table, Mode mode = Mode::Exact);
  static WalkMeasure point_mass(TablePtr table, std::uint32_t g);
  /// Normalized counting measure of a multiset of indices.
  static WalkMeasure counting(TablePtr table, const std::vector<std::uint32_t>& support);
  static WalkMeasure uniform(TablePtr table);
  static WalkMeasure from_floats(TablePtr table, std::vector<double> w);

  Mode mode() const { return mode_; }
  const TablePtr& table() const { return table_; }
  std::uint32_t size() const { return table_->size(); }

  const std::vector<BigInt>& numerators() const { return num_; }
  const BigInt& denominator() const { return den_; }
  const std::vector<double>& floats() const { return w_; }

  double weight(std::uint32_t g) const;
  BigRat exact_weight(std::uint32_t g) const;

  WalkMeasure to_float() const;

  std::size_t support_size() const;
  double total_mass() const;
  bool is_probability(double tol = 1e-12) const;

  /// ||mu||_2^2, exact as a rational in exact mode.
  BigRat l2_norm_sq_exact() const;
  double l2_norm_sq() const;
  double linf() const;

  /// mu(A) for an index set.
  BigRat mass_exact(const std::vector<std::uint32_t>& A) const;
  double mass(const std::vector<std::uint32_t>& A) const;

 private:
  WalkMeasure() = default;
  friend WalkMeasure convolve(const WalkMeasure&, const WalkMeasure&, std::size_t);
  friend WalkMeasure reverse(const WalkMeasure&);
  friend WalkMeasure walk_power(TablePtr, const std::vector<std::uint32_t>&, unsigned);

  Mode mode_ = Mode::Exact;
  TablePtr table_;
  std::vector<BigInt> num_;
  BigInt den_ = 1;
  std::vector<double> w_;
};

/// (mu * nu)(g) = sum_h mu(g h^{-1}) nu(h). Same table and same mode
/// required; exact stays exact.
WalkMeasure convolve(const WalkMeasure& mu, const WalkMeasure& nu,
                     std::size_t budget = 50000000);

WalkMeasure reverse(const WalkMeasure& mu);  // mu~(g) = mu(g^{-1})

/// chi_S^{(k)} by exact walk counting: weight(g) = #(k-letter S-words
/// equal to g) / |S|^k. S is a multiset of indices.
WalkMeasure walk_power(TablePtr table, const std::vector<std::uint32_t>& S,
                       unsigned k);

/// mu(gH) for an explicit subgroup given as index set; g absent means H
/// itself. scan_all maximizes over all cosets.
BigRat coset_mass(const WalkMeasure& mu, const std::vector<std::uint32_t>& H,
                  std::uint32_t g);
BigRat coset_mass(const WalkMeasure& mu, const std::vector<std::uint32_t>& H);
BigRat max_coset_mass(const WalkMeasure& mu, const std::vector<std::uint32_t>& H);

double entropy(const WalkMeasure& mu);

/// Partitions are label vectors over group indices; every index in the
/// support of mu must be labeled (NotAPartition otherwise).
double partition_entropy(const WalkMeasure& mu, const std::vector<int>& labels);
double conditional_entropy(const WalkMeasure& mu, const std::vector<int>& A,
                           const std::vector<int>& B);
std::vector<int> join_partitions(const std::vector<int>& A,
                                 const std::vector<int>& B);

struct EscapeRow {
  unsigned l = 0;
  BigRat mass;
  double delta = 0;  // -log mass / log [G:H]
};

struct EscapeProfile {
  std::vector<EscapeRow> rows;
  double fitted_delta = 0;  // least-squares constant over the rows
  bool monotone = true;
  bool no_escape = false;  // mass stayed at 1 (S inside a coset of H)
  double log_index = 0;
};

EscapeProfile escape_profile(TablePtr table, const std::vector<std::uint32_t>& S,
                             const std::vector<std::uint32_t>& H,
                             const std::vector<unsigned>& even_ls);

struct FlattenRow {
  unsigned k = 0;
  BigInt l2sq_num;  // sum of squared numerators
  BigInt l2sq_den;  // |S|^{2k}
  double entropy = 0;
  std::size_t support = 0;
};

struct FlattenTrace {
  std::vector<FlattenRow> rows;
  int k_star = -1;  // first k with ||chi^{(k)}||_2 <= |G|^{-1/2+eps}
  double epsilon = 0.1;
  double ratio = 0;  // k_star / log |G|
};

FlattenTrace flatten_trace(TablePtr table, const std::vector<std::uint32_t>& S,
                           unsigned k_cap, double epsilon = 0.1);

/// One line per support element: "<hex encoding> <num>/<den>", sorted by
/// encoding.
std::string snapshot(const WalkMeasure& mu);

}  // namespace slgap::walks
