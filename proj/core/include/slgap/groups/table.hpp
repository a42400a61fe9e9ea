#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <unordered_map>
#include <vector>

#include "slgap/bigint.hpp"
#include "slgap/groups/element.hpp"

namespace slgap::groups {

/// SL_d over a residue ring, with the exact order computed per CRT factor:
/// |SL_d(F_s)| = s^{d(d-1)/2} prod_{i=2..d} (s^i - 1).
struct GroupSpec {
  unsigned d = 2;
  RingPtr ring;
  BigInt order;

  static GroupSpec make(RingPtr ring, unsigned d);
  double log_order() const { return log_bigint(order); }
};

BigInt sl_order(const BigInt& s, unsigned d);

constexpr std::size_t kDefaultEnumCap = 100000;

/// Full element set, sorted by canonical encoding. TooLarge above the cap.
std::vector<GroupElem> enumerate_group(const GroupSpec& spec,
                                       std::size_t cap = kDefaultEnumCap);

/// All of SL_d(F) by a full coefficient scan.
std::vector<FqMatrix> enumerate_sl_fq(const algebra::FiniteField& F, unsigned d,
                                      double work_cap = 5e8);

/// An indexed finite group: either a list of matrix elements with products
/// computed on demand, or an explicit multiplication table (used for small
/// non-matrix examples such as cyclic groups).
class GroupTable {
 public:
  static std::shared_ptr<const GroupTable> from_elements(
      std::vector<GroupElem> elems);
  static std::shared_ptr<const GroupTable> from_spec(
      const GroupSpec& spec, std::size_t cap = kDefaultEnumCap);
  static std::shared_ptr<const GroupTable> cyclic(std::uint32_t n);

  std::uint32_t size() const { return n_; }
  std::uint32_t id() const { return id_; }
  std::uint32_t mul(std::uint32_t a, std::uint32_t b) const;
  std::uint32_t inv(std::uint32_t a) const;

  bool has_elements() const { return !elems_.empty(); }
  const GroupElem& elem(std::uint32_t i) const { return elems_[i]; }
  const std::vector<GroupElem>& elements() const { return elems_; }
  std::uint32_t index_of(const GroupElem& g) const;
  std::optional<std::uint32_t> find(const std::string& key) const;

  /// Label used in text output: canonical hex for matrix-backed groups,
  /// the index itself otherwise.
  std::string label(std::uint32_t i) const;

  /// Permutation g |-> s^{-1} g as an index array (left-convolution step).
  std::vector<std::uint32_t> left_translation_inv(std::uint32_t s) const;

 private:
  GroupTable() = default;
  std::uint32_t n_ = 0;
  std::uint32_t id_ = 0;
  std::vector<GroupElem> elems_;
  std::unordered_map<std::string, std::uint32_t> index_;
  std::vector<std::uint32_t> mul_table_;  // explicit-table mode (n_ columns)
  std::vector<std::uint32_t> inv_table_;
};

using TablePtr = std::shared_ptr<const GroupTable>;

/// Entrywise CRT projection onto the sub-ring O/(q') for the given primes;
/// a group homomorphism. The target must consist of whole primes of the
/// modulus (single CRT factors of a split prime are reached with
/// factor_image instead).
GroupElem project(const GroupElem& g, const std::vector<std::uint64_t>& primes);

/// d(g, h) = sum of log |G_i| over CRT factors where the projections
/// differ.
double factorwise_distance(const GroupElem& g, const GroupElem& h);

/// log |SL_d(F_{p^k})| for one factor.
double factor_log_order(const algebra::CrtFactor& fac, unsigned d);

}  // namespace slgap::groups
