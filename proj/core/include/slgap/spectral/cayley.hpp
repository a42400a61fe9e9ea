#pragma once

#include <Eigen/Dense>
#include <cstdint>
#include <vector>

#include "slgap/groups/table.hpp"

namespace slgap::spectral {

using groups::TablePtr;

constexpr std::uint32_t kDenseCap = 4096;

/// Convolution by chi_S from the left as an operator on l^2(G); |S| times
/// the matrix is the adjacency matrix of the Cayley graph. S is a
/// symmetric multiset of element indices.
class CayleyOperator {
 public:
  enum class Mode { Dense, MatrixFree };

  CayleyOperator(TablePtr table, std::vector<std::uint32_t> S, Mode mode);

  const TablePtr& table() const { return table_; }
  const std::vector<std::uint32_t>& generators() const { return S_; }
  Mode mode() const { return mode_; }
  std::uint32_t size() const { return n_; }
  std::size_t degree() const { return S_.size(); }

  /// y = M x with M = (1/|S|) sum_s P_{s^{-1}}.
  void apply(const std::vector<double>& x, std::vector<double>& y) const;

  /// Dense M; requires |G| <= kDenseCap (TooLargeForDense otherwise).
  Eigen::MatrixXd dense() const;

  /// Distinct neighbors of vertex g (for edge-boundary counting).
  std::vector<std::uint32_t> neighbors(std::uint32_t g) const;

 private:
  TablePtr table_;
  std::vector<std::uint32_t> S_;
  Mode mode_;
  std::uint32_t n_ = 0;
  std::vector<std::vector<std::uint32_t>> perms_;  // g -> s^{-1} g
};

CayleyOperator build_operator(TablePtr table, const std::vector<std::uint32_t>& S,
                              CayleyOperator::Mode mode);

}  // namespace slgap::spectral
