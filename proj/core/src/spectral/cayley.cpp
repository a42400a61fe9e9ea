#include "slgap/spectral/cayley.hpp"

#include <algorithm>

#include "slgap/errors.hpp"

namespace slgap::spectral {

CayleyOperator::CayleyOperator(TablePtr table, std::vector<std::uint32_t> S,
                               Mode mode)
    : table_(std::move(table)), S_(std::move(S)), mode_(mode) {
  n_ = table_->size();
  if (S_.empty()) raise(Errc::NotSymmetric, "empty generator multiset");
  // S must equal its inverse multiset, with multiplicity
  std::vector<std::uint32_t> sorted = S_, inv;
  inv.reserve(S_.size());
  for (auto s : S_) inv.push_back(table_->inv(s));
  std::sort(sorted.begin(), sorted.end());
  std::sort(inv.begin(), inv.end());
  if (sorted != inv)
    raise(Errc::NotSymmetric, "generator multiset not closed under inverse");
  if (mode_ == Mode::Dense && n_ > kDenseCap)
    raise(Errc::TooLargeForDense,
          "dense mode requires |G| <= " + std::to_string(kDenseCap));
  perms_.reserve(S_.size());
  for (auto s : S_) perms_.push_back(table_->left_translation_inv(s));
}

void CayleyOperator::apply(const std::vector<double>& x,
                           std::vector<double>& y) const {
  y.assign(n_, 0.0);
  for (const auto& perm : perms_)
    for (std::uint32_t g = 0; g < n_; ++g) y[g] += x[perm[g]];
  double inv_deg = 1.0 / static_cast<double>(S_.size());
  for (auto& v : y) v *= inv_deg;
}

Eigen::MatrixXd CayleyOperator::dense() const {
  if (n_ > kDenseCap)
    raise(Errc::TooLargeForDense, "group too large for a dense matrix");
  Eigen::MatrixXd M = Eigen::MatrixXd::Zero(n_, n_);
  double inv_deg = 1.0 / static_cast<double>(S_.size());
  // column h spreads mass to rows g with g = s h, i.e. (M)_{g,h} with
  // h = s^{-1} g
  for (const auto& perm : perms_)
    for (std::uint32_t g = 0; g < n_; ++g) M(g, perm[g]) += inv_deg;
  return M;
}

std::vector<std::uint32_t> CayleyOperator::neighbors(std::uint32_t g) const {
  std::vector<std::uint32_t> out;
  out.reserve(S_.size());
  for (auto s : S_) out.push_back(table_->mul(s, g));
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

CayleyOperator build_operator(TablePtr table,
                              const std::vector<std::uint32_t>& S,
                              CayleyOperator::Mode mode) {
  return CayleyOperator(std::move(table), S, mode);
}

}  // namespace slgap::spectral
