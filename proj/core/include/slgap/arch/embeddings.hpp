#pragma once

#include <Eigen/Dense>
#include <complex>
#include <vector>

#include "slgap/arch/okmatrix.hpp"

namespace slgap::arch {

/// The r complex embeddings of K, realized by the complex roots of f.
/// Everything archimedean is numeric with an explicit precision target;
/// |f(root)| < 10^{-(precision-4)} is enforced at construction.
class EmbeddingSet {
 public:
  explicit EmbeddingSet(const NumberField& K, unsigned precision_digits = 14);

  unsigned count() const { return static_cast<unsigned>(roots_.size()); }
  unsigned precision() const { return precision_; }
  const std::vector<std::complex<double>>& roots() const { return roots_; }

  std::complex<double> eval(const OkElem& a, std::size_t i) const;
  Eigen::MatrixXcd matrix(const OkMatrix& m, std::size_t i) const;
  std::vector<Eigen::MatrixXcd> hat_sigma(const OkMatrix& m) const;

  /// max over embeddings of the operator 2-norm of sigma_i(m).
  double sup_norm(const OkMatrix& m) const;

 private:
  std::vector<std::complex<double>> roots_;
  unsigned precision_;
};

double operator_norm(const Eigen::MatrixXcd& m);

}  // namespace slgap::arch
