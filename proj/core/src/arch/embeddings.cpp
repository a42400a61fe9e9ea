#include "slgap/arch/embeddings.hpp"

#include <Eigen/Eigenvalues>
#include <algorithm>
#include <cmath>

#include "slgap/errors.hpp"

namespace slgap::arch {

namespace {

std::complex<double> poly_eval(const std::vector<long long>& f,
                               std::complex<double> x) {
  std::complex<double> acc = 0;
  for (std::size_t i = f.size(); i-- > 0;) acc = acc * x + static_cast<double>(f[i]);
  return acc;
}

std::complex<double> poly_eval_deriv(const std::vector<long long>& f,
                                     std::complex<double> x) {
  std::complex<double> acc = 0;
  for (std::size_t i = f.size(); i-- > 1;)
    acc = acc * x + static_cast<double>(i) * static_cast<double>(f[i]);
  return acc;
}

}  // namespace

EmbeddingSet::EmbeddingSet(const NumberField& K, unsigned precision_digits)
    : precision_(precision_digits) {
  unsigned r = K.degree();
  const auto& f = K.f();

  if (r == 1) {
    roots_.push_back({static_cast<double>(-f[0]), 0.0});
    return;
  }

  // companion matrix eigenvalues, then Newton polish
  Eigen::MatrixXd C = Eigen::MatrixXd::Zero(r, r);
  for (unsigned i = 0; i + 1 < r; ++i) C(i + 1, i) = 1.0;
  for (unsigned i = 0; i < r; ++i) C(i, r - 1) = -static_cast<double>(f[i]);
  Eigen::EigenSolver<Eigen::MatrixXd> solver(C);
  if (solver.info() != Eigen::Success)
    raise(Errc::PrecisionLoss, "companion eigensolve failed");

  for (unsigned i = 0; i < r; ++i) {
    std::complex<double> z = solver.eigenvalues()[i];
    for (int it = 0; it < 60; ++it) {
      std::complex<double> fv = poly_eval(f, z);
      std::complex<double> dv = poly_eval_deriv(f, z);
      if (std::abs(dv) < 1e-300) break;
      std::complex<double> step = fv / dv;
      z -= step;
      if (std::abs(step) < 1e-16 * std::max(1.0, std::abs(z))) break;
    }
    roots_.push_back(z);
  }
  std::sort(roots_.begin(), roots_.end(), [](auto a, auto b) {
    if (a.real() != b.real()) return a.real() < b.real();
    return a.imag() < b.imag();
  });

  double tol = std::pow(10.0, -static_cast<double>(precision_ - 4));
  for (auto z : roots_)
    if (std::abs(poly_eval(f, z)) >= tol)
      raise(Errc::PrecisionLoss, "root refinement failed");
  for (unsigned i = 0; i < r; ++i)
    for (unsigned j = i + 1; j < r; ++j)
      if (std::abs(roots_[i] - roots_[j]) < 1e-9)
        raise(Errc::PrecisionLoss, "roots not separated");
}

std::complex<double> EmbeddingSet::eval(const OkElem& a, std::size_t i) const {
  std::complex<double> x = roots_.at(i), acc = 0;
  for (std::size_t j = a.c.size(); j-- > 0;)
    acc = acc * x + static_cast<double>(a.c[j]);
  return acc;
}

Eigen::MatrixXcd EmbeddingSet::matrix(const OkMatrix& m, std::size_t i) const {
  Eigen::MatrixXcd out(m.d, m.d);
  for (unsigned a = 0; a < m.d; ++a)
    for (unsigned b = 0; b < m.d; ++b) out(a, b) = eval(m.at(a, b), i);
  return out;
}

std::vector<Eigen::MatrixXcd> EmbeddingSet::hat_sigma(const OkMatrix& m) const {
  std::vector<Eigen::MatrixXcd> out;
  out.reserve(roots_.size());
  for (std::size_t i = 0; i < roots_.size(); ++i) out.push_back(matrix(m, i));
  return out;
}

double EmbeddingSet::sup_norm(const OkMatrix& m) const {
  double best = 0;
  for (std::size_t i = 0; i < roots_.size(); ++i)
    best = std::max(best, operator_norm(matrix(m, i)));
  return best;
}

double operator_norm(const Eigen::MatrixXcd& m) {
  Eigen::JacobiSVD<Eigen::MatrixXcd> svd(m);
  return svd.singularValues()[0];
}

}  // namespace slgap::arch
