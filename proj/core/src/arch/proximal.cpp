#include "slgap/arch/proximal.hpp"

#include <Eigen/Eigenvalues>
#include <algorithm>
#include <cmath>

#include "slgap/errors.hpp"

namespace slgap::arch {

std::vector<Eigen::MatrixXcd> sl_basis(unsigned d) {
  std::vector<Eigen::MatrixXcd> basis;
  for (unsigned i = 0; i < d; ++i)
    for (unsigned j = 0; j < d; ++j) {
      if (i == j) continue;
      Eigen::MatrixXcd E = Eigen::MatrixXcd::Zero(d, d);
      E(i, j) = 1.0;
      basis.push_back(E);
    }
  for (unsigned i = 0; i + 1 < d; ++i) {
    Eigen::MatrixXcd H = Eigen::MatrixXcd::Zero(d, d);
    H(i, i) = 1.0;
    H(i + 1, i + 1) = -1.0;
    basis.push_back(H);
  }
  return basis;
}

Eigen::MatrixXcd adjoint_matrix(const Eigen::MatrixXcd& g) {
  unsigned d = static_cast<unsigned>(g.rows());
  std::complex<double> dt = g.determinant();
  if (std::abs(dt - std::complex<double>(1.0, 0.0)) > 1e-6)
    raise(Errc::PrecisionLoss, "adjoint input determinant far from 1");
  auto basis = sl_basis(d);
  unsigned n = static_cast<unsigned>(basis.size());

  // Gram matrix of the trace form <x,y> = Tr(xy) on the basis
  Eigen::MatrixXcd G(n, n);
  for (unsigned i = 0; i < n; ++i)
    for (unsigned j = 0; j < n; ++j)
      G(i, j) = (basis[i] * basis[j]).trace();
  Eigen::PartialPivLU<Eigen::MatrixXcd> lu(G);

  Eigen::MatrixXcd ginv = g.inverse();
  Eigen::MatrixXcd M(n, n);
  for (unsigned k = 0; k < n; ++k) {
    Eigen::MatrixXcd image = g * basis[k] * ginv;
    Eigen::VectorXcd t(n);
    for (unsigned j = 0; j < n; ++j) t(j) = (basis[j] * image).trace();
    M.col(k) = lu.solve(t);
  }
  return M;
}

ProximalityReport proximality(const Eigen::MatrixXcd& T, double gap_tol,
                              double cond_cap) {
  Eigen::JacobiSVD<Eigen::MatrixXcd> svd(T);
  double smax = svd.singularValues()[0];
  double smin = svd.singularValues()[svd.singularValues().size() - 1];
  if (smin <= 0 || smax / smin > cond_cap)
    raise(Errc::IllConditioned, "condition number above cap");

  Eigen::ComplexEigenSolver<Eigen::MatrixXcd> solver(T);
  if (solver.info() != Eigen::Success)
    raise(Errc::PrecisionLoss, "eigensolve failed");
  Eigen::VectorXcd ev = solver.eigenvalues();
  unsigned n = static_cast<unsigned>(ev.size());
  std::vector<unsigned> order(n);
  for (unsigned i = 0; i < n; ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&](unsigned a, unsigned b) {
    return std::abs(ev[a]) > std::abs(ev[b]);
  });

  ProximalityReport rep;
  rep.lambda_top = std::abs(ev[order[0]]);
  rep.lambda_second = n > 1 ? std::abs(ev[order[1]]) : 0.0;
  rep.ratio = rep.lambda_top > 0 ? rep.lambda_second / rep.lambda_top : 1.0;
  rep.proximal = rep.lambda_top > 0 &&
                 rep.lambda_second < rep.lambda_top * (1.0 - gap_tol);
  if (rep.proximal) {
    rep.top_direction = solver.eigenvectors().col(order[0]).normalized();
    // invariant complement = column space of (T - lambda I)
    Eigen::MatrixXcd shifted =
        T - ev[order[0]] * Eigen::MatrixXcd::Identity(n, n);
    Eigen::ColPivHouseholderQR<Eigen::MatrixXcd> qr(shifted);
    qr.setThreshold(1e-9);
    unsigned rank = static_cast<unsigned>(qr.rank());
    if (rank != n - 1)
      raise(Errc::PrecisionLoss, "complement rank deficient");
    Eigen::MatrixXcd Q = qr.householderQ();
    rep.invariant_complement = Q.leftCols(rank);
  }
  return rep;
}

double projective_distance(const Eigen::VectorXcd& x,
                           const Eigen::VectorXcd& y) {
  double nx = x.norm(), ny = y.norm();
  if (nx == 0 || ny == 0) raise(Errc::ZeroVector, "projective point from 0");
  std::complex<double> inner = (x.adjoint() * y)(0, 0);
  double c = std::abs(inner) / (nx * ny);
  double s2 = 1.0 - c * c;
  return s2 <= 0 ? 0.0 : std::sqrt(s2);
}

double distance_to_subspace(const Eigen::VectorXcd& x,
                            const Eigen::MatrixXcd& V) {
  double nx = x.norm();
  if (nx == 0) raise(Errc::ZeroVector, "projective point from 0");
  Eigen::VectorXcd proj = V * (V.adjoint() * x);
  return (x - proj).norm() / nx;
}

Eigen::VectorXcd dominant_direction(const Eigen::MatrixXcd& T, unsigned iters) {
  unsigned n = static_cast<unsigned>(T.rows());
  Eigen::VectorXcd v(n);
  for (unsigned i = 0; i < n; ++i)
    v(i) = std::complex<double>(1.0 + 0.1 * i, 0.05 * (i + 1));
  v.normalize();
  for (unsigned i = 0; i < iters; ++i) {
    v = T * v;
    double nv = v.norm();
    if (nv == 0) raise(Errc::ZeroVector, "dominant direction collapsed");
    v /= nv;
  }
  return v;
}

}  // namespace slgap::arch
