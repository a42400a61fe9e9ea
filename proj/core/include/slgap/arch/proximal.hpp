#pragma once

#include <Eigen/Dense>

#include "slgap/arch/embeddings.hpp"

namespace slgap::arch {

/// Matrix of v -> g v g^{-1} on the traceless d x d matrices, in the fixed
/// basis E_ij (i != j, row-major order) followed by H_i = E_ii - E_{i+1,i+1}.
/// det(g) must be 1 within 1e-6 (PrecisionLoss otherwise).
Eigen::MatrixXcd adjoint_matrix(const Eigen::MatrixXcd& g);

/// The fixed sl_d basis used by adjoint_matrix, as d x d matrices.
std::vector<Eigen::MatrixXcd> sl_basis(unsigned d);

struct ProximalityReport {
  double lambda_top = 0;     // modulus of the largest eigenvalue
  double lambda_second = 0;  // modulus of the next one
  double ratio = 0;          // lambda_second / lambda_top
  bool proximal = false;
  Eigen::VectorXcd top_direction;         // z_T, unit norm
  Eigen::MatrixXcd invariant_complement;  // orthonormal basis for V_T
};

/// Proximal = unique simple eigenvalue of maximal modulus (gap beyond
/// gap_tol relative). When proximal, z_T and an orthonormal basis of the
/// invariant complement (the column space of T - lambda I) are returned.
ProximalityReport proximality(const Eigen::MatrixXcd& T, double gap_tol = 1e-6,
                              double cond_cap = 1e12);

/// d(x, y) = ||x ^ y|| / (||x|| ||y||), the sine of the Hermitian angle.
double projective_distance(const Eigen::VectorXcd& x, const Eigen::VectorXcd& y);

/// Distance from a projective point to the projectivization of a subspace
/// spanned by orthonormal columns.
double distance_to_subspace(const Eigen::VectorXcd& x, const Eigen::MatrixXcd& V);

/// Attracting direction of T on projective space: normalized T^N x0 for a
/// deterministic start and large N. Agrees with the top eigenvector for
/// proximal T and is the natural substitute for parabolic elements.
Eigen::VectorXcd dominant_direction(const Eigen::MatrixXcd& T, unsigned iters = 256);

}  // namespace slgap::arch
