#include "slgap/spectral/spectrum.hpp"

#include <Eigen/Eigenvalues>
#include <algorithm>
#include <cmath>

#include "slgap/errors.hpp"
#include "slgap/rng.hpp"

namespace slgap::spectral {

namespace {

SpectrumReport dense_top2(const CayleyOperator& op) {
  Eigen::MatrixXd M = op.dense();
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(M);
  if (solver.info() != Eigen::Success)
    raise(Errc::NoConvergence, "dense eigensolver failed");
  const auto& ev = solver.eigenvalues();  // ascending
  SpectrumReport rep;
  rep.method = "dense";
  std::uint32_t n = op.size();
  rep.lambda1 = ev[n - 1];
  rep.lambda2 = n >= 2 ? ev[n - 2] : ev[n - 1];
  rep.gap = 1.0 - rep.lambda2;
  rep.residual = 0;
  rep.iterations = 0;
  rep.connected = rep.lambda2 < 1.0 - 1e-9;
  return rep;
}

// power iteration on op restricted to a subspace selector, applied to the
// shifted operator (M + 1)/2 so convergence is toward the algebraic top
void project_out_constant(std::vector<double>& v) {
  double mean = 0;
  for (double x : v) mean += x;
  mean /= static_cast<double>(v.size());
  for (double& x : v) x -= mean;
}

double norm2(const std::vector<double>& v) {
  double s = 0;
  for (double x : v) s += x * x;
  return std::sqrt(s);
}

SpectrumReport iterative_top2(const CayleyOperator& op, double tol,
                              unsigned max_iter) {
  std::uint32_t n = op.size();
  SpectrumReport rep;
  rep.method = "iterative";
  rep.lambda1 = 1.0;  // row-stochastic symmetric operator

  SplitMix64 rng(0x5eed5eedULL);
  std::vector<double> v(n), Mv(n), shifted(n);
  for (auto& x : v) x = rng.unit() - 0.5;
  project_out_constant(v);
  double nv = norm2(v);
  if (nv == 0) {
    v[0] = 1;
    project_out_constant(v);
    nv = norm2(v);
  }
  for (auto& x : v) x /= nv;

  double lambda = 0, residual = 0;
  unsigned it = 0;
  for (; it < max_iter; ++it) {
    op.apply(v, Mv);
    // Rayleigh quotient of M on the current iterate
    lambda = 0;
    for (std::uint32_t i = 0; i < n; ++i) lambda += v[i] * Mv[i];
    residual = 0;
    for (std::uint32_t i = 0; i < n; ++i) {
      double r = Mv[i] - lambda * v[i];
      residual += r * r;
    }
    residual = std::sqrt(residual);
    if (residual <= tol) break;
    // next iterate: (M + 1)/2 v, re-orthogonalized against constants
    for (std::uint32_t i = 0; i < n; ++i) shifted[i] = 0.5 * (Mv[i] + v[i]);
    project_out_constant(shifted);
    double ns = norm2(shifted);
    if (ns == 0) raise(Errc::NoConvergence, "iterate vanished");
    for (std::uint32_t i = 0; i < n; ++i) v[i] = shifted[i] / ns;
  }
  if (residual > tol)
    raise(Errc::NoConvergence,
          "residual " + std::to_string(residual) + " after " +
              std::to_string(it) + " iterations");
  rep.lambda2 = lambda;
  rep.gap = 1.0 - lambda;
  rep.residual = residual;
  rep.iterations = it;
  rep.connected = rep.lambda2 < 1.0 - 1e-7;
  return rep;
}

}  // namespace

SpectrumReport spectrum_top2(const CayleyOperator& op, double tol,
                             unsigned max_iter) {
  if (op.mode() == CayleyOperator::Mode::Dense) return dense_top2(op);
  return iterative_top2(op, tol, max_iter);
}

std::vector<double> dense_spectrum(const CayleyOperator& op) {
  Eigen::MatrixXd M = op.dense();
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(M);
  if (solver.info() != Eigen::Success)
    raise(Errc::NoConvergence, "dense eigensolver failed");
  std::vector<double> ev(solver.eigenvalues().data(),
                         solver.eigenvalues().data() + op.size());
  std::reverse(ev.begin(), ev.end());
  return ev;
}

double cheeger_exhaustive(const CayleyOperator& op) {
  std::uint32_t n = op.size();
  if (n > 24) raise(Errc::TooLarge, "exhaustive Cheeger scan capped at 24");
  std::vector<std::vector<std::uint32_t>> adj(n);
  for (std::uint32_t g = 0; g < n; ++g) adj[g] = op.neighbors(g);

  double best = -1;
  std::uint32_t full = (n >= 32) ? 0xffffffffu : ((1u << n) - 1);
  for (std::uint32_t mask = 1; mask <= full && mask != 0; ++mask) {
    int size = __builtin_popcount(mask);
    if (size == 0 || 2 * size > static_cast<int>(n)) continue;
    int boundary = 0;
    for (std::uint32_t g = 0; g < n; ++g) {
      if (!(mask >> g & 1)) continue;
      for (auto h : adj[g])
        if (!(mask >> h & 1)) ++boundary;
    }
    double ratio = static_cast<double>(boundary) / size;
    if (best < 0 || ratio < best) best = ratio;
  }
  return best;
}

BigRat trace_moment(const groups::TablePtr& table,
                    const std::vector<std::uint32_t>& S, unsigned k) {
  auto chi = walks::walk_power(table, S, k);
  BigRat l2 = chi.l2_norm_sq_exact();
  BigRat out = BigRat(static_cast<unsigned long>(table->size())) * l2;
  out.canonicalize();
  return out;
}

unsigned long min_rep_dimension(std::uint64_t p, unsigned k, unsigned d) {
  std::uint64_t q = 1;
  for (unsigned i = 0; i < k; ++i) q *= p;
  unsigned long bound;
  if (d == 2 && p != 2) {
    bound = static_cast<unsigned long>((q - 1) / 2);
  } else {
    unsigned long qd = 1;
    for (unsigned i = 0; i + 1 < d; ++i) qd *= q;
    bound = qd - 1;
  }
  return std::max(bound, 1UL);
}

EigenvalueBoundReport eigenvalue_bound_check(
    const groups::TablePtr& table, const std::vector<std::uint32_t>& S,
    unsigned k, std::uint64_t p, unsigned field_degree, unsigned d,
    double delta_prime_override) {
  EigenvalueBoundReport rep;
  double logG = std::log(static_cast<double>(table->size()));
  rep.delta_prime =
      delta_prime_override > 0
          ? delta_prime_override
          : std::log(static_cast<double>(min_rep_dimension(p, field_degree, d))) /
                logG;

  CayleyOperator op(table, S, CayleyOperator::Mode::Dense);
  auto spec = spectrum_top2(op);
  rep.lambda2 = spec.lambda2;

  auto chi = walks::walk_power(table, S, k);
  double l2sq = chi.l2_norm_sq();
  rep.lhs = std::pow(std::abs(spec.lambda2), 2.0 * k);
  rep.rhs = std::exp((1.0 - rep.delta_prime) * logG) * l2sq;
  rep.holds = rep.lhs <= rep.rhs * (1 + 1e-9);
  return rep;
}

}  // namespace slgap::spectral
