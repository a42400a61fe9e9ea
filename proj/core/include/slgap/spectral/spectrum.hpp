#pragma once

#include <string>

#include "slgap/bigint.hpp"
#include "slgap/spectral/cayley.hpp"
#include "slgap/walks/measure.hpp"

namespace slgap::spectral {

struct SpectrumReport {
  double lambda1 = 0;
  double lambda2 = 0;
  double gap = 0;  // 1 - lambda2
  std::string method;
  double residual = 0;
  unsigned iterations = 0;
  bool connected = true;
};

/// Top two eigenvalues of the normalized operator. Dense mode is a full
/// self-adjoint eigensolve; iterative mode is power iteration restricted
/// to the orthogonal complement of the constant vector (the known top
/// eigenvector of a connected regular graph), applied to (M+1)/2 so the
/// algebraically second-largest eigenvalue is the one found. A proper
/// subgroup as generated group is reported as lambda2 = 1, disconnected.
SpectrumReport spectrum_top2(const CayleyOperator& op,
                             double tol = 1e-9, unsigned max_iter = 100000);

/// Full dense spectrum, descending.
std::vector<double> dense_spectrum(const CayleyOperator& op);

/// Exact expansion constant min |boundary X| / |X| over all subsets with
/// |X| <= |G|/2; exponential scan, |G| <= 24.
double cheeger_exhaustive(const CayleyOperator& op);

/// Tr(M^{2k}) = |G| ||chi_S^{(k)}||_2^2, exact.
BigRat trace_moment(const groups::TablePtr& table,
                    const std::vector<std::uint32_t>& S, unsigned k);

/// Lower bound for the dimension of a nontrivial representation of
/// SL_d(F_{p^k}): (q-1)/2 for d = 2 and odd q, q^{d-1} - 1 otherwise,
/// never below 1.
unsigned long min_rep_dimension(std::uint64_t p, unsigned k, unsigned d);

struct EigenvalueBoundReport {
  double lhs = 0;       // lambda2^{2k}
  double rhs = 0;       // |G|^{1-delta'} ||chi^{(k)}||_2^2
  double delta_prime = 0;
  double lambda2 = 0;
  bool holds = false;
};

/// Checks lambda2^{2k} <= |G|^{1-delta'} ||chi_S^{(k)}||_2^2 with
/// delta' = log(min_rep_dimension)/log|G| unless overridden (> 0).
EigenvalueBoundReport eigenvalue_bound_check(
    const groups::TablePtr& table, const std::vector<std::uint32_t>& S,
    unsigned k, std::uint64_t p, unsigned field_degree, unsigned d,
    double delta_prime_override = 0);

}  // namespace slgap::spectral
