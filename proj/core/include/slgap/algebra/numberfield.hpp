#pragma once

#include <vector>

#include "slgap/algebra/intpoly.hpp"
#include "slgap/bigint.hpp"

namespace slgap::algebra {

/// K = Q[x]/(f) for a monic irreducible integer polynomial f; the ring of
/// integers is represented as Z[theta] on the power basis 1, theta, ...,
/// theta^{r-1}.
class NumberField {
 public:
  /// Rejects non-monic input, any f with a rational factor found by the
  /// implemented factor search, and zero discriminant.
  static NumberField make(IntPoly f_coeffs);

  unsigned degree() const { return degree_; }
  const IntPoly& f() const { return f_; }
  const BigInt& discriminant() const { return disc_; }

  bool operator==(const NumberField& o) const { return f_ == o.f_; }

 private:
  NumberField() = default;
  IntPoly f_;
  unsigned degree_ = 0;
  BigInt disc_;
};

inline NumberField rational_field() { return NumberField::make({0, 1}); }

}  // namespace slgap::algebra
