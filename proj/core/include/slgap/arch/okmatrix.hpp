#pragma once

#include <string>
#include <vector>

#include "slgap/algebra/numberfield.hpp"

namespace slgap::arch {

using algebra::NumberField;

/// Exact element of Z[theta]: integer coefficient vector of length r on
/// the power basis, no modulus. Arithmetic overflows are detected and
/// rejected rather than wrapped.
struct OkElem {
  std::vector<long long> c;
  bool operator==(const OkElem& o) const { return c == o.c; }
};

class OkRing {
 public:
  explicit OkRing(NumberField K);

  const NumberField& field() const { return K_; }
  unsigned degree() const { return r_; }

  OkElem zero() const;
  OkElem one() const;
  OkElem theta() const;
  OkElem from_int(long long v) const;
  OkElem from_coeffs(std::vector<long long> c) const;

  OkElem add(const OkElem& a, const OkElem& b) const;
  OkElem sub(const OkElem& a, const OkElem& b) const;
  OkElem neg(const OkElem& a) const;
  OkElem mul(const OkElem& a, const OkElem& b) const;
  bool is_zero(const OkElem& a) const;

  std::string to_string(const OkElem& a) const;

 private:
  NumberField K_;
  unsigned r_;
  // x^r .. x^{2r-2} reduced mod f, exact integers
  std::vector<std::vector<long long>> xpow_;
};

/// Exact d x d matrix over Z[theta] with determinant 1.
struct OkMatrix {
  unsigned d = 2;
  std::vector<OkElem> e;

  const OkElem& at(unsigned i, unsigned j) const { return e[i * d + j]; }
  bool operator==(const OkMatrix& o) const { return e == o.e; }
};

OkMatrix ok_identity(const OkRing& R, unsigned d);
OkMatrix ok_from_ints(const OkRing& R, unsigned d,
                      const std::vector<long long>& rowmajor);
OkMatrix ok_from_coeffs(const OkRing& R, unsigned d,
                        const std::vector<std::vector<long long>>& entries);
OkMatrix ok_mul(const OkRing& R, const OkMatrix& a, const OkMatrix& b);
OkMatrix ok_inverse(const OkRing& R, const OkMatrix& a);  // det must be 1
OkElem ok_det(const OkRing& R, const OkMatrix& a);
OkMatrix ok_pow(const OkRing& R, const OkMatrix& a, unsigned e);
std::string ok_key(const OkMatrix& a);

}  // namespace slgap::arch
