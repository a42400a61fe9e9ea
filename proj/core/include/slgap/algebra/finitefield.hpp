#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "slgap/algebra/intpoly.hpp"

namespace slgap::algebra {

/// Element of F_{p^k}: coefficient vector of length k over F_p for the
/// class of x in F_p[x]/(g).
struct FFElem {
  std::vector<std::uint64_t> c;
  bool operator==(const FFElem& o) const { return c == o.c; }
  bool operator<(const FFElem& o) const { return c < o.c; }
};

/// F_{p^k} = F_p[x]/(g) for a monic irreducible g of degree k.
class FiniteField {
 public:
  FiniteField(std::uint64_t p, ModPoly modulus);

  std::uint64_t p() const { return p_; }
  unsigned k() const { return k_; }
  const ModPoly& modulus() const { return g_; }
  std::uint64_t order() const { return order_; }  // p^k

  FFElem zero() const;
  FFElem one() const;
  FFElem gen() const;  // class of x
  FFElem from_int(long long v) const;
  FFElem from_coeffs(std::vector<std::uint64_t> c) const;

  FFElem add(const FFElem& a, const FFElem& b) const;
  FFElem sub(const FFElem& a, const FFElem& b) const;
  FFElem neg(const FFElem& a) const;
  FFElem mul(const FFElem& a, const FFElem& b) const;
  FFElem inv(const FFElem& a) const;  // NotAUnit on zero
  FFElem pow(const FFElem& a, std::uint64_t e) const;
  bool is_zero(const FFElem& a) const;

  /// x |-> x^{p^e}
  FFElem frobenius(const FFElem& a, unsigned e = 1) const;

  /// Membership in the subfield F_{p^k'} for k' | k, tested via
  /// x^{p^{k'}} == x.
  bool in_subfield(const FFElem& a, unsigned k_prime) const;

  // Mixed-radix index <-> element, for exhaustive scans.
  FFElem element(std::uint64_t index) const;
  std::uint64_t index_of(const FFElem& a) const;

  std::string to_string(const FFElem& a) const;

  bool operator==(const FiniteField& o) const {
    return p_ == o.p_ && g_ == o.g_;
  }

 private:
  std::uint64_t p_;
  ModPoly g_;
  unsigned k_;
  std::uint64_t order_;
};

}  // namespace slgap::algebra
