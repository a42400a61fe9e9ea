#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "json.hpp"
#include "slgap/algebra/finitefield.hpp"
#include "slgap/algebra/numberfield.hpp"

namespace slgap::algebra {

/// Element of O_K/(q): coefficient vector of length r = deg f with entries
/// in [0, q) on the power basis.
struct RingElem {
  std::vector<std::uint64_t> c;
  bool operator==(const RingElem& o) const { return c == o.c; }
  bool operator<(const RingElem& o) const { return c < o.c; }
};

struct CrtFactor {
  std::uint64_t p;
  ModPoly g;       // monic irreducible factor of f mod p
  unsigned k;      // deg g
  FiniteField F;   // F_{p^k}
};

/// O_K/(q) for square-free q coprime to disc(f), with its CRT splitting
/// into finite fields. Immutable after construction.
class ResidueRing {
 public:
  ResidueRing(NumberField K, std::uint64_t q);

  const NumberField& field() const { return K_; }
  std::uint64_t q() const { return q_; }
  unsigned degree() const { return r_; }
  const std::vector<std::uint64_t>& primes() const { return primes_; }
  const std::vector<CrtFactor>& factors() const { return factors_; }
  BigInt cardinality() const;  // q^r

  RingElem zero() const;
  RingElem one() const;
  RingElem theta() const;  // class of x; equals from_int applied to a root when r = 1
  RingElem from_int(long long v) const;
  RingElem from_coeffs(std::vector<long long> c) const;

  RingElem add(const RingElem& a, const RingElem& b) const;
  RingElem sub(const RingElem& a, const RingElem& b) const;
  RingElem neg(const RingElem& a) const;
  RingElem mul(const RingElem& a, const RingElem& b) const;
  bool is_zero(const RingElem& a) const;
  bool is_unit(const RingElem& a) const;
  RingElem inv(const RingElem& a) const;  // NotAUnit if any CRT component vanishes

  /// Componentwise ring homomorphism onto the CRT factors, one FFElem per
  /// factor in stored order.
  std::vector<FFElem> split(const RingElem& a) const;
  /// Inverse of split; parts must cover every factor exactly once.
  RingElem join(const std::vector<FFElem>& parts) const;

  /// Bytes per coefficient in the canonical fixed-width encoding.
  unsigned coeff_width() const { return width_; }
  void encode_into(const RingElem& a, std::string& out) const;
  std::string to_text(const RingElem& a) const;  // "c0,c1,...,c_{r-1}"
  RingElem from_text(const std::string& s) const;

  nlohmann::json descriptor() const;

  bool operator==(const ResidueRing& o) const {
    return K_ == o.K_ && q_ == o.q_;
  }

 private:
  NumberField K_;
  std::uint64_t q_ = 0;
  unsigned r_ = 0;
  unsigned width_ = 1;
  std::vector<std::uint64_t> primes_;
  std::vector<CrtFactor> factors_;
  // precomputed reduction of x^r..x^{2r-2} mod (q, f)
  std::vector<std::vector<std::uint64_t>> xpow_;
  // CRT joining data per prime: e_{p} with e_p == 1 mod p, 0 mod q/p
  std::vector<std::uint64_t> prime_idem_;
  // per prime: list of factor indices, and per factor the poly CRT basis
  struct PrimeBlock {
    std::uint64_t p;
    std::vector<std::size_t> factor_idx;
    // basis[j] in F_p[x]/(f mod p): == 1 mod g_j, == 0 mod other g_i
    std::vector<ModPoly> basis;
  };
  std::vector<PrimeBlock> blocks_;
};

using RingPtr = std::shared_ptr<const ResidueRing>;

RingPtr make_residue_ring(const NumberField& K, std::uint64_t q);

}  // namespace slgap::algebra
