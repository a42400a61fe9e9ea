#pragma once

#include <gmpxx.h>

#include <cmath>
#include <string>

namespace slgap {

// Exact integer / rational arithmetic. Walk counts and product-set
// cardinalities are kept exact end to end; floats only appear via an
// explicit conversion.
using BigInt = mpz_class;
using BigRat = mpq_class;

inline BigInt bigint_pow(const BigInt& base, unsigned long e) {
  BigInt out;
  mpz_pow_ui(out.get_mpz_t(), base.get_mpz_t(), e);
  return out;
}

inline BigInt bigint_pow(unsigned long base, unsigned long e) {
  BigInt out;
  mpz_ui_pow_ui(out.get_mpz_t(), base, e);
  return out;
}

/// Natural log of a positive integer, accurate to double precision even
/// when the value itself overflows double range.
inline double log_bigint(const BigInt& x) {
  signed long exp2 = 0;
  double m = mpz_get_d_2exp(&exp2, x.get_mpz_t());
  return std::log(m) + static_cast<double>(exp2) * std::log(2.0);
}

inline double to_double(const BigRat& x) {
  return mpq_get_d(x.get_mpq_t());
}

inline std::string to_string(const BigInt& x) { return x.get_str(); }

}  // namespace slgap
