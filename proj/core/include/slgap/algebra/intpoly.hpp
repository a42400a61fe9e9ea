#pragma once

#include <cstdint>
#include <vector>

#include "slgap/bigint.hpp"

namespace slgap::algebra {

// Polynomials are coefficient vectors indexed by degree; the leading
// coefficient is the last entry and is kept nonzero after normalize().
using IntPoly = std::vector<long long>;
using ModPoly = std::vector<std::uint64_t>;

void normalize(IntPoly& f);
int degree(const IntPoly& f);
bool is_monic(const IntPoly& f);
IntPoly derivative(const IntPoly& f);

/// Resultant of f and g over Z, exact (Sylvester matrix, fraction-free
/// elimination in big integers).
BigInt resultant(const IntPoly& f, const IntPoly& g);

/// Discriminant of a monic f: (-1)^{n(n-1)/2} Res(f, f').
BigInt discriminant(const IntPoly& f);

/// Searches for a nontrivial monic factor over Z: all integer roots
/// (divisors of the constant term) and all monic quadratic factors within
/// root bounds. Complete for degree <= 5.
bool has_rational_factor(const IntPoly& f);

bool is_prime_u64(std::uint64_t n);

/// Prime factorization of a square-free modulus. Throws NotSquareFree on a
/// repeated prime and CompositePrimeDetected if a cofactor cannot be split.
std::vector<std::uint64_t> square_free_primes(std::uint64_t q);

// --- arithmetic in F_p[x], p prime, coefficients in [0, p) ---

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t p);
std::uint64_t powmod(std::uint64_t a, std::uint64_t e, std::uint64_t p);
std::uint64_t invmod(std::uint64_t a, std::uint64_t p);

void mp_normalize(ModPoly& f);
int mp_degree(const ModPoly& f);
ModPoly mp_reduce_int(const IntPoly& f, std::uint64_t p);
ModPoly mp_mul(const ModPoly& a, const ModPoly& b, std::uint64_t p);
ModPoly mp_mod(ModPoly a, const ModPoly& m, std::uint64_t p);
ModPoly mp_gcd(ModPoly a, ModPoly b, std::uint64_t p);
ModPoly mp_powmod_x(const BigInt& e, const ModPoly& m, std::uint64_t p);
std::uint64_t mp_eval(const ModPoly& f, std::uint64_t x, std::uint64_t p);

/// Factor a monic square-free f of degree <= 4 into monic irreducibles
/// mod p: root scan for the linear part, then a distinct-degree split of
/// what remains. Degrees above 4 are rejected (TooLarge).
std::vector<ModPoly> factor_mod_p(const IntPoly& f, std::uint64_t p);

}  // namespace slgap::algebra
