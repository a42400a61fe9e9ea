#include "slgap/algebra/intpoly.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>

#include "slgap/errors.hpp"

namespace slgap::algebra {

void normalize(IntPoly& f) {
  while (f.size() > 1 && f.back() == 0) f.pop_back();
}

int degree(const IntPoly& f) {
  for (int i = static_cast<int>(f.size()) - 1; i >= 0; --i)
    if (f[i] != 0) return i;
  return -1;
}

bool is_monic(const IntPoly& f) {
  int d = degree(f);
  return d >= 0 && f[d] == 1;
}

IntPoly derivative(const IntPoly& f) {
  IntPoly d;
  for (std::size_t i = 1; i < f.size(); ++i)
    d.push_back(f[i] * static_cast<long long>(i));
  if (d.empty()) d.push_back(0);
  return d;
}

BigInt resultant(const IntPoly& fin, const IntPoly& gin) {
  IntPoly f = fin, g = gin;
  normalize(f);
  normalize(g);
  int n = degree(f), m = degree(g);
  if (n < 0 || m < 0) return 0;
  if (n == 0) return bigint_pow(BigInt(static_cast<long>(f[0])), static_cast<unsigned long>(m));
  if (m == 0) return bigint_pow(BigInt(static_cast<long>(g[0])), static_cast<unsigned long>(n));

  // Sylvester matrix, (n+m)x(n+m), Bareiss fraction-free elimination.
  int size = n + m;
  std::vector<std::vector<BigInt>> a(size, std::vector<BigInt>(size, 0));
  for (int r = 0; r < m; ++r)
    for (int j = 0; j <= n; ++j) a[r][r + j] = static_cast<long>(f[n - j]);
  for (int r = 0; r < n; ++r)
    for (int j = 0; j <= m; ++j) a[m + r][r + j] = static_cast<long>(g[m - j]);

  BigInt prev = 1;
  int sign = 1;
  for (int k = 0; k < size - 1; ++k) {
    if (a[k][k] == 0) {
      int piv = -1;
      for (int r = k + 1; r < size; ++r)
        if (a[r][k] != 0) { piv = r; break; }
      if (piv < 0) return 0;
      std::swap(a[k], a[piv]);
      sign = -sign;
    }
    for (int r = k + 1; r < size; ++r) {
      for (int c = k + 1; c < size; ++c) {
        BigInt v = a[r][c] * a[k][k] - a[r][k] * a[k][c];
        a[r][c] = v / prev;  // exact by Bareiss
      }
      a[r][k] = 0;
    }
    prev = a[k][k];
  }
  return sign > 0 ? a[size - 1][size - 1] : BigInt(-a[size - 1][size - 1]);
}

BigInt discriminant(const IntPoly& f) {
  int n = degree(f);
  if (n <= 0) raise(Errc::NotMonic, "discriminant needs degree >= 1");
  if (n == 1) return 1;
  BigInt res = resultant(f, derivative(f));
  long s = (static_cast<long>(n) * (n - 1) / 2) % 2;
  return s ? BigInt(-res) : res;
}

namespace {

std::vector<long long> divisors_with_sign(long long n) {
  std::vector<long long> out;
  long long a = std::llabs(n);
  for (long long d = 1; d * d <= a; ++d) {
    if (a % d == 0) {
      out.push_back(d);
      out.push_back(-d);
      if (d != a / d) {
        out.push_back(a / d);
        out.push_back(-a / d);
      }
    }
  }
  return out;
}

long long eval_ll(const IntPoly& f, long long x) {
  __int128 acc = 0;
  for (int i = static_cast<int>(f.size()) - 1; i >= 0; --i) {
    acc = acc * x + f[i];
    if (acc > (__int128)1 << 100 || acc < -((__int128)1 << 100))
      raise(Errc::BudgetExceeded, "integer polynomial evaluation overflow");
  }
  return static_cast<long long>(acc);
}

// True when the monic quadratic x^2 + a x + b divides f exactly over Z.
bool divides_quadratic(const IntPoly& f, long long a, long long b) {
  // synthetic division by x^2 + a x + b
  int n = degree(f);
  std::vector<__int128> c(f.begin(), f.end());
  for (int i = n; i >= 2; --i) {
    __int128 q = c[i];
    c[i - 1] -= q * a;
    c[i - 2] -= q * b;
    c[i] = 0;
    if (c[i - 1] > ((__int128)1 << 110) || c[i - 1] < -((__int128)1 << 110))
      return false;
  }
  return c[0] == 0 && c[1] == 0;
}

}  // namespace

bool has_rational_factor(const IntPoly& fin) {
  IntPoly f = fin;
  normalize(f);
  int n = degree(f);
  if (n <= 1) return false;
  if (f[0] == 0) return true;  // root at 0

  for (long long r : divisors_with_sign(f[0]))
    if (eval_ll(f, r) == 0) return true;

  if (n <= 3) return false;

  // Monic quadratic factors x^2 + a x + b: b divides f(0), |a| within the
  // Cauchy root bound of f (roots of a factor are roots of f).
  long long H = 0;
  for (int i = 0; i < n; ++i) H = std::max(H, std::llabs(f[i]));
  long long abound = 2 * (1 + H);
  for (long long b : divisors_with_sign(f[0])) {
    for (long long a = -abound; a <= abound; ++a) {
      if (divides_quadratic(f, a, b)) return true;
    }
  }
  return false;
}

bool is_prime_u64(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

std::vector<std::uint64_t> square_free_primes(std::uint64_t q) {
  std::vector<std::uint64_t> primes;
  std::uint64_t rest = q;
  for (std::uint64_t d = 2; d * d <= rest; ++d) {
    if (rest % d == 0) {
      rest /= d;
      if (rest % d == 0)
        raise(Errc::NotSquareFree, "repeated prime " + std::to_string(d));
      primes.push_back(d);
    }
  }
  if (rest > 1) {
    if (!is_prime_u64(rest))
      raise(Errc::CompositePrimeDetected,
            "could not split cofactor " + std::to_string(rest));
    for (auto p : primes)
      if (p == rest) raise(Errc::NotSquareFree, "repeated prime");
    primes.push_back(rest);
  }
  std::sort(primes.begin(), primes.end());
  return primes;
}

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
  return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % p);
}

std::uint64_t powmod(std::uint64_t a, std::uint64_t e, std::uint64_t p) {
  std::uint64_t r = 1 % p;
  a %= p;
  while (e) {
    if (e & 1) r = mulmod(r, a, p);
    a = mulmod(a, a, p);
    e >>= 1;
  }
  return r;
}

std::uint64_t invmod(std::uint64_t a, std::uint64_t p) {
  a %= p;
  if (a == 0) raise(Errc::NotAUnit, "inverse of 0 mod " + std::to_string(p));
  // extended Euclid
  long long t = 0, newt = 1;
  long long r = static_cast<long long>(p), newr = static_cast<long long>(a);
  while (newr != 0) {
    long long quot = r / newr;
    long long tmp = t - quot * newt;
    t = newt;
    newt = tmp;
    tmp = r - quot * newr;
    r = newr;
    newr = tmp;
  }
  if (r != 1) raise(Errc::NotAUnit, "non-invertible residue");
  if (t < 0) t += static_cast<long long>(p);
  return static_cast<std::uint64_t>(t);
}

void mp_normalize(ModPoly& f) {
  while (f.size() > 1 && f.back() == 0) f.pop_back();
}

int mp_degree(const ModPoly& f) {
  for (int i = static_cast<int>(f.size()) - 1; i >= 0; --i)
    if (f[i] != 0) return i;
  return -1;
}

ModPoly mp_reduce_int(const IntPoly& f, std::uint64_t p) {
  ModPoly out(f.size());
  for (std::size_t i = 0; i < f.size(); ++i) {
    long long c = f[i] % static_cast<long long>(p);
    if (c < 0) c += static_cast<long long>(p);
    out[i] = static_cast<std::uint64_t>(c);
  }
  mp_normalize(out);
  return out;
}

ModPoly mp_mul(const ModPoly& a, const ModPoly& b, std::uint64_t p) {
  ModPoly out(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (!a[i]) continue;
    for (std::size_t j = 0; j < b.size(); ++j)
      out[i + j] = (out[i + j] + static_cast<unsigned __int128>(a[i]) * b[j]) % p;
  }
  mp_normalize(out);
  return out;
}

ModPoly mp_mod(ModPoly a, const ModPoly& m, std::uint64_t p) {
  mp_normalize(a);
  int dm = mp_degree(m);
  std::uint64_t lead_inv = invmod(m[dm], p);
  while (mp_degree(a) >= dm) {
    int da = mp_degree(a);
    std::uint64_t c = mulmod(a[da], lead_inv, p);
    for (int i = 0; i <= dm; ++i) {
      std::uint64_t sub = mulmod(c, m[i], p);
      a[da - dm + i] = (a[da - dm + i] + p - sub) % p;
    }
    mp_normalize(a);
    if (mp_degree(a) < 0) break;
  }
  if (a.empty()) a.push_back(0);
  return a;
}

ModPoly mp_gcd(ModPoly a, ModPoly b, std::uint64_t p) {
  mp_normalize(a);
  mp_normalize(b);
  while (mp_degree(b) >= 0) {
    ModPoly r = mp_mod(a, b, p);
    a = b;
    b = r;
    if (mp_degree(b) < 0) break;
  }
  int da = mp_degree(a);
  if (da >= 0 && a[da] != 1) {
    std::uint64_t inv = invmod(a[da], p);
    for (auto& c : a) c = mulmod(c, inv, p);
  }
  return a;
}

ModPoly mp_powmod_x(const BigInt& e, const ModPoly& m, std::uint64_t p) {
  ModPoly base = mp_mod(ModPoly{0, 1}, m, p);
  ModPoly result{1};
  BigInt k = e;
  while (k > 0) {
    if (mpz_odd_p(k.get_mpz_t())) result = mp_mod(mp_mul(result, base, p), m, p);
    base = mp_mod(mp_mul(base, base, p), m, p);
    k >>= 1;
  }
  return result;
}

std::uint64_t mp_eval(const ModPoly& f, std::uint64_t x, std::uint64_t p) {
  std::uint64_t acc = 0;
  for (int i = static_cast<int>(f.size()) - 1; i >= 0; --i)
    acc = (mulmod(acc, x, p) + f[i]) % p;
  return acc;
}

namespace {

// Split a product of two distinct irreducible quadratics mod p by matching
// coefficients of (x^2 + a1 x + b1)(x^2 + a2 x + b2).
std::vector<ModPoly> split_two_quadratics(const ModPoly& f, std::uint64_t p) {
  std::uint64_t c3 = f[3], c2 = f[2], c1 = f[1], c0 = f[0];
  for (std::uint64_t b1 = 1; b1 < p; ++b1) {
    std::uint64_t b2 = mulmod(c0, invmod(b1, p), p);
    // a1 + a2 = c3, a1 b2 + a2 b1 = c1, a1 a2 = c2 - b1 - b2
    std::uint64_t want_prod = (c2 + 2 * p - b1 % p - b2) % p;
    if (b1 != b2) {
      // linear system: a1 (b2 - b1) = c1 - c3 b1
      std::uint64_t denom = (b2 + p - b1) % p;
      std::uint64_t num = (c1 + p - mulmod(c3, b1, p)) % p;
      std::uint64_t a1 = mulmod(num, invmod(denom, p), p);
      std::uint64_t a2 = (c3 + p - a1) % p;
      if (mulmod(a1, a2, p) != want_prod) continue;
      ModPoly q1{b1, a1, 1}, q2{b2, a2, 1};
      ModPoly prod = mp_mul(q1, q2, p);
      if (mp_degree(prod) == 4 && prod == f) return {q1, q2};
    } else {
      // a1, a2 are roots of t^2 - c3 t + want_prod
      for (std::uint64_t a1 = 0; a1 < p; ++a1) {
        std::uint64_t a2 = (c3 + p - a1) % p;
        if (mulmod(a1, a2, p) != want_prod) continue;
        if ((mulmod(a1, b2, p) + mulmod(a2, b1, p)) % p != c1) continue;
        ModPoly q1{b1, a1, 1}, q2{b2, a2, 1};
        ModPoly prod = mp_mul(q1, q2, p);
        if (mp_degree(prod) == 4 && prod == f) return {q1, q2};
      }
    }
  }
  raise(Errc::CompositePrimeDetected, "quadratic split failed");
}

}  // namespace

std::vector<ModPoly> factor_mod_p(const IntPoly& fint, std::uint64_t p) {
  ModPoly f = mp_reduce_int(fint, p);
  int n = mp_degree(f);
  if (n > 4)
    raise(Errc::TooLarge, "factorization mod p implemented for degree <= 4");
  if (n < 1) raise(Errc::NotMonic, "zero polynomial mod p");

  std::vector<ModPoly> factors;
  // linear part by root scan
  ModPoly rest = f;
  for (std::uint64_t x = 0; x < p && mp_degree(rest) > 0; ++x) {
    while (mp_degree(rest) > 0 && mp_eval(rest, x, p) == 0) {
      ModPoly lin{(p - x) % p, 1};
      factors.push_back(lin);
      // synthetic division by (X - x)
      ModPoly quot(mp_degree(rest), 0);
      std::uint64_t carry = 0;
      for (int i = mp_degree(rest); i >= 1; --i) {
        carry = (mulmod(carry, x, p) + rest[i]) % p;
        quot[i - 1] = carry;
      }
      rest = quot;
      mp_normalize(rest);
    }
  }

  int dr = mp_degree(rest);
  if (dr == 1) {
    factors.push_back(rest);
  } else if (dr == 2 || dr == 3) {
    factors.push_back(rest);  // no roots left: irreducible for deg 2, 3
  } else if (dr == 4) {
    // distinct-degree: quadratic factors divide x^{p^2} - x
    ModPoly xp2 = mp_powmod_x(BigInt(p) * BigInt(p), rest, p);
    // xp2 - x
    ModPoly diff = xp2;
    if (diff.size() < 2) diff.resize(2, 0);
    diff[1] = (diff[1] + p - 1) % p;
    mp_normalize(diff);
    ModPoly g2 = mp_gcd(rest, diff, p);
    int d2 = mp_degree(g2);
    if (d2 == 0) {
      factors.push_back(rest);  // irreducible quartic
    } else if (d2 == 4) {
      auto qs = split_two_quadratics(rest, p);
      factors.insert(factors.end(), qs.begin(), qs.end());
    } else {
      raise(Errc::RamifiedPrime, "unexpected factor pattern (non-square-free?)");
    }
  }

  // monic-ness and product check
  ModPoly prod{1};
  for (auto& g : factors) {
    int dg = mp_degree(g);
    if (g[dg] != 1) {
      std::uint64_t inv = invmod(g[dg], p);
      for (auto& c : g) c = mulmod(c, inv, p);
    }
    prod = mp_mul(prod, g, p);
  }
  if (prod != f) raise(Errc::CompositePrimeDetected, "factor product mismatch");
  std::sort(factors.begin(), factors.end());
  for (std::size_t i = 1; i < factors.size(); ++i)
    if (factors[i] == factors[i - 1])
      raise(Errc::RamifiedPrime, "repeated factor mod " + std::to_string(p));
  return factors;
}

}  // namespace slgap::algebra
