#include "slgap/algebra/finitefield.hpp"

#include "slgap/errors.hpp"

namespace slgap::algebra {

FiniteField::FiniteField(std::uint64_t p, ModPoly modulus) : p_(p) {
  mp_normalize(modulus);
  int d = mp_degree(modulus);
  if (d < 1 || modulus[d] != 1)
    raise(Errc::NotMonic, "field modulus must be monic of degree >= 1");
  g_ = std::move(modulus);
  k_ = static_cast<unsigned>(d);
  order_ = 1;
  for (unsigned i = 0; i < k_; ++i) order_ *= p_;
}

FFElem FiniteField::zero() const { return FFElem{std::vector<std::uint64_t>(k_, 0)}; }

FFElem FiniteField::one() const {
  auto e = zero();
  e.c[0] = 1 % p_;
  return e;
}

FFElem FiniteField::gen() const {
  if (k_ == 1) {
    // x == -g[0] in F_p
    return FFElem{{(p_ - g_[0] % p_) % p_}};
  }
  auto e = zero();
  e.c[1] = 1;
  return e;
}

FFElem FiniteField::from_int(long long v) const {
  long long m = v % static_cast<long long>(p_);
  if (m < 0) m += static_cast<long long>(p_);
  auto e = zero();
  e.c[0] = static_cast<std::uint64_t>(m);
  return e;
}

FFElem FiniteField::from_coeffs(std::vector<std::uint64_t> c) const {
  // reduce as a polynomial mod (p, g)
  ModPoly f(c.begin(), c.end());
  for (auto& x : f) x %= p_;
  mp_normalize(f);
  if (mp_degree(f) >= static_cast<int>(k_)) f = mp_mod(f, g_, p_);
  f.resize(k_, 0);
  return FFElem{std::move(f)};
}

FFElem FiniteField::add(const FFElem& a, const FFElem& b) const {
  FFElem r = a;
  for (unsigned i = 0; i < k_; ++i) r.c[i] = (r.c[i] + b.c[i]) % p_;
  return r;
}

FFElem FiniteField::sub(const FFElem& a, const FFElem& b) const {
  FFElem r = a;
  for (unsigned i = 0; i < k_; ++i) r.c[i] = (r.c[i] + p_ - b.c[i]) % p_;
  return r;
}

FFElem FiniteField::neg(const FFElem& a) const { return sub(zero(), a); }

FFElem FiniteField::mul(const FFElem& a, const FFElem& b) const {
  ModPoly prod = mp_mul(ModPoly(a.c.begin(), a.c.end()),
                        ModPoly(b.c.begin(), b.c.end()), p_);
  ModPoly red = (mp_degree(prod) >= static_cast<int>(k_)) ? mp_mod(prod, g_, p_) : prod;
  red.resize(k_, 0);
  return FFElem{std::move(red)};
}

bool FiniteField::is_zero(const FFElem& a) const {
  for (auto c : a.c)
    if (c % p_) return false;
  return true;
}

FFElem FiniteField::inv(const FFElem& a) const {
  if (is_zero(a)) raise(Errc::NotAUnit, "zero has no inverse");
  // extended Euclid in F_p[x] on (a, g)
  ModPoly r0 = g_, r1(a.c.begin(), a.c.end());
  mp_normalize(r1);
  ModPoly t0{0}, t1{1};
  while (mp_degree(r1) > 0) {
    // r0 = q r1 + r2
    ModPoly r2 = r0, q(std::max<std::size_t>(r0.size(), 1), 0);
    int d1 = mp_degree(r1);
    std::uint64_t lead_inv = invmod(r1[d1], p_);
    while (mp_degree(r2) >= d1) {
      int d2 = mp_degree(r2);
      std::uint64_t c = mulmod(r2[d2], lead_inv, p_);
      q[d2 - d1] = (q[d2 - d1] + c) % p_;
      for (int i = 0; i <= d1; ++i) {
        std::uint64_t sub = mulmod(c, r1[i], p_);
        r2[d2 - d1 + i] = (r2[d2 - d1 + i] + p_ - sub) % p_;
      }
      mp_normalize(r2);
      if (mp_degree(r2) < 0) break;
    }
    // t2 = t0 - q t1
    ModPoly qt1 = mp_mul(q, t1, p_);
    ModPoly t2 = t0;
    t2.resize(std::max(t2.size(), qt1.size()), 0);
    for (std::size_t i = 0; i < qt1.size(); ++i)
      t2[i] = (t2[i] + p_ - qt1[i]) % p_;
    r0 = r1; r1 = r2;
    t0 = t1; t1 = t2;
  }
  int d1 = mp_degree(r1);
  if (d1 != 0) raise(Errc::NotAUnit, "gcd with modulus not constant");
  std::uint64_t scale = invmod(r1[0], p_);
  ModPoly out = t1;
  for (auto& c : out) c = mulmod(c, scale, p_);
  out = (mp_degree(out) >= static_cast<int>(k_)) ? mp_mod(out, g_, p_) : out;
  out.resize(k_, 0);
  return FFElem{std::move(out)};
}

FFElem FiniteField::pow(const FFElem& a, std::uint64_t e) const {
  FFElem base = a, r = one();
  while (e) {
    if (e & 1) r = mul(r, base);
    base = mul(base, base);
    e >>= 1;
  }
  return r;
}

FFElem FiniteField::frobenius(const FFElem& a, unsigned e) const {
  FFElem r = a;
  for (unsigned i = 0; i < e; ++i) r = pow(r, p_);
  return r;
}

bool FiniteField::in_subfield(const FFElem& a, unsigned k_prime) const {
  if (k_ % k_prime != 0) raise(Errc::FactorMismatch, "k' must divide k");
  return frobenius(a, k_prime) == a;
}

FFElem FiniteField::element(std::uint64_t index) const {
  auto e = zero();
  for (unsigned i = 0; i < k_; ++i) {
    e.c[i] = index % p_;
    index /= p_;
  }
  return e;
}

std::uint64_t FiniteField::index_of(const FFElem& a) const {
  std::uint64_t idx = 0;
  for (unsigned i = k_; i-- > 0;) idx = idx * p_ + a.c[i];
  return idx;
}

std::string FiniteField::to_string(const FFElem& a) const {
  std::string s;
  for (unsigned i = 0; i < k_; ++i) {
    if (i) s += ',';
    s += std::to_string(a.c[i]);
  }
  return s;
}

}  // namespace slgap::algebra
