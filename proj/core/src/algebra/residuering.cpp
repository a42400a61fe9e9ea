#include "slgap/algebra/residuering.hpp"

#include <algorithm>

#include "slgap/errors.hpp"

namespace slgap::algebra {

namespace {

std::uint64_t mod_u64(long long v, std::uint64_t q) {
  long long m = v % static_cast<long long>(q);
  if (m < 0) m += static_cast<long long>(q);
  return static_cast<std::uint64_t>(m);
}

}  // namespace

ResidueRing::ResidueRing(NumberField K, std::uint64_t q) : K_(std::move(K)), q_(q) {
  if (q < 2) raise(Errc::NotSquareFree, "modulus must be >= 2");
  r_ = K_.degree();
  primes_ = square_free_primes(q);
  {
    BigInt g;
    mpz_gcd_ui(g.get_mpz_t(), K_.discriminant().get_mpz_t(), q);
    if (g != 1)
      raise(Errc::RamifiedPrime,
            "gcd(q, disc f) = " + g.get_str() + " != 1");
  }

  for (auto p : primes_) {
    auto gs = factor_mod_p(K_.f(), p);
    std::sort(gs.begin(), gs.end(), [](const ModPoly& a, const ModPoly& b) {
      if (a.size() != b.size()) return a.size() < b.size();
      return a < b;
    });
    PrimeBlock blk;
    blk.p = p;
    ModPoly fmodp = mp_reduce_int(K_.f(), p);
    for (auto& g : gs) {
      CrtFactor cf{p, g, static_cast<unsigned>(mp_degree(g)), FiniteField(p, g)};
      blk.factor_idx.push_back(factors_.size());
      factors_.push_back(std::move(cf));
      // basis element: (f/g) * ((f/g)^{-1} mod g) mod f
      // f/g by polynomial division
      ModPoly quot(std::max<std::size_t>(fmodp.size(), 1), 0);
      ModPoly rem = fmodp;
      int dg = mp_degree(g);
      while (mp_degree(rem) >= dg) {
        int dr = mp_degree(rem);
        std::uint64_t c = rem[dr];  // g monic
        quot[dr - dg] = c;
        for (int i = 0; i <= dg; ++i)
          rem[dr - dg + i] = (rem[dr - dg + i] + p - mulmod(c, g[i], p)) % p;
        mp_normalize(rem);
        if (mp_degree(rem) < 0) break;
      }
      mp_normalize(quot);
      // quot mod g is a unit since f is square-free mod p
      FiniteField Fg(p, g);
      ModPoly qm = mp_mod(quot, g, p);
      qm.resize(dg, 0);
      FFElem uinv = Fg.inv(FFElem{std::vector<std::uint64_t>(qm.begin(), qm.end())});
      ModPoly uinv_poly(uinv.c.begin(), uinv.c.end());
      mp_normalize(uinv_poly);
      ModPoly basis = mp_mod(mp_mul(quot, uinv_poly, p), fmodp, p);
      blk.basis.push_back(std::move(basis));
    }
    blocks_.push_back(std::move(blk));
  }

  // sort factors ascending (p, k, g); rebuild index lists
  std::vector<std::size_t> order(factors_.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    if (factors_[a].p != factors_[b].p) return factors_[a].p < factors_[b].p;
    if (factors_[a].k != factors_[b].k) return factors_[a].k < factors_[b].k;
    return factors_[a].g < factors_[b].g;
  });
  std::vector<CrtFactor> sorted;
  std::vector<std::size_t> newpos(factors_.size());
  for (std::size_t i = 0; i < order.size(); ++i) {
    newpos[order[i]] = i;
    sorted.push_back(std::move(factors_[order[i]]));
  }
  factors_ = std::move(sorted);
  for (auto& blk : blocks_)
    for (auto& idx : blk.factor_idx) idx = newpos[idx];

  // prime idempotents for integer CRT: e_p = 1 mod p, 0 mod q/p
  for (auto p : primes_) {
    std::uint64_t rest = q_ / p;
    std::uint64_t inv = invmod(rest % p, p);
    prime_idem_.push_back(mulmod(rest, inv, q_));
  }

  // x^r .. x^{2r-2} reduced mod (q, f)
  xpow_.assign(r_ > 1 ? r_ - 1 : 0, {});
  if (r_ > 1) {
    std::vector<std::uint64_t> cur(r_, 0);
    // x^r = -(f - x^r)
    for (unsigned i = 0; i < r_; ++i) cur[i] = mod_u64(-K_.f()[i], q_);
    xpow_[0] = cur;
    for (unsigned e = 1; e + 1 < r_; ++e) {
      // multiply by x
      std::vector<std::uint64_t> nxt(r_, 0);
      std::uint64_t top = cur[r_ - 1];
      for (unsigned i = r_ - 1; i > 0; --i) nxt[i] = cur[i - 1];
      nxt[0] = 0;
      for (unsigned i = 0; i < r_; ++i)
        nxt[i] = (nxt[i] + mulmod(top, xpow_[0][i], q_)) % q_;
      cur = nxt;
      xpow_[e] = cur;
    }
  }

  std::uint64_t maxv = q_ - 1;
  width_ = maxv < 0x100 ? 1 : maxv < 0x10000 ? 2 : maxv < 0x100000000ULL ? 4 : 8;

  // structural check: factor degrees per prime sum to r
  for (const auto& blk : blocks_) {
    unsigned sum = 0;
    for (auto idx : blk.factor_idx) sum += factors_[idx].k;
    if (sum != r_) raise(Errc::FactorMismatch, "factor degrees do not sum to r");
  }
}

BigInt ResidueRing::cardinality() const {
  return bigint_pow(BigInt(static_cast<unsigned long>(q_)), r_);
}

RingElem ResidueRing::zero() const { return RingElem{std::vector<std::uint64_t>(r_, 0)}; }

RingElem ResidueRing::one() const {
  auto e = zero();
  e.c[0] = 1 % q_;
  return e;
}

RingElem ResidueRing::theta() const {
  if (r_ == 1) {
    // class of x == -f[0]
    return RingElem{{mod_u64(-K_.f()[0], q_)}};
  }
  auto e = zero();
  e.c[1] = 1;
  return e;
}

RingElem ResidueRing::from_int(long long v) const {
  auto e = zero();
  e.c[0] = mod_u64(v, q_);
  return e;
}

RingElem ResidueRing::from_coeffs(std::vector<long long> c) const {
  if (c.size() > r_) raise(Errc::FactorMismatch, "coefficient vector too long");
  auto e = zero();
  for (std::size_t i = 0; i < c.size(); ++i) e.c[i] = mod_u64(c[i], q_);
  return e;
}

RingElem ResidueRing::add(const RingElem& a, const RingElem& b) const {
  RingElem r = a;
  for (unsigned i = 0; i < r_; ++i) r.c[i] = (r.c[i] + b.c[i]) % q_;
  return r;
}

RingElem ResidueRing::sub(const RingElem& a, const RingElem& b) const {
  RingElem r = a;
  for (unsigned i = 0; i < r_; ++i) r.c[i] = (r.c[i] + q_ - b.c[i]) % q_;
  return r;
}

RingElem ResidueRing::neg(const RingElem& a) const { return sub(zero(), a); }

RingElem ResidueRing::mul(const RingElem& a, const RingElem& b) const {
  std::vector<std::uint64_t> prod(2 * r_ - 1, 0);
  for (unsigned i = 0; i < r_; ++i) {
    if (!a.c[i]) continue;
    for (unsigned j = 0; j < r_; ++j)
      prod[i + j] =
          (prod[i + j] + static_cast<unsigned __int128>(a.c[i]) * b.c[j]) % q_;
  }
  RingElem out = zero();
  for (unsigned i = 0; i < r_; ++i) out.c[i] = prod[i];
  for (unsigned e = r_; e < 2 * r_ - 1; ++e) {
    std::uint64_t c = prod[e];
    if (!c) continue;
    const auto& red = xpow_[e - r_];
    for (unsigned i = 0; i < r_; ++i)
      out.c[i] = (out.c[i] + mulmod(c, red[i], q_)) % q_;
  }
  return out;
}

bool ResidueRing::is_zero(const RingElem& a) const {
  for (auto c : a.c)
    if (c) return false;
  return true;
}

std::vector<FFElem> ResidueRing::split(const RingElem& a) const {
  std::vector<FFElem> parts(factors_.size());
  for (const auto& blk : blocks_) {
    ModPoly ap(a.c.begin(), a.c.end());
    for (auto& c : ap) c %= blk.p;
    mp_normalize(ap);
    for (auto idx : blk.factor_idx) {
      const auto& fac = factors_[idx];
      ModPoly red = (mp_degree(ap) >= static_cast<int>(fac.k))
                        ? mp_mod(ap, fac.g, blk.p)
                        : ap;
      red.resize(fac.k, 0);
      parts[idx] = FFElem{std::vector<std::uint64_t>(red.begin(), red.end())};
    }
  }
  return parts;
}

RingElem ResidueRing::join(const std::vector<FFElem>& parts) const {
  if (parts.size() != factors_.size())
    raise(Errc::FactorMismatch, "parts must cover every factor exactly once");
  for (std::size_t i = 0; i < parts.size(); ++i)
    if (parts[i].c.size() != factors_[i].k)
      raise(Errc::FactorMismatch, "component has wrong residue degree");

  RingElem out = zero();
  for (std::size_t bi = 0; bi < blocks_.size(); ++bi) {
    const auto& blk = blocks_[bi];
    // polynomial CRT within the prime
    ModPoly acc{0};
    for (std::size_t j = 0; j < blk.factor_idx.size(); ++j) {
      auto idx = blk.factor_idx[j];
      ModPoly part(parts[idx].c.begin(), parts[idx].c.end());
      mp_normalize(part);
      ModPoly term = mp_mul(part, blk.basis[j], blk.p);
      ModPoly fmodp = mp_reduce_int(K_.f(), blk.p);
      term = mp_mod(term, fmodp, blk.p);
      acc.resize(std::max(acc.size(), term.size()), 0);
      for (std::size_t i = 0; i < term.size(); ++i)
        acc[i] = (acc[i] + term[i]) % blk.p;
    }
    acc.resize(r_, 0);
    // integer CRT across primes via idempotents
    std::uint64_t e = prime_idem_[bi];
    for (unsigned i = 0; i < r_; ++i)
      out.c[i] = (out.c[i] + mulmod(e, acc[i], q_)) % q_;
  }
  return out;
}

bool ResidueRing::is_unit(const RingElem& a) const {
  auto parts = split(a);
  for (std::size_t i = 0; i < parts.size(); ++i)
    if (factors_[i].F.is_zero(parts[i])) return false;
  return true;
}

RingElem ResidueRing::inv(const RingElem& a) const {
  auto parts = split(a);
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (factors_[i].F.is_zero(parts[i]))
      raise(Errc::NotAUnit, "CRT component " + std::to_string(i) + " is zero");
    parts[i] = factors_[i].F.inv(parts[i]);
  }
  return join(parts);
}

void ResidueRing::encode_into(const RingElem& a, std::string& out) const {
  for (unsigned i = 0; i < r_; ++i) {
    std::uint64_t v = a.c[i];
    for (unsigned b = 0; b < width_; ++b) {
      out.push_back(static_cast<char>(v & 0xff));
      v >>= 8;
    }
  }
}

std::string ResidueRing::to_text(const RingElem& a) const {
  std::string s;
  for (unsigned i = 0; i < r_; ++i) {
    if (i) s += ',';
    s += std::to_string(a.c[i]);
  }
  return s;
}

RingElem ResidueRing::from_text(const std::string& s) const {
  std::vector<long long> c;
  std::size_t pos = 0;
  while (pos < s.size()) {
    std::size_t next = s.find(',', pos);
    if (next == std::string::npos) next = s.size();
    c.push_back(std::stoll(s.substr(pos, next - pos)));
    pos = next + 1;
  }
  return from_coeffs(std::move(c));
}

nlohmann::json ResidueRing::descriptor() const {
  nlohmann::json j;
  j["f"] = K_.f();
  j["q"] = q_;
  nlohmann::json facs = nlohmann::json::array();
  for (const auto& fac : factors_) {
    facs.push_back({fac.p, fac.g});
  }
  j["factors"] = facs;
  return j;
}

RingPtr make_residue_ring(const NumberField& K, std::uint64_t q) {
  return std::make_shared<const ResidueRing>(K, q);
}

}  // namespace slgap::algebra
