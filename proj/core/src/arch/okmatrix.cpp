#include "slgap/arch/okmatrix.hpp"

#include "slgap/errors.hpp"

namespace slgap::arch {

namespace {

constexpr long long kLimit = 1LL << 62;

long long checked(__int128 v) {
  if (v >= kLimit || v <= -kLimit)
    raise(Errc::BudgetExceeded, "exact integer arithmetic overflow");
  return static_cast<long long>(v);
}

}  // namespace

OkRing::OkRing(NumberField K) : K_(std::move(K)), r_(K_.degree()) {
  if (r_ > 1) {
    xpow_.resize(r_ - 1);
    std::vector<long long> cur(r_);
    for (unsigned i = 0; i < r_; ++i) cur[i] = -K_.f()[i];
    xpow_[0] = cur;
    for (unsigned e = 1; e + 1 < r_; ++e) {
      std::vector<long long> nxt(r_, 0);
      long long top = cur[r_ - 1];
      for (unsigned i = r_ - 1; i > 0; --i) nxt[i] = cur[i - 1];
      for (unsigned i = 0; i < r_; ++i)
        nxt[i] = checked(static_cast<__int128>(nxt[i]) +
                         static_cast<__int128>(top) * xpow_[0][i]);
      cur = nxt;
      xpow_[e] = cur;
    }
  }
}

OkElem OkRing::zero() const { return OkElem{std::vector<long long>(r_, 0)}; }

OkElem OkRing::one() const {
  auto e = zero();
  e.c[0] = 1;
  return e;
}

OkElem OkRing::theta() const {
  if (r_ == 1) return OkElem{{-K_.f()[0]}};
  auto e = zero();
  e.c[1] = 1;
  return e;
}

OkElem OkRing::from_int(long long v) const {
  auto e = zero();
  e.c[0] = v;
  return e;
}

OkElem OkRing::from_coeffs(std::vector<long long> c) const {
  if (c.size() > r_) raise(Errc::FactorMismatch, "coefficient vector too long");
  c.resize(r_, 0);
  return OkElem{std::move(c)};
}

OkElem OkRing::add(const OkElem& a, const OkElem& b) const {
  OkElem out = a;
  for (unsigned i = 0; i < r_; ++i)
    out.c[i] = checked(static_cast<__int128>(out.c[i]) + b.c[i]);
  return out;
}

OkElem OkRing::sub(const OkElem& a, const OkElem& b) const {
  OkElem out = a;
  for (unsigned i = 0; i < r_; ++i)
    out.c[i] = checked(static_cast<__int128>(out.c[i]) - b.c[i]);
  return out;
}

OkElem OkRing::neg(const OkElem& a) const { return sub(zero(), a); }

OkElem OkRing::mul(const OkElem& a, const OkElem& b) const {
  std::vector<__int128> prod(2 * r_ - 1, 0);
  for (unsigned i = 0; i < r_; ++i) {
    if (!a.c[i]) continue;
    for (unsigned j = 0; j < r_; ++j)
      prod[i + j] += static_cast<__int128>(a.c[i]) * b.c[j];
  }
  OkElem out = zero();
  for (unsigned i = 0; i < r_; ++i) out.c[i] = checked(prod[i]);
  for (unsigned e = r_; e < 2 * r_ - 1; ++e) {
    if (!prod[e]) continue;
    long long c = checked(prod[e]);
    for (unsigned i = 0; i < r_; ++i)
      out.c[i] = checked(static_cast<__int128>(out.c[i]) +
                         static_cast<__int128>(c) * xpow_[e - r_][i]);
  }
  return out;
}

bool OkRing::is_zero(const OkElem& a) const {
  for (auto v : a.c)
    if (v) return false;
  return true;
}

std::string OkRing::to_string(const OkElem& a) const {
  std::string s;
  for (unsigned i = 0; i < r_; ++i) {
    if (i) s += ',';
    s += std::to_string(a.c[i]);
  }
  return s;
}

OkMatrix ok_identity(const OkRing& R, unsigned d) {
  OkMatrix m{d, std::vector<OkElem>(static_cast<std::size_t>(d) * d, R.zero())};
  for (unsigned i = 0; i < d; ++i) m.e[i * d + i] = R.one();
  return m;
}

OkMatrix ok_from_ints(const OkRing& R, unsigned d,
                      const std::vector<long long>& rowmajor) {
  if (rowmajor.size() != static_cast<std::size_t>(d) * d)
    raise(Errc::FactorMismatch, "entry count != d*d");
  OkMatrix m{d, {}};
  m.e.reserve(rowmajor.size());
  for (auto v : rowmajor) m.e.push_back(R.from_int(v));
  if (!(ok_det(R, m) == R.one()))
    raise(Errc::FactorMismatch, "determinant is not 1");
  return m;
}

OkMatrix ok_from_coeffs(const OkRing& R, unsigned d,
                        const std::vector<std::vector<long long>>& entries) {
  if (entries.size() != static_cast<std::size_t>(d) * d)
    raise(Errc::FactorMismatch, "entry count != d*d");
  OkMatrix m{d, {}};
  m.e.reserve(entries.size());
  for (const auto& c : entries) m.e.push_back(R.from_coeffs(c));
  if (!(ok_det(R, m) == R.one()))
    raise(Errc::FactorMismatch, "determinant is not 1");
  return m;
}

OkMatrix ok_mul(const OkRing& R, const OkMatrix& a, const OkMatrix& b) {
  unsigned d = a.d;
  OkMatrix out{d, std::vector<OkElem>(static_cast<std::size_t>(d) * d, R.zero())};
  for (unsigned i = 0; i < d; ++i)
    for (unsigned k = 0; k < d; ++k) {
      if (R.is_zero(a.e[i * d + k])) continue;
      for (unsigned j = 0; j < d; ++j)
        out.e[i * d + j] =
            R.add(out.e[i * d + j], R.mul(a.e[i * d + k], b.e[k * d + j]));
    }
  return out;
}

namespace {

OkElem ok_det_impl(const OkRing& R, const std::vector<OkElem>& m, unsigned d) {
  if (d == 1) return m[0];
  if (d == 2) return R.sub(R.mul(m[0], m[3]), R.mul(m[1], m[2]));
  OkElem acc = R.zero();
  for (unsigned j = 0; j < d; ++j) {
    if (R.is_zero(m[j])) continue;
    std::vector<OkElem> sub;
    sub.reserve((d - 1) * (d - 1));
    for (unsigned r = 1; r < d; ++r)
      for (unsigned c = 0; c < d; ++c)
        if (c != j) sub.push_back(m[r * d + c]);
    OkElem term = R.mul(m[j], ok_det_impl(R, sub, d - 1));
    acc = (j % 2 == 0) ? R.add(acc, term) : R.sub(acc, term);
  }
  return acc;
}

}  // namespace

OkElem ok_det(const OkRing& R, const OkMatrix& a) {
  return ok_det_impl(R, a.e, a.d);
}

OkMatrix ok_inverse(const OkRing& R, const OkMatrix& a) {
  unsigned d = a.d;
  if (!(ok_det(R, a) == R.one()))
    raise(Errc::FactorMismatch, "inverse needs determinant 1");
  OkMatrix out{d, std::vector<OkElem>(static_cast<std::size_t>(d) * d, R.zero())};
  if (d == 1) {
    out.e[0] = R.one();
    return out;
  }
  for (unsigned i = 0; i < d; ++i)
    for (unsigned j = 0; j < d; ++j) {
      std::vector<OkElem> sub;
      sub.reserve((d - 1) * (d - 1));
      for (unsigned r = 0; r < d; ++r) {
        if (r == j) continue;
        for (unsigned c = 0; c < d; ++c)
          if (c != i) sub.push_back(a.e[r * d + c]);
      }
      OkElem cof = ok_det_impl(R, sub, d - 1);
      out.e[i * d + j] = ((i + j) % 2 == 0) ? cof : R.neg(cof);
    }
  return out;
}

OkMatrix ok_pow(const OkRing& R, const OkMatrix& a, unsigned e) {
  OkMatrix out = ok_identity(R, a.d);
  for (unsigned i = 0; i < e; ++i) out = ok_mul(R, out, a);
  return out;
}

std::string ok_key(const OkMatrix& a) {
  std::string s;
  for (const auto& x : a.e)
    for (auto v : x.c) {
      std::uint64_t u = static_cast<std::uint64_t>(v);
      for (unsigned b = 0; b < 8; ++b) {
        s.push_back(static_cast<char>(u & 0xff));
        u >>= 8;
      }
    }
  return s;
}

}  // namespace slgap::arch
