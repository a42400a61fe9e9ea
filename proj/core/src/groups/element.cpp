#include "slgap/groups/element.hpp"

#include <cassert>

#include "slgap/errors.hpp"

namespace slgap::groups {

using algebra::ResidueRing;

namespace {

// minor with row i and column j removed
std::vector<RingElem> minor_of(const std::vector<RingElem>& m, unsigned d,
                               unsigned i, unsigned j) {
  std::vector<RingElem> out;
  out.reserve((d - 1) * (d - 1));
  for (unsigned r = 0; r < d; ++r) {
    if (r == i) continue;
    for (unsigned c = 0; c < d; ++c) {
      if (c == j) continue;
      out.push_back(m[r * d + c]);
    }
  }
  return out;
}

}  // namespace

RingElem det(const ResidueRing& R, const std::vector<RingElem>& m, unsigned d) {
  if (d == 1) return m[0];
  if (d == 2)
    return R.sub(R.mul(m[0], m[3]), R.mul(m[1], m[2]));
  RingElem acc = R.zero();
  for (unsigned j = 0; j < d; ++j) {
    if (R.is_zero(m[j])) continue;
    RingElem cof = det(R, minor_of(m, d, 0, j), d - 1);
    RingElem term = R.mul(m[j], cof);
    acc = (j % 2 == 0) ? R.add(acc, term) : R.sub(acc, term);
  }
  return acc;
}

GroupElem::GroupElem(RingPtr ring, unsigned d, std::vector<RingElem> entries)
    : ring_(std::move(ring)), d_(d), e_(std::move(entries)) {
  if (e_.size() != static_cast<std::size_t>(d_) * d_)
    raise(Errc::FactorMismatch, "entry count != d*d");
  RingElem dt = det(*ring_, e_, d_);
  if (!(dt == ring_->one()))
    raise(Errc::FactorMismatch, "determinant is not 1");
  rekey();
}

void GroupElem::rekey() {
  key_.clear();
  key_.reserve(static_cast<std::size_t>(d_) * d_ * ring_->degree() *
               ring_->coeff_width());
  for (const auto& x : e_) ring_->encode_into(x, key_);
}

GroupElem GroupElem::identity(RingPtr ring, unsigned d) {
  std::vector<RingElem> e(static_cast<std::size_t>(d) * d, ring->zero());
  for (unsigned i = 0; i < d; ++i) e[i * d + i] = ring->one();
  return GroupElem(std::move(ring), d, std::move(e));
}

GroupElem GroupElem::from_ints(RingPtr ring, unsigned d,
                               const std::vector<long long>& rowmajor) {
  if (rowmajor.size() != static_cast<std::size_t>(d) * d)
    raise(Errc::FactorMismatch, "entry count != d*d");
  std::vector<RingElem> e;
  e.reserve(rowmajor.size());
  for (auto v : rowmajor) e.push_back(ring->from_int(v));
  return GroupElem(std::move(ring), d, std::move(e));
}

GroupElem GroupElem::mul(const GroupElem& rhs) const {
  if (!(*ring_ == *rhs.ring_) || d_ != rhs.d_)
    raise(Errc::RingMismatch, "operands live in different groups");
  const ResidueRing& R = *ring_;
  GroupElem out;
  out.ring_ = ring_;
  out.d_ = d_;
  out.e_.assign(static_cast<std::size_t>(d_) * d_, R.zero());
  for (unsigned i = 0; i < d_; ++i)
    for (unsigned k = 0; k < d_; ++k) {
      const RingElem& a = e_[i * d_ + k];
      if (R.is_zero(a)) continue;
      for (unsigned j = 0; j < d_; ++j)
        out.e_[i * d_ + j] =
            R.add(out.e_[i * d_ + j], R.mul(a, rhs.e_[k * d_ + j]));
    }
  assert(det(R, out.e_, d_) == R.one());
  out.rekey();
  return out;
}

GroupElem GroupElem::inverse() const {
  const ResidueRing& R = *ring_;
  GroupElem out;
  out.ring_ = ring_;
  out.d_ = d_;
  out.e_.assign(static_cast<std::size_t>(d_) * d_, R.zero());
  if (d_ == 1) {
    out.e_[0] = R.one();
  } else {
    // adjugate; det = 1 so no division
    for (unsigned i = 0; i < d_; ++i)
      for (unsigned j = 0; j < d_; ++j) {
        RingElem cof = det(R, minor_of(e_, d_, j, i), d_ - 1);
        out.e_[i * d_ + j] = ((i + j) % 2 == 0) ? cof : R.neg(cof);
      }
  }
  assert(det(R, out.e_, d_) == R.one());
  out.rekey();
  return out;
}

std::string GroupElem::to_text() const {
  std::string s;
  for (unsigned i = 0; i < d_ * d_; ++i) {
    if (i) s += ' ';
    s += ring_->to_text(e_[i]);
  }
  return s;
}

FqMatrix fq_identity(const FiniteField& F, unsigned d) {
  FqMatrix m{d, std::vector<FFElem>(static_cast<std::size_t>(d) * d, F.zero())};
  for (unsigned i = 0; i < d; ++i) m.e[i * d + i] = F.one();
  return m;
}

FqMatrix fq_mul(const FiniteField& F, const FqMatrix& a, const FqMatrix& b) {
  unsigned d = a.d;
  FqMatrix out{d, std::vector<FFElem>(static_cast<std::size_t>(d) * d, F.zero())};
  for (unsigned i = 0; i < d; ++i)
    for (unsigned k = 0; k < d; ++k) {
      if (F.is_zero(a.e[i * d + k])) continue;
      for (unsigned j = 0; j < d; ++j)
        out.e[i * d + j] = F.add(out.e[i * d + j],
                                 F.mul(a.e[i * d + k], b.e[k * d + j]));
    }
  return out;
}

namespace {

FFElem fq_det_impl(const FiniteField& F, const std::vector<FFElem>& m,
                   unsigned d) {
  if (d == 1) return m[0];
  if (d == 2)
    return F.sub(F.mul(m[0], m[3]), F.mul(m[1], m[2]));
  FFElem acc = F.zero();
  for (unsigned j = 0; j < d; ++j) {
    if (F.is_zero(m[j])) continue;
    std::vector<FFElem> sub;
    sub.reserve((d - 1) * (d - 1));
    for (unsigned r = 1; r < d; ++r)
      for (unsigned c = 0; c < d; ++c)
        if (c != j) sub.push_back(m[r * d + c]);
    FFElem term = F.mul(m[j], fq_det_impl(F, sub, d - 1));
    acc = (j % 2 == 0) ? F.add(acc, term) : F.sub(acc, term);
  }
  return acc;
}

}  // namespace

FFElem fq_det(const FiniteField& F, const FqMatrix& a) {
  return fq_det_impl(F, a.e, a.d);
}

FqMatrix fq_inverse(const FiniteField& F, const FqMatrix& a) {
  unsigned d = a.d;
  FFElem dt = fq_det(F, a);
  FFElem dtinv = F.inv(dt);
  FqMatrix out{d, std::vector<FFElem>(static_cast<std::size_t>(d) * d, F.zero())};
  if (d == 1) {
    out.e[0] = dtinv;
    return out;
  }
  for (unsigned i = 0; i < d; ++i)
    for (unsigned j = 0; j < d; ++j) {
      std::vector<FFElem> sub;
      sub.reserve((d - 1) * (d - 1));
      for (unsigned r = 0; r < d; ++r) {
        if (r == j) continue;
        for (unsigned c = 0; c < d; ++c)
          if (c != i) sub.push_back(a.e[r * d + c]);
      }
      FFElem cof = fq_det_impl(F, sub, d - 1);
      if ((i + j) % 2) cof = F.neg(cof);
      out.e[i * d + j] = F.mul(cof, dtinv);
    }
  return out;
}

std::string fq_key(const FiniteField& F, const FqMatrix& a) {
  std::string s;
  for (const auto& x : a.e) {
    for (unsigned i = 0; i < F.k(); ++i) {
      std::uint64_t v = x.c[i];
      for (unsigned b = 0; b < 8; ++b) {
        s.push_back(static_cast<char>(v & 0xff));
        v >>= 8;
      }
    }
  }
  return s;
}

FqMatrix factor_image(const GroupElem& g, std::size_t index) {
  const auto& R = *g.ring();
  if (index >= R.factors().size())
    raise(Errc::FactorMismatch, "no such CRT factor");
  unsigned d = g.dim();
  FqMatrix out{d, {}};
  out.e.reserve(static_cast<std::size_t>(d) * d);
  for (unsigned i = 0; i < d; ++i)
    for (unsigned j = 0; j < d; ++j)
      out.e.push_back(R.split(g.at(i, j))[index]);
  return out;
}

}  // namespace slgap::groups
