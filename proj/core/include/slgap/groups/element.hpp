#pragma once

#include <memory>
#include <string>
#include <vector>

#include "slgap/algebra/residuering.hpp"

namespace slgap::groups {

using algebra::FFElem;
using algebra::FiniteField;
using algebra::RingElem;
using algebra::RingPtr;

/// d x d matrix over a residue ring with determinant 1. Immutable value;
/// the canonical byte encoding (row-major, fixed-width little-endian
/// coefficients) is injective and is what hashing and set membership use.
class GroupElem {
 public:
  GroupElem(RingPtr ring, unsigned d, std::vector<RingElem> entries);

  static GroupElem identity(RingPtr ring, unsigned d);
  static GroupElem from_ints(RingPtr ring, unsigned d,
                             const std::vector<long long>& rowmajor);

  const RingElem& at(unsigned i, unsigned j) const { return e_[i * d_ + j]; }
  unsigned dim() const { return d_; }
  const RingPtr& ring() const { return ring_; }

  GroupElem mul(const GroupElem& rhs) const;
  GroupElem inverse() const;

  const std::string& key() const { return key_; }
  bool operator==(const GroupElem& o) const { return key_ == o.key_; }
  bool operator<(const GroupElem& o) const { return key_ < o.key_; }

  std::string to_text() const;  // entries "c0,c1,..." joined by spaces

 private:
  GroupElem() = default;
  void rekey();

  RingPtr ring_;
  unsigned d_ = 0;
  std::vector<RingElem> e_;
  std::string key_;
};

/// Determinant over the ring by cofactor expansion (d <= 4 at desk scale).
RingElem det(const algebra::ResidueRing& R, const std::vector<RingElem>& m,
             unsigned d);

/// Matrix over a single CRT factor field, used by per-factor diagnostics.
struct FqMatrix {
  unsigned d;
  std::vector<FFElem> e;
  bool operator==(const FqMatrix& o) const { return e == o.e; }
  bool operator<(const FqMatrix& o) const { return e < o.e; }
};

FqMatrix fq_identity(const FiniteField& F, unsigned d);
FqMatrix fq_mul(const FiniteField& F, const FqMatrix& a, const FqMatrix& b);
FqMatrix fq_inverse(const FiniteField& F, const FqMatrix& a);
FFElem fq_det(const FiniteField& F, const FqMatrix& a);
std::string fq_key(const FiniteField& F, const FqMatrix& a);

/// Entrywise projection of g onto CRT factor `index` of its ring.
FqMatrix factor_image(const GroupElem& g, std::size_t index);

}  // namespace slgap::groups

template <>
struct std::hash<slgap::groups::GroupElem> {
  std::size_t operator()(const slgap::groups::GroupElem& g) const {
    return std::hash<std::string>()(g.key());
  }
};
