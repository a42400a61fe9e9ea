#include "slgap/groups/table.hpp"

#include <algorithm>

#include "slgap/errors.hpp"

namespace slgap::groups {

using algebra::CrtFactor;
using algebra::FiniteField;
using algebra::NumberField;
using algebra::ResidueRing;

BigInt sl_order(const BigInt& s, unsigned d) {
  BigInt order = bigint_pow(s, static_cast<unsigned long>(d) * (d - 1) / 2);
  for (unsigned i = 2; i <= d; ++i)
    order *= bigint_pow(s, i) - 1;
  return order;
}

GroupSpec GroupSpec::make(RingPtr ring, unsigned d) {
  GroupSpec spec;
  spec.d = d;
  spec.order = 1;
  for (const auto& fac : ring->factors())
    spec.order *= sl_order(BigInt(static_cast<unsigned long>(fac.F.order())), d);
  spec.ring = std::move(ring);
  return spec;
}

double factor_log_order(const CrtFactor& fac, unsigned d) {
  return log_bigint(sl_order(BigInt(static_cast<unsigned long>(fac.F.order())), d));
}

std::vector<FqMatrix> enumerate_sl_fq(const FiniteField& F, unsigned d,
                                      double work_cap) {
  std::uint64_t s = F.order();
  double work = 1;
  for (unsigned i = 0; i < d * d; ++i) work *= static_cast<double>(s);
  if (work > work_cap) raise(Errc::TooLarge, "factor scan too large");

  std::vector<FFElem> field_elems(s);
  for (std::uint64_t i = 0; i < s; ++i) field_elems[i] = F.element(i);

  std::vector<FqMatrix> out;
  std::vector<std::uint64_t> idx(d * d, 0);
  FqMatrix m{d, std::vector<FFElem>(static_cast<std::size_t>(d) * d, F.zero())};
  const FFElem one = F.one();
  while (true) {
    for (unsigned i = 0; i < d * d; ++i) m.e[i] = field_elems[idx[i]];
    if (fq_det(F, m) == one) out.push_back(m);
    unsigned pos = 0;
    while (pos < d * d && ++idx[pos] == s) idx[pos++] = 0;
    if (pos == d * d) break;
  }
  return out;
}

std::vector<GroupElem> enumerate_group(const GroupSpec& spec, std::size_t cap) {
  if (spec.order > static_cast<unsigned long>(cap))
    raise(Errc::TooLarge, "group order " + spec.order.get_str() +
                              " exceeds cap " + std::to_string(cap));
  const ResidueRing& R = *spec.ring;
  unsigned d = spec.d;

  std::vector<std::vector<FqMatrix>> per_factor;
  per_factor.reserve(R.factors().size());
  for (const auto& fac : R.factors())
    per_factor.push_back(enumerate_sl_fq(fac.F, d));

  // mixed-radix product over factors, entrywise CRT join
  std::vector<std::size_t> idx(per_factor.size(), 0);
  std::vector<GroupElem> out;
  out.reserve(mpz_get_ui(spec.order.get_mpz_t()));
  while (true) {
    std::vector<RingElem> entries;
    entries.reserve(static_cast<std::size_t>(d) * d);
    for (unsigned pos = 0; pos < d * d; ++pos) {
      std::vector<FFElem> parts(per_factor.size());
      for (std::size_t fi = 0; fi < per_factor.size(); ++fi)
        parts[fi] = per_factor[fi][idx[fi]].e[pos];
      entries.push_back(R.join(parts));
    }
    out.emplace_back(spec.ring, d, std::move(entries));
    std::size_t pos = 0;
    while (pos < idx.size() && ++idx[pos] == per_factor[pos].size())
      idx[pos++] = 0;
    if (pos == idx.size()) break;
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::shared_ptr<const GroupTable> GroupTable::from_elements(
    std::vector<GroupElem> elems) {
  auto t = std::shared_ptr<GroupTable>(new GroupTable());
  std::sort(elems.begin(), elems.end());
  t->elems_ = std::move(elems);
  t->n_ = static_cast<std::uint32_t>(t->elems_.size());
  t->index_.reserve(t->n_ * 2);
  for (std::uint32_t i = 0; i < t->n_; ++i)
    t->index_.emplace(t->elems_[i].key(), i);
  if (t->index_.size() != t->n_)
    raise(Errc::FactorMismatch, "duplicate elements");
  GroupElem id = GroupElem::identity(t->elems_[0].ring(), t->elems_[0].dim());
  auto it = t->index_.find(id.key());
  if (it == t->index_.end())
    raise(Errc::FactorMismatch, "identity not in element set");
  t->id_ = it->second;
  return t;
}

std::shared_ptr<const GroupTable> GroupTable::from_spec(const GroupSpec& spec,
                                                        std::size_t cap) {
  return from_elements(enumerate_group(spec, cap));
}

std::shared_ptr<const GroupTable> GroupTable::cyclic(std::uint32_t n) {
  auto t = std::shared_ptr<GroupTable>(new GroupTable());
  t->n_ = n;
  t->id_ = 0;
  t->mul_table_.resize(static_cast<std::size_t>(n) * n);
  t->inv_table_.resize(n);
  for (std::uint32_t a = 0; a < n; ++a) {
    t->inv_table_[a] = (n - a) % n;
    for (std::uint32_t b = 0; b < n; ++b)
      t->mul_table_[static_cast<std::size_t>(a) * n + b] = (a + b) % n;
  }
  return t;
}

std::uint32_t GroupTable::mul(std::uint32_t a, std::uint32_t b) const {
  if (!mul_table_.empty())
    return mul_table_[static_cast<std::size_t>(a) * n_ + b];
  GroupElem prod = elems_[a].mul(elems_[b]);
  auto it = index_.find(prod.key());
  if (it == index_.end())
    raise(Errc::FactorMismatch, "product left the table (not a group?)");
  return it->second;
}

std::uint32_t GroupTable::inv(std::uint32_t a) const {
  if (!inv_table_.empty()) return inv_table_[a];
  GroupElem g = elems_[a].inverse();
  auto it = index_.find(g.key());
  if (it == index_.end()) raise(Errc::FactorMismatch, "inverse not in table");
  return it->second;
}

std::uint32_t GroupTable::index_of(const GroupElem& g) const {
  auto it = index_.find(g.key());
  if (it == index_.end()) raise(Errc::FactorMismatch, "element not in table");
  return it->second;
}

std::optional<std::uint32_t> GroupTable::find(const std::string& key) const {
  auto it = index_.find(key);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::string GroupTable::label(std::uint32_t i) const {
  if (elems_.empty()) return std::to_string(i);
  static const char* hex = "0123456789abcdef";
  std::string out;
  for (unsigned char c : elems_[i].key()) {
    out.push_back(hex[c >> 4]);
    out.push_back(hex[c & 0xf]);
  }
  return out;
}

std::vector<std::uint32_t> GroupTable::left_translation_inv(
    std::uint32_t s) const {
  std::vector<std::uint32_t> perm(n_);
  std::uint32_t sinv = inv(s);
  for (std::uint32_t g = 0; g < n_; ++g) perm[g] = mul(sinv, g);
  return perm;
}

GroupElem project(const GroupElem& g,
                  const std::vector<std::uint64_t>& primes) {
  const ResidueRing& R = *g.ring();
  if (primes.empty()) raise(Errc::FactorMismatch, "empty projection target");
  std::uint64_t q2 = 1;
  for (auto p : primes) {
    bool known = false;
    for (auto rp : R.primes()) known = known || rp == p;
    if (!known) raise(Errc::FactorMismatch, "prime not in modulus");
    q2 *= p;
  }
  auto ring2 = algebra::make_residue_ring(R.field(), q2);
  unsigned d = g.dim();
  std::vector<RingElem> entries;
  entries.reserve(static_cast<std::size_t>(d) * d);
  for (unsigned i = 0; i < d; ++i)
    for (unsigned j = 0; j < d; ++j) {
      std::vector<long long> c(g.at(i, j).c.begin(), g.at(i, j).c.end());
      entries.push_back(ring2->from_coeffs(c));
    }
  return GroupElem(ring2, d, std::move(entries));
}

double factorwise_distance(const GroupElem& g, const GroupElem& h) {
  if (!(*g.ring() == *h.ring()) || g.dim() != h.dim())
    raise(Errc::RingMismatch, "distance needs a common group");
  const ResidueRing& R = *g.ring();
  double dist = 0;
  for (std::size_t i = 0; i < R.factors().size(); ++i) {
    if (!(factor_image(g, i) == factor_image(h, i)))
      dist += factor_log_order(R.factors()[i], g.dim());
  }
  return dist;
}

}  // namespace slgap::groups
