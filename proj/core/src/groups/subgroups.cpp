#include "slgap/groups/subgroups.hpp"

#include <algorithm>
#include <deque>
#include <map>

#include "slgap/errors.hpp"

namespace slgap::groups {

using algebra::FFElem;
using algebra::FiniteField;
using algebra::NumberField;
using algebra::ResidueRing;

const char* kind_name(SubgroupDescriptor::Kind k) {
  using K = SubgroupDescriptor::Kind;
  switch (k) {
    case K::Explicit: return "explicit";
    case K::Center: return "center";
    case K::SplitTorus: return "split_torus";
    case K::NonsplitTorus: return "nonsplit_torus";
    case K::TorusNormalizerSplit: return "split_torus_normalizer";
    case K::TorusNormalizerNonsplit: return "nonsplit_torus_normalizer";
    case K::Borel: return "borel";
    case K::Preimage: return "preimage";
  }
  return "unknown";
}

SubgroupDescriptor SubgroupDescriptor::from_elements(
    Kind kind, RingPtr ring, unsigned d, std::vector<GroupElem> elements,
    const BigInt& ambient_order) {
  SubgroupDescriptor H;
  H.kind = kind;
  H.ring = std::move(ring);
  H.d = d;
  std::sort(elements.begin(), elements.end());
  elements.erase(std::unique(elements.begin(), elements.end()), elements.end());
  for (const auto& g : elements) H.keys.insert(g.key());
  H.elements = std::move(elements);
  H.ambient_order = ambient_order;
  H.index = ambient_order / BigInt(static_cast<unsigned long>(H.elements.size()));
  H.is_full = (H.index == 1);
  return H;
}

bool SubgroupDescriptor::verify_subgroup() const {
  if (elements.empty()) return false;
  GroupElem id = GroupElem::identity(ring, d);
  if (!contains(id)) return false;
  for (const auto& g : elements) {
    if (!contains(g.inverse())) return false;
    for (const auto& h : elements)
      if (!contains(g.mul(h))) return false;
  }
  return true;
}

nlohmann::json SubgroupDescriptor::to_json() const {
  nlohmann::json j;
  j["kind"] = kind_name(kind);
  j["index"] = index.get_str();
  j["size"] = elements.size();
  nlohmann::json gens = nlohmann::json::array();
  for (const auto& g : generators) gens.push_back(g.to_text());
  j["generators"] = gens;
  return j;
}

SubgroupDescriptor closure(const std::vector<GroupElem>& gens,
                           std::size_t cap) {
  if (gens.empty()) raise(Errc::FactorMismatch, "closure of empty set");
  RingPtr ring = gens[0].ring();
  unsigned d = gens[0].dim();
  for (const auto& g : gens)
    if (!(*g.ring() == *ring) || g.dim() != d)
      raise(Errc::RingMismatch, "generators live in different groups");

  std::vector<GroupElem> side = gens;
  for (const auto& g : gens) side.push_back(g.inverse());

  std::map<std::string, GroupElem> seen;
  GroupElem id = GroupElem::identity(ring, d);
  seen.emplace(id.key(), id);
  std::deque<GroupElem> frontier{id};
  while (!frontier.empty()) {
    GroupElem cur = std::move(frontier.front());
    frontier.pop_front();
    for (const auto& s : side) {
      GroupElem nxt = cur.mul(s);
      if (seen.count(nxt.key())) continue;
      if (seen.size() >= cap)
        raise(Errc::TooLarge, "closure exceeded cap " + std::to_string(cap));
      frontier.push_back(nxt);
      seen.emplace(nxt.key(), std::move(nxt));
    }
  }

  std::vector<GroupElem> elems;
  elems.reserve(seen.size());
  for (auto& [k, v] : seen) elems.push_back(std::move(v));
  auto spec = GroupSpec::make(ring, d);
  auto H = SubgroupDescriptor::from_elements(SubgroupDescriptor::Kind::Explicit,
                                             ring, d, std::move(elems),
                                             spec.order);
  H.generators = gens;
  return H;
}

std::vector<FqSubgroup> atlas_families_fq(const FiniteField& F) {
  if (F.k() != 1)
    raise(Errc::AtlasUnavailable, "atlas is implemented for prime fields only");
  std::uint64_t p = F.p();
  if (p == 2 || !algebra::is_prime_u64(p))
    raise(Errc::AtlasUnavailable, "atlas needs an odd prime");

  using Kind = SubgroupDescriptor::Kind;
  auto finish = [&](Kind kind, std::vector<FqMatrix> elems) {
    FqSubgroup H;
    H.kind = kind;
    std::sort(elems.begin(), elems.end());
    elems.erase(std::unique(elems.begin(), elems.end()), elems.end());
    for (const auto& m : elems) H.keys.insert(fq_key(F, m));
    H.elements = std::move(elems);
    return H;
  };

  auto mat = [&](long long a, long long b, long long c, long long d) {
    return FqMatrix{2, {F.from_int(a), F.from_int(b), F.from_int(c), F.from_int(d)}};
  };

  std::vector<FqSubgroup> out;

  // center {+-I}
  out.push_back(finish(Kind::Center, {mat(1, 0, 0, 1), mat(-1, 0, 0, -1)}));

  // split torus diag(a, a^{-1})
  {
    std::vector<FqMatrix> t;
    for (std::uint64_t a = 1; a < p; ++a) {
      FFElem fa = F.from_int(static_cast<long long>(a));
      t.push_back(FqMatrix{2, {fa, F.zero(), F.zero(), F.inv(fa)}});
    }
    out.push_back(finish(Kind::SplitTorus, t));
  }

  // nonsplit torus: norm-one elements of F_{p^2}^* on the basis {1, w},
  // w^2 = eps the smallest non-residue: [[x, eps y], [y, x]].
  std::uint64_t eps = 0;
  {
    std::vector<bool> is_sq(p, false);
    for (std::uint64_t a = 1; a < p; ++a)
      is_sq[algebra::mulmod(a, a, p)] = true;
    for (std::uint64_t e = 2; e < p; ++e)
      if (!is_sq[e]) { eps = e; break; }
    std::vector<FqMatrix> t;
    for (std::uint64_t x = 0; x < p; ++x)
      for (std::uint64_t y = 0; y < p; ++y) {
        std::uint64_t norm =
            (algebra::mulmod(x, x, p) + p * p -
             algebra::mulmod(eps, algebra::mulmod(y, y, p), p)) % p;
        if (norm == 1)
          t.push_back(mat(static_cast<long long>(x),
                          static_cast<long long>(algebra::mulmod(eps, y, p)),
                          static_cast<long long>(y), static_cast<long long>(x)));
      }
    out.push_back(finish(Kind::NonsplitTorus, t));
  }

  // split torus normalizer: torus and w * torus with w = [[0,1],[-1,0]]
  {
    std::vector<FqMatrix> n = out[1].elements;
    FqMatrix w = mat(0, 1, -1, 0);
    for (const auto& t : out[1].elements) n.push_back(fq_mul(F, w, t));
    out.push_back(finish(Kind::TorusNormalizerSplit, n));
  }

  // nonsplit torus normalizer: adjoin j * M(u) with j = diag(1,-1) acting
  // as the Galois twist and u of norm -1 so the determinant is 1.
  {
    std::uint64_t ux = 0, uy = 0;
    bool found = false;
    for (std::uint64_t x = 0; x < p && !found; ++x)
      for (std::uint64_t y = 0; y < p && !found; ++y) {
        std::uint64_t norm =
            (algebra::mulmod(x, x, p) + p * p -
             algebra::mulmod(eps, algebra::mulmod(y, y, p), p)) % p;
        if (norm == p - 1) { ux = x; uy = y; found = true; }
      }
    FqMatrix mu = mat(static_cast<long long>(ux),
                      static_cast<long long>(algebra::mulmod(eps, uy, p)),
                      static_cast<long long>(uy), static_cast<long long>(ux));
    FqMatrix j = mat(1, 0, 0, -1);
    FqMatrix n0 = fq_mul(F, j, mu);
    std::vector<FqMatrix> n = out[2].elements;
    for (const auto& t : out[2].elements) n.push_back(fq_mul(F, n0, t));
    out.push_back(finish(Kind::TorusNormalizerNonsplit, n));
  }

  // Borel: upper triangular [[a, b], [0, a^{-1}]]
  {
    std::vector<FqMatrix> bset;
    for (std::uint64_t a = 1; a < p; ++a)
      for (std::uint64_t b = 0; b < p; ++b) {
        FFElem fa = F.from_int(static_cast<long long>(a));
        bset.push_back(FqMatrix{
            2, {fa, F.from_int(static_cast<long long>(b)), F.zero(), F.inv(fa)}});
      }
    out.push_back(finish(Kind::Borel, bset));
  }

  return out;
}

std::vector<FqSubgroup> conjugates_fq(const FiniteField& F, const FqSubgroup& H,
                                      const std::vector<FqMatrix>& group) {
  std::map<std::string, FqSubgroup> seen;
  for (const auto& g : group) {
    FqMatrix ginv = fq_inverse(F, g);
    FqSubgroup conj;
    conj.kind = H.kind;
    for (const auto& h : H.elements)
      conj.elements.push_back(fq_mul(F, fq_mul(F, g, h), ginv));
    std::sort(conj.elements.begin(), conj.elements.end());
    std::string sig;
    for (const auto& m : conj.elements) sig += fq_key(F, m);
    if (seen.count(sig)) continue;
    for (const auto& m : conj.elements) conj.keys.insert(fq_key(F, m));
    seen.emplace(std::move(sig), std::move(conj));
  }
  std::vector<FqSubgroup> out;
  out.reserve(seen.size());
  for (auto& [k, v] : seen) out.push_back(std::move(v));
  return out;
}

std::vector<SubgroupDescriptor> subgroup_atlas(std::uint64_t p,
                                               std::size_t cap) {
  if (!algebra::is_prime_u64(p) || p == 2)
    raise(Errc::AtlasUnavailable, "atlas needs an odd prime");
  auto K = NumberField::make({0, 1});
  auto ring = algebra::make_residue_ring(K, p);
  auto spec = GroupSpec::make(ring, 2);
  if (spec.order > static_cast<unsigned long>(cap))
    raise(Errc::TooLarge, "atlas group exceeds enumeration cap");
  const FiniteField& F = ring->factors()[0].F;
  auto families = atlas_families_fq(F);

  std::vector<SubgroupDescriptor> out;
  for (auto& fam : families) {
    std::vector<GroupElem> elems;
    elems.reserve(fam.elements.size());
    for (const auto& m : fam.elements) {
      std::vector<RingElem> entries;
      for (const auto& x : m.e) entries.push_back(ring->join({x}));
      elems.emplace_back(ring, 2, std::move(entries));
    }
    auto H = SubgroupDescriptor::from_elements(fam.kind, ring, 2,
                                               std::move(elems), spec.order);
    if (!H.verify_subgroup())
      raise(Errc::FactorMismatch,
            std::string("atlas family is not a subgroup: ") + kind_name(fam.kind));
    out.push_back(std::move(H));
  }
  return out;
}

std::vector<FactorReport> projection_profile(const SubgroupDescriptor& H) {
  const ResidueRing& R = *H.ring;
  std::vector<FactorReport> out;
  for (std::size_t fi = 0; fi < R.factors().size(); ++fi) {
    const auto& fac = R.factors()[fi];
    std::set<std::string> image;
    for (const auto& h : H.elements)
      image.insert(fq_key(fac.F, factor_image(h, fi)));
    BigInt forder = sl_order(BigInt(static_cast<unsigned long>(fac.F.order())), H.d);
    FactorReport rep;
    rep.p = fac.p;
    rep.k = fac.k;
    rep.image_index = forder / BigInt(static_cast<unsigned long>(image.size()));
    rep.surjective = (rep.image_index == 1);
    out.push_back(std::move(rep));
  }
  return out;
}

BigInt centralizer_index(const GroupElem& g, std::size_t cap) {
  const ResidueRing& R = *g.ring();
  BigInt index = 1;
  for (std::size_t fi = 0; fi < R.factors().size(); ++fi) {
    const auto& fac = R.factors()[fi];
    BigInt forder = sl_order(BigInt(static_cast<unsigned long>(fac.F.order())), g.dim());
    if (forder > static_cast<unsigned long>(cap))
      raise(Errc::TooLarge, "factor exceeds enumeration cap");
    auto elems = enumerate_sl_fq(fac.F, g.dim());
    FqMatrix gi = factor_image(g, fi);
    std::uint64_t commuting = 0;
    for (const auto& h : elems)
      if (fq_mul(fac.F, gi, h) == fq_mul(fac.F, h, gi)) ++commuting;
    index *= forder / BigInt(static_cast<unsigned long>(commuting));
  }
  return index;
}

SubgroupDescriptor preimage_subgroup(const SubgroupDescriptor& inner,
                                     const TablePtr& ambient) {
  RingPtr target = inner.ring;
  std::vector<GroupElem> elems;
  for (std::uint32_t i = 0; i < ambient->size(); ++i) {
    const GroupElem& g = ambient->elem(i);
    unsigned d = g.dim();
    std::vector<RingElem> entries;
    entries.reserve(static_cast<std::size_t>(d) * d);
    for (unsigned r = 0; r < d; ++r)
      for (unsigned c = 0; c < d; ++c) {
        std::vector<long long> coeffs(g.at(r, c).c.begin(), g.at(r, c).c.end());
        entries.push_back(target->from_coeffs(std::move(coeffs)));
      }
    GroupElem proj(target, d, std::move(entries));
    if (inner.contains(proj)) elems.push_back(g);
  }
  auto spec = GroupSpec::make(ambient->elem(0).ring(), ambient->elem(0).dim());
  auto H = SubgroupDescriptor::from_elements(SubgroupDescriptor::Kind::Preimage,
                                             ambient->elem(0).ring(),
                                             ambient->elem(0).dim(),
                                             std::move(elems), spec.order);
  return H;
}

}  // namespace slgap::groups
