#include "slgap/growth/regularize.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <set>

#include "slgap/errors.hpp"

namespace slgap::growth {

using algebra::FiniteField;
using groups::FqMatrix;
using groups::FqSubgroup;
using groups::fq_key;

TreeRegularization tree_regularize(const std::vector<GroupElem>& S) {
  if (S.empty()) raise(Errc::EmptyResult, "empty input set");
  auto ring = S[0].ring();
  unsigned d = S[0].dim();
  std::size_t n = ring->factors().size();

  // distinct elements with per-factor keys
  std::vector<GroupElem> elems = S;
  std::sort(elems.begin(), elems.end());
  elems.erase(std::unique(elems.begin(), elems.end()), elems.end());
  std::vector<std::vector<std::string>> keys(elems.size());
  for (std::size_t e = 0; e < elems.size(); ++e) {
    keys[e].reserve(n);
    for (std::size_t i = 0; i < n; ++i)
      keys[e].push_back(
          fq_key(ring->factors()[i].F, groups::factor_image(elems[e], i)));
  }

  std::vector<bool> alive(elems.size(), true);
  std::vector<std::uint64_t> degrees(n, 0);

  for (std::size_t level = n; level-- > 0;) {
    // parents keyed by prefix below `level`; children are distinct level keys
    std::map<std::string, std::map<std::string, std::vector<std::size_t>>> tree;
    for (std::size_t e = 0; e < elems.size(); ++e) {
      if (!alive[e]) continue;
      std::string prefix;
      for (std::size_t i = 0; i < level; ++i) prefix += keys[e][i];
      tree[prefix][keys[e][level]].push_back(e);
    }
    if (tree.empty()) raise(Errc::EmptyResult, "pruning annihilated the set");

    // dyadic buckets of parents by child count
    std::map<int, std::vector<const std::map<std::string, std::vector<std::size_t>>*>>
        buckets;
    for (const auto& [prefix, children] : tree) {
      int j = static_cast<int>(std::floor(std::log2(
          static_cast<double>(children.size()))));
      buckets[j].push_back(&children);
    }
    int best_j = buckets.begin()->first;
    std::uint64_t best_mass = 0;
    std::uint64_t best_min = 0;
    for (const auto& [j, parents] : buckets) {
      std::uint64_t mn = UINT64_MAX;
      for (auto* ch : parents)
        mn = std::min(mn, static_cast<std::uint64_t>(ch->size()));
      std::uint64_t mass = mn * parents.size();
      if (mass > best_mass) {
        best_mass = mass;
        best_j = j;
        best_min = mn;
      }
    }
    degrees[level] = best_min;

    // keep, per parent in the winning bucket, the first best_min children
    std::set<std::size_t> keep;
    for (auto* children : buckets[best_j]) {
      std::uint64_t taken = 0;
      for (const auto& [ckey, members] : *children) {
        if (taken == best_min) break;
        for (auto e : members) keep.insert(e);
        ++taken;
      }
    }
    for (std::size_t e = 0; e < elems.size(); ++e)
      if (alive[e] && !keep.count(e)) alive[e] = false;
  }

  TreeRegularization out;
  for (std::size_t e = 0; e < elems.size(); ++e)
    if (alive[e]) out.regular_subset.push_back(elems[e]);
  if (out.regular_subset.empty())
    raise(Errc::EmptyResult, "pruning annihilated the set");
  out.degrees = std::move(degrees);
  out.loss_bound = 1;
  for (std::size_t i = 0; i < n; ++i) {
    double gi = groups::factor_log_order(ring->factors()[i], d) / std::log(2.0);
    out.loss_bound *= 2 * gi + 1;
  }
  return out;
}

namespace {

struct FactorFamilies {
  const FiniteField* F = nullptr;
  double group_order = 0;
  // each subgroup as a list of coset key-sets (left cosets)
  std::vector<std::vector<std::set<std::string>>> cosets;
};

FactorFamilies build_families(const algebra::CrtFactor& fac, unsigned d) {
  if (fac.k != 1 || d != 2)
    raise(Errc::AtlasUnavailable,
          "coset stripping needs the SL_2 prime-field atlas per factor");
  FactorFamilies out;
  out.F = &fac.F;
  auto group = groups::enumerate_sl_fq(fac.F, d);
  out.group_order = static_cast<double>(group.size());

  auto families = groups::atlas_families_fq(fac.F);
  for (const auto& fam : families) {
    for (const auto& H : groups::conjugates_fq(fac.F, fam, group)) {
      std::vector<std::set<std::string>> cosets;
      std::set<std::string> covered;
      for (const auto& g : group) {
        std::string gk = fq_key(fac.F, g);
        if (covered.count(gk)) continue;
        std::set<std::string> coset;
        for (const auto& h : H.elements) {
          std::string k = fq_key(fac.F, groups::fq_mul(fac.F, g, h));
          coset.insert(k);
          covered.insert(k);
        }
        cosets.push_back(std::move(coset));
      }
      out.cosets.push_back(std::move(cosets));
    }
  }
  return out;
}

}  // namespace

CosetStripResult coset_strip(const std::vector<GroupElem>& S,
                             double delta_prime) {
  if (S.empty()) raise(Errc::EmptyResult, "empty input set");
  if (delta_prime <= 0) raise(Errc::FactorMismatch, "delta' must be positive");
  auto ring = S[0].ring();
  unsigned d = S[0].dim();
  std::size_t n = ring->factors().size();

  std::vector<FactorFamilies> families;
  families.reserve(n);
  for (const auto& fac : ring->factors()) families.push_back(build_families(fac, d));

  std::vector<GroupElem> B = S;
  std::vector<std::vector<std::string>> bkeys(B.size());
  for (std::size_t e = 0; e < B.size(); ++e)
    for (std::size_t i = 0; i < n; ++i)
      bkeys[e].push_back(
          fq_key(ring->factors()[i].F, groups::factor_image(B[e], i)));

  std::vector<bool> stripped(n, false);
  CosetStripResult out;

  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t i = 0; i < n && !changed; ++i) {
      if (stripped[i]) continue;
      double threshold = std::pow(families[i].group_order, -delta_prime);
      for (const auto& subgroup : families[i].cosets) {
        for (const auto& coset : subgroup) {
          std::size_t hits = 0;
          for (std::size_t e = 0; e < B.size(); ++e)
            if (coset.count(bkeys[e][i])) ++hits;
          double mass = static_cast<double>(hits) / B.size();
          if (mass >= threshold) {
            std::vector<GroupElem> nb;
            std::vector<std::vector<std::string>> nk;
            for (std::size_t e = 0; e < B.size(); ++e)
              if (coset.count(bkeys[e][i])) {
                nb.push_back(B[e]);
                nk.push_back(bkeys[e]);
              }
            B = std::move(nb);
            bkeys = std::move(nk);
            stripped[i] = true;
            out.stripped.push_back(i);
            changed = true;
            break;
          }
        }
        if (changed) break;
      }
    }
  }

  out.kept = std::move(B);
  for (std::size_t i = 0; i < n; ++i)
    if (!stripped[i]) out.surviving.push_back(i);
  return out;
}

bool coset_strip_verified(const CosetStripResult& result, double delta_prime) {
  if (result.kept.empty()) return false;
  auto ring = result.kept[0].ring();
  unsigned d = result.kept[0].dim();
  for (auto i : result.surviving) {
    auto fams = build_families(ring->factors()[i], d);
    double threshold = std::pow(fams.group_order, -delta_prime);
    std::vector<std::string> keys;
    keys.reserve(result.kept.size());
    for (const auto& e : result.kept)
      keys.push_back(fq_key(ring->factors()[i].F, groups::factor_image(e, i)));
    for (const auto& subgroup : fams.cosets)
      for (const auto& coset : subgroup) {
        std::size_t hits = 0;
        for (const auto& k : keys)
          if (coset.count(k)) ++hits;
        if (static_cast<double>(hits) / keys.size() >= threshold) return false;
      }
  }
  return true;
}

}  // namespace slgap::growth
