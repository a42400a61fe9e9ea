#pragma once

#include <set>
#include <string>
#include <vector>

#include "json.hpp"
#include "slgap/groups/table.hpp"

namespace slgap::groups {

/// A subgroup given by an explicit element set (always populated at desk
/// scale) plus a structural tag. index * size = |ambient|.
struct SubgroupDescriptor {
  enum class Kind {
    Explicit,
    Center,
    SplitTorus,
    NonsplitTorus,
    TorusNormalizerSplit,
    TorusNormalizerNonsplit,
    Borel,
    Preimage,
  };

  Kind kind = Kind::Explicit;
  RingPtr ring;
  unsigned d = 2;
  std::vector<GroupElem> elements;
  std::set<std::string> keys;
  std::vector<GroupElem> generators;
  BigInt ambient_order;
  BigInt index;
  bool is_full = false;

  std::size_t size() const { return elements.size(); }
  bool contains(const GroupElem& g) const { return keys.count(g.key()) > 0; }

  /// Exhaustive check that the element set is closed under product and
  /// inverse and contains the identity.
  bool verify_subgroup() const;

  nlohmann::json to_json() const;

  static SubgroupDescriptor from_elements(Kind kind, RingPtr ring, unsigned d,
                                          std::vector<GroupElem> elements,
                                          const BigInt& ambient_order);
};

const char* kind_name(SubgroupDescriptor::Kind k);

/// Breadth-first product closure of a generating set. TooLarge beyond cap.
SubgroupDescriptor closure(const std::vector<GroupElem>& gens,
                           std::size_t cap = kDefaultEnumCap);

/// Center, split/nonsplit torus, the two torus normalizers and the Borel
/// of SL_2(F_p), all explicit and verified. p odd.
std::vector<SubgroupDescriptor> subgroup_atlas(std::uint64_t p,
                                               std::size_t cap = kDefaultEnumCap);

/// Same families at the level of one CRT factor (k = 1 only).
struct FqSubgroup {
  SubgroupDescriptor::Kind kind;
  std::vector<FqMatrix> elements;
  std::set<std::string> keys;
};
std::vector<FqSubgroup> atlas_families_fq(const algebra::FiniteField& F);

/// All conjugates of an explicit factor-level subgroup, deduplicated.
std::vector<FqSubgroup> conjugates_fq(const algebra::FiniteField& F,
                                      const FqSubgroup& H,
                                      const std::vector<FqMatrix>& group);

struct FactorReport {
  std::uint64_t p = 0;
  unsigned k = 1;
  bool surjective = false;
  BigInt image_index;
};

/// Per-CRT-factor surjectivity of an explicit subgroup of SL_d(O/(q)).
std::vector<FactorReport> projection_profile(const SubgroupDescriptor& H);

/// [G : C(g)] computed factorwise by counting commuting elements in each
/// factor group.
BigInt centralizer_index(const GroupElem& g, std::size_t cap = kDefaultEnumCap);

/// Full preimage in SL_d(O/(q)) of a subgroup of SL_d(O/(q')) under the
/// projection, q' | q.
SubgroupDescriptor preimage_subgroup(const SubgroupDescriptor& inner,
                                     const TablePtr& ambient);

}  // namespace slgap::groups
