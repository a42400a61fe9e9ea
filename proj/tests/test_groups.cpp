#include <map>

#include "doctest.h"
#include "helpers.hpp"
#include "slgap/errors.hpp"

using namespace slgap;
using namespace slgap::groups;
using testutil::ring_mod;
using testutil::sl2_table;

TEST_CASE("group multiplication and inversion") {
  auto ring = ring_mod(5);
  auto a = GroupElem::from_ints(ring, 2, {1, 1, 0, 1});
  auto b = GroupElem::from_ints(ring, 2, {1, 0, 1, 1});
  CHECK(a.mul(b) == GroupElem::from_ints(ring, 2, {2, 1, 1, 1}));
  CHECK(a.inverse() == GroupElem::from_ints(ring, 2, {1, -1, 0, 1}));

  auto ring35 = ring_mod(35);
  auto spec = GroupSpec::make(ring35, 2);
  auto table = GroupTable::from_spec(spec);
  auto id = GroupElem::identity(ring35, 2);
  SplitMix64 rng(11);
  for (int t = 0; t < 500; ++t) {
    const auto& g = table->elem(testutil::random_index(rng, table));
    CHECK(g.mul(g.inverse()) == id);
  }
}

TEST_CASE("determinant-1 is enforced") {
  auto ring = ring_mod(5);
  CHECK_THROWS_AS(GroupElem::from_ints(ring, 2, {1, 0, 0, 2}), Error);
  auto ring7 = ring_mod(7);
  auto g = GroupElem::from_ints(ring7, 2, {1, 1, 0, 1});
  CHECK_THROWS_AS(g.mul(GroupElem::from_ints(ring, 2, {1, 1, 0, 1})), Error);
}

TEST_CASE("enumeration matches the scan oracle and the order formula") {
  // oracle: plain int scan
  CHECK(testutil::sl2_scan(3).size() == 24);
  CHECK(testutil::sl2_scan(5).size() == 120);

  auto t3 = sl2_table(3);
  CHECK(t3->size() == 24);
  auto t5 = sl2_table(5);
  CHECK(t5->size() == 120);
  auto t15 = sl2_table(15);
  CHECK(t15->size() == 24 * 120);

  // formula cross-check
  CHECK(GroupSpec::make(ring_mod(3), 2).order == 24);
  CHECK(GroupSpec::make(ring_mod(15), 2).order == 2880);
  CHECK(GroupSpec::make(ring_mod(3, {1, 0, 1}), 2).order ==
        sl_order(BigInt(9), 2));

  // d = 3 once: |SL_3(F_2)| = 168
  auto spec3 = GroupSpec::make(ring_mod(5), 3);
  CHECK(spec3.order == 372000);
  auto t168 = GroupTable::from_spec(GroupSpec::make(ring_mod(2), 3));
  CHECK(t168->size() == 168);

  CHECK_THROWS_AS(enumerate_group(GroupSpec::make(ring_mod(101), 2)), Error);
}

TEST_CASE("projection is a homomorphism onto the factor rings") {
  auto ring = ring_mod(15);
  auto table = sl2_table(15);
  auto id = GroupElem::identity(ring, 2);
  CHECK(project(id, {3}) == GroupElem::identity(ring_mod(3), 2));

  auto g = GroupElem::from_ints(ring, 2, {7, 0, 0, 13});
  CHECK(project(g, {3}) == GroupElem::identity(ring_mod(3), 2));

  SplitMix64 rng(5);
  for (int t = 0; t < 1000; ++t) {
    const auto& a = table->elem(testutil::random_index(rng, table));
    const auto& b = table->elem(testutil::random_index(rng, table));
    CHECK(project(a.mul(b), {5}) == project(a, {5}).mul(project(b, {5})));
  }
  CHECK_THROWS_AS(project(id, {7}), Error);
}

TEST_CASE("subgroup atlas families") {
  SUBCASE("p = 3 Borel") {
    auto atlas = subgroup_atlas(3);
    for (const auto& H : atlas) {
      if (H.kind == SubgroupDescriptor::Kind::Borel) {
        CHECK(H.size() == 6);
        CHECK(H.index == 4);
      }
    }
  }
  SUBCASE("p = 5 families and indices") {
    auto atlas = subgroup_atlas(5);
    std::map<SubgroupDescriptor::Kind, std::size_t> sizes;
    for (const auto& H : atlas) {
      sizes[H.kind] = H.size();
      CHECK(H.verify_subgroup());
      CHECK(H.index * BigInt(static_cast<unsigned long>(H.size())) == 120);
    }
    CHECK(sizes[SubgroupDescriptor::Kind::Center] == 2);
    CHECK(sizes[SubgroupDescriptor::Kind::SplitTorus] == 4);       // p - 1
    CHECK(sizes[SubgroupDescriptor::Kind::NonsplitTorus] == 6);    // p + 1
    CHECK(sizes[SubgroupDescriptor::Kind::TorusNormalizerSplit] == 8);
    CHECK(sizes[SubgroupDescriptor::Kind::TorusNormalizerNonsplit] == 12);
    CHECK(sizes[SubgroupDescriptor::Kind::Borel] == 20);
  }
  SUBCASE("every proper atlas member has index >= p + 1") {
    for (std::uint64_t p : {5ULL, 7ULL, 11ULL, 13ULL}) {
      for (const auto& H : subgroup_atlas(p))
        CHECK(H.index >= p + 1);
    }
  }
}

TEST_CASE("closure agrees with the scan oracle") {
  auto ring = ring_mod(3);
  auto A = GroupElem::from_ints(ring, 2, {1, 1, 0, 1});
  auto B = GroupElem::from_ints(ring, 2, {1, 0, 1, 1});
  auto H = closure({A, B});
  CHECK(H.size() == 24);
  CHECK(H.is_full);
  CHECK(testutil::closure_scan({{1, 1, 0, 1}, {1, 2, 0, 1},
                                {1, 0, 1, 1}, {1, 0, 2, 1}},
                               3) == 24);

  auto id = GroupElem::identity(ring, 2);
  auto T = closure({id});
  CHECK(T.size() == 1);
  CHECK(T.index == 24);

  // Borel generators mod 5: diag(2, 3) and [[1,1],[0,1]]
  auto ring5 = ring_mod(5);
  auto Bsub = closure({GroupElem::from_ints(ring5, 2, {2, 0, 0, 3}),
                       GroupElem::from_ints(ring5, 2, {1, 1, 0, 1})});
  CHECK(Bsub.size() == 20);
  CHECK(Bsub.index == 6);  // p + 1
}

TEST_CASE("projection profile of product subgroups") {
  auto t15 = sl2_table(15);

  SUBCASE("preimage of the Borel mod 3") {
    SubgroupDescriptor borel3;
    for (auto& H : subgroup_atlas(3))
      if (H.kind == SubgroupDescriptor::Kind::Borel) borel3 = H;
    auto pre = preimage_subgroup(borel3, t15);
    CHECK(pre.size() == 6 * 120);
    auto profile = projection_profile(pre);
    REQUIRE(profile.size() == 2);
    CHECK(profile[0].p == 3);
    CHECK_FALSE(profile[0].surjective);
    CHECK(profile[0].image_index == 4);
    CHECK(profile[1].p == 5);
    CHECK(profile[1].surjective);
  }

  SUBCASE("SL_2(F_3) x {1} as a fiber product") {
    // elements of SL_2(Z/15) that are trivial mod 5
    std::vector<GroupElem> elems;
    for (std::uint32_t i = 0; i < t15->size(); ++i) {
      const auto& g = t15->elem(i);
      if (project(g, {5}) == GroupElem::identity(ring_mod(5), 2))
        elems.push_back(g);
    }
    auto H = SubgroupDescriptor::from_elements(
        SubgroupDescriptor::Kind::Explicit, t15->elem(0).ring(), 2, elems,
        GroupSpec::make(t15->elem(0).ring(), 2).order);
    CHECK(H.size() == 24);
    auto profile = projection_profile(H);
    CHECK(profile[0].surjective);
    CHECK(profile[1].image_index == 120);
  }

  SUBCASE("full group is surjective everywhere") {
    std::vector<GroupElem> all;
    for (std::uint32_t i = 0; i < t15->size(); ++i) all.push_back(t15->elem(i));
    auto H = SubgroupDescriptor::from_elements(
        SubgroupDescriptor::Kind::Explicit, t15->elem(0).ring(), 2, all,
        GroupSpec::make(t15->elem(0).ring(), 2).order);
    for (const auto& rep : projection_profile(H)) CHECK(rep.surjective);
  }
}

TEST_CASE("factorwise distance is a metric built from factor orders") {
  auto ring = ring_mod(15);
  auto table = sl2_table(15);
  auto g = GroupElem::from_ints(ring, 2, {1, 1, 0, 1});
  CHECK(factorwise_distance(g, g) == 0.0);

  // differ only mod 3: h = g except entry shifted by 5 (trivial mod 5)
  auto h = GroupElem::from_ints(ring, 2, {1, 6, 0, 1});
  CHECK(factorwise_distance(g, h) ==
        doctest::Approx(std::log(24.0)).epsilon(1e-12));

  SplitMix64 rng(3);
  for (int t = 0; t < 1000; ++t) {
    const auto& a = table->elem(testutil::random_index(rng, table));
    const auto& b = table->elem(testutil::random_index(rng, table));
    const auto& c = table->elem(testutil::random_index(rng, table));
    CHECK(factorwise_distance(a, c) <=
          factorwise_distance(a, b) + factorwise_distance(b, c) + 1e-12);
  }
}

TEST_CASE("centralizer index, factorwise") {
  auto ring5 = ring_mod(5);
  CHECK(centralizer_index(GroupElem::identity(ring5, 2)) == 1);
  CHECK(centralizer_index(GroupElem::from_ints(ring5, 2, {-1, 0, 0, -1})) == 1);

  auto u = GroupElem::from_ints(ring5, 2, {1, 1, 0, 1});
  CHECK(centralizer_index(u) == 12);
  // oracle: count commuting elements with plain table arithmetic
  auto t5 = sl2_table(5);
  std::size_t commuting = 0;
  auto ui = t5->index_of(u);
  for (std::uint32_t i = 0; i < t5->size(); ++i)
    if (t5->mul(ui, i) == t5->mul(i, ui)) ++commuting;
  CHECK(commuting == 10);
  CHECK(120 % commuting == 0);
  CHECK(centralizer_index(u) == 120 / commuting);

  // multiplicativity across factors
  auto ring15 = ring_mod(15);
  auto u15 = GroupElem::from_ints(ring15, 2, {1, 1, 0, 1});
  CHECK(centralizer_index(u15) == BigInt(4) * 12);  // 24/|C_3| * 120/|C_5|
}

TEST_CASE("factor multiplicity never exceeds the field degree") {
  for (auto f : {std::vector<long long>{1, 0, 1}, {-2, 0, 1}}) {
    for (std::uint64_t q : {15ULL, 35ULL, 91ULL}) {
      auto R = testutil::ring_mod(q, f);
      std::map<std::pair<std::uint64_t, unsigned>, unsigned> mult;
      for (const auto& fac : R->factors()) ++mult[{fac.p, fac.k}];
      for (auto& [key, m] : mult) CHECK(m <= R->degree());
    }
  }
}

TEST_CASE("torus-class intersections stay near the center") {
  // any two distinct members of the torus class (split and nonsplit tori
  // and all their conjugates) intersect in a subgroup meeting the center
  // with index at most 2
  for (std::uint64_t p : {5ULL, 7ULL}) {
    auto table = sl2_table(p);
    auto atlas = subgroup_atlas(p);
    const auto& F = table->elem(0).ring()->factors()[0].F;
    std::vector<FqMatrix> group;
    for (std::uint32_t i = 0; i < table->size(); ++i)
      group.push_back(factor_image(table->elem(i), 0));

    std::vector<FqSubgroup> torus_class;
    for (const auto& H : atlas) {
      if (H.kind != SubgroupDescriptor::Kind::SplitTorus &&
          H.kind != SubgroupDescriptor::Kind::NonsplitTorus)
        continue;
      FqSubgroup fq;
      fq.kind = H.kind;
      for (const auto& g : H.elements) fq.elements.push_back(factor_image(g, 0));
      for (const auto& m : fq.elements) fq.keys.insert(fq_key(F, m));
      for (auto& conj : conjugates_fq(F, fq, group)) torus_class.push_back(conj);
    }

    for (std::size_t a = 0; a < torus_class.size(); ++a)
      for (std::size_t b = a + 1; b < torus_class.size(); ++b) {
        if (torus_class[a].keys == torus_class[b].keys) continue;
        std::size_t inter = 0, central = 0;
        for (const auto& k : torus_class[a].keys)
          if (torus_class[b].keys.count(k)) ++inter;
        // center of SL_2(F_p) is {I, -I}
        auto id = fq_identity(F, 2);
        FqMatrix mid{2, {F.from_int(-1), F.zero(), F.zero(), F.from_int(-1)}};
        for (const auto& m : {id, mid}) {
          auto k = fq_key(F, m);
          if (torus_class[a].keys.count(k) && torus_class[b].keys.count(k))
            ++central;
        }
        CHECK(inter <= 2 * central);
      }
  }
}
