#pragma once

#include <array>
#include <cstdint>
#include <set>
#include <vector>

#include "slgap/groups/subgroups.hpp"
#include "slgap/rng.hpp"

namespace testutil {

using slgap::algebra::NumberField;
using slgap::algebra::RingPtr;
using slgap::groups::GroupElem;
using slgap::groups::GroupSpec;
using slgap::groups::GroupTable;
using slgap::groups::TablePtr;

inline RingPtr ring_mod(std::uint64_t q, std::vector<long long> f = {0, 1}) {
  return slgap::algebra::make_residue_ring(NumberField::make(std::move(f)), q);
}

inline TablePtr sl2_table(std::uint64_t q, std::vector<long long> f = {0, 1},
                          std::size_t cap = 200000) {
  auto ring = ring_mod(q, std::move(f));
  return GroupTable::from_spec(GroupSpec::make(ring, 2), cap);
}

/// Unipotent pair {[[1,1],[0,1]], [[1,0],[1,1]]} with inverses, as indices.
inline std::vector<std::uint32_t> unipotent_gens(const TablePtr& table,
                                                 const RingPtr& ring) {
  std::vector<std::uint32_t> S;
  for (auto m : {std::vector<long long>{1, 1, 0, 1},
                 std::vector<long long>{1, -1, 0, 1},
                 std::vector<long long>{1, 0, 1, 1},
                 std::vector<long long>{1, 0, -1, 1}})
    S.push_back(table->index_of(GroupElem::from_ints(ring, 2, m)));
  return S;
}

// ---- independent little oracles over plain ints mod p ----

using IMat = std::array<long long, 4>;

inline IMat imul(const IMat& a, const IMat& b, long long p) {
  auto m = [&](long long x) { return ((x % p) + p) % p; };
  return {m(a[0] * b[0] + a[1] * b[2]), m(a[0] * b[1] + a[1] * b[3]),
          m(a[2] * b[0] + a[3] * b[2]), m(a[2] * b[1] + a[3] * b[3])};
}

/// All of SL_2(Z/pZ) by brute scan, p prime or composite.
inline std::vector<IMat> sl2_scan(long long p) {
  std::vector<IMat> out;
  for (long long a = 0; a < p; ++a)
    for (long long b = 0; b < p; ++b)
      for (long long c = 0; c < p; ++c)
        for (long long d = 0; d < p; ++d)
          if (((a * d - b * c) % p + p) % p == 1) out.push_back({a, b, c, d});
  return out;
}

/// BFS closure of generators, plain int arithmetic.
inline std::size_t closure_scan(const std::vector<IMat>& gens, long long p) {
  std::set<IMat> seen{IMat{1, 0, 0, 1}};
  std::vector<IMat> frontier{IMat{1, 0, 0, 1}};
  while (!frontier.empty()) {
    std::vector<IMat> next;
    for (const auto& g : frontier)
      for (const auto& s : gens) {
        IMat h = imul(g, s, p);
        if (seen.insert(h).second) next.push_back(h);
      }
    frontier = std::move(next);
  }
  return seen.size();
}

inline std::uint32_t random_index(slgap::SplitMix64& rng, const TablePtr& t) {
  return static_cast<std::uint32_t>(rng.below(t->size()));
}

}  // namespace testutil
