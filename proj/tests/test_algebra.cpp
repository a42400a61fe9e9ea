#include <complex>
#include <set>

#include "doctest.h"
#include "helpers.hpp"
#include "slgap/algebra/residuering.hpp"
#include "slgap/bigint.hpp"
#include "slgap/errors.hpp"

using namespace slgap;
using namespace slgap::algebra;

namespace {

// Oracle: discriminant from complex roots, disc = prod_{i<j} (r_i - r_j)^2,
// roots by Durand-Kerner. Independent of the resultant path.
long long disc_from_roots(const std::vector<long long>& f) {
  int n = static_cast<int>(f.size()) - 1;
  std::vector<std::complex<double>> z(n);
  for (int i = 0; i < n; ++i)
    z[i] = std::pow(std::complex<double>(0.4, 0.9), i + 1);
  auto eval = [&](std::complex<double> x) {
    std::complex<double> acc = 0;
    for (int i = n; i >= 0; --i) acc = acc * x + static_cast<double>(f[i]);
    return acc;
  };
  for (int it = 0; it < 500; ++it) {
    for (int i = 0; i < n; ++i) {
      std::complex<double> denom = 1;
      for (int j = 0; j < n; ++j)
        if (j != i) denom *= z[i] - z[j];
      z[i] -= eval(z[i]) / denom;
    }
  }
  std::complex<double> d = 1;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) d *= (z[i] - z[j]) * (z[i] - z[j]);
  return std::llround(d.real());
}

}  // namespace

TEST_CASE("number field construction and discriminants") {
  auto K = NumberField::make({0, 1});  // f = x, the rational field
  CHECK(K.degree() == 1);
  CHECK(K.discriminant() == 1);

  auto Ki = NumberField::make({1, 0, 1});  // x^2 + 1
  CHECK(Ki.degree() == 2);
  CHECK(Ki.discriminant() == -4);
  CHECK(disc_from_roots({1, 0, 1}) == -4);

  auto K2 = NumberField::make({-2, 0, 1});  // x^2 - 2
  CHECK(K2.discriminant() == 8);
  CHECK(disc_from_roots({-2, 0, 1}) == 8);

  // a quartic, against the root oracle
  auto K4 = NumberField::make({1, 1, 1, 1, 1});
  CHECK(K4.discriminant() == BigInt(static_cast<long>(disc_from_roots({1, 1, 1, 1, 1}))));

  CHECK_THROWS_AS(NumberField::make({1, 2}), Error);           // not monic
  CHECK_THROWS_AS(NumberField::make({-1, 0, 1}), Error);       // (x-1)(x+1)
  CHECK_THROWS_AS(NumberField::make({-4, 0, 1}), Error);       // rational roots
  CHECK_THROWS_AS(NumberField::make({1, 2, 3, 2, 1}), Error);  // (x^2+x+1)^2

  try {
    NumberField::make({-1, 0, 1});
    FAIL("expected Reducible");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::Reducible);
  }
}

TEST_CASE("residue ring CRT factor shapes") {
  SUBCASE("K = Q, q = 15 splits as F_3 x F_5") {
    auto R = testutil::ring_mod(15);
    REQUIRE(R->factors().size() == 2);
    CHECK(R->factors()[0].p == 3);
    CHECK(R->factors()[1].p == 5);
    CHECK(R->factors()[0].k == 1);
    CHECK(R->cardinality() == 15);
  }
  SUBCASE("x^2+1 mod 5 splits into two F_5 factors") {
    auto R = testutil::ring_mod(5, {1, 0, 1});
    REQUIRE(R->factors().size() == 2);
    CHECK(R->factors()[0].k == 1);
    CHECK(R->factors()[1].k == 1);
    CHECK(R->cardinality() == 25);
  }
  SUBCASE("x^2+1 mod 3 stays one F_9 factor") {
    auto R = testutil::ring_mod(3, {1, 0, 1});
    REQUIRE(R->factors().size() == 1);
    CHECK(R->factors()[0].k == 2);
    CHECK(R->factors()[0].F.order() == 9);
  }
}

TEST_CASE("residue ring rejects bad moduli") {
  CHECK_THROWS_AS(testutil::ring_mod(12), Error);  // 12 = 4 * 3
  try {
    testutil::ring_mod(12);
  } catch (const Error& e) {
    CHECK(e.code() == Errc::NotSquareFree);
  }
  try {
    testutil::ring_mod(2, {1, 0, 1});  // 2 | disc = -4
    FAIL("expected RamifiedPrime");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::RamifiedPrime);
  }
}

TEST_CASE("ring arithmetic basics") {
  SUBCASE("inverse in F_7") {
    auto R = testutil::ring_mod(7);
    CHECK(R->inv(R->from_int(2)) == R->from_int(4));
  }
  SUBCASE("theta squared is -1 mod (x^2+1, 5)") {
    auto R = testutil::ring_mod(5, {1, 0, 1});
    CHECK(R->mul(R->theta(), R->theta()) == R->from_int(-1));
  }
  SUBCASE("inv(theta) = 2 theta mod (x^2+1, 3)") {
    auto R = testutil::ring_mod(3, {1, 0, 1});
    auto two_theta = R->from_coeffs({0, 2});
    CHECK(R->inv(R->theta()) == two_theta);
    CHECK(R->mul(R->theta(), two_theta) == R->one());
  }
  SUBCASE("non-units are rejected with NotAUnit") {
    auto R = testutil::ring_mod(15);
    try {
      R->inv(R->from_int(5));
      FAIL("expected NotAUnit");
    } catch (const Error& e) {
      CHECK(e.code() == Errc::NotAUnit);
    }
  }
}

TEST_CASE("CRT split and join") {
  SUBCASE("integer residues") {
    auto R = testutil::ring_mod(15);
    auto parts = R->split(R->from_int(7));
    CHECK(parts[0].c == std::vector<std::uint64_t>{1});  // mod 3
    CHECK(parts[1].c == std::vector<std::uint64_t>{2});  // mod 5
    CHECK(R->join(parts) == R->from_int(7));
  }
  SUBCASE("theta maps to the two roots of x^2+1 mod 5") {
    auto R = testutil::ring_mod(5, {1, 0, 1});
    auto parts = R->split(R->theta());
    std::multiset<std::uint64_t> values{parts[0].c[0], parts[1].c[0]};
    CHECK(values == std::multiset<std::uint64_t>{2, 3});
    CHECK(R->join(parts) == R->theta());
  }
  SUBCASE("mismatched parts are rejected") {
    auto R = testutil::ring_mod(15);
    auto parts = R->split(R->one());
    parts.pop_back();
    CHECK_THROWS_AS(R->join(parts), Error);
  }
}

TEST_CASE("split is a ring homomorphism on random pairs") {
  struct Case {
    std::vector<long long> f;
    std::uint64_t q;
  };
  for (auto [f, q] : std::vector<Case>{
           {{0, 1}, 15}, {{1, 0, 1}, 15}, {{-2, 0, 1}, 35}}) {
    auto R = testutil::ring_mod(q, f);
    SplitMix64 rng(2024);
    for (int t = 0; t < 1000; ++t) {
      std::vector<long long> ca(R->degree()), cb(R->degree());
      for (auto& c : ca) c = static_cast<long long>(rng.below(q));
      for (auto& c : cb) c = static_cast<long long>(rng.below(q));
      auto a = R->from_coeffs(ca), b = R->from_coeffs(cb);
      auto prod_parts = R->split(R->mul(a, b));
      auto pa = R->split(a);
      auto pb = R->split(b);
      for (std::size_t i = 0; i < prod_parts.size(); ++i)
        CHECK(prod_parts[i] == R->factors()[i].F.mul(pa[i], pb[i]));
      CHECK(R->join(pa) == a);
    }
  }
}

TEST_CASE("units invert consistently") {
  auto R = testutil::ring_mod(15, {1, 0, 1});
  SplitMix64 rng(7);
  int units = 0;
  for (int t = 0; t < 500; ++t) {
    auto x = R->from_coeffs({static_cast<long long>(rng.below(15)),
                             static_cast<long long>(rng.below(15))});
    if (!R->is_unit(x)) continue;
    ++units;
    auto xi = R->inv(x);
    CHECK(R->mul(x, xi) == R->one());
    CHECK(R->inv(xi) == x);
  }
  CHECK(units > 100);
}

TEST_CASE("stored factors multiply back to f mod p") {
  for (auto q : {15ULL, 35ULL}) {
    auto R = testutil::ring_mod(q, {1, 0, 1});
    for (auto p : R->primes()) {
      ModPoly prod{1};
      for (const auto& fac : R->factors())
        if (fac.p == p) prod = mp_mul(prod, fac.g, p);
      CHECK(prod == mp_reduce_int({1, 0, 1}, p));
    }
  }
}

TEST_CASE("quartic factorization shapes mod p") {
  // x^4+1: four linear factors when p = 1 mod 8, two quadratics mod 3
  auto R3 = testutil::ring_mod(3, {1, 0, 0, 0, 1});
  REQUIRE(R3->factors().size() == 2);
  CHECK(R3->factors()[0].k == 2);
  CHECK(R3->factors()[1].k == 2);
  auto R17 = testutil::ring_mod(17, {1, 0, 0, 0, 1});
  CHECK(R17->factors().size() == 4);
  // x^4 + 2 mod 5 has no roots and no quadratic factors
  auto R5 = testutil::ring_mod(5, {2, 0, 0, 0, 1});
  CHECK(R5->factors().size() == 1);
  CHECK(R5->factors()[0].k == 4);
}

TEST_CASE("text and json round trips") {
  auto R = testutil::ring_mod(15, {1, 0, 1});
  auto x = R->from_coeffs({7, 11});
  CHECK(R->to_text(x) == "7,11");
  CHECK(R->from_text("7,11") == x);
  auto j = R->descriptor();
  CHECK(j["q"] == 15);
  CHECK(j["f"] == std::vector<long long>{1, 0, 1});
  CHECK(j["factors"].size() == R->factors().size());
}
