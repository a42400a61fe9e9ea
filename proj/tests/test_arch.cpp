#include <cmath>
#include <complex>
#include <sstream>

#include "doctest.h"
#include "slgap/arch/freecert.hpp"
#include "slgap/errors.hpp"
#include "slgap/rng.hpp"

using namespace slgap;
using namespace slgap::arch;
using algebra::NumberField;

namespace {

OkRing ring_q() { return OkRing(NumberField::make({0, 1})); }

}  // namespace

TEST_CASE("embeddings from the roots of f") {
  SUBCASE("x^2 - 2 embeds theta as +-sqrt(2)") {
    NumberField K = NumberField::make({-2, 0, 1});
    EmbeddingSet emb(K);
    REQUIRE(emb.count() == 2);
    CHECK(emb.roots()[0].real() == doctest::Approx(-std::sqrt(2.0)));
    CHECK(emb.roots()[1].real() == doctest::Approx(std::sqrt(2.0)));
    OkRing R(K);
    // theta * I_2 is not in SL_2; embed theta directly instead
    CHECK(std::abs(emb.eval(R.theta(), 1) - std::complex<double>(std::sqrt(2.0), 0)) < 1e-12);
  }
  SUBCASE("rational entries look the same in every embedding") {
    NumberField K = NumberField::make({-2, 0, 1});
    OkRing R(K);
    EmbeddingSet emb(K);
    auto g = ok_from_ints(R, 2, {1, 5, 0, 1});
    auto mats = emb.hat_sigma(g);
    CHECK((mats[0] - mats[1]).norm() < 1e-12);
  }
  SUBCASE("x^2 + 1: diag(theta, -theta) maps to diag(+-i)") {
    NumberField K = NumberField::make({1, 0, 1});
    OkRing R(K);
    EmbeddingSet emb(K);
    // [[theta, 0], [0, -theta]] has det -theta^2 = 1
    OkMatrix g = ok_from_coeffs(R, 2, {{0, 1}, {0}, {0}, {0, -1}});
    auto mats = emb.hat_sigma(g);
    REQUIRE(mats.size() == 2);
    std::complex<double> i1 = mats[0](0, 0);
    std::complex<double> i2 = mats[1](0, 0);
    CHECK(std::abs(i1.imag() * i2.imag() + 1.0) < 1e-10);  // conjugate roots
    CHECK(std::abs(mats[0].determinant() - 1.0) < 1e-10);
  }
}

TEST_CASE("hat_sigma is a homomorphism to machine precision") {
  NumberField K = NumberField::make({-2, 0, 1});
  OkRing R(K);
  EmbeddingSet emb(K);
  // a pair with theta entries: [[1, theta], [0, 1]], [[1, 0], [theta, 1]]
  OkMatrix a = ok_from_coeffs(R, 2, {{1}, {0, 1}, {0}, {1}});
  OkMatrix b = ok_from_coeffs(R, 2, {{1}, {0}, {0, 1}, {1}});
  SplitMix64 rng(77);
  std::vector<OkMatrix> letters{a, ok_inverse(R, a), b, ok_inverse(R, b)};
  for (int t = 0; t < 30; ++t) {
    OkMatrix w1 = ok_identity(R, 2), w2 = ok_identity(R, 2);
    for (int l = 0; l < 3; ++l) {
      w1 = ok_mul(R, w1, letters[rng.below(4)]);
      w2 = ok_mul(R, w2, letters[rng.below(4)]);
    }
    auto prod = ok_mul(R, w1, w2);
    for (std::size_t i = 0; i < emb.count(); ++i) {
      Eigen::MatrixXcd lhs = emb.matrix(prod, i);
      Eigen::MatrixXcd rhs = emb.matrix(w1, i) * emb.matrix(w2, i);
      CHECK((lhs - rhs).norm() < 1e-8);
    }
  }
}

TEST_CASE("adjoint representation on sl_d") {
  NumberField K = NumberField::make({0, 1});
  OkRing R(K);
  EmbeddingSet emb(K);

  Eigen::MatrixXcd id2 = Eigen::MatrixXcd::Identity(2, 2);
  auto ad_id = adjoint_matrix(id2);
  CHECK((ad_id - Eigen::MatrixXcd::Identity(3, 3)).norm() < 1e-12);

  // diag(t, 1/t): adjoint eigenvalues {t^2, 1, t^-2}
  Eigen::MatrixXcd dg = Eigen::MatrixXcd::Zero(2, 2);
  dg(0, 0) = 2.0;
  dg(1, 1) = 0.5;
  auto ad = adjoint_matrix(dg);
  Eigen::ComplexEigenSolver<Eigen::MatrixXcd> es(ad);
  std::vector<double> mods;
  for (int i = 0; i < 3; ++i) mods.push_back(std::abs(es.eigenvalues()[i]));
  std::sort(mods.begin(), mods.end());
  CHECK(mods[0] == doctest::Approx(0.25));
  CHECK(mods[1] == doctest::Approx(1.0));
  CHECK(mods[2] == doctest::Approx(4.0));

  // functoriality on random pairs
  SplitMix64 rng(3);
  auto a = ok_from_ints(R, 2, {2, 1, 1, 1});
  auto b = ok_from_ints(R, 2, {1, 1, 1, 2});
  std::vector<OkMatrix> letters{a, ok_inverse(R, a), b, ok_inverse(R, b)};
  for (int t = 0; t < 20; ++t) {
    OkMatrix g = letters[rng.below(4)], h = letters[rng.below(4)];
    Eigen::MatrixXcd lhs = adjoint_matrix(emb.matrix(ok_mul(R, g, h), 0));
    Eigen::MatrixXcd rhs =
        adjoint_matrix(emb.matrix(g, 0)) * adjoint_matrix(emb.matrix(h, 0));
    CHECK((lhs - rhs).norm() < 1e-8);
  }
}

TEST_CASE("proximality classification") {
  Eigen::MatrixXcd dg = Eigen::MatrixXcd::Zero(2, 2);
  dg(0, 0) = 2.0;
  dg(1, 1) = 0.5;
  auto rep = proximality(adjoint_matrix(dg));
  CHECK(rep.proximal);
  CHECK(rep.lambda_top == doctest::Approx(4.0));
  CHECK(rep.lambda_second == doctest::Approx(1.0));
  CHECK(rep.invariant_complement.cols() == 2);

  auto id = proximality(Eigen::MatrixXcd::Identity(3, 3));
  CHECK_FALSE(id.proximal);

  // rotation by 90 degrees: top modulus has multiplicity > 1
  Eigen::MatrixXcd rot = Eigen::MatrixXcd::Zero(2, 2);
  rot(0, 1) = 1.0;
  rot(1, 0) = -1.0;
  auto rrep = proximality(adjoint_matrix(rot));
  CHECK_FALSE(rrep.proximal);

  // a unipotent adjoint is not proximal either
  Eigen::MatrixXcd uni = Eigen::MatrixXcd::Identity(2, 2);
  uni(0, 1) = 1.0;
  CHECK_FALSE(proximality(adjoint_matrix(uni)).proximal);
}

TEST_CASE("projective distance") {
  Eigen::VectorXcd x(3), y(3), z(3);
  x << 1, 0, 0;
  y << 0, 1, 0;
  z << 1, 1, 0;
  CHECK(projective_distance(x, 5.0 * x) == doctest::Approx(0.0));
  CHECK(projective_distance(x, y) == doctest::Approx(1.0));
  Eigen::VectorXcd x2(2), z2(2);
  x2 << 1, 0;
  z2 << 1, 1;
  CHECK(projective_distance(x2, z2) == doctest::Approx(1.0 / std::sqrt(2.0)));
  Eigen::VectorXcd zero = Eigen::VectorXcd::Zero(3);
  CHECK_THROWS_AS(projective_distance(x, zero), Error);
}

TEST_CASE("generic sets") {
  auto R = ring_q();
  EmbeddingSet emb(R.field());
  auto g = ok_from_ints(R, 2, {2, 1, 1, 1});  // hyperbolic, trace 3

  SUBCASE("a single hyperbolic element is generic") {
    auto rep = generic_check(R, {g}, emb, 0, 0);
    CHECK(rep.all_proximal);
    CHECK(rep.pass);
    CHECK(rep.margin_separation > 1e-6);
  }

  SUBCASE("powers share top directions and are caught by the rank layer") {
    auto g2 = ok_mul(R, g, g);
    auto g3 = ok_mul(R, g2, g);
    auto rep = generic_check(R, {g, g2, g3}, emb, 0, 0);
    CHECK_FALSE(rep.pass);
    CHECK(rep.margin_rank < 1e-8);
  }

  SUBCASE("empty set passes vacuously") {
    auto rep = generic_check(R, {}, emb, 0, 0);
    CHECK(rep.pass);
  }

  SUBCASE("unipotent members raise NonProximalMember") {
    auto u = ok_from_ints(R, 2, {1, 2, 0, 1});
    try {
      generic_check(R, {u}, emb, 0, 0);
      FAIL("expected NonProximalMember");
    } catch (const Error& e) {
      CHECK(e.code() == Errc::NonProximalMember);
    }
  }
}

TEST_CASE("powered freeness certificates") {
  auto R = ring_q();
  EmbeddingSet emb(R.field());

  SUBCASE("the classical pair certifies at M = 1 by exact word evaluation") {
    auto a = ok_from_ints(R, 2, {1, 2, 0, 1});
    auto b = ok_from_ints(R, 2, {1, 0, 2, 1});
    auto cert = power_up(R, {a, b}, emb, 0, 0, 64, 8);
    CHECK(cert.free);
    CHECK(cert.M == 1);
    CHECK_FALSE(cert.geometric);  // unipotent adjoints are not proximal
    CHECK(cert.words_checked == 13121);  // 1 + sum_{l<=8} 4*3^{l-1}
    auto j = cert.to_json();
    CHECK(j["free"] == true);
    CHECK(j["M"] == 1);
  }

  SUBCASE("a hyperbolic conjugate pair passes the geometric phase") {
    auto g = ok_from_ints(R, 2, {2, 1, 1, 1});
    auto h = ok_from_ints(R, 2, {1, 3, 0, 1});
    auto conj = ok_mul(R, ok_mul(R, h, g), ok_inverse(R, h));
    auto rep = generic_check(R, {g, conj}, emb, 0, 0);
    CHECK(rep.pass);
    auto cert = power_up(R, {g, conj}, emb, 0, 0, 64, 6);
    CHECK(cert.free);
    CHECK(cert.geometric);
    CHECK(cert.margins.at("contraction") > 0);
    CHECK(cert.margins.at("inclusion") > 0);
  }

  SUBCASE("rank one: powers of one element stay distinct") {
    auto g = ok_from_ints(R, 2, {2, 1, 1, 1});
    auto cert = power_up(R, {g}, emb, 0, 0, 64, 8);
    CHECK(cert.free);
  }

  SUBCASE("torsion input fails with FreenessUnverified") {
    auto w = ok_from_ints(R, 2, {0, 1, -1, 0});  // order 4
    try {
      power_up(R, {w}, emb, 0, 0, 64, 8);
      FAIL("expected FreenessUnverified");
    } catch (const Error& e) {
      CHECK(e.code() == Errc::FreenessUnverified);
    }
  }
}

TEST_CASE("norm growth along words") {
  auto R = ring_q();
  EmbeddingSet emb(R.field());

  SUBCASE("the identity alone never grows") {
    auto rep = norm_growth(R, {ok_identity(R, 2)}, emb, 5);
    for (const auto& row : rep.rows)
      CHECK(row.max_log_norm == doctest::Approx(0.0));
    CHECK(rep.subadditive);
  }

  SUBCASE("unipotent growth is subexponential") {
    auto u = ok_from_ints(R, 2, {1, 1, 0, 1});
    auto rep = norm_growth(R, {u, ok_inverse(R, u)}, emb, 8);
    // log ||u^l|| ~ log l: the fitted slope sits well below log ||u||-type
    // exponential rates
    CHECK(rep.slope < 0.3);
    CHECK(rep.subadditive);
  }

  SUBCASE("the free pair grows linearly") {
    auto a = ok_from_ints(R, 2, {1, 2, 0, 1});
    auto b = ok_from_ints(R, 2, {1, 0, 2, 1});
    auto rep = norm_growth(R, {a, ok_inverse(R, a), b, ok_inverse(R, b)}, emb, 8);
    CHECK(rep.slope > 0.5);
    CHECK(rep.subadditive);
  }
}

TEST_CASE("subgroup predicates from the adjoint action") {
  SUBCASE("identity satisfies both predicates") {
    auto R = ring_q();
    EmbeddingSet emb(R.field());
    auto id = ok_identity(R, 2);
    Eigen::MatrixXcd V(3, 1);
    V << 1, 0, 0;
    CHECK(predicate_subspace(id, V, emb, 0));
    CHECK(predicate_intertwiner(id, Eigen::MatrixXcd::Identity(3, 3), emb, 0, 0));
  }

  SUBCASE("the Borel preserves its nilradical line") {
    auto R = ring_q();
    EmbeddingSet emb(R.field());
    auto u = ok_from_ints(R, 2, {1, 1, 0, 1});
    // basis order: E_12, E_21, H; the nilpotent line is E_12
    Eigen::MatrixXcd V(3, 1);
    V << 1, 0, 0;
    CHECK(predicate_subspace(u, V, emb, 0));
    // and it does not preserve the opposite line E_21
    Eigen::MatrixXcd W(3, 1);
    W << 0, 1, 0;
    CHECK_FALSE(predicate_subspace(u, W, emb, 0));
  }

  SUBCASE("distinct embeddings break the trivial intertwiner") {
    NumberField K = NumberField::make({-2, 0, 1});
    OkRing R(K);
    EmbeddingSet emb(K);
    // [[theta, 1], [1, theta]] has det theta^2 - 1 = 1
    auto h = ok_from_coeffs(R, 2, {{0, 1}, {1}, {1}, {0, 1}});
    Eigen::MatrixXcd T = Eigen::MatrixXcd::Identity(3, 3);
    CHECK_FALSE(predicate_intertwiner(h, T, emb, 0, 1));
    CHECK(predicate_intertwiner(h, T, emb, 0, 0));
  }
}

TEST_CASE("first-letter search and the word-count bound") {
  auto R = ring_q();
  EmbeddingSet emb(R.field());
  auto a = ok_from_ints(R, 2, {1, 2, 0, 1});
  auto b = ok_from_ints(R, 2, {1, 0, 2, 1});
  std::vector<OkMatrix> letters{a, ok_inverse(R, a), b, ok_inverse(R, b)};

  // T = Ad of the Weyl rotation moves each nilpotent direction away
  Eigen::MatrixXcd w = Eigen::MatrixXcd::Zero(2, 2);
  w(0, 1) = 1.0;
  w(1, 0) = -1.0;
  Eigen::MatrixXcd T = adjoint_matrix(w);
  auto found = first_letter_search(R, letters, T, emb, 0, 0, 0.05);
  REQUIRE(found.has_value());
  CHECK(found->margin > 0);

  // count words landing in H_T by exact evaluation; the first-letter
  // avoidance bound caps every level
  std::vector<OkMatrix> stack{ok_identity(R, 2)};
  auto counts = walks::count_words_matching(
      2, 10,
      [&](unsigned letter) { stack.push_back(ok_mul(R, stack.back(), letters[letter])); },
      [&]() { stack.pop_back(); },
      [&]() { return predicate_intertwiner(stack.back(), T, emb, 0, 0); });
  for (unsigned l = 1; l <= 10; ++l)
    CHECK(counts[l].get_d() <= word_count_bound(2, l));

  // escape link: the upper bound for chi^{(2k)}(H_T) decays
  for (unsigned k = 1; k <= 10; ++k) {
    auto stats = walks::free_walk_stats(2, k);
    double upper = escape_mass_upper(stats, counts);
    CHECK(upper <= 2.0 * std::pow(3.0 / 4.0, k / 20.0) + 1e-12);
  }
}

TEST_CASE("predicate scan CSV and the word-count bound to length 12") {
  auto R = ring_q();
  EmbeddingSet emb(R.field());
  auto a = ok_from_ints(R, 2, {1, 2, 0, 1});
  auto b = ok_from_ints(R, 2, {1, 0, 2, 1});
  std::vector<OkMatrix> letters{a, ok_inverse(R, a), b, ok_inverse(R, b)};
  Eigen::MatrixXcd w = Eigen::MatrixXcd::Zero(2, 2);
  w(0, 1) = 1.0;
  w(1, 0) = -1.0;
  Eigen::MatrixXcd T = adjoint_matrix(w);

  SUBCASE("scan format") {
    std::ostringstream os;
    scan_predicate_words(os, R, letters, T, emb, 0, 0, 3);
    std::istringstream is(os.str());
    std::string line;
    std::getline(is, line);
    CHECK(line == "word,length,in_H_T");
    std::size_t rows = 0;
    while (std::getline(is, line)) ++rows;
    CHECK(rows == 4 + 12 + 36);  // |B_1| + |B_2| + |B_3|
  }

  SUBCASE("word counts to length 12, incremental adjoints") {
    // the adjoint is a homomorphism, so the per-word image can be kept as
    // a running product; this covers the longer range cheaply
    std::vector<Eigen::MatrixXcd> ads;
    for (const auto& g : letters) ads.push_back(adjoint_matrix(emb.matrix(g, 0)));
    std::vector<Eigen::MatrixXcd> stack{Eigen::MatrixXcd::Identity(3, 3)};
    double tnorm = T.norm();
    auto counts = walks::count_words_matching(
        2, 12,
        [&](unsigned letter) { stack.push_back(stack.back() * ads[letter]); },
        [&]() { stack.pop_back(); },
        [&]() {
          return (T * stack.back() - stack.back() * T).norm() / tnorm < 1e-8;
        });
    for (unsigned l = 1; l <= 12; ++l)
      CHECK(counts[l].get_d() <= word_count_bound(2, l));
  }
}

TEST_CASE("adjoint predicates are closed under products on samples") {
  auto R = ring_q();
  EmbeddingSet emb(R.field());
  // members of the subspace stabilizer of the nilpotent line: upper
  // triangular elements
  std::vector<OkMatrix> members{
      ok_from_ints(R, 2, {1, 1, 0, 1}),
      ok_from_ints(R, 2, {1, -3, 0, 1}),
      ok_from_ints(R, 2, {1, 7, 0, 1}),
  };
  Eigen::MatrixXcd V(3, 1);
  V << 1, 0, 0;
  for (const auto& g : members) CHECK(predicate_subspace(g, V, emb, 0));
  for (const auto& g : members)
    for (const auto& h : members) {
      CHECK(predicate_subspace(ok_mul(R, g, h), V, emb, 0));
      CHECK(predicate_subspace(ok_inverse(R, g), V, emb, 0));
    }

  // intertwiner members: powers of one element all commute with T = Ad(g)
  auto g = ok_from_ints(R, 2, {2, 1, 1, 1});
  Eigen::MatrixXcd T = adjoint_matrix(emb.matrix(g, 0));
  std::vector<OkMatrix> hs{g, ok_mul(R, g, g), ok_inverse(R, g)};
  for (const auto& h : hs) CHECK(predicate_intertwiner(h, T, emb, 0, 0));
  for (const auto& h1 : hs)
    for (const auto& h2 : hs)
      CHECK(predicate_intertwiner(ok_mul(R, h1, h2), T, emb, 0, 0));
}

TEST_CASE("an exhausted power cap raises NoSuchM") {
  auto R = ring_q();
  EmbeddingSet emb(R.field());
  auto g = ok_from_ints(R, 2, {2, 1, 1, 1});
  try {
    power_up(R, {g}, emb, 0, 0, /*M_max=*/0, 4);
    FAIL("expected NoSuchM");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::NoSuchM);
  }
}
