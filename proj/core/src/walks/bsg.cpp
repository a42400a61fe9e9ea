#include "slgap/walks/bsg.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <unordered_set>

#include "slgap/errors.hpp"

namespace slgap::walks {

namespace {

std::vector<std::vector<std::uint32_t>> level_sets(const WalkMeasure& mu,
                                                   int imax, double norm_sq) {
  // index i runs over -imax..imax, stored at i + imax
  std::vector<std::vector<std::uint32_t>> sets(2 * imax + 1);
  for (std::uint32_t g = 0; g < mu.size(); ++g) {
    double w = mu.weight(g);
    if (w <= 0) continue;
    double ratio = w / norm_sq;
    int i = static_cast<int>(std::ceil(std::log2(ratio)));
    // w in (2^{i-1} ns, 2^i ns]
    if (i < -imax || i > imax) continue;
    sets[i + imax].push_back(g);
  }
  return sets;
}

double counting_conv_l2(const groups::GroupTable& T,
                        const std::vector<std::uint32_t>& A,
                        const std::vector<std::uint32_t>& B) {
  if (A.empty() || B.empty()) return 0;
  std::vector<std::uint32_t> counts(T.size(), 0);
  for (auto a : A)
    for (auto b : B) counts[T.mul(a, b)] += 1;
  double s = 0;
  for (auto c : counts) s += static_cast<double>(c) * c;
  double scale = static_cast<double>(A.size()) * static_cast<double>(B.size());
  return std::sqrt(s) / scale;
}

}  // namespace

BsgResult bsg_extract(const WalkMeasure& mu, const WalkMeasure& nu, double K) {
  if (K <= 2) raise(Errc::HypothesisNotMet, "K must exceed 2");
  if (mu.table() != nu.table())
    raise(Errc::RingMismatch, "measures live on different groups");
  const auto& T = *mu.table();

  double nmu = std::sqrt(mu.l2_norm_sq());
  double nnu = std::sqrt(nu.l2_norm_sq());
  double nconv = std::sqrt(convolve(mu.to_float(), nu.to_float()).l2_norm_sq());
  if (!(nconv > std::sqrt(nmu) * std::sqrt(nnu) / K))
    raise(Errc::HypothesisNotMet,
          "||mu*nu||_2 is small enough; nothing to extract");

  int imax = std::max(1, static_cast<int>(10 * std::log(K)));
  auto As = level_sets(mu, imax, nmu * nmu);
  auto Bs = level_sets(nu, imax, nnu * nnu);

  double best = 0;
  int bi = 0, bj = 0;
  for (int i = -imax; i <= imax; ++i) {
    const auto& A = As[i + imax];
    if (A.empty()) continue;
    for (int j = -imax; j <= imax; ++j) {
      const auto& B = Bs[j + imax];
      if (B.empty()) continue;
      double q = std::exp2(i + j) * nmu * nmu * nnu * nnu *
                 static_cast<double>(A.size()) * static_cast<double>(B.size()) *
                 counting_conv_l2(T, A, B);
      if (q > best) {
        best = q;
        bi = i;
        bj = j;
      }
    }
  }
  if (best <= 0) raise(Errc::HypothesisNotMet, "no level pair passes");

  BsgResult out;
  out.level_i = bi;
  out.level_j = bj;
  out.level_set = As[bi + imax];
  const auto& A = out.level_set;

  // A.A~ for the threshold constant
  std::unordered_set<std::uint32_t> AAt;
  for (auto a : A)
    for (auto b : A) AAt.insert(T.mul(a, T.inv(b)));
  double C = 2.0 * static_cast<double>(AAt.size()) / static_cast<double>(A.size());
  out.threshold_c = C;

  std::unordered_set<std::uint32_t> Aset(A.begin(), A.end());
  std::set<std::uint32_t> S;
  for (auto g : AAt) {
    // |A cap A.g| = #{ a in A : a g in A }
    std::size_t hits = 0;
    for (auto a : A) hits += Aset.count(T.mul(a, g)) ? 1 : 0;
    if (static_cast<double>(hits) > static_cast<double>(A.size()) / C) {
      S.insert(g);
      S.insert(T.inv(g));
    }
  }
  out.witness.assign(S.begin(), S.end());

  if (!out.witness.empty()) {
    // |prod_3 S|
    std::unordered_set<std::uint32_t> p2;
    for (auto a : out.witness)
      for (auto b : out.witness) p2.insert(T.mul(a, b));
    std::unordered_set<std::uint32_t> p3;
    for (auto ab : p2)
      for (auto c : out.witness) p3.insert(T.mul(ab, c));
    out.prod3_size = p3.size();
    out.tripling_ratio =
        static_cast<double>(p3.size()) / static_cast<double>(out.witness.size());

    auto corr = convolve(reverse(mu.to_float()), mu.to_float());
    double mn = -1;
    for (auto g : out.witness) {
      double v = corr.weight(g) * static_cast<double>(out.witness.size());
      if (mn < 0 || v < mn) mn = v;
    }
    out.min_correlation = mn;
  }
  return out;
}

}  // namespace slgap::walks
