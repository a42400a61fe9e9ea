#include "slgap/growth/growth.hpp"

#include <algorithm>
#include <cmath>

#include "slgap/bigint.hpp"
#include "slgap/errors.hpp"

namespace slgap::growth {

IndexSet make_set(std::vector<std::uint32_t> v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
  return v;
}

bool is_symmetric_set(const groups::GroupTable& T, const IndexSet& S) {
  for (auto g : S)
    if (!std::binary_search(S.begin(), S.end(), T.inv(g))) return false;
  return true;
}

IndexSet symmetrize(const groups::GroupTable& T, IndexSet S) {
  std::size_t n = S.size();
  for (std::size_t i = 0; i < n; ++i) S.push_back(T.inv(S[i]));
  return make_set(std::move(S));
}

IndexSet product_set(const groups::GroupTable& T, const IndexSet& A,
                     const IndexSet& B, std::size_t cap) {
  if (A.size() * B.size() > cap)
    raise(Errc::TooLarge, "product scan exceeds cap");
  std::vector<bool> seen(T.size(), false);
  for (auto a : A)
    for (auto b : B) seen[T.mul(a, b)] = true;
  IndexSet out;
  for (std::uint32_t g = 0; g < T.size(); ++g)
    if (seen[g]) out.push_back(g);
  return out;
}

IndexSet iterated_product(const groups::GroupTable& T, const IndexSet& S,
                          unsigned k, std::size_t cap) {
  if (k == 0) raise(Errc::FactorMismatch, "k must be >= 1");
  IndexSet cur = S;
  for (unsigned i = 1; i < k; ++i) cur = product_set(T, cur, S, cap);
  return cur;
}

nlohmann::json GrowthReport::to_json() const {
  nlohmann::json j;
  j["size_1"] = size_1;
  j["size_3"] = size_3;
  nlohmann::json ks = nlohmann::json::object();
  for (auto& [k, v] : sizes_k) ks[std::to_string(k)] = v;
  j["sizes_k"] = ks;
  j["delta_hat"] = delta_hat;
  j["regime_ok"] = regime_ok;
  nlohmann::json ineq = nlohmann::json::object();
  for (auto& [k, v] : iterated_inequality) ineq[std::to_string(k)] = v;
  j["iterated_inequality"] = ineq;
  return j;
}

GrowthReport tripling_report(const groups::GroupTable& T, const IndexSet& S,
                             const std::vector<unsigned>& k_list,
                             double regime_epsilon) {
  if (!is_symmetric_set(T, S))
    raise(Errc::NotSymmetric, "tripling needs a symmetric set");
  GrowthReport rep;
  rep.size_1 = S.size();
  IndexSet SS = product_set(T, S, S);
  IndexSet SSS = product_set(T, SS, S);
  rep.size_3 = SSS.size();

  double n = static_cast<double>(T.size());
  double base = std::min(static_cast<double>(S.size()),
                         n / static_cast<double>(S.size()));
  rep.regime_ok = static_cast<double>(S.size()) <=
                  std::pow(n, 1.0 - regime_epsilon);
  if (base > 1.0) {
    rep.delta_hat = std::log(static_cast<double>(rep.size_3) /
                             static_cast<double>(rep.size_1)) /
                    std::log(base);
  } else {
    rep.delta_hat = 0;
  }

  IndexSet cur = SSS;
  unsigned cur_k = 3;
  for (unsigned k : k_list) {
    if (k < 3) raise(Errc::FactorMismatch, "iterated inequality needs k >= 3");
    while (cur_k < k) {
      cur = product_set(T, cur, S);
      ++cur_k;
    }
    std::size_t pk = (k == 3) ? SSS.size() : cur.size();
    rep.sizes_k[k] = pk;
    // |prod_k S| |S|^{k-3} <= |SSS|^{k-2}, exact in big integers
    BigInt lhs = BigInt(static_cast<unsigned long>(pk)) *
                 bigint_pow(BigInt(static_cast<unsigned long>(S.size())),
                            static_cast<unsigned long>(k - 3));
    BigInt rhs = bigint_pow(BigInt(static_cast<unsigned long>(SSS.size())),
                            static_cast<unsigned long>(k - 2));
    rep.iterated_inequality[k] = lhs <= rhs;
  }
  return rep;
}

GowersReport gowers_cover_check(const groups::GroupTable& T, const IndexSet& A,
                                const IndexSet& B, const IndexSet& C,
                                unsigned long min_dim) {
  GowersReport rep;
  double n = static_cast<double>(T.size());
  rep.product_of_sizes = static_cast<double>(A.size()) *
                         static_cast<double>(B.size()) *
                         static_cast<double>(C.size());
  rep.threshold = n * n * n / static_cast<double>(min_dim);
  rep.threshold_met = rep.product_of_sizes > rep.threshold;

  IndexSet BC = product_set(T, B, C);
  std::vector<bool> in_bc(T.size(), false);
  for (auto g : BC) in_bc[g] = true;

  rep.full_cover = true;
  for (std::uint32_t g = 0; g < T.size() && rep.full_cover; ++g) {
    bool hit = false;
    for (auto a : A) {
      if (in_bc[T.mul(T.inv(a), g)]) {
        hit = true;
        break;
      }
    }
    if (!hit) rep.full_cover = false;
  }
  return rep;
}

}  // namespace slgap::growth
