#include "slgap/growth/sumproduct.hpp"

#include <algorithm>
#include <set>

#include "slgap/errors.hpp"
#include "slgap/groups/subgroups.hpp"

namespace slgap::growth {

FFElem trace_of_unit(const FiniteField& F, const FFElem& a) {
  if (F.is_zero(a)) raise(Errc::ZeroElement, "w(0) is undefined");
  return F.add(a, F.inv(a));
}

namespace {

std::vector<FFElem> ff_product_set(const FiniteField& F,
                                   const std::vector<FFElem>& A,
                                   const std::vector<FFElem>& B) {
  std::set<FFElem> out;
  for (const auto& a : A)
    for (const auto& b : B) out.insert(F.mul(a, b));
  return {out.begin(), out.end()};
}

}  // namespace

TraceAmplifyReport trace_amplify(const FiniteField& F,
                                 const std::vector<FFElem>& Lambda,
                                 const FFElem& a1, const FFElem& a2,
                                 std::size_t cap) {
  if (Lambda.empty()) raise(Errc::ZeroElement, "empty Lambda");
  bool has_one = false;
  std::set<FFElem> lam_set(Lambda.begin(), Lambda.end());
  for (const auto& a : Lambda) {
    if (F.is_zero(a)) raise(Errc::ZeroElement, "0 in Lambda");
    if (a == F.one()) has_one = true;
    if (!lam_set.count(F.inv(a)))
      raise(Errc::NotSymmetric, "Lambda must be inverse-closed");
  }
  if (!has_one) raise(Errc::NotSymmetric, "Lambda must contain 1");

  std::vector<FFElem> lam(lam_set.begin(), lam_set.end());
  auto p2 = ff_product_set(F, lam, lam);
  auto p4 = ff_product_set(F, p2, p2);
  if (p4.size() * p4.size() > cap)
    raise(Errc::TooLarge, "prod_4 Lambda too large for the pair scan");

  TraceAmplifyReport rep;
  rep.prod4_size = p4.size();

  std::set<FFElem> out;
  for (const auto& b : p4)
    for (const auto& c : p4) {
      FFElem w1 = trace_of_unit(F, F.mul(b, c));
      FFElem w2 = trace_of_unit(F, F.mul(b, F.inv(c)));
      out.insert(F.add(F.mul(a1, w1), F.mul(a2, w2)));
    }
  rep.output.assign(out.begin(), out.end());

  // w of the set of squares of Lambda
  std::set<FFElem> wsq;
  for (const auto& a : lam) wsq.insert(trace_of_unit(F, F.mul(a, a)));
  rep.w_of_squares.assign(wsq.begin(), wsq.end());

  rep.w_subfield_degree = F.k();
  for (unsigned kp = 1; kp < F.k(); ++kp) {
    if (F.k() % kp != 0) continue;
    bool inside = true;
    for (const auto& x : rep.w_of_squares) inside = inside && F.in_subfield(x, kp);
    if (inside) {
      rep.w_subfield_degree = kp;
      break;
    }
  }
  rep.w_in_proper_subfield = rep.w_subfield_degree < F.k();
  if (rep.w_in_proper_subfield) {
    FFElem ratio = F.mul(a1, F.inv(a2));
    rep.ratio_in_that_subfield = F.in_subfield(ratio, rep.w_subfield_degree);
  }
  return rep;
}

NondegenerateWitness find_nondegenerate(const std::vector<groups::GroupElem>& S,
                                        unsigned subfield_degree,
                                        unsigned R_max, std::size_t cap) {
  if (S.empty()) raise(Errc::EmptyResult, "empty generating set");
  auto ring = S[0].ring();
  if (ring->factors().size() != 1)
    raise(Errc::FactorMismatch, "search runs over a single-factor ring");
  const FiniteField& F = ring->factors()[0].F;
  if (F.k() < 2 || F.k() % subfield_degree != 0 || subfield_degree >= F.k())
    raise(Errc::FactorMismatch, "need a proper subfield degree k' | k");

  auto closed = groups::closure(S, cap);
  if (!closed.is_full)
    raise(Errc::NotGenerating, "S generates a proper subgroup");

  auto passes = [&](const groups::GroupElem& g) {
    auto m = groups::factor_image(g, 0);
    const FFElem &a = m.e[0], &b = m.e[1], &c = m.e[2], &d = m.e[3];
    if (F.is_zero(a) || F.is_zero(b) || F.is_zero(c) || F.is_zero(d))
      return false;
    FFElem ratio = F.mul(F.mul(a, d), F.inv(F.mul(b, c)));
    return !F.in_subfield(ratio, subfield_degree);
  };

  std::set<std::string> seen;
  std::vector<groups::GroupElem> level = {
      groups::GroupElem::identity(ring, S[0].dim())};
  seen.insert(level[0].key());
  for (unsigned R = 1; R <= R_max; ++R) {
    std::vector<groups::GroupElem> next;
    for (const auto& g : level)
      for (const auto& s : S) {
        auto prod = g.mul(s);
        if (!seen.insert(prod.key()).second) continue;
        if (passes(prod)) return NondegenerateWitness{prod, R};
        next.push_back(std::move(prod));
      }
    level = std::move(next);
    if (level.empty()) break;
  }
  raise(Errc::SearchExhausted,
        "no nondegenerate matrix within word length " + std::to_string(R_max));
}

}  // namespace slgap::growth
