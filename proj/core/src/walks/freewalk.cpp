#include "slgap/walks/freewalk.hpp"

#include "slgap/errors.hpp"

namespace slgap::walks {

FreeWalkStats free_walk_stats(unsigned m, unsigned k) {
  if (m < 2) raise(Errc::FactorMismatch, "free rank must be >= 2");
  if (k < 1 || k > 64) raise(Errc::BudgetExceeded, "k out of range");
  unsigned steps = 2 * k;

  // walks by reduced length: from length 0 there are 2m extending letters,
  // from length l >= 1 there are 2m-1 extending and 1 reducing
  std::vector<BigInt> cur(steps + 2, BigInt(0)), nxt(steps + 2, BigInt(0));
  cur[0] = 1;
  for (unsigned t = 0; t < steps; ++t) {
    for (auto& x : nxt) x = 0;
    for (unsigned l = 0; l <= t; ++l) {
      if (cur[l] == 0) continue;
      if (l == 0) {
        nxt[1] += cur[0] * (2 * m);
      } else {
        nxt[l + 1] += cur[l] * (2 * m - 1);
        nxt[l - 1] += cur[l];
      }
    }
    std::swap(cur, nxt);
  }

  FreeWalkStats s;
  s.m = m;
  s.k = k;
  s.total = bigint_pow(2UL * m, steps);
  s.walk_counts.assign(cur.begin(), cur.begin() + steps + 1);
  s.P.resize(steps + 1);
  for (unsigned l = 0; l <= steps; ++l) {
    BigRat p(s.walk_counts[l], s.total * reduced_word_count(m, l));
    p.canonicalize();
    s.P[l] = p;
  }
  return s;
}

BigInt reduced_word_count(unsigned m, unsigned l) {
  if (l == 0) return 1;
  return BigInt(2UL * m) * bigint_pow(2UL * m - 1, l - 1);
}

bool kesten_bound_holds(const FreeWalkStats& s) {
  BigRat bound(2UL * s.m - 1, static_cast<unsigned long>(s.m) * s.m);
  BigRat powk = 1;
  for (unsigned i = 0; i < s.k; ++i) powk *= bound;
  return s.P[0] <= powk;
}

bool level_normalization_holds(const FreeWalkStats& s) {
  BigRat sum = s.P[0];
  for (unsigned l = 1; l < s.P.size(); ++l)
    sum += BigRat(reduced_word_count(s.m, l)) * s.P[l];
  return sum == 1;
}

namespace {

void dfs(unsigned m, unsigned lmax, unsigned depth, unsigned last,
         const std::function<void(unsigned, unsigned)>& enter,
         const std::function<void()>& leave) {
  if (depth == lmax) return;
  for (unsigned letter = 0; letter < 2 * m; ++letter) {
    if (depth > 0 && (letter ^ 1u) == last) continue;  // no cancellation
    enter(letter, depth + 1);
    dfs(m, lmax, depth + 1, letter, enter, leave);
    leave();
  }
}

}  // namespace

void walk_reduced_words(unsigned m, unsigned lmax,
                        const std::function<void(unsigned, unsigned)>& enter,
                        const std::function<void()>& leave) {
  dfs(m, lmax, 0, 0, enter, leave);
}

std::vector<BigInt> count_words_matching(
    unsigned m, unsigned lmax, const std::function<void(unsigned)>& push,
    const std::function<void()>& pop, const std::function<bool()>& test) {
  std::vector<BigInt> counts(lmax + 1, BigInt(0));
  walk_reduced_words(
      m, lmax,
      [&](unsigned letter, unsigned depth) {
        push(letter);
        if (test()) counts[depth] += 1;
      },
      pop);
  return counts;
}

}  // namespace slgap::walks
