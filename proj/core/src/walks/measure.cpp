#include "slgap/walks/measure.hpp"

#include <algorithm>
#include <cmath>
#include <map>

#include "slgap/errors.hpp"

namespace slgap::walks {

WalkMeasure WalkMeasure::zero(TablePtr table, Mode mode) {
  WalkMeasure mu;
  mu.mode_ = mode;
  mu.table_ = std::move(table);
  if (mode == Mode::Exact) {
    mu.num_.assign(mu.table_->size(), BigInt(0));
    mu.den_ = 1;
  } else {
    mu.w_.assign(mu.table_->size(), 0.0);
  }
  return mu;
}

WalkMeasure WalkMeasure::point_mass(TablePtr table, std::uint32_t g) {
  auto mu = zero(std::move(table));
  mu.num_[g] = 1;
  return mu;
}

WalkMeasure WalkMeasure::counting(TablePtr table,
                                  const std::vector<std::uint32_t>& support) {
  if (support.empty()) raise(Errc::EmptyResult, "counting measure of empty set");
  auto mu = zero(std::move(table));
  for (auto g : support) mu.num_[g] += 1;
  mu.den_ = static_cast<unsigned long>(support.size());
  return mu;
}

WalkMeasure WalkMeasure::uniform(TablePtr table) {
  auto mu = zero(std::move(table));
  for (auto& n : mu.num_) n = 1;
  mu.den_ = static_cast<unsigned long>(mu.num_.size());
  return mu;
}

WalkMeasure WalkMeasure::from_floats(TablePtr table, std::vector<double> w) {
  WalkMeasure mu;
  mu.mode_ = Mode::Float;
  mu.table_ = std::move(table);
  if (w.size() != mu.table_->size())
    raise(Errc::FactorMismatch, "weight vector size mismatch");
  mu.w_ = std::move(w);
  return mu;
}

double WalkMeasure::weight(std::uint32_t g) const {
  if (mode_ == Mode::Float) return w_[g];
  return BigRat(num_[g], den_).get_d();
}

BigRat WalkMeasure::exact_weight(std::uint32_t g) const {
  if (mode_ != Mode::Exact) raise(Errc::ModeMismatch, "float measure");
  BigRat r(num_[g], den_);
  r.canonicalize();
  return r;
}

WalkMeasure WalkMeasure::to_float() const {
  if (mode_ == Mode::Float) return *this;
  WalkMeasure mu;
  mu.mode_ = Mode::Float;
  mu.table_ = table_;
  mu.w_.resize(num_.size());
  for (std::size_t i = 0; i < num_.size(); ++i)
    mu.w_[i] = num_[i] == 0 ? 0.0 : BigRat(num_[i], den_).get_d();
  return mu;
}

std::size_t WalkMeasure::support_size() const {
  std::size_t n = 0;
  if (mode_ == Mode::Exact) {
    for (const auto& x : num_) n += (x != 0);
  } else {
    for (double x : w_) n += (x != 0);
  }
  return n;
}

double WalkMeasure::total_mass() const {
  if (mode_ == Mode::Exact) {
    BigInt s = 0;
    for (const auto& x : num_) s += x;
    return BigRat(s, den_).get_d();
  }
  double s = 0;
  for (double x : w_) s += x;
  return s;
}

bool WalkMeasure::is_probability(double tol) const {
  if (mode_ == Mode::Exact) {
    BigInt s = 0;
    for (const auto& x : num_) {
      if (x < 0) return false;
      s += x;
    }
    return s == den_;
  }
  double s = 0;
  for (double x : w_) {
    if (x < 0) return false;
    s += x;
  }
  return std::abs(s - 1.0) <= tol;
}

BigRat WalkMeasure::l2_norm_sq_exact() const {
  if (mode_ != Mode::Exact) raise(Errc::ModeMismatch, "float measure");
  BigInt s = 0;
  for (const auto& x : num_) s += x * x;
  BigRat r(s, den_ * den_);
  r.canonicalize();
  return r;
}

double WalkMeasure::l2_norm_sq() const {
  if (mode_ == Mode::Exact) {
    BigInt s = 0;
    for (const auto& x : num_) s += x * x;
    if (s == 0) return 0;
    return std::exp(log_bigint(s) - 2 * log_bigint(den_));
  }
  double s = 0;
  for (double x : w_) s += x * x;
  return s;
}

double WalkMeasure::linf() const {
  if (mode_ == Mode::Exact) {
    BigInt best = 0;
    for (const auto& x : num_) best = std::max(best, x);
    if (best == 0) return 0;
    return std::exp(log_bigint(best) - log_bigint(den_));
  }
  double best = 0;
  for (double x : w_) best = std::max(best, x);
  return best;
}

BigRat WalkMeasure::mass_exact(const std::vector<std::uint32_t>& A) const {
  if (mode_ != Mode::Exact) raise(Errc::ModeMismatch, "float measure");
  BigInt s = 0;
  for (auto g : A) s += num_[g];
  BigRat r(s, den_);
  r.canonicalize();
  return r;
}

double WalkMeasure::mass(const std::vector<std::uint32_t>& A) const {
  if (mode_ == Mode::Exact) return mass_exact(A).get_d();
  double s = 0;
  for (auto g : A) s += w_[g];
  return s;
}

WalkMeasure convolve(const WalkMeasure& mu, const WalkMeasure& nu,
                     std::size_t budget) {
  if (mu.table() != nu.table())
    raise(Errc::RingMismatch, "measures live on different groups");
  if (mu.mode() != nu.mode())
    raise(Errc::ModeMismatch, "exact * float needs an explicit cast");
  const auto& T = *mu.table();

  if (mu.mode() == WalkMeasure::Mode::Exact) {
    std::vector<std::uint32_t> sa, sb;
    for (std::uint32_t i = 0; i < T.size(); ++i) {
      if (mu.numerators()[i] != 0) sa.push_back(i);
      if (nu.numerators()[i] != 0) sb.push_back(i);
    }
    if (sa.size() * sb.size() > budget)
      raise(Errc::BudgetExceeded, "convolution support product too large");
    auto out = WalkMeasure::zero(mu.table());
    for (auto a : sa)
      for (auto b : sb)
        out.num_[T.mul(a, b)] += mu.num_[a] * nu.num_[b];
    out.den_ = mu.den_ * nu.den_;
    return out;
  }

  std::vector<double> w(T.size(), 0.0);
  for (std::uint32_t a = 0; a < T.size(); ++a) {
    double wa = mu.floats()[a];
    if (wa == 0) continue;
    for (std::uint32_t b = 0; b < T.size(); ++b) {
      double wb = nu.floats()[b];
      if (wb == 0) continue;
      w[T.mul(a, b)] += wa * wb;
    }
  }
  return WalkMeasure::from_floats(mu.table(), std::move(w));
}

WalkMeasure reverse(const WalkMeasure& mu) {
  const auto& T = *mu.table();
  if (mu.mode() == WalkMeasure::Mode::Exact) {
    auto out = WalkMeasure::zero(mu.table());
    for (std::uint32_t g = 0; g < T.size(); ++g)
      out.num_[T.inv(g)] = mu.num_[g];
    out.den_ = mu.den_;
    return out;
  }
  std::vector<double> w(T.size(), 0.0);
  for (std::uint32_t g = 0; g < T.size(); ++g) w[T.inv(g)] = mu.floats()[g];
  return WalkMeasure::from_floats(mu.table(), std::move(w));
}

WalkMeasure walk_power(TablePtr table, const std::vector<std::uint32_t>& S,
                       unsigned k) {
  if (S.empty() || k < 1) raise(Errc::EmptyResult, "walk needs S and k >= 1");
  const auto& T = *table;
  // left-translation permutations, one per letter with multiplicity
  std::vector<std::vector<std::uint32_t>> perms;
  perms.reserve(S.size());
  for (auto s : S) perms.push_back(T.left_translation_inv(s));

  std::vector<BigInt> cur(T.size(), BigInt(0)), nxt(T.size());
  cur[T.id()] = 1;
  for (unsigned step = 0; step < k; ++step) {
    for (auto& x : nxt) x = 0;
    for (const auto& perm : perms)
      for (std::uint32_t g = 0; g < T.size(); ++g)
        if (cur[perm[g]] != 0) nxt[g] += cur[perm[g]];
    std::swap(cur, nxt);
  }

  auto out = WalkMeasure::zero(table);
  out.num_ = std::move(cur);
  out.den_ = bigint_pow(BigInt(static_cast<unsigned long>(S.size())), k);
  return out;
}

BigRat coset_mass(const WalkMeasure& mu, const std::vector<std::uint32_t>& H,
                  std::uint32_t g) {
  const auto& T = *mu.table();
  std::vector<std::uint32_t> coset;
  coset.reserve(H.size());
  for (auto h : H) coset.push_back(T.mul(g, h));
  return mu.mass_exact(coset);
}

BigRat coset_mass(const WalkMeasure& mu, const std::vector<std::uint32_t>& H) {
  return coset_mass(mu, H, mu.table()->id());
}

BigRat max_coset_mass(const WalkMeasure& mu, const std::vector<std::uint32_t>& H) {
  const auto& T = *mu.table();
  std::vector<bool> seen(T.size(), false);
  BigRat best(0);
  for (std::uint32_t g = 0; g < T.size(); ++g) {
    if (seen[g]) continue;
    std::vector<std::uint32_t> coset;
    coset.reserve(H.size());
    for (auto h : H) {
      std::uint32_t x = T.mul(g, h);
      seen[x] = true;
      coset.push_back(x);
    }
    BigRat m = mu.mass_exact(coset);
    if (m > best) best = m;
  }
  return best;
}

double entropy(const WalkMeasure& mu) {
  double h = 0;
  auto acc = [&](double w) {
    if (w > 0) h -= w * std::log(w);
  };
  if (mu.mode() == WalkMeasure::Mode::Exact) {
    double dlog = log_bigint(mu.denominator());
    for (const auto& n : mu.numerators())
      if (n != 0) {
        double w = std::exp(log_bigint(n) - dlog);
        acc(w);
      }
  } else {
    for (double w : mu.floats()) acc(w);
  }
  return h;
}

namespace {

void check_cover(const WalkMeasure& mu, const std::vector<int>& labels) {
  if (labels.size() != mu.size())
    raise(Errc::NotAPartition, "label vector size mismatch");
  for (std::uint32_t g = 0; g < mu.size(); ++g)
    if (mu.weight(g) != 0 && labels[g] < 0)
      raise(Errc::NotAPartition, "support element not covered");
}

}  // namespace

double partition_entropy(const WalkMeasure& mu, const std::vector<int>& labels) {
  check_cover(mu, labels);
  std::map<int, double> mass;
  for (std::uint32_t g = 0; g < mu.size(); ++g) {
    double w = mu.weight(g);
    if (w != 0) mass[labels[g]] += w;
  }
  double h = 0;
  for (auto& [lbl, w] : mass)
    if (w > 0) h -= w * std::log(w);
  return h;
}

double conditional_entropy(const WalkMeasure& mu, const std::vector<int>& A,
                           const std::vector<int>& B) {
  check_cover(mu, A);
  check_cover(mu, B);
  // H(A|B) = sum_{a,b} -m_ab log(m_ab / m_b)
  std::map<std::pair<int, int>, double> mab;
  std::map<int, double> mb;
  for (std::uint32_t g = 0; g < mu.size(); ++g) {
    double w = mu.weight(g);
    if (w == 0) continue;
    mab[{A[g], B[g]}] += w;
    mb[B[g]] += w;
  }
  double h = 0;
  for (auto& [key, w] : mab)
    if (w > 0) h -= w * std::log(w / mb[key.second]);
  return h;
}

std::vector<int> join_partitions(const std::vector<int>& A,
                                 const std::vector<int>& B) {
  std::map<std::pair<int, int>, int> ids;
  std::vector<int> out(A.size(), -1);
  for (std::size_t g = 0; g < A.size(); ++g) {
    if (A[g] < 0 || B[g] < 0) continue;
    auto key = std::make_pair(A[g], B[g]);
    auto it = ids.find(key);
    if (it == ids.end()) it = ids.emplace(key, static_cast<int>(ids.size())).first;
    out[g] = it->second;
  }
  return out;
}

EscapeProfile escape_profile(TablePtr table, const std::vector<std::uint32_t>& S,
                             const std::vector<std::uint32_t>& H,
                             const std::vector<unsigned>& even_ls) {
  const auto& T = *table;
  if (H.size() >= T.size())
    raise(Errc::HypothesisNotMet, "subgroup is not proper");
  EscapeProfile out;
  out.log_index = std::log(static_cast<double>(T.size()) /
                           static_cast<double>(H.size()));

  unsigned lmax = 0;
  for (auto l : even_ls) {
    if (l % 2 != 0) raise(Errc::FactorMismatch, "escape profile needs even l");
    lmax = std::max(lmax, l);
  }

  // one pass of walk powers up to lmax, reading off the requested l
  std::vector<std::vector<std::uint32_t>> perms;
  for (auto s : S) perms.push_back(T.left_translation_inv(s));
  std::vector<BigInt> cur(T.size(), BigInt(0)), nxt(T.size());
  cur[T.id()] = 1;
  BigInt den = 1;
  std::vector<unsigned> sorted_ls = even_ls;
  std::sort(sorted_ls.begin(), sorted_ls.end());
  std::size_t next_l = 0;
  double sum_delta = 0;
  BigRat prev_mass;
  bool have_prev = false;
  bool all_one = true;
  for (unsigned step = 1; step <= lmax && next_l < sorted_ls.size(); ++step) {
    for (auto& x : nxt) x = 0;
    for (const auto& perm : perms)
      for (std::uint32_t g = 0; g < T.size(); ++g)
        if (cur[perm[g]] != 0) nxt[g] += cur[perm[g]];
    std::swap(cur, nxt);
    den *= static_cast<unsigned long>(S.size());
    if (step == sorted_ls[next_l]) {
      BigInt hsum = 0;
      for (auto h : H) hsum += cur[h];
      BigRat mass(hsum, den);
      mass.canonicalize();
      EscapeRow row;
      row.l = step;
      row.mass = mass;
      double m = mass.get_d();
      row.delta = (m > 0 && m < 1) ? -std::log(m) / out.log_index : 0.0;
      sum_delta += row.delta;
      if (have_prev && mass > prev_mass) out.monotone = false;
      if (mass != 1) all_one = false;
      prev_mass = mass;
      have_prev = true;
      out.rows.push_back(std::move(row));
      ++next_l;
    }
  }
  out.no_escape = all_one;
  out.fitted_delta = out.rows.empty() ? 0 : sum_delta / out.rows.size();
  return out;
}

FlattenTrace flatten_trace(TablePtr table, const std::vector<std::uint32_t>& S,
                           unsigned k_cap, double epsilon) {
  const auto& T = *table;
  FlattenTrace trace;
  trace.epsilon = epsilon;
  double logG = std::log(static_cast<double>(T.size()));
  double target = (-0.5 + epsilon) * logG;  // log ||.||_2 threshold

  std::vector<std::vector<std::uint32_t>> perms;
  for (auto s : S) perms.push_back(T.left_translation_inv(s));
  std::vector<BigInt> cur(T.size(), BigInt(0)), nxt(T.size());
  cur[T.id()] = 1;
  BigInt den = 1;
  for (unsigned k = 1; k <= k_cap; ++k) {
    for (auto& x : nxt) x = 0;
    for (const auto& perm : perms)
      for (std::uint32_t g = 0; g < T.size(); ++g)
        if (cur[perm[g]] != 0) nxt[g] += cur[perm[g]];
    std::swap(cur, nxt);
    den *= static_cast<unsigned long>(S.size());

    FlattenRow row;
    row.k = k;
    BigInt sq = 0;
    std::size_t supp = 0;
    double dlog = log_bigint(den);
    double h = 0;
    for (const auto& n : cur) {
      if (n == 0) continue;
      ++supp;
      sq += n * n;
      double w = std::exp(log_bigint(n) - dlog);
      if (w > 0) h -= w * std::log(w);
    }
    row.l2sq_num = sq;
    row.l2sq_den = den * den;
    row.entropy = h;
    row.support = supp;
    double log_l2 = 0.5 * (log_bigint(sq) - 2 * dlog);
    trace.rows.push_back(std::move(row));
    if (trace.k_star < 0 && log_l2 <= target) {
      trace.k_star = static_cast<int>(k);
      break;
    }
  }
  if (trace.k_star > 0) trace.ratio = trace.k_star / logG;
  return trace;
}

std::string snapshot(const WalkMeasure& mu) {
  if (mu.mode() != WalkMeasure::Mode::Exact)
    raise(Errc::ModeMismatch, "snapshots are for exact measures");
  const auto& T = *mu.table();
  std::string out;
  for (std::uint32_t g = 0; g < T.size(); ++g) {
    if (mu.numerators()[g] == 0) continue;
    out += T.label(g);
    out += ' ';
    out += mu.numerators()[g].get_str();
    out += '/';
    out += mu.denominator().get_str();
    out += '\n';
  }
  return out;
}

}  // namespace slgap::walks
