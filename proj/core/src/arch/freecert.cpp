#include "slgap/arch/freecert.hpp"

#include <algorithm>
#include <cmath>
#include <ostream>
#include <functional>
#include <unordered_map>

#include "slgap/errors.hpp"
#include "slgap/rng.hpp"

namespace slgap::arch {

namespace {

// letters 2i, 2i+1 are g_i, g_i^{-1}, matching the free-walk convention
std::vector<OkMatrix> letter_list(const OkRing& R,
                                  const std::vector<OkMatrix>& A) {
  std::vector<OkMatrix> letters;
  letters.reserve(2 * A.size());
  for (const auto& g : A) {
    letters.push_back(g);
    letters.push_back(ok_inverse(R, g));
  }
  return letters;
}

void for_each_subset(unsigned n, unsigned k,
                     const std::function<void(const std::vector<unsigned>&)>& f) {
  if (k > n) return;
  std::vector<unsigned> idx(k);
  for (unsigned i = 0; i < k; ++i) idx[i] = i;
  while (true) {
    f(idx);
    int pos = static_cast<int>(k) - 1;
    while (pos >= 0 && idx[pos] == n - k + pos) --pos;
    if (pos < 0) break;
    ++idx[pos];
    for (unsigned i = pos + 1; i < k; ++i) idx[i] = idx[i - 1] + 1;
  }
}

double smallest_singular(const Eigen::MatrixXcd& m) {
  Eigen::JacobiSVD<Eigen::MatrixXcd> svd(m);
  return svd.singularValues()[svd.singularValues().size() - 1];
}

// singular values give the rank margin: sigma_{r+1} small <=> rank <= r
std::vector<double> singular_values(const Eigen::MatrixXcd& m) {
  Eigen::JacobiSVD<Eigen::MatrixXcd> svd(m);
  std::vector<double> out(svd.singularValues().data(),
                          svd.singularValues().data() +
                              svd.singularValues().size());
  return out;
}

struct LetterData {
  ProximalityReport prox[2];  // per representation slot
};

std::vector<LetterData> letter_adjoints(const std::vector<OkMatrix>& letters,
                                        const EmbeddingSet& emb,
                                        std::size_t i1, std::size_t i2,
                                        bool require_proximal) {
  std::vector<LetterData> out(letters.size());
  std::size_t embs[2] = {i1, i2};
  for (std::size_t li = 0; li < letters.size(); ++li) {
    for (int s = 0; s < 2; ++s) {
      Eigen::MatrixXcd ad = adjoint_matrix(emb.matrix(letters[li], embs[s]));
      auto rep = proximality(ad);
      if (require_proximal && !rep.proximal)
        raise(Errc::NonProximalMember,
              "letter " + std::to_string(li) + " has non-proximal adjoint");
      out[li].prox[s] = std::move(rep);
    }
  }
  return out;
}

}  // namespace

GenericReport generic_check(const OkRing& R, const std::vector<OkMatrix>& A,
                            const EmbeddingSet& emb, std::size_t i1,
                            std::size_t i2, double tol) {
  GenericReport rep;
  if (A.empty()) {  // vacuous
    rep.pass = true;
    rep.all_proximal = true;
    rep.margin_separation = rep.margin_rank = rep.margin_alignment = 1;
    return rep;
  }
  unsigned d = A[0].d;
  unsigned n = d * d - 1;
  auto letters = letter_list(R, A);
  auto data = letter_adjoints(letters, emb, i1, i2, /*require_proximal=*/true);
  rep.all_proximal = true;

  // (i) z_{rho(g1)} not in V_{rho(g2)} whenever g1 g2 != 1
  rep.margin_separation = 1;
  for (std::size_t a = 0; a < letters.size(); ++a)
    for (std::size_t b = 0; b < letters.size(); ++b) {
      if ((a ^ 1) == b) continue;  // g1 g2 = 1
      for (int s = 0; s < 2; ++s) {
        double dist = distance_to_subspace(data[a].prox[s].top_direction,
                                           data[b].prox[s].invariant_complement);
        rep.margin_separation = std::min(rep.margin_separation, dist);
        if (dist < tol)
          rep.failures.push_back("separation: letters " + std::to_string(a) +
                                 "," + std::to_string(b));
      }
    }

  // (ii) no k+2 of the top directions inside a common k-dim subspace:
  // every (k+2)-subset must have rank >= k+1, i.e. sigma_{k+1} > tol
  rep.margin_rank = 1;
  unsigned L = static_cast<unsigned>(letters.size());
  for (int s = 0; s < 2; ++s) {
    for (unsigned k = 1; k < n; ++k) {
      if (k + 2 > L) break;
      for_each_subset(L, k + 2, [&](const std::vector<unsigned>& idx) {
        Eigen::MatrixXcd Z(n, idx.size());
        for (std::size_t c = 0; c < idx.size(); ++c)
          Z.col(c) = data[idx[c]].prox[s].top_direction;
        auto sv = singular_values(Z);
        double slack = sv[k];  // (k+1)-th singular value
        rep.margin_rank = std::min(rep.margin_rank, slack);
        if (slack < tol) rep.failures.push_back("rank: common subspace found");
      });
    }
  }

  // (iii) no single T aligns d^2+2 of the direction pairs: the stacked
  // system (I - z2 z2^*) T z1 = 0 over any (d^2+2)-subset keeps full rank
  rep.margin_alignment = 1;
  unsigned need = d * d + 2;
  if (L >= need) {
    for_each_subset(L, need, [&](const std::vector<unsigned>& idx) {
      Eigen::MatrixXcd stacked(idx.size() * n, n * n);
      for (std::size_t c = 0; c < idx.size(); ++c) {
        const auto& z1 = data[idx[c]].prox[0].top_direction;
        const auto& z2 = data[idx[c]].prox[1].top_direction;
        Eigen::MatrixXcd P =
            Eigen::MatrixXcd::Identity(n, n) - z2 * z2.adjoint();
        // rows for vec(T): (P T z1)_a = sum_{b} P_{a,.} T_{.,b} z1_b
        for (unsigned a = 0; a < n; ++a)
          for (unsigned row = 0; row < n; ++row)
            for (unsigned col = 0; col < n; ++col)
              stacked(c * n + a, row * n + col) = P(a, row) * z1(col);
      }
      double sv = smallest_singular(stacked);
      rep.margin_alignment = std::min(rep.margin_alignment, sv);
      if (sv < tol) rep.failures.push_back("alignment: common T candidate");
    });
  }

  rep.pass = rep.failures.empty();
  return rep;
}

nlohmann::json FreenessCertificate::to_json() const {
  nlohmann::json j;
  j["M"] = M;
  j["L_check"] = L_check;
  j["free"] = free;
  j["geometric"] = geometric;
  nlohmann::json m = nlohmann::json::object();
  for (auto& [k, v] : margins) m[k] = v;
  j["margins"] = m;
  j["words_checked"] = words_checked;
  return j;
}

namespace {

// deterministic pseudo-random projective points avoiding a subspace
std::vector<Eigen::VectorXcd> sample_compact(const Eigen::MatrixXcd& avoid,
                                             double delta, unsigned n,
                                             unsigned count,
                                             std::uint64_t seed) {
  SplitMix64 rng(seed);
  std::vector<Eigen::VectorXcd> pts;
  pts.reserve(count);
  unsigned guard = 0;
  while (pts.size() < count && guard < 200 * count) {
    ++guard;
    Eigen::VectorXcd v(n);
    for (unsigned i = 0; i < n; ++i)
      v(i) = std::complex<double>(rng.unit() - 0.5, rng.unit() - 0.5);
    double nv = v.norm();
    if (nv < 1e-12) continue;
    v /= nv;
    if (distance_to_subspace(v, avoid) >= delta) pts.push_back(std::move(v));
  }
  if (pts.size() < count)
    raise(Errc::PrecisionLoss, "could not sample the compact set");
  return pts;
}

}  // namespace

FreenessCertificate power_up(const OkRing& R, const std::vector<OkMatrix>& A,
                             const EmbeddingSet& emb, std::size_t i1,
                             std::size_t i2, unsigned M_max, unsigned L_check,
                             double neighborhood_radius, unsigned grid_points) {
  if (A.empty()) raise(Errc::EmptyResult, "empty generator set");
  FreenessCertificate cert;
  cert.L_check = L_check;

  auto letters = letter_list(R, A);
  std::vector<LetterData> data;
  bool all_proximal = true;
  try {
    data = letter_adjoints(letters, emb, i1, i2, /*require_proximal=*/true);
  } catch (const Error& e) {
    if (e.code() != Errc::NonProximalMember) throw;
    all_proximal = false;
  }

  unsigned chosen_M = 1;
  if (all_proximal) {
    // delta: half the minimal separation margin of condition (i)
    double min_sep = 1;
    for (std::size_t a = 0; a < letters.size(); ++a)
      for (std::size_t b = 0; b < letters.size(); ++b) {
        if ((a ^ 1) == b) continue;
        for (int s = 0; s < 2; ++s)
          min_sep = std::min(
              min_sep, distance_to_subspace(data[a].prox[s].top_direction,
                                            data[b].prox[s].invariant_complement));
      }
    double delta = std::max(1e-3, 0.5 * min_sep);
    double radius = std::min(neighborhood_radius, 0.25 * delta);

    std::size_t embs[2] = {i1, i2};
    bool found = false;
    for (unsigned M = 1; M <= M_max && !found; ++M) {
      bool ok = true;
      double contraction_margin = 1, inclusion_margin = 1;
      for (std::size_t li = 0; li < letters.size() && ok; ++li) {
        for (int s = 0; s < 2 && ok; ++s) {
          Eigen::MatrixXcd ad =
              adjoint_matrix(emb.matrix(letters[li], embs[s]));
          Eigen::MatrixXcd adM = ad;
          for (unsigned i = 1; i < M; ++i) adM = adM * ad;
          const auto& prox = data[li].prox[s];
          auto samples =
              sample_compact(prox.invariant_complement, delta,
                             static_cast<unsigned>(ad.rows()), grid_points,
                             0xabcdefULL + 131 * li + s);
          // inclusion rho(g^M) Q_g inside U_g
          for (const auto& x : samples) {
            Eigen::VectorXcd tx = adM * x;
            if (tx.norm() < 1e-12) { ok = false; break; }
            double dz = projective_distance(tx, prox.top_direction);
            inclusion_margin = std::min(inclusion_margin, radius - dz);
            if (dz >= radius) { ok = false; break; }
          }
          if (!ok) break;
          // contraction on consecutive sample pairs
          for (std::size_t t = 0; t + 1 < samples.size(); ++t) {
            double before = projective_distance(samples[t], samples[t + 1]);
            if (before < 1e-9) continue;
            double after =
                projective_distance(adM * samples[t], adM * samples[t + 1]);
            contraction_margin =
                std::min(contraction_margin, before - after);
            if (after >= before) { ok = false; break; }
          }
          // other neighborhoods must sit inside Q_g
          for (std::size_t lj = 0; lj < letters.size() && ok; ++lj) {
            if ((li ^ 1) == lj) continue;
            double dz = distance_to_subspace(data[lj].prox[s].top_direction,
                                             prox.invariant_complement);
            if (dz < delta + radius) { ok = false; break; }
          }
        }
      }
      if (ok) {
        found = true;
        chosen_M = M;
        cert.geometric = true;
        cert.margins["contraction"] = contraction_margin;
        cert.margins["inclusion"] = inclusion_margin;
        cert.margins["delta"] = delta;
        cert.margins["radius"] = radius;
      }
    }
    if (!found)
      raise(Errc::NoSuchM, "no M <= " + std::to_string(M_max) +
                               " certifies contraction and inclusion");
  }

  cert.M = chosen_M;

  // combinatorial phase: all reduced words over the powered letters of
  // length <= L_check evaluate to distinct elements, exactly
  std::vector<OkMatrix> powered;
  powered.reserve(letters.size());
  for (const auto& g : letters) powered.push_back(ok_pow(R, g, chosen_M));

  unsigned m = static_cast<unsigned>(A.size());
  std::unordered_map<std::string, std::string> seen;
  std::vector<OkMatrix> stack{ok_identity(R, A[0].d)};
  std::vector<unsigned> word;
  seen.emplace(ok_key(stack.back()), "");
  std::size_t checked = 1;
  std::string desc;

  std::function<void(unsigned)> push = [&](unsigned letter) {
    word.push_back(letter);
    stack.push_back(ok_mul(R, stack.back(), powered[letter]));
  };
  std::function<void()> pop = [&]() {
    word.pop_back();
    stack.pop_back();
  };
  walks::walk_reduced_words(
      m, L_check,
      [&](unsigned letter, unsigned) {
        push(letter);
        ++checked;
        std::string w;
        for (auto l : word) w += static_cast<char>('a' + l);
        auto [it, fresh] = seen.emplace(ok_key(stack.back()), w);
        if (!fresh)
          raise(Errc::FreenessUnverified,
                "words '" + it->second + "' and '" + w +
                    "' evaluate to the same element");
      },
      pop);

  cert.words_checked = checked;
  cert.free = true;
  return cert;
}

NormGrowthReport norm_growth(const OkRing& R, const std::vector<OkMatrix>& S,
                             const EmbeddingSet& emb, unsigned l_max,
                             std::size_t cap) {
  if (S.empty()) raise(Errc::EmptyResult, "empty set");
  NormGrowthReport rep;
  std::vector<OkMatrix> level{ok_identity(R, S[0].d)};
  std::unordered_map<std::string, bool> seen;
  for (unsigned l = 1; l <= l_max; ++l) {
    std::unordered_map<std::string, OkMatrix> next;
    for (const auto& g : level)
      for (const auto& s : S) {
        OkMatrix prod = ok_mul(R, g, s);
        next.emplace(ok_key(prod), std::move(prod));
        if (next.size() > cap) raise(Errc::TooLarge, "word level exceeds cap");
      }
    level.clear();
    double best = 0;
    for (auto& [k, g] : next) {
      best = std::max(best, std::log(emb.sup_norm(g)));
      level.push_back(std::move(g));
    }
    rep.rows.push_back({l, best});
  }

  // least squares slope through the origin-shifted rows
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (const auto& row : rep.rows) {
    sx += row.l;
    sy += row.max_log_norm;
    sxx += static_cast<double>(row.l) * row.l;
    sxy += row.l * row.max_log_norm;
  }
  double nrows = static_cast<double>(rep.rows.size());
  double denom = nrows * sxx - sx * sx;
  rep.slope = denom != 0 ? (nrows * sxy - sx * sy) / denom : 0;

  for (const auto& r1 : rep.rows)
    for (const auto& r2 : rep.rows) {
      unsigned l = r1.l + r2.l;
      if (l > l_max) continue;
      double combined = rep.rows[l - 1].max_log_norm;
      if (combined > r1.max_log_norm + r2.max_log_norm + 1e-9)
        rep.subadditive = false;
    }
  return rep;
}

bool predicate_subspace(const OkMatrix& h, const Eigen::MatrixXcd& V_basis,
                        const EmbeddingSet& emb, std::size_t i, double tol) {
  Eigen::MatrixXcd ad = adjoint_matrix(emb.matrix(h, i));
  unsigned n = static_cast<unsigned>(ad.rows());
  Eigen::MatrixXcd P = V_basis * V_basis.adjoint();
  Eigen::MatrixXcd residual =
      (Eigen::MatrixXcd::Identity(n, n) - P) * ad * P;
  return residual.norm() < tol;
}

bool predicate_intertwiner(const OkMatrix& h, const Eigen::MatrixXcd& T,
                           const EmbeddingSet& emb, std::size_t i1,
                           std::size_t i2, double tol) {
  Eigen::MatrixXcd ad1 = adjoint_matrix(emb.matrix(h, i1));
  Eigen::MatrixXcd ad2 = adjoint_matrix(emb.matrix(h, i2));
  double resid = (T * ad1 - ad2 * T).norm() / T.norm();
  return resid < tol;
}

std::optional<FirstLetterResult> first_letter_search(
    const OkRing& R, const std::vector<OkMatrix>& letters,
    const Eigen::MatrixXcd& T, const EmbeddingSet& emb, std::size_t i1,
    std::size_t i2, double radius) {
  (void)R;
  Eigen::JacobiSVD<Eigen::MatrixXcd> svd(T);
  double kappa = svd.singularValues()[0] /
                 svd.singularValues()[svd.singularValues().size() - 1];
  double allowed = kappa * kappa * radius + radius;

  std::optional<FirstLetterResult> best;
  for (std::size_t li = 0; li < letters.size(); ++li) {
    Eigen::MatrixXcd ad1 = adjoint_matrix(emb.matrix(letters[li], i1));
    Eigen::MatrixXcd ad2 = adjoint_matrix(emb.matrix(letters[li], i2));
    Eigen::VectorXcd z1 = dominant_direction(ad1);
    Eigen::VectorXcd z2 = dominant_direction(ad2);
    Eigen::VectorXcd tz1 = T * z1;
    if (tz1.norm() < 1e-12) continue;
    double dist = projective_distance(tz1, z2);
    double margin = dist - allowed;
    if (margin > 0 && (!best || margin > best->margin))
      best = FirstLetterResult{static_cast<unsigned>(li), margin};
  }
  return best;
}

double word_count_bound(unsigned m, unsigned l) {
  return std::pow(2.0 * m - 1.0, l / 2.0 + 1.0) *
         std::pow(2.0 * m - 2.0, l / 2.0 - 1.0);
}

double escape_mass_upper(const walks::FreeWalkStats& stats,
                         const std::vector<BigInt>& word_counts) {
  unsigned m = stats.m;
  unsigned steps = 2 * stats.k;
  double total = 0;
  for (unsigned l = 0; l <= steps; ++l) {
    double p = to_double(stats.P[l]);
    if (l < word_counts.size()) {
      total += p * word_counts[l].get_d();
    } else {
      total += p * word_count_bound(m, l);
    }
  }
  return total;
}

void scan_predicate_words(std::ostream& os, const OkRing& R,
                          const std::vector<OkMatrix>& letters,
                          const Eigen::MatrixXcd& T, const EmbeddingSet& emb,
                          std::size_t i1, std::size_t i2, unsigned lmax,
                          double tol) {
  unsigned m = static_cast<unsigned>(letters.size() / 2);
  (void)R;
  std::vector<Eigen::MatrixXcd> ad1, ad2;
  for (const auto& g : letters) {
    ad1.push_back(adjoint_matrix(emb.matrix(g, i1)));
    ad2.push_back(adjoint_matrix(emb.matrix(g, i2)));
  }
  unsigned n = static_cast<unsigned>(ad1[0].rows());
  std::vector<Eigen::MatrixXcd> s1{Eigen::MatrixXcd::Identity(n, n)};
  std::vector<Eigen::MatrixXcd> s2{Eigen::MatrixXcd::Identity(n, n)};
  std::string word;
  double tnorm = T.norm();
  os << "word,length,in_H_T\n";
  walks::walk_reduced_words(
      m, lmax,
      [&](unsigned letter, unsigned depth) {
        s1.push_back(s1.back() * ad1[letter]);
        s2.push_back(s2.back() * ad2[letter]);
        char c = static_cast<char>((letter & 1) ? 'A' + letter / 2
                                                : 'a' + letter / 2);
        word.push_back(c);
        bool in = (T * s1.back() - s2.back() * T).norm() / tnorm < tol;
        os << word << ',' << depth << ',' << (in ? 1 : 0) << "\n";
      },
      [&]() {
        s1.pop_back();
        s2.pop_back();
        word.pop_back();
      });
}

}  // namespace slgap::arch
