#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "slgap/arch/proximal.hpp"
#include "slgap/bigint.hpp"
#include "slgap/walks/freewalk.hpp"

namespace slgap::arch {

struct GenericReport {
  bool pass = false;
  bool all_proximal = false;
  /// (i): min over valid pairs of the distance from z_{rho_i(g1)} to the
  /// invariant complement of rho_i(g2)
  double margin_separation = 0;
  /// (ii): min slack in the subset rank tests
  double margin_rank = 0;
  /// (iii): min smallest singular value of the stacked alignment systems
  double margin_alignment = 0;
  std::vector<std::string> failures;
};

/// The three genericity conditions for A under the adjoint representations
/// of embeddings i1 and i2. Every rho_i(g^{+-1}) must be proximal
/// (NonProximalMember otherwise).
GenericReport generic_check(const OkRing& R, const std::vector<OkMatrix>& A,
                            const EmbeddingSet& emb, std::size_t i1,
                            std::size_t i2, double tol = 1e-8);

struct FreenessCertificate {
  unsigned M = 0;
  unsigned L_check = 8;
  bool free = false;
  bool geometric = false;  // contraction/inclusion certificate applies
  std::map<std::string, double> margins;
  std::size_t words_checked = 0;

  nlohmann::json to_json() const;
};

/// Finds the smallest M <= M_max such that the powered set {g^{+-M}} passes
/// the sampled contraction and inclusion tests on the auto-constructed
/// compact sets Q_g (when every adjoint is proximal; otherwise the
/// geometric phase is recorded as inapplicable and M = 1 is used), then
/// verifies freeness combinatorially: every reduced word of length
/// <= L_check over the powered letters evaluates to a distinct element in
/// exact Z[theta] arithmetic. A collision raises FreenessUnverified; an
/// exhausted M_max raises NoSuchM.
FreenessCertificate power_up(const OkRing& R, const std::vector<OkMatrix>& A,
                             const EmbeddingSet& emb, std::size_t i1,
                             std::size_t i2, unsigned M_max = 64,
                             unsigned L_check = 8,
                             double neighborhood_radius = 0.15,
                             unsigned grid_points = 1000);

struct NormGrowthRow {
  unsigned l = 0;
  double max_log_norm = 0;
};

struct NormGrowthReport {
  std::vector<NormGrowthRow> rows;
  double slope = 0;  // least-squares fit of max_log_norm against l
  bool subadditive = true;
};

/// max over prod_l S of log ||sigma_hat(g)||, exact word enumeration over
/// the multiset S (which should be symmetric for the walk reading).
NormGrowthReport norm_growth(const OkRing& R, const std::vector<OkMatrix>& S,
                             const EmbeddingSet& emb, unsigned l_max,
                             std::size_t cap = 200000);

/// (1) sigma(h) V sigma(h)^{-1} = V, tested as a projection residual on
/// the adjoint action. V_basis holds orthonormal columns.
bool predicate_subspace(const OkMatrix& h, const Eigen::MatrixXcd& V_basis,
                        const EmbeddingSet& emb, std::size_t i,
                        double tol = 1e-8);

/// (2) T Ad(sigma_1(h)) = Ad(sigma_2(h)) T up to tol * ||T||.
bool predicate_intertwiner(const OkMatrix& h, const Eigen::MatrixXcd& T,
                           const EmbeddingSet& emb, std::size_t i1,
                           std::size_t i2, double tol = 1e-8);

struct FirstLetterResult {
  unsigned letter = 0;  // index into letters (2i = g_i, 2i+1 = g_i^{-1})
  double margin = 0;    // d(T z1, z2) minus the allowed radius sum
};

/// Searches the letters for one whose attracting neighborhoods satisfy
/// T(U^{(1)}) disjoint from U^{(2)}, via the distance lower bound
/// d(T z1, z2) > kappa(T)^2 r + r. Absence is reported, not an error.
std::optional<FirstLetterResult> first_letter_search(
    const OkRing& R, const std::vector<OkMatrix>& letters,
    const Eigen::MatrixXcd& T, const EmbeddingSet& emb, std::size_t i1,
    std::size_t i2, double radius = 0.15);

/// Upper bound for chi_{S'}^{(2k)}(H) from exact level probabilities and
/// per-level word counts: enumerated counts where available, the
/// first-letter word-count bound beyond them.
double escape_mass_upper(const walks::FreeWalkStats& stats,
                         const std::vector<BigInt>& word_counts);

/// (2m-1)^{l/2+1} (2m-2)^{l/2-1}, the word-count bound under the
/// first-letter-avoidance hypothesis.
double word_count_bound(unsigned m, unsigned l);

/// CSV lines "word,length,in_H_T" for every reduced word up to lmax, with
/// letters a, A, b, B, ... (capital = inverse). The adjoint of the running
/// word is maintained incrementally.
void scan_predicate_words(std::ostream& os, const OkRing& R,
                          const std::vector<OkMatrix>& letters,
                          const Eigen::MatrixXcd& T, const EmbeddingSet& emb,
                          std::size_t i1, std::size_t i2, unsigned lmax,
                          double tol = 1e-8);

}  // namespace slgap::arch
