#pragma once

#include "ctw/identities.hpp"
#include "ctw/product.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace ctw {

enum class Verdict { Match, Mismatch, Skipped };
std::string_view verdict_name(Verdict v);

struct VerificationReport {
  IdentityInstance instance;
  QPoly lhs_ct;
  QRat rhs;
  Verdict verdict = Verdict::Skipped;
  std::string reason;  ///< why SKIPPED, or both sides' text on MISMATCH
  double timing_ms = 0.0;
  bool transitive = true;
  std::optional<Permutation> sigma;
};

/// Product (prefactor first) whose constant term is the instance's LHS.
/// Not defined for DIXON, whose LHS is a plain sum.
ProductSpec lhs_spec(const IdentityInstance& inst);

/// Brute-force oracle: expand, take the constant term, compare with the
/// closed form by cross-multiplication.
VerificationReport verify_instance(const IdentityInstance& inst, std::uint64_t ceiling = kDefaultTermCeiling);

enum class QPolicy { AllSubsets, EmptyOnly, List };

struct SweepSpec {
  Theorem theorem = Theorem::QDyson;
  int n_min = 1;
  int n_max = 1;
  /// Bounds on a_1..a_n (and on a_0 for DYSON/QDYSON). a_min defaults per theorem.
  std::optional<int> a_min;
  int a_max = 1;
  /// a_0 range for MAIN1/MAIN2.
  int a0_min = 0;
  int a0_max = 0;
  /// Optional cap on the sum of all exponents.
  std::optional<int> sum_max;
  QPolicy q_policy = QPolicy::AllSubsets;
  std::vector<std::vector<Edge>> q_list;
  int jobs = 1;
  std::uint64_t ceiling = kDefaultTermCeiling;

  /// Throws std::invalid_argument on inconsistent bounds.
  void validate() const;
};

struct SweepSummary {
  std::size_t total = 0;
  std::size_t match = 0;
  std::size_t mismatch = 0;
  std::size_t skipped = 0;
  double elapsed_ms = 0.0;
};

struct SweepResult {
  std::vector<VerificationReport> reports;
  SweepSummary summary;
};

/// Deterministic order: n ascending, a-vectors lexicographic, then Q (sorted
/// pair lists, lexicographic) or sigma (lexicographic).
std::vector<IdentityInstance> enumerate_instances(const SweepSpec& spec);
SweepResult sweep(const SweepSpec& spec);
/// Runs instances on `jobs` threads; output order equals input order.
std::vector<VerificationReport> verify_all(const std::vector<IdentityInstance>& instances, int jobs,
                                           std::uint64_t ceiling);
SweepSummary summarize(const std::vector<VerificationReport>& reports);

// --- Lemma checks -----------------------------------------------------------

struct DegreeBoundReport {
  int bound = 0;                  ///< |a| - k - n
  std::vector<int> a0_points;
  std::vector<mpq_class> values;  ///< CT at q = q0 for each a_0
  bool ok = false;
  std::string detail;
};

/// Prefactor x_0^k times x_1^{-1} x_2^{-1} ... assigned round-robin over
/// x_1..x_n. Evaluates the CT at a_0 = 0..bound+extra_points (at least
/// three points when the bound is negative), interpolates in t = q0^{a_0}
/// through the first bound+1 points, and demands exact agreement on the rest.
DegreeBoundReport check_degree_bound(std::span<const int> a, int k, const mpq_class& q0 = mpq_class(7, 5),
                                     int extra_points = 1, std::uint64_t ceiling = kDefaultTermCeiling);

struct Import1Report {
  std::uint64_t vectors_checked = 0;
  std::optional<std::string> counterexample;
  bool ok() const { return !counterexample; }
};

/// Every s <= s_max, every a in [a_min, a_max]^s, every k with
/// 1 <= k_i <= sum(a) - 1: some 1 <= k_i <= a_i - 1, or some i < j with
/// 1 - a_j <= k_i - k_j <= a_i - 1.
Import1Report check_lemma_import1(int s_max, int a_max, int a_min = 0);
/// The disjunction for one (a, k).
bool import1_holds(std::span<const int> a, std::span<const int> k);

struct ReflectionReport {
  std::uint64_t cases = 0;
  std::vector<std::string> failures;
  bool ok() const { return failures.empty(); }
};

/// prod_{(i,j) in Q} x_j/x_i * D_n(a) against the sign-flipped reflected
/// product, for every Q within {(i,j) | 0 <= i < j <= n} and 1 <= a_i <= a_bound.
ReflectionReport check_reflection(int n, int a_bound);
/// Right-hand product of the reflection identity for one (a, Q).
LaurentPoly reflected_product(std::span<const int> a, std::span<const Edge> q);

struct ZeroPointReport {
  ZeroPoints points;
  std::vector<std::string> failures;
  bool ok() const { return failures.empty(); }
};

/// RHS vanishes at every zero point and has a vanishing denominator at every pole.
ZeroPointReport check_zero_points(const IdentityInstance& inst);

struct TournamentCensus {
  int n = 0;
  std::uint64_t tournaments = 0;
  std::uint64_t transitive = 0;
  std::uint64_t nontransitive = 0;
  /// Nontransitive T with more than n - 2 dominant sets.
  std::uint64_t dominant_bound_violations = 0;
  /// Transitive T without exactly n dominant sets of distinct sizes.
  std::uint64_t transitive_shape_violations = 0;
};

/// Exhaustive over all 2^{C(n,2)} tournaments on n vertices.
TournamentCensus tournament_census(int n);

struct FamilyBoundReport {
  int n = 0;
  std::uint64_t qsets = 0;
  std::uint64_t nontransitive = 0;
  std::uint64_t violations = 0;     ///< |family| > n - 1 with nontransitive e_bar
  std::uint64_t inconsistent = 0;   ///< R2 only: literal vs shortcut disagreement
};

FamilyBoundReport check_r1_bound(int n);
FamilyBoundReport check_r2_bound(int n);

}  // namespace ctw
