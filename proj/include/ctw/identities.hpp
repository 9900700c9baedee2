#pragma once

#include "ctw/qrat.hpp"
#include "ctw/tournament.hpp"

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace ctw {

enum class Theorem { Dixon, Dyson, QDyson, BG, Main1, Main2, CorI, CorII, X1, X2 };

std::string_view theorem_name(Theorem t);
/// Accepts the canonical upper-case names in any case, plus "cor1"/"cor2".
std::optional<Theorem> parse_theorem(std::string_view name);

/// One identity to check. `a` holds a_0..a_n for DYSON, QDYSON, MAIN1 and
/// MAIN2, and a_1..a_n for BG, COR_I, COR_II, X1 and X2. DIXON uses only n.
struct IdentityInstance {
  Theorem theorem = Theorem::Dixon;
  int n = 0;
  std::vector<int> a;
  std::vector<Edge> q;
  Permutation sigma;

  /// Builds an instance with n derived from `a` (except DIXON); COR_* derive
  /// Q from sigma. Does not validate.
  static IdentityInstance make(Theorem theorem, std::vector<int> a, std::vector<Edge> q = {},
                               Permutation sigma = {}, std::optional<int> n = std::nullopt);

  /// Human-readable reason the instance violates its theorem's hypotheses.
  std::optional<std::string> invalid_reason() const;

  /// Ground set the Q pairs are drawn from, when the theorem takes a Q.
  std::optional<Ground> ground() const;
  QSet qset() const;

  friend bool operator==(const IdentityInstance&, const IdentityInstance&) = default;
};

mpz_class dixon_lhs(int n);
mpz_class dixon_rhs(int n);
mpz_class dyson_rhs(std::span<const int> a);
QPoly qdyson_rhs(std::span<const int> a);

/// (q)_{a0+|a|}/((q)_{a0} prod (q)_{a_i}) * prod_i (1 - q^{a_sigma(i)})/(1 - q^{a0 + sigma_i})
/// for parts a_1..a_n (`parts`, 0-based storage) and winner order `sigma` (1-based).
QRat winner_product(std::span<const int> parts, const Permutation& sigma, int a0 = 0);

/// `a` = a_1..a_n; Q on E.
QRat bg_rhs(std::span<const int> a, const QSet& q);
/// `a` = a_0..a_n; Q1 on {(i,j) | 2 <= i < j <= n}.
QRat main1_rhs(std::span<const int> a, const QSet& q1);
/// `a` = a_0..a_n; Q2 on {(i,j) | 3 <= i < j <= n}.
QRat main2_rhs(std::span<const int> a, const QSet& q2);
/// `a` = a_1..a_n; sigma a permutation of 1..n.
QRat cor_i_rhs(std::span<const int> a, const Permutation& sigma);
QRat cor_ii_rhs(std::span<const int> a, const Permutation& sigma);
/// Closed forms at b = 0 (a_0 = 0, empty Q); `a` = a_1..a_n.
QRat x1_rhs(std::span<const int> a);
QRat x2_rhs(std::span<const int> a);

QRat rhs(const IdentityInstance& inst);

/// Right-hand side of MAIN1/MAIN2 as a function of t = q^{a_0}:
///   constant * prod_{e in num_shifts} (1 - t q^e) / prod_{e in den_shifts} (1 - t q^e).
struct ParametricRhs {
  QRat constant;
  std::vector<int> num_shifts;
  std::vector<int> den_shifts;

  struct Value {
    QRat value;
    bool pole = false;
  };
  /// Substitutes t = q^{a0} for any integer a0; `pole` is set when a
  /// denominator factor vanishes, in which case `value` is meaningless.
  Value at(int a0) const;
};

/// Throws std::invalid_argument for non-MAIN instances and nontransitive ones.
ParametricRhs parametric_rhs(const IdentityInstance& inst);

struct ZeroPoints {
  std::vector<int> zeros;  ///< b with RHS(q^{a_0} = q^{-b}) = 0
  std::vector<int> poles;  ///< sigma_1..sigma_n plus the distinguished pole
};
ZeroPoints rhs_zero_points(const IdentityInstance& inst);

}  // namespace ctw
