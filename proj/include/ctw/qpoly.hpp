#pragma once

#include <gmpxx.h>

#include <climits>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace ctw {

/// Exact polynomial in q with arbitrary-precision integer coefficients.
///
/// Stored densely: coeffs_[e] is the coefficient of q^e. The vector never
/// ends in a zero, so the zero polynomial is the empty vector.
class QPoly {
 public:
  static constexpr int kZeroDegree = INT_MIN;

  QPoly() = default;
  QPoly(long c);  // NOLINT(google-explicit-constructor)
  QPoly(const mpz_class& c);  // NOLINT(google-explicit-constructor)

  static QPoly monomial(const mpz_class& c, int exponent);
  /// q^e for e >= 0.
  static QPoly q_power(int exponent) { return monomial(1, exponent); }
  static QPoly from_coeffs(std::vector<mpz_class> coeffs);
  static QPoly from_terms(const std::map<int, mpz_class>& terms);

  /// Parses the canonical text form, e.g. "1 - q - q^2 + 3*q^3".
  static QPoly parse(std::string_view text);

  bool is_zero() const { return coeffs_.empty(); }
  bool is_constant() const { return coeffs_.size() <= 1; }
  int degree() const { return coeffs_.empty() ? kZeroDegree : static_cast<int>(coeffs_.size()) - 1; }
  const mpz_class& coeff(int exponent) const;
  const std::vector<mpz_class>& coeffs() const { return coeffs_; }
  /// Sparse view: nonzero coefficients keyed by exponent.
  std::map<int, mpz_class> terms() const;

  QPoly& operator+=(const QPoly& rhs);
  QPoly& operator-=(const QPoly& rhs);
  QPoly& operator*=(const QPoly& rhs);
  QPoly operator-() const;

  /// Adds c * q^shift * rhs in place.
  void add_scaled(const QPoly& rhs, long c, int shift);

  QPoly pow(unsigned exponent) const;
  /// Multiplies by q^e, e >= 0.
  QPoly shifted(int exponent) const;

  mpq_class eval(const mpq_class& q0) const;

  /// Quotient when `divisor` divides this exactly over Z[q]; nullopt otherwise.
  std::optional<QPoly> divide_exact(const QPoly& divisor) const;

  std::string str() const;

  friend bool operator==(const QPoly& a, const QPoly& b) { return a.coeffs_ == b.coeffs_; }
  friend bool operator!=(const QPoly& a, const QPoly& b) { return !(a == b); }

 private:
  void trim();

  std::vector<mpz_class> coeffs_;
};

QPoly operator+(QPoly a, const QPoly& b);
QPoly operator-(QPoly a, const QPoly& b);
QPoly operator*(const QPoly& a, const QPoly& b);

}  // namespace ctw
