#pragma once

#include "ctw/qpoly.hpp"

#include <cstddef>
#include <map>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace ctw {

using Exponents = std::vector<int>;

/// Sparse Laurent polynomial in x_0..x_{nvars-1} with QPoly coefficients.
/// Terms are kept in lexicographic exponent order and no stored
/// coefficient is zero.
class LaurentPoly {
 public:
  using TermMap = std::map<Exponents, QPoly>;

  explicit LaurentPoly(int nvars = 0);

  static LaurentPoly constant(int nvars, const QPoly& c);
  static LaurentPoly monomial(const Exponents& exps, const QPoly& c = QPoly(1));

  int nvars() const { return nvars_; }
  const TermMap& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  const QPoly& coeff(const Exponents& exps) const;

  /// Adds c to the coefficient of x^exps.
  void add_term(const Exponents& exps, const QPoly& c);

  LaurentPoly& operator+=(const LaurentPoly& rhs);
  LaurentPoly& operator-=(const LaurentPoly& rhs);
  LaurentPoly operator-() const;

  /// Multiplies in place by (1 + sign * q^qshift * x^step).
  void mul_binomial(const Exponents& step, int sign, int qshift);
  /// Multiplies in place by c * x^exps.
  void mul_monomial(const Exponents& exps, const QPoly& c);

  /// Every exponent vector has only nonzero coordinates printed;
  /// the constant monomial prints as its bare coefficient.
  std::string str() const;

  friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) {
    return a.nvars_ == b.nvars_ && a.terms_ == b.terms_;
  }
  friend bool operator!=(const LaurentPoly& a, const LaurentPoly& b) { return !(a == b); }

 private:
  void check_arity(const Exponents& exps) const;

  int nvars_;
  TermMap terms_;
};

LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b);
LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b);
LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);

class ArityMismatch : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Coefficient of x_0^0 ... x_n^0.
QPoly ct_all(const LaurentPoly& f);

/// Terms of f whose exponent in x_var is zero.
LaurentPoly ct_var(const LaurentPoly& f, int var);

/// Substitutes x_i -> x_{perm[i]}. perm must be a permutation of 0..nvars-1;
/// indices a caller does not want moved map to themselves.
LaurentPoly relabel(const LaurentPoly& f, std::span<const int> perm);

/// Laurent polynomial with exact rational coefficients, the image of
/// LaurentPoly under q -> q0.
using RationalLaurent = std::map<Exponents, mpq_class>;

mpq_class eval_q(const QPoly& p, const mpq_class& q0);
RationalLaurent eval_q(const LaurentPoly& f, const mpq_class& q0);

}  // namespace ctw
