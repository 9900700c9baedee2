#pragma once

#include "ctw/qpoly.hpp"

#include <string>

namespace ctw {

/// Unreduced ratio of two q-polynomials. Equality is cross-multiplication,
/// so no polynomial GCD is ever needed.
class QRat {
 public:
  QRat() : num_(0), den_(1) {}
  QRat(QPoly num);  // NOLINT(google-explicit-constructor)
  QRat(long c) : QRat(QPoly(c)) {}  // NOLINT(google-explicit-constructor)
  QRat(QPoly num, QPoly den);

  const QPoly& num() const { return num_; }
  const QPoly& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }

  /// The polynomial value when den divides num exactly.
  std::optional<QPoly> as_poly() const { return num_.divide_exact(den_); }

  mpq_class eval(const mpq_class& q0) const;

  QRat& operator*=(const QRat& rhs);
  QRat& operator/=(const QRat& rhs);
  QRat& operator+=(const QRat& rhs);
  QRat& operator-=(const QRat& rhs);
  QRat operator-() const { return {-num_, den_}; }

  std::string str() const;

  friend bool operator==(const QRat& a, const QRat& b) { return a.num_ * b.den_ == a.den_ * b.num_; }
  friend bool operator!=(const QRat& a, const QRat& b) { return !(a == b); }

 private:
  QPoly num_;
  QPoly den_;
};

QRat operator*(QRat a, const QRat& b);
QRat operator/(QRat a, const QRat& b);
QRat operator+(QRat a, const QRat& b);
QRat operator-(QRat a, const QRat& b);

}  // namespace ctw
