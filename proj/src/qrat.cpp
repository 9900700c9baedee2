#include "ctw/qrat.hpp"

#include <stdexcept>

namespace ctw {

QRat::QRat(QPoly num) : num_(std::move(num)), den_(1) {}

QRat::QRat(QPoly num, QPoly den) : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) throw std::domain_error("QRat with zero denominator");
}

mpq_class QRat::eval(const mpq_class& q0) const {
  mpq_class d = den_.eval(q0);
  if (d == 0) throw std::domain_error("QRat denominator vanishes at " + q0.get_str());
  mpq_class r = num_.eval(q0) / d;
  r.canonicalize();
  return r;
}

QRat& QRat::operator*=(const QRat& rhs) {
  num_ *= rhs.num_;
  den_ *= rhs.den_;
  return *this;
}

QRat& QRat::operator/=(const QRat& rhs) {
  if (rhs.is_zero()) throw std::domain_error("QRat division by zero");
  num_ *= rhs.den_;
  den_ *= rhs.num_;
  return *this;
}

QRat& QRat::operator+=(const QRat& rhs) {
  if (den_ == rhs.den_) {
    num_ += rhs.num_;
    return *this;
  }
  num_ = num_ * rhs.den_ + den_ * rhs.num_;
  den_ *= rhs.den_;
  return *this;
}

QRat& QRat::operator-=(const QRat& rhs) { return *this += -rhs; }

std::string QRat::str() const {
  if (den_ == QPoly(1)) return num_.str();
  return "(" + num_.str() + ")/(" + den_.str() + ")";
}

QRat operator*(QRat a, const QRat& b) { return a *= b; }
QRat operator/(QRat a, const QRat& b) { return a /= b; }
QRat operator+(QRat a, const QRat& b) { return a += b; }
QRat operator-(QRat a, const QRat& b) { return a -= b; }

}  // namespace ctw
