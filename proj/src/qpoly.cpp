#include "ctw/qpoly.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>
#include <stdexcept>

namespace ctw {

QPoly::QPoly(long c) {
  if (c != 0) coeffs_.emplace_back(c);
}

QPoly::QPoly(const mpz_class& c) {
  if (c != 0) coeffs_.push_back(c);
}

QPoly QPoly::monomial(const mpz_class& c, int exponent) {
  if (exponent < 0) throw std::domain_error("QPoly exponents must be nonnegative");
  QPoly p;
  if (c == 0) return p;
  p.coeffs_.assign(static_cast<size_t>(exponent) + 1, mpz_class(0));
  p.coeffs_.back() = c;
  return p;
}

QPoly QPoly::from_coeffs(std::vector<mpz_class> coeffs) {
  QPoly p;
  p.coeffs_ = std::move(coeffs);
  p.trim();
  return p;
}

QPoly QPoly::from_terms(const std::map<int, mpz_class>& terms) {
  QPoly p;
  for (const auto& [e, c] : terms) {
    if (e < 0) throw std::domain_error("QPoly exponents must be nonnegative");
    if (static_cast<size_t>(e) >= p.coeffs_.size()) p.coeffs_.resize(static_cast<size_t>(e) + 1);
    p.coeffs_[static_cast<size_t>(e)] += c;
  }
  p.trim();
  return p;
}

void QPoly::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

const mpz_class& QPoly::coeff(int exponent) const {
  static const mpz_class zero(0);
  if (exponent < 0 || static_cast<size_t>(exponent) >= coeffs_.size()) return zero;
  return coeffs_[static_cast<size_t>(exponent)];
}

std::map<int, mpz_class> QPoly::terms() const {
  std::map<int, mpz_class> out;
  for (size_t e = 0; e < coeffs_.size(); ++e)
    if (coeffs_[e] != 0) out.emplace(static_cast<int>(e), coeffs_[e]);
  return out;
}

QPoly& QPoly::operator+=(const QPoly& rhs) {
  if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
  for (size_t e = 0; e < rhs.coeffs_.size(); ++e) coeffs_[e] += rhs.coeffs_[e];
  trim();
  return *this;
}

QPoly& QPoly::operator-=(const QPoly& rhs) {
  if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
  for (size_t e = 0; e < rhs.coeffs_.size(); ++e) coeffs_[e] -= rhs.coeffs_[e];
  trim();
  return *this;
}

void QPoly::add_scaled(const QPoly& rhs, long c, int shift) {
  if (rhs.is_zero() || c == 0) return;
  const size_t need = rhs.coeffs_.size() + static_cast<size_t>(shift);
  if (need > coeffs_.size()) coeffs_.resize(need);
  for (size_t e = 0; e < rhs.coeffs_.size(); ++e) {
    mpz_class& dst = coeffs_[e + static_cast<size_t>(shift)];
    if (c == 1) {
      dst += rhs.coeffs_[e];
    } else if (c == -1) {
      dst -= rhs.coeffs_[e];
    } else {
      dst += c * rhs.coeffs_[e];
    }
  }
  trim();
}

QPoly& QPoly::operator*=(const QPoly& rhs) {
  *this = *this * rhs;
  return *this;
}

QPoly QPoly::operator-() const {
  QPoly p = *this;
  for (auto& c : p.coeffs_) c = -c;
  return p;
}

QPoly QPoly::pow(unsigned exponent) const {
  QPoly result(1);
  QPoly base = *this;
  while (exponent != 0) {
    if (exponent & 1U) result *= base;
    exponent >>= 1U;
    if (exponent != 0) base *= base;
  }
  return result;
}

QPoly QPoly::shifted(int exponent) const {
  if (exponent < 0) throw std::domain_error("QPoly exponents must be nonnegative");
  if (is_zero()) return {};
  QPoly p;
  p.coeffs_.assign(static_cast<size_t>(exponent), mpz_class(0));
  p.coeffs_.insert(p.coeffs_.end(), coeffs_.begin(), coeffs_.end());
  return p;
}

mpq_class QPoly::eval(const mpq_class& q0) const {
  mpq_class acc(0);
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc = acc * q0 + mpq_class(*it);
  }
  acc.canonicalize();
  return acc;
}

std::optional<QPoly> QPoly::divide_exact(const QPoly& divisor) const {
  if (divisor.is_zero()) throw std::domain_error("division by the zero polynomial");
  if (is_zero()) return QPoly();
  if (degree() < divisor.degree()) return std::nullopt;
  std::vector<mpz_class> rem = coeffs_;
  const size_t dd = divisor.coeffs_.size() - 1;
  const mpz_class& lead = divisor.coeffs_.back();
  std::vector<mpz_class> quot(rem.size() - dd);
  for (size_t k = quot.size(); k-- > 0;) {
    mpz_class& top = rem[k + dd];
    if (top == 0) continue;
    if (!mpz_divisible_p(top.get_mpz_t(), lead.get_mpz_t())) return std::nullopt;
    mpz_class factor = top / lead;
    quot[k] = factor;
    for (size_t i = 0; i <= dd; ++i) rem[k + i] -= factor * divisor.coeffs_[i];
  }
  for (const auto& c : rem)
    if (c != 0) return std::nullopt;
  return from_coeffs(std::move(quot));
}

std::string QPoly::str() const {
  if (is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (size_t e = 0; e < coeffs_.size(); ++e) {
    const mpz_class& c = coeffs_[e];
    if (c == 0) continue;
    mpz_class mag = abs(c);
    if (first) {
      if (c < 0) out << '-';
    } else {
      out << (c < 0 ? " - " : " + ");
    }
    first = false;
    if (e == 0) {
      out << mag.get_str();
      continue;
    }
    if (mag != 1) out << mag.get_str() << '*';
    out << 'q';
    if (e > 1) out << '^' << e;
  }
  return out.str();
}

namespace {

[[noreturn]] void parse_fail(std::string_view text) {
  throw std::invalid_argument("malformed q-polynomial: '" + std::string(text) + "'");
}

}  // namespace

QPoly QPoly::parse(std::string_view text) {
  std::string s;
  for (char ch : text)
    if (!std::isspace(static_cast<unsigned char>(ch))) s.push_back(ch);
  if (s.empty()) parse_fail(text);

  std::map<int, mpz_class> terms;
  size_t pos = 0;
  bool first = true;
  while (pos < s.size()) {
    int sign = 1;
    if (s[pos] == '+' || s[pos] == '-') {
      sign = s[pos] == '-' ? -1 : 1;
      ++pos;
    } else if (!first) {
      parse_fail(text);
    }
    first = false;

    mpz_class coeff(1);
    bool have_digits = false;
    size_t start = pos;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
    if (pos > start) {
      coeff = mpz_class(s.substr(start, pos - start));
      have_digits = true;
    }
    int exponent = 0;
    if (pos < s.size() && s[pos] == '*') {
      if (!have_digits) parse_fail(text);
      ++pos;
      if (pos >= s.size() || s[pos] != 'q') parse_fail(text);
    }
    if (pos < s.size() && s[pos] == 'q') {
      ++pos;
      exponent = 1;
      if (pos < s.size() && s[pos] == '^') {
        ++pos;
        size_t estart = pos;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
        if (pos == estart) parse_fail(text);
        exponent = std::stoi(s.substr(estart, pos - estart));
      }
    } else if (!have_digits) {
      parse_fail(text);
    }
    terms[exponent] += sign * coeff;
  }
  return from_terms(terms);
}

QPoly operator+(QPoly a, const QPoly& b) { return a += b; }
QPoly operator-(QPoly a, const QPoly& b) { return a -= b; }

QPoly operator*(const QPoly& a, const QPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  const auto& x = a.coeffs();
  const auto& y = b.coeffs();
  std::vector<mpz_class> out(x.size() + y.size() - 1);
  for (size_t i = 0; i < x.size(); ++i) {
    if (x[i] == 0) continue;
    for (size_t j = 0; j < y.size(); ++j) {
      mpz_addmul(out[i + j].get_mpz_t(), x[i].get_mpz_t(), y[j].get_mpz_t());
    }
  }
  return QPoly::from_coeffs(std::move(out));
}

}  // namespace ctw
