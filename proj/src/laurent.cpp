#include "ctw/laurent.hpp"

#include <algorithm>

#include <sstream>

namespace ctw {

LaurentPoly::LaurentPoly(int nvars) : nvars_(nvars) {
  if (nvars < 0) throw std::invalid_argument("negative variable count");
}

LaurentPoly LaurentPoly::constant(int nvars, const QPoly& c) {
  LaurentPoly f(nvars);
  f.add_term(Exponents(static_cast<size_t>(nvars), 0), c);
  return f;
}

LaurentPoly LaurentPoly::monomial(const Exponents& exps, const QPoly& c) {
  LaurentPoly f(static_cast<int>(exps.size()));
  f.add_term(exps, c);
  return f;
}

void LaurentPoly::check_arity(const Exponents& exps) const {
  if (static_cast<int>(exps.size()) != nvars_) {
    throw ArityMismatch("exponent vector of length " + std::to_string(exps.size()) + " for " +
                        std::to_string(nvars_) + " variables");
  }
}

const QPoly& LaurentPoly::coeff(const Exponents& exps) const {
  static const QPoly zero;
  auto it = terms_.find(exps);
  return it == terms_.end() ? zero : it->second;
}

void LaurentPoly::add_term(const Exponents& exps, const QPoly& c) {
  check_arity(exps);
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(exps, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& rhs) {
  if (rhs.nvars_ != nvars_) throw ArityMismatch("nvars mismatch in addition");
  for (const auto& [e, c] : rhs.terms_) add_term(e, c);
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& rhs) {
  if (rhs.nvars_ != nvars_) throw ArityMismatch("nvars mismatch in subtraction");
  for (const auto& [e, c] : rhs.terms_) add_term(e, -c);
  return *this;
}

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly f = *this;
  for (auto& [e, c] : f.terms_) c = -c;
  return f;
}

void LaurentPoly::mul_binomial(const Exponents& step, int sign, int qshift) {
  check_arity(step);
  TermMap out = terms_;
  Exponents target(static_cast<size_t>(nvars_));
  for (const auto& [e, c] : terms_) {
    for (size_t v = 0; v < e.size(); ++v) target[v] = e[v] + step[v];
    auto [it, inserted] = out.try_emplace(target);
    it->second.add_scaled(c, sign, qshift);
    if (it->second.is_zero()) out.erase(it);
  }
  terms_ = std::move(out);
}

void LaurentPoly::mul_monomial(const Exponents& exps, const QPoly& c) {
  check_arity(exps);
  if (c.is_zero()) {
    terms_.clear();
    return;
  }
  TermMap out;
  for (auto& [e, coeff] : terms_) {
    Exponents shifted = e;
    for (size_t v = 0; v < e.size(); ++v) shifted[v] += exps[v];
    out.emplace_hint(out.end(), std::move(shifted), coeff * c);
  }
  terms_ = std::move(out);
}

std::string LaurentPoly::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    if (!first) out << " + ";
    first = false;
    const bool bare = std::all_of(e.begin(), e.end(), [](int x) { return x == 0; });
    if (bare) {
      out << c.str();
      continue;
    }
    out << '(' << c.str() << ')';
    bool any = false;
    for (size_t v = 0; v < e.size(); ++v) {
      if (e[v] == 0) continue;
      out << (any ? " " : " * ") << 'x' << v << '^' << e[v];
      any = true;
    }
  }
  return out.str();
}

LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
  if (a.nvars() != b.nvars()) throw ArityMismatch("nvars mismatch in multiplication");
  LaurentPoly out(a.nvars());
  Exponents e(static_cast<size_t>(a.nvars()));
  for (const auto& [ea, ca] : a.terms()) {
    for (const auto& [eb, cb] : b.terms()) {
      for (size_t v = 0; v < e.size(); ++v) e[v] = ea[v] + eb[v];
      out.add_term(e, ca * cb);
    }
  }
  return out;
}

QPoly ct_all(const LaurentPoly& f) {
  return f.coeff(Exponents(static_cast<size_t>(f.nvars()), 0));
}

LaurentPoly ct_var(const LaurentPoly& f, int var) {
  if (var < 0 || var >= f.nvars()) throw std::out_of_range("ct_var: variable index out of range");
  LaurentPoly out(f.nvars());
  for (const auto& [e, c] : f.terms())
    if (e[static_cast<size_t>(var)] == 0) out.add_term(e, c);
  return out;
}

LaurentPoly relabel(const LaurentPoly& f, std::span<const int> perm) {
  const int n = f.nvars();
  if (static_cast<int>(perm.size()) != n) throw std::invalid_argument("relabel: permutation length mismatch");
  std::vector<bool> seen(static_cast<size_t>(n), false);
  for (int target : perm) {
    if (target < 0 || target >= n || seen[static_cast<size_t>(target)]) {
      throw std::invalid_argument("relabel: not a bijection");
    }
    seen[static_cast<size_t>(target)] = true;
  }
  LaurentPoly out(n);
  Exponents moved(static_cast<size_t>(n));
  for (const auto& [e, c] : f.terms()) {
    for (int i = 0; i < n; ++i) moved[static_cast<size_t>(perm[static_cast<size_t>(i)])] = e[static_cast<size_t>(i)];
    out.add_term(moved, c);
  }
  return out;
}

mpq_class eval_q(const QPoly& p, const mpq_class& q0) { return p.eval(q0); }

RationalLaurent eval_q(const LaurentPoly& f, const mpq_class& q0) {
  RationalLaurent out;
  for (const auto& [e, c] : f.terms()) {
    mpq_class v = c.eval(q0);
    if (v != 0) out.emplace(e, v);
  }
  return out;
}

}  // namespace ctw
