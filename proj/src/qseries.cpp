#include "ctw/qseries.hpp"

#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

namespace ctw {

QPoly one_minus_q_pow(int e) { return QPoly(1) - QPoly::q_power(e); }

QPoly qfac(int k) {
  if (k < 0) throw std::domain_error("qfac: negative order " + std::to_string(k));
  QPoly p(1);
  for (int i = 1; i <= k; ++i) p *= one_minus_q_pow(i);
  return p;
}

QPoly qbinom(int m, int n) {
  if (n < 0) throw std::domain_error("qbinom: negative lower index");
  if (n == 0) return QPoly(1);
  if (m < 0) throw std::domain_error("qbinom: negative upper index " + std::to_string(m) + " is not a polynomial");
  if (m < n) return QPoly();
  QPoly top(1);
  for (int e = m - n + 1; e <= m; ++e) top *= one_minus_q_pow(e);
  auto quotient = top.divide_exact(qfac(n));
  if (!quotient) {
    throw std::logic_error("qbinom(" + std::to_string(m) + "," + std::to_string(n) + "): inexact division");
  }
  return *quotient;
}

QPoly qmultinomial(std::span<const int> a) {
  QPoly result(1);
  int total = 0;
  for (int ai : a) {
    if (ai < 0) throw std::domain_error("qmultinomial: negative part");
    total += ai;
    result *= qbinom(total, ai);
  }
  return result;
}

bool pochhammer_expand_identity_check(int n) {
  if (n < 0) throw std::domain_error("pochhammer_expand_identity_check: negative n");
  // Bivariate polynomials as vectors indexed by the power of u.
  std::vector<QPoly> lhs{QPoly(1)};
  for (int t = 0; t < n; ++t) {
    std::vector<QPoly> next(lhs.size() + 1);
    for (size_t k = 0; k < lhs.size(); ++k) {
      next[k] += lhs[k];
      next[k + 1] -= lhs[k].shifted(t);
    }
    lhs = std::move(next);
  }
  std::vector<QPoly> rhs(static_cast<size_t>(n) + 1);
  for (int k = 0; k <= n; ++k) {
    QPoly term = qbinom(n, k).shifted(k * (k - 1) / 2);
    rhs[static_cast<size_t>(k)] = (k % 2 == 0) ? term : -term;
  }
  return lhs == rhs;
}

mpz_class factorial(unsigned long n) {
  mpz_class r;
  mpz_fac_ui(r.get_mpz_t(), n);
  return r;
}

mpz_class binomial(long n, long k) {
  if (k < 0 || n < 0 || k > n) return 0;
  mpz_class r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return r;
}

}  // namespace ctw
