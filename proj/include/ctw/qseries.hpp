#pragma once

#include "ctw/qpoly.hpp"

#include <span>

namespace ctw {

/// (q)_k = (1-q)(1-q^2)...(1-q^k); (q)_0 = 1.
QPoly qfac(int k);

/// 1 - q^e for e >= 0.
QPoly one_minus_q_pow(int e);

/// Gaussian binomial [m, n] = (q^{m-n+1})_n / (q)_n. Zero for 0 <= m < n.
/// Negative m with n > 0 has negative q-powers and is rejected.
QPoly qbinom(int m, int n);

/// (q)_{a_0+...+a_k} / ((q)_{a_0} ... (q)_{a_k}).
QPoly qmultinomial(std::span<const int> a);

/// Checks (u)_n == sum_k q^{k(k-1)/2} [n, k] (-u)^k as polynomials in u and q.
bool pochhammer_expand_identity_check(int n);

mpz_class factorial(unsigned long n);
mpz_class binomial(long n, long k);

}  // namespace ctw
