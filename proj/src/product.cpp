#include "ctw/product.hpp"

#include <algorithm>
#include <limits>
#include <string>

namespace ctw {

ProductSpec& ProductSpec::monomial(Exponents exps, int sign, int qshift) {
  factors.emplace_back(MonomialFactor{sign, std::move(exps), qshift});
  return *this;
}

ProductSpec& ProductSpec::pochhammer(int i, int j, int qshift, int order) {
  factors.emplace_back(PochhammerFactor{i, j, qshift, order});
  return *this;
}

void ProductSpec::validate() const {
  if (nvars < 1) throw std::invalid_argument("product spec needs at least one variable");
  for (size_t k = 0; k < factors.size(); ++k) {
    const std::string where = "factor " + std::to_string(k) + ": ";
    if (const auto* m = std::get_if<MonomialFactor>(&factors[k])) {
      if (m->sign != 1 && m->sign != -1) throw std::invalid_argument(where + "sign must be +1 or -1");
      if (static_cast<int>(m->exps.size()) != nvars) throw std::invalid_argument(where + "exponent arity");
      if (m->qshift < 0) throw std::invalid_argument(where + "negative q shift");
    } else {
      const auto& p = std::get<PochhammerFactor>(factors[k]);
      if (p.i < 0 || p.i >= nvars || p.j < 0 || p.j >= nvars || p.i == p.j) {
        throw std::invalid_argument(where + "bad variable pair");
      }
      if (p.order < 0) throw std::invalid_argument(where + "negative order");
      if (p.qshift < 0) throw std::invalid_argument(where + "negative q shift");
    }
  }
}

std::uint64_t estimate_terms(const ProductSpec& spec) {
  spec.validate();
  std::vector<int> lo(static_cast<size_t>(spec.nvars), 0);
  std::vector<int> hi(static_cast<size_t>(spec.nvars), 0);
  for (const auto& f : spec.factors) {
    if (const auto* p = std::get_if<PochhammerFactor>(&f)) {
      hi[static_cast<size_t>(p->i)] += p->order;
      lo[static_cast<size_t>(p->j)] -= p->order;
    }
  }
  // counts[s - offset] = number of prefixes with coordinate sum s.
  int offset = 0;
  std::vector<mpz_class> counts{mpz_class(1)};
  for (size_t v = 0; v < lo.size(); ++v) {
    const int width = hi[v] - lo[v];
    std::vector<mpz_class> next(counts.size() + static_cast<size_t>(width));
    for (size_t s = 0; s < counts.size(); ++s) {
      if (counts[s] == 0) continue;
      for (int d = 0; d <= width; ++d) next[s + static_cast<size_t>(d)] += counts[s];
    }
    offset += lo[v];
    counts = std::move(next);
  }
  const mpz_class& zero_sum = (-offset >= 0 && static_cast<size_t>(-offset) < counts.size())
                                  ? counts[static_cast<size_t>(-offset)]
                                  : mpz_class(0);
  if (zero_sum > mpz_class(std::to_string(std::numeric_limits<std::uint64_t>::max()))) {
    return std::numeric_limits<std::uint64_t>::max();
  }
  return std::stoull(zero_sum.get_str());
}

LaurentPoly build_product(const ProductSpec& spec, std::uint64_t ceiling) {
  spec.validate();
  const std::uint64_t estimate = estimate_terms(spec);
  if (estimate > ceiling) {
    throw CeilingExceeded("estimated " + std::to_string(estimate) + " terms exceeds ceiling " +
                          std::to_string(ceiling));
  }
  LaurentPoly f = LaurentPoly::constant(spec.nvars, QPoly(1));
  Exponents step(static_cast<size_t>(spec.nvars), 0);
  for (const auto& factor : spec.factors) {
    if (const auto* m = std::get_if<MonomialFactor>(&factor)) {
      f.mul_monomial(m->exps, QPoly::monomial(m->sign, m->qshift));
      continue;
    }
    const auto& p = std::get<PochhammerFactor>(factor);
    std::fill(step.begin(), step.end(), 0);
    step[static_cast<size_t>(p.i)] = 1;
    step[static_cast<size_t>(p.j)] = -1;
    for (int t = 0; t < p.order; ++t) {
      f.mul_binomial(step, -1, p.qshift + t);
      if (f.size() > ceiling) throw CeilingExceeded("intermediate product exceeds ceiling");
    }
  }
  return f;
}

namespace {

int count_vars(std::span<const int> a) { return static_cast<int>(a.size()); }

}  // namespace

ProductSpec dyson_classical_spec(std::span<const int> a) {
  ProductSpec spec{count_vars(a), {}};
  for (int i = 0; i < spec.nvars; ++i) {
    if (a[static_cast<size_t>(i)] < 0) throw std::domain_error("Dyson exponents must be nonnegative");
    for (int j = 0; j < spec.nvars; ++j) {
      if (i == j) continue;
      for (int r = 0; r < a[static_cast<size_t>(i)]; ++r) spec.pochhammer(i, j, 0, 1);
    }
  }
  return spec;
}

ProductSpec andrews_spec(std::span<const int> a) {
  ProductSpec spec{count_vars(a), {}};
  for (int ai : a)
    if (ai < 0) throw std::domain_error("q-Dyson exponents must be nonnegative");
  for (int i = 0; i < spec.nvars; ++i) {
    for (int j = i + 1; j < spec.nvars; ++j) {
      spec.pochhammer(i, j, 0, a[static_cast<size_t>(i)]);
      spec.pochhammer(j, i, 1, a[static_cast<size_t>(j)]);
    }
  }
  return spec;
}

ProductSpec dn_spec(std::span<const int> a) {
  ProductSpec spec{count_vars(a), {}};
  if (a.empty()) throw std::invalid_argument("D_n needs at least a_0");
  if (a[0] < 0) throw std::domain_error("D_n needs a_0 >= 0");
  for (size_t j = 1; j < a.size(); ++j) {
    if (a[j] < 1) throw std::domain_error("D_n needs a_j >= 1 for j >= 1 (a_" + std::to_string(j) + " = " +
                                          std::to_string(a[j]) + ")");
  }
  for (int i = 0; i < spec.nvars; ++i) {
    for (int j = i + 1; j < spec.nvars; ++j) {
      spec.pochhammer(i, j, 0, a[static_cast<size_t>(i)]);
      spec.pochhammer(j, i, 1, a[static_cast<size_t>(j)] - 1);
    }
  }
  return spec;
}

ProductSpec bg_spec(std::span<const int> a) {
  const int n = count_vars(a);
  ProductSpec spec{n + 1, {}};
  for (int ai : a)
    if (ai < 1) throw std::domain_error("exponents must be >= 1");
  for (int i = 1; i <= n; ++i) {
    for (int j = i + 1; j <= n; ++j) {
      spec.pochhammer(i, j, 0, a[static_cast<size_t>(i - 1)]);
      spec.pochhammer(j, i, 1, a[static_cast<size_t>(j - 1)] - 1);
    }
  }
  return spec;
}

LaurentPoly dyson_product_classical(std::span<const int> a, std::uint64_t ceiling) {
  return build_product(dyson_classical_spec(a), ceiling);
}

LaurentPoly andrews_product(std::span<const int> a, std::uint64_t ceiling) {
  return build_product(andrews_spec(a), ceiling);
}

LaurentPoly dn_product(std::span<const int> a, std::uint64_t ceiling) { return build_product(dn_spec(a), ceiling); }

LaurentPoly monomial_prefactor(int nvars, std::span<const Pair> pairs, std::optional<Pair> extra) {
  Exponents e(static_cast<size_t>(nvars), 0);
  auto in_range = [nvars](int v) { return v >= 0 && v < nvars; };
  for (const auto& [i, j] : pairs) {
    if (!in_range(i) || !in_range(j)) throw std::out_of_range("prefactor pair out of variable range");
    e[static_cast<size_t>(j)] += 1;
    e[static_cast<size_t>(i)] -= 1;
  }
  if (extra) {
    auto [num, den] = *extra;
    if (!in_range(num) || !in_range(den)) throw std::out_of_range("prefactor pair out of variable range");
    e[static_cast<size_t>(num)] += 1;
    e[static_cast<size_t>(den)] -= 1;
  }
  return LaurentPoly::monomial(e);
}

}  // namespace ctw
