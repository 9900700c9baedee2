#include "ctw/identities.hpp"

#include "ctw/qseries.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <set>
#include <stdexcept>

namespace ctw {

namespace {

struct NamedTheorem {
  Theorem theorem;
  std::string_view name;
};

constexpr NamedTheorem kTheoremNames[] = {
    {Theorem::Dixon, "DIXON"}, {Theorem::Dyson, "DYSON"}, {Theorem::QDyson, "QDYSON"},
    {Theorem::BG, "BG"},       {Theorem::Main1, "MAIN1"}, {Theorem::Main2, "MAIN2"},
    {Theorem::CorI, "COR_I"},  {Theorem::CorII, "COR_II"}, {Theorem::X1, "X1"},
    {Theorem::X2, "X2"},
};

bool uses_a0(Theorem t) {
  return t == Theorem::Dyson || t == Theorem::QDyson || t == Theorem::Main1 || t == Theorem::Main2;
}

std::size_t idx(int i) { return static_cast<std::size_t>(i); }

QPoly q_pow_diff(int e1, int e2) { return QPoly::q_power(e1) - QPoly::q_power(e2); }

int sum_of(std::span<const int> a) { return std::accumulate(a.begin(), a.end(), 0); }

/// a-values in winner order: ranked[k-1] = a_{sigma(k)} where `at(v)` = a_v.
template <class At>
std::vector<int> ranked_values(const Permutation& sigma, At at) {
  std::vector<int> out;
  out.reserve(sigma.size());
  for (int v : sigma) out.push_back(at(v));
  return out;
}

QRat signed_by(std::size_t count, QRat value) { return count % 2 == 0 ? value : -value; }

/// 1 - q^s for any integer s as a ratio of polynomials.
QRat one_minus_q_pow_any(int s) {
  if (s >= 0) return QRat(one_minus_q_pow(s));
  return QRat(QPoly::q_power(-s) - QPoly(1), QPoly::q_power(-s));
}

}  // namespace

std::string_view theorem_name(Theorem t) {
  for (const auto& entry : kTheoremNames)
    if (entry.theorem == t) return entry.name;
  return "?";
}

std::optional<Theorem> parse_theorem(std::string_view name) {
  std::string upper;
  for (char c : name) upper.push_back(static_cast<char>(std::toupper(static_cast<unsigned char>(c))));
  if (upper == "COR1" || upper == "CORI") return Theorem::CorI;
  if (upper == "COR2" || upper == "CORII") return Theorem::CorII;
  for (const auto& entry : kTheoremNames)
    if (entry.name == upper) return entry.theorem;
  return std::nullopt;
}

IdentityInstance IdentityInstance::make(Theorem theorem, std::vector<int> a, std::vector<Edge> q,
                                        Permutation sigma, std::optional<int> n) {
  IdentityInstance inst;
  inst.theorem = theorem;
  if (n) {
    inst.n = *n;
  } else if (theorem == Theorem::Dixon) {
    inst.n = 0;
  } else {
    inst.n = static_cast<int>(a.size()) - (uses_a0(theorem) ? 1 : 0);
  }
  inst.a = std::move(a);
  inst.sigma = std::move(sigma);
  if ((theorem == Theorem::CorI || theorem == Theorem::CorII) && q.empty() &&
      is_permutation_of_1_to_n(inst.sigma)) {
    q = inversion_set(inst.sigma);
  }
  std::sort(q.begin(), q.end());
  inst.q = std::move(q);
  return inst;
}

std::optional<Ground> IdentityInstance::ground() const {
  switch (theorem) {
    case Theorem::BG: return Ground::E;
    case Theorem::Main1: return Ground::FromTwo;
    case Theorem::Main2: return Ground::FromThree;
    default: return std::nullopt;
  }
}

QSet IdentityInstance::qset() const {
  QSet s{n, ground().value_or(Ground::E), q};
  s.normalize();
  return s;
}

std::optional<std::string> IdentityInstance::invalid_reason() const {
  const std::string name(theorem_name(theorem));
  const int expected_len = theorem == Theorem::Dixon ? 0 : n + (uses_a0(theorem) ? 1 : 0);
  if (n < 0) return name + ": n must be nonnegative";
  if (static_cast<int>(a.size()) != expected_len) {
    return name + ": expected " + std::to_string(expected_len) + " exponents for n = " + std::to_string(n) +
           ", got " + std::to_string(a.size());
  }
  const int min_n = [this] {
    switch (theorem) {
      case Theorem::Dixon: return 0;
      case Theorem::Dyson:
      case Theorem::QDyson: return 0;
      case Theorem::BG: return 1;
      case Theorem::Main1:
      case Theorem::X1: return 2;
      case Theorem::Main2:
      case Theorem::CorI:
      case Theorem::X2: return 3;
      case Theorem::CorII: return 4;
    }
    return 0;
  }();
  if (n < min_n) return name + ": needs n >= " + std::to_string(min_n);
  if (n > kMaxVertices) return name + ": n too large";

  for (std::size_t i = 0; i < a.size(); ++i) {
    const bool zero_ok = theorem == Theorem::Dyson || theorem == Theorem::QDyson ||
                         ((theorem == Theorem::Main1 || theorem == Theorem::Main2) && i == 0);
    if (a[i] < 0 || (!zero_ok && a[i] < 1)) {
      return name + ": exponent at position " + std::to_string(i) + " is " + std::to_string(a[i]) +
             (zero_ok ? " (must be >= 0)" : " (must be >= 1)");
    }
  }

  const bool takes_q = ground().has_value();
  const bool takes_sigma = theorem == Theorem::CorI || theorem == Theorem::CorII;
  if (!takes_sigma && !sigma.empty()) return name + ": does not take a permutation";
  if (takes_sigma) {
    if (static_cast<int>(sigma.size()) != n || !is_permutation_of_1_to_n(sigma)) {
      return name + ": sigma must be a permutation of 1.." + std::to_string(n);
    }
    if (q != inversion_set(sigma)) return name + ": Q must be the inversion set of sigma";
    return std::nullopt;
  }
  if (!takes_q && !q.empty()) return name + ": does not take a Q set";
  if (takes_q) {
    try {
      (void)qset();
    } catch (const std::invalid_argument& e) {
      return name + ": " + e.what();
    }
  }
  return std::nullopt;
}

mpz_class dixon_lhs(int n) {
  if (n < 0) throw std::domain_error("dixon: negative n");
  mpz_class total(0);
  for (int k = -n; k <= n; ++k) {
    mpz_class c = binomial(2 * n, k + n);
    mpz_class cube = c * c * c;
    if (k % 2 == 0) {
      total += cube;
    } else {
      total -= cube;
    }
  }
  return total;
}

mpz_class dixon_rhs(int n) {
  if (n < 0) throw std::domain_error("dixon: negative n");
  mpz_class f = factorial(static_cast<unsigned long>(n));
  return factorial(static_cast<unsigned long>(3 * n)) / (f * f * f);
}

mpz_class dyson_rhs(std::span<const int> a) {
  mpz_class den(1);
  for (int ai : a) {
    if (ai < 0) throw std::domain_error("dyson: negative exponent");
    den *= factorial(static_cast<unsigned long>(ai));
  }
  return factorial(static_cast<unsigned long>(sum_of(a))) / den;
}

QPoly qdyson_rhs(std::span<const int> a) { return qmultinomial(a); }

QRat winner_product(std::span<const int> parts, const Permutation& sigma, int a0) {
  if (sigma.size() != parts.size()) throw std::invalid_argument("winner_product: sigma length mismatch");
  QPoly den(qfac(a0));
  for (int ai : parts) den *= qfac(ai);
  QRat value(qfac(a0 + sum_of(parts)), den);
  int partial = 0;
  for (int v : sigma) {
    const int av = parts[idx(v - 1)];
    partial += av;
    value *= QRat(one_minus_q_pow(av), one_minus_q_pow(a0 + partial));
  }
  return value;
}

QRat bg_rhs(std::span<const int> a, const QSet& q) {
  QSet qs = q;
  qs.ground = Ground::E;
  qs.normalize();
  if (qs.n != static_cast<int>(a.size())) throw std::invalid_argument("bg_rhs: Q built for a different n");
  const Tournament t = e_bar(qs);
  if (!is_transitive(t)) return QRat();
  return signed_by(qs.pairs.size(), winner_product(a, winner_permutation(t)));
}

QRat main1_rhs(std::span<const int> a, const QSet& q1) {
  const int n = static_cast<int>(a.size()) - 1;
  QSet qs = q1;
  qs.ground = Ground::FromTwo;
  qs.normalize();
  if (n < 2 || qs.n != n) throw std::invalid_argument("main1_rhs: needs n >= 2 and matching Q");
  const Tournament t = e_bar(qs);
  if (!is_transitive(t)) return QRat();
  const Permutation sigma = winner_permutation(t);
  const auto r = ranked_values(sigma, [&a](int v) { return a[idx(v)]; });
  QRat lead(q_pow_diff(r[0], r[1]), one_minus_q_pow(a[0] + r[1]));
  return signed_by(qs.pairs.size(), lead * winner_product(a.subspan(1), sigma, a[0]));
}

QRat main2_rhs(std::span<const int> a, const QSet& q2) {
  const int n = static_cast<int>(a.size()) - 1;
  QSet qs = q2;
  qs.ground = Ground::FromThree;
  qs.normalize();
  if (n < 3 || qs.n != n) throw std::invalid_argument("main2_rhs: needs n >= 3 and matching Q");
  const Tournament t = e_bar(qs);
  if (!is_transitive(t)) return QRat();
  const Permutation sigma = winner_permutation(t);
  const auto r = ranked_values(sigma, [&a](int v) { return a[idx(v)]; });
  QRat lead((QPoly(1) + QPoly::q_power(r[0])) * q_pow_diff(r[1], r[2]), one_minus_q_pow(a[0] + r[0] + r[2]));
  return signed_by(qs.pairs.size(), lead * winner_product(a.subspan(1), sigma, a[0]));
}

QRat cor_i_rhs(std::span<const int> a, const Permutation& sigma) {
  if (a.size() < 3) throw std::invalid_argument("cor_i_rhs: needs n >= 3");
  const auto r = ranked_values(sigma, [&a](int v) { return a[idx(v - 1)]; });
  QRat lead(q_pow_diff(r[1], r[2]), one_minus_q_pow(r[0] + r[2]));
  return signed_by(inversion_set(sigma).size(), lead * winner_product(a, sigma));
}

QRat cor_ii_rhs(std::span<const int> a, const Permutation& sigma) {
  if (a.size() < 4) throw std::invalid_argument("cor_ii_rhs: needs n >= 4");
  const auto r = ranked_values(sigma, [&a](int v) { return a[idx(v - 1)]; });
  QRat lead((QPoly(1) + QPoly::q_power(r[1])) * q_pow_diff(r[2], r[3]), one_minus_q_pow(r[0] + r[1] + r[3]));
  return signed_by(inversion_set(sigma).size(), lead * winner_product(a, sigma));
}

namespace {

Permutation identity_perm(std::size_t n) {
  Permutation p(n);
  std::iota(p.begin(), p.end(), 1);
  return p;
}

}  // namespace

QRat x1_rhs(std::span<const int> a) {
  if (a.size() < 2) throw std::invalid_argument("x1_rhs: needs n >= 2");
  QRat lead(q_pow_diff(a[0], a[1]), one_minus_q_pow(a[1]));
  return lead * winner_product(a, identity_perm(a.size()));
}

QRat x2_rhs(std::span<const int> a) {
  if (a.size() < 3) throw std::invalid_argument("x2_rhs: needs n >= 3");
  QRat lead((QPoly(1) + QPoly::q_power(a[0])) * q_pow_diff(a[1], a[2]), one_minus_q_pow(a[0] + a[2]));
  return lead * winner_product(a, identity_perm(a.size()));
}

QRat rhs(const IdentityInstance& inst) {
  if (auto why = inst.invalid_reason()) throw std::invalid_argument(*why);
  switch (inst.theorem) {
    case Theorem::Dixon: return QRat(QPoly(dixon_rhs(inst.n)));
    case Theorem::Dyson: return QRat(QPoly(dyson_rhs(inst.a)));
    case Theorem::QDyson: return QRat(qdyson_rhs(inst.a));
    case Theorem::BG: return bg_rhs(inst.a, inst.qset());
    case Theorem::Main1: return main1_rhs(inst.a, inst.qset());
    case Theorem::Main2: return main2_rhs(inst.a, inst.qset());
    case Theorem::CorI: return cor_i_rhs(inst.a, inst.sigma);
    case Theorem::CorII: return cor_ii_rhs(inst.a, inst.sigma);
    case Theorem::X1: return x1_rhs(inst.a);
    case Theorem::X2: return x2_rhs(inst.a);
  }
  throw std::logic_error("unhandled theorem");
}

ParametricRhs::Value ParametricRhs::at(int a0) const {
  Value out{constant, false};
  for (int e : den_shifts) {
    if (a0 + e == 0) {
      out.pole = true;
      out.value = QRat();
      return out;
    }
    out.value /= one_minus_q_pow_any(a0 + e);
  }
  for (int e : num_shifts) out.value *= one_minus_q_pow_any(a0 + e);
  return out;
}

namespace {

struct TransitiveMainData {
  Permutation sigma;
  std::vector<int> ranked;
  std::vector<int> partial;
  int distinguished_pole = 0;
};

TransitiveMainData main_data(const IdentityInstance& inst) {
  if (inst.theorem != Theorem::Main1 && inst.theorem != Theorem::Main2) {
    throw std::invalid_argument("zero points are defined for MAIN1/MAIN2 only");
  }
  if (auto why = inst.invalid_reason()) throw std::invalid_argument(*why);
  const Tournament t = e_bar(inst.qset());
  if (!is_transitive(t)) throw std::invalid_argument("zero points need a transitive instance");
  TransitiveMainData d;
  d.sigma = winner_permutation(t);
  d.ranked = ranked_values(d.sigma, [&inst](int v) { return inst.a[idx(v)]; });
  int acc = 0;
  for (int r : d.ranked) d.partial.push_back(acc += r);
  d.distinguished_pole = inst.theorem == Theorem::Main1 ? d.ranked[1] : d.ranked[0] + d.ranked[2];
  return d;
}

}  // namespace

ParametricRhs parametric_rhs(const IdentityInstance& inst) {
  const TransitiveMainData d = main_data(inst);
  const std::span<const int> parts(inst.a.data() + 1, inst.a.size() - 1);
  QPoly num = inst.theorem == Theorem::Main1
                  ? q_pow_diff(d.ranked[0], d.ranked[1])
                  : (QPoly(1) + QPoly::q_power(d.ranked[0])) * q_pow_diff(d.ranked[1], d.ranked[2]);
  QPoly den(1);
  for (int ai : parts) {
    den *= qfac(ai);
    num *= one_minus_q_pow(ai);
  }
  ParametricRhs p;
  p.constant = signed_by(inst.q.size(), QRat(num, den));
  for (int m = 1; m <= sum_of(parts); ++m) p.num_shifts.push_back(m);
  p.den_shifts.push_back(d.distinguished_pole);
  p.den_shifts.insert(p.den_shifts.end(), d.partial.begin(), d.partial.end());
  return p;
}

ZeroPoints rhs_zero_points(const IdentityInstance& inst) {
  const TransitiveMainData d = main_data(inst);
  std::set<int> poles(d.partial.begin(), d.partial.end());
  poles.insert(d.distinguished_pole);
  ZeroPoints z;
  z.poles.assign(poles.begin(), poles.end());
  for (int b = 1; b <= d.partial.back(); ++b)
    if (!poles.count(b)) z.zeros.push_back(b);
  return z;
}

}  // namespace ctw
