#include "ctw/verify.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <numeric>
#include <thread>

namespace ctw {

namespace {

std::size_t idx(int i) { return static_cast<std::size_t>(i); }

double elapsed_ms(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
}

void append_bg_part(ProductSpec& spec, std::span<const int> a_1n) {
  const int n = static_cast<int>(a_1n.size());
  for (int i = 1; i <= n; ++i) {
    for (int j = i + 1; j <= n; ++j) {
      spec.pochhammer(i, j, 0, a_1n[idx(i - 1)]);
      spec.pochhammer(j, i, 1, a_1n[idx(j - 1)] - 1);
    }
  }
}

/// x_num/x_den times x_hi/x_lo for every (lo, hi) listed as "lower index first".
Exponents prefactor_exps(int nvars, std::optional<Pair> lead, std::span<const Edge> flipped, bool numerator_is_second) {
  Exponents e(idx(nvars), 0);
  if (lead) {
    e[idx(lead->first)] += 1;
    e[idx(lead->second)] -= 1;
  }
  for (const auto& [i, j] : flipped) {
    const int num = numerator_is_second ? j : i;
    const int den = numerator_is_second ? i : j;
    e[idx(num)] += 1;
    e[idx(den)] -= 1;
  }
  return e;
}

}  // namespace

std::string_view verdict_name(Verdict v) {
  switch (v) {
    case Verdict::Match: return "MATCH";
    case Verdict::Mismatch: return "MISMATCH";
    case Verdict::Skipped: return "SKIPPED";
  }
  return "?";
}

ProductSpec lhs_spec(const IdentityInstance& inst) {
  if (auto why = inst.invalid_reason()) throw std::invalid_argument(*why);
  const int n = inst.n;
  switch (inst.theorem) {
    case Theorem::Dixon: throw std::invalid_argument("DIXON has no product form");
    case Theorem::Dyson: return dyson_classical_spec(inst.a);
    case Theorem::QDyson: return andrews_spec(inst.a);
    case Theorem::BG: {
      ProductSpec spec{n + 1, {}};
      spec.monomial(prefactor_exps(n + 1, std::nullopt, inst.q, true));
      append_bg_part(spec, inst.a);
      return spec;
    }
    case Theorem::Main1:
    case Theorem::Main2: {
      ProductSpec spec{n + 1, {}};
      const Pair lead{0, inst.theorem == Theorem::Main1 ? 1 : 2};
      spec.monomial(prefactor_exps(n + 1, lead, inst.q, true));
      const ProductSpec dn = dn_spec(inst.a);
      spec.factors.insert(spec.factors.end(), dn.factors.begin(), dn.factors.end());
      return spec;
    }
    case Theorem::CorI:
    case Theorem::CorII: {
      ProductSpec spec{n + 1, {}};
      const Pair lead{inst.sigma[0], inst.sigma[inst.theorem == Theorem::CorI ? 1 : 2]};
      // Inversion pairs (u, v) have u > v and contribute x_u / x_v.
      spec.monomial(prefactor_exps(n + 1, lead, inst.q, false));
      append_bg_part(spec, inst.a);
      return spec;
    }
    case Theorem::X1:
    case Theorem::X2: {
      ProductSpec spec{n + 1, {}};
      spec.monomial(prefactor_exps(n + 1, Pair{0, inst.theorem == Theorem::X1 ? 1 : 2}, {}, true));
      for (int j = 1; j <= n; ++j) spec.pochhammer(j, 0, 1, inst.a[idx(j - 1)] - 1);
      append_bg_part(spec, inst.a);
      return spec;
    }
  }
  throw std::logic_error("unhandled theorem");
}

VerificationReport verify_instance(const IdentityInstance& inst, std::uint64_t ceiling) {
  const auto start = std::chrono::steady_clock::now();
  VerificationReport report;
  report.instance = inst;
  if (auto why = inst.invalid_reason()) {
    report.reason = *why;
    report.timing_ms = elapsed_ms(start);
    return report;
  }

  if (auto ground = inst.ground()) {
    const Tournament t = e_bar(inst.qset());
    report.transitive = is_transitive(t);
    if (report.transitive) report.sigma = winner_permutation(t);
  } else if (inst.theorem == Theorem::CorI || inst.theorem == Theorem::CorII) {
    report.sigma = inst.sigma;
  }

  try {
    report.rhs = rhs(inst);
    if (inst.theorem == Theorem::Dixon) {
      report.lhs_ct = QPoly(dixon_lhs(inst.n));
    } else {
      report.lhs_ct = ct_all(build_product(lhs_spec(inst), ceiling));
    }
  } catch (const CeilingExceeded& e) {
    report.verdict = Verdict::Skipped;
    report.reason = e.what();
    report.timing_ms = elapsed_ms(start);
    return report;
  }

  if (report.lhs_ct * report.rhs.den() == report.rhs.num()) {
    report.verdict = Verdict::Match;
  } else {
    report.verdict = Verdict::Mismatch;
    report.reason = "lhs = " + report.lhs_ct.str() + "; rhs = " + report.rhs.str();
  }
  report.timing_ms = elapsed_ms(start);
  return report;
}

// --- sweeps -----------------------------------------------------------------

namespace {

int default_a_min(Theorem t) { return (t == Theorem::Dyson || t == Theorem::QDyson) ? 0 : 1; }

/// Calls fn on every vector in [lo, hi]^len in lexicographic order.
template <class Fn>
void for_each_vector(int len, int lo, int hi, Fn&& fn) {
  std::vector<int> v(idx(len), lo);
  if (len == 0) {
    fn(v);
    return;
  }
  if (hi < lo) return;
  while (true) {
    fn(v);
    int pos = len - 1;
    while (pos >= 0 && v[idx(pos)] == hi) v[idx(pos--)] = lo;
    if (pos < 0) return;
    ++v[idx(pos)];
  }
}

}  // namespace

void SweepSpec::validate() const {
  if (n_min < 0 || n_max < n_min) throw std::invalid_argument("sweep: bad n range");
  if (a_max < a_min.value_or(default_a_min(theorem))) throw std::invalid_argument("sweep: bad a range");
  if (a0_min < 0 || a0_max < a0_min) throw std::invalid_argument("sweep: bad a_0 range");
  if (jobs < 1) throw std::invalid_argument("sweep: jobs must be >= 1");
  if (ceiling < 1) throw std::invalid_argument("sweep: ceiling must be >= 1");
  if (q_policy == QPolicy::List && q_list.empty()) throw std::invalid_argument("sweep: LIST policy with no Q sets");
}

std::vector<IdentityInstance> enumerate_instances(const SweepSpec& spec) {
  spec.validate();
  std::vector<IdentityInstance> out;
  const Theorem th = spec.theorem;
  const int lo = spec.a_min.value_or(default_a_min(th));
  for (int n = spec.n_min; n <= spec.n_max; ++n) {
    if (th == Theorem::Dixon) {
      out.push_back(IdentityInstance::make(th, {}, {}, {}, n));
      continue;
    }
    const bool main = th == Theorem::Main1 || th == Theorem::Main2;
    const bool with_a0 = th == Theorem::Dyson || th == Theorem::QDyson;
    const int len = n + (with_a0 ? 1 : 0);

    std::vector<std::vector<int>> a_vectors;
    auto accept = [&](std::vector<int> a) {
      if (spec.sum_max && std::accumulate(a.begin(), a.end(), 0) > *spec.sum_max) return;
      a_vectors.push_back(std::move(a));
    };
    if (main) {
      for (int a0 = spec.a0_min; a0 <= spec.a0_max; ++a0) {
        for_each_vector(n, lo, spec.a_max, [&](const std::vector<int>& tail) {
          std::vector<int> a{a0};
          a.insert(a.end(), tail.begin(), tail.end());
          accept(std::move(a));
        });
      }
      std::sort(a_vectors.begin(), a_vectors.end());
    } else {
      for_each_vector(len, lo, spec.a_max, [&](const std::vector<int>& a) { accept(a); });
    }

    std::vector<std::vector<Edge>> q_choices{{}};
    if (auto ground = IdentityInstance::make(th, {}, {}, {}, n).ground()) {
      if (spec.q_policy == QPolicy::AllSubsets) {
        q_choices.clear();
        for (auto& q : all_qsets(n, *ground)) q_choices.push_back(std::move(q.pairs));
      } else if (spec.q_policy == QPolicy::List) {
        q_choices = spec.q_list;
        for (auto& q : q_choices) std::sort(q.begin(), q.end());
      }
    }

    for (const auto& a : a_vectors) {
      if (th == Theorem::CorI || th == Theorem::CorII) {
        Permutation sigma(idx(n));
        std::iota(sigma.begin(), sigma.end(), 1);
        do {
          out.push_back(IdentityInstance::make(th, a, {}, sigma, n));
        } while (std::next_permutation(sigma.begin(), sigma.end()));
        continue;
      }
      for (const auto& q : q_choices) out.push_back(IdentityInstance::make(th, a, q, {}, n));
    }
  }
  return out;
}

std::vector<VerificationReport> verify_all(const std::vector<IdentityInstance>& instances, int jobs,
                                           std::uint64_t ceiling) {
  std::vector<VerificationReport> reports(instances.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t k = next++; k < instances.size(); k = next++) reports[k] = verify_instance(instances[k], ceiling);
  };
  const int threads = std::max(1, std::min<int>(jobs, static_cast<int>(instances.size())));
  if (threads == 1) {
    worker();
    return reports;
  }
  std::vector<std::jthread> pool;
  for (int t = 0; t < threads; ++t) pool.emplace_back(worker);
  pool.clear();
  return reports;
}

SweepSummary summarize(const std::vector<VerificationReport>& reports) {
  SweepSummary s;
  s.total = reports.size();
  for (const auto& r : reports) {
    switch (r.verdict) {
      case Verdict::Match: ++s.match; break;
      case Verdict::Mismatch: ++s.mismatch; break;
      case Verdict::Skipped: ++s.skipped; break;
    }
  }
  return s;
}

SweepResult sweep(const SweepSpec& spec) {
  const auto start = std::chrono::steady_clock::now();
  SweepResult result;
  result.reports = verify_all(enumerate_instances(spec), spec.jobs, spec.ceiling);
  result.summary = summarize(result.reports);
  result.summary.elapsed_ms = elapsed_ms(start);
  return result;
}

// --- degree bound -----------------------------------------------------------

namespace {

/// Newton form through (xs[i], ys[i]); returns the value at x.
mpq_class newton_eval(const std::vector<mpq_class>& xs, const std::vector<mpq_class>& ys, const mpq_class& x) {
  std::vector<mpq_class> coef = ys;
  const std::size_t m = xs.size();
  for (std::size_t level = 1; level < m; ++level) {
    for (std::size_t i = m - 1; i >= level; --i) {
      coef[i] = (coef[i] - coef[i - 1]) / (xs[i] - xs[i - level]);
      coef[i].canonicalize();
      if (i == level) break;
    }
  }
  mpq_class acc(0);
  for (std::size_t i = m; i-- > 0;) {
    acc = acc * (x - xs[i]) + coef[i];
    acc.canonicalize();
  }
  return acc;
}

mpq_class q_pow_rational(const mpq_class& q0, int e) {
  mpq_class r(1);
  for (int i = 0; i < e; ++i) r *= q0;
  r.canonicalize();
  return r;
}

}  // namespace

DegreeBoundReport check_degree_bound(std::span<const int> a, int k, const mpq_class& q0, int extra_points,
                                     std::uint64_t ceiling) {
  const int n = static_cast<int>(a.size());
  if (n < 1) throw std::invalid_argument("degree bound: need n >= 1");
  for (int ai : a)
    if (ai < 1) throw std::invalid_argument("degree bound: a_j must be >= 1");
  if (k < 0) throw std::invalid_argument("degree bound: k must be >= 0");
  if (q0 == 0 || q0 == 1 || q0 == -1) throw std::invalid_argument("degree bound: q0 must not be 0 or +-1");
  if (extra_points < 1) throw std::invalid_argument("degree bound: need at least one check point");

  DegreeBoundReport rep;
  const int total = std::accumulate(a.begin(), a.end(), 0);
  rep.bound = total - k - n;
  const int fit = std::max(rep.bound + 1, 0);
  const int points = std::max(fit + extra_points, 3);

  Exponents pre(idx(n + 1), 0);
  pre[0] = k;
  for (int m = 0; m < k; ++m) pre[idx(1 + m % n)] -= 1;

  std::vector<mpq_class> ts;
  for (int a0 = 0; a0 < points; ++a0) {
    std::vector<int> full{a0};
    full.insert(full.end(), a.begin(), a.end());
    ProductSpec spec{n + 1, {}};
    spec.monomial(pre);
    const ProductSpec dn = dn_spec(full);
    spec.factors.insert(spec.factors.end(), dn.factors.begin(), dn.factors.end());
    rep.a0_points.push_back(a0);
    rep.values.push_back(ct_all(build_product(spec, ceiling)).eval(q0));
    ts.push_back(q_pow_rational(q0, a0));
  }

  rep.ok = true;
  if (fit == 0) {
    for (std::size_t i = 0; i < rep.values.size(); ++i) {
      if (rep.values[i] != 0) {
        rep.ok = false;
        rep.detail = "bound is negative but CT at a_0 = " + std::to_string(rep.a0_points[i]) + " is " +
                     rep.values[i].get_str();
        return rep;
      }
    }
    return rep;
  }
  const std::vector<mpq_class> xs(ts.begin(), ts.begin() + fit);
  const std::vector<mpq_class> ys(rep.values.begin(), rep.values.begin() + fit);
  for (std::size_t i = idx(fit); i < ts.size(); ++i) {
    const mpq_class predicted = newton_eval(xs, ys, ts[i]);
    if (predicted != rep.values[i]) {
      rep.ok = false;
      rep.detail = "interpolant of degree " + std::to_string(rep.bound) + " predicts " + predicted.get_str() +
                   " at a_0 = " + std::to_string(rep.a0_points[i]) + " but CT is " + rep.values[i].get_str();
      return rep;
    }
  }
  return rep;
}

// --- integer lemma ----------------------------------------------------------

bool import1_holds(std::span<const int> a, std::span<const int> k) {
  const std::size_t s = a.size();
  for (std::size_t i = 0; i < s; ++i)
    if (1 <= k[i] && k[i] <= a[i] - 1) return true;
  for (std::size_t i = 0; i < s; ++i)
    for (std::size_t j = i + 1; j < s; ++j) {
      const int d = k[i] - k[j];
      if (1 - a[j] <= d && d <= a[i] - 1) return true;
    }
  return false;
}

Import1Report check_lemma_import1(int s_max, int a_max, int a_min) {
  if (s_max < 1 || a_min < 0 || a_max < a_min) throw std::invalid_argument("import1: bad bounds");
  Import1Report rep;
  for (int s = 1; s <= s_max && rep.ok(); ++s) {
    for_each_vector(s, a_min, a_max, [&](const std::vector<int>& a) {
      if (!rep.ok()) return;
      const int top = std::accumulate(a.begin(), a.end(), 0) - 1;
      for_each_vector(s, 1, top, [&](const std::vector<int>& k) {
        if (!rep.ok()) return;
        ++rep.vectors_checked;
        if (!import1_holds(a, k)) {
          std::string msg = "a=(";
          for (std::size_t i = 0; i < a.size(); ++i) msg += (i ? "," : "") + std::to_string(a[i]);
          msg += ") k=(";
          for (std::size_t i = 0; i < k.size(); ++i) msg += (i ? "," : "") + std::to_string(k[i]);
          rep.counterexample = msg + ")";
        }
      });
    });
  }
  return rep;
}

// --- reflection -------------------------------------------------------------

LaurentPoly reflected_product(std::span<const int> a, std::span<const Edge> q) {
  const int nvars = static_cast<int>(a.size());
  ProductSpec spec{nvars, {}};
  spec.monomial(Exponents(idx(nvars), 0), q.size() % 2 == 0 ? 1 : -1);
  for (int i = 0; i < nvars; ++i) {
    for (int j = i + 1; j < nvars; ++j) {
      const bool flipped = std::find(q.begin(), q.end(), Edge{i, j}) != q.end();
      if (flipped) {
        spec.pochhammer(i, j, 1, a[idx(i)] - 1);
        spec.pochhammer(j, i, 0, a[idx(j)]);
      } else {
        spec.pochhammer(i, j, 0, a[idx(i)]);
        spec.pochhammer(j, i, 1, a[idx(j)] - 1);
      }
    }
  }
  return build_product(spec);
}

ReflectionReport check_reflection(int n, int a_bound) {
  if (n < 0 || a_bound < 1) throw std::invalid_argument("reflection: bad bounds");
  ReflectionReport rep;
  std::vector<Edge> e0;
  for (int i = 0; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j) e0.emplace_back(i, j);
  for_each_vector(n + 1, 1, a_bound, [&](const std::vector<int>& a) {
    const LaurentPoly dn = dn_product(a);
    for (std::uint32_t mask = 0; mask < (1U << e0.size()); ++mask) {
      std::vector<Edge> q;
      for (std::size_t b = 0; b < e0.size(); ++b)
        if ((mask >> b) & 1U) q.push_back(e0[b]);
      LaurentPoly lhs = dn;
      lhs.mul_monomial(prefactor_exps(n + 1, std::nullopt, q, true), QPoly(1));
      ++rep.cases;
      if (lhs != reflected_product(a, q)) {
        std::string msg = "a=(";
        for (std::size_t i = 0; i < a.size(); ++i) msg += (i ? "," : "") + std::to_string(a[i]);
        msg += ") Q={";
        for (std::size_t i = 0; i < q.size(); ++i)
          msg += (i ? "," : "") + std::string("(") + std::to_string(q[i].first) + "," +
                 std::to_string(q[i].second) + ")";
        rep.failures.push_back(msg + "}");
      }
    }
  });
  return rep;
}

// --- zero points ------------------------------------------------------------

ZeroPointReport check_zero_points(const IdentityInstance& inst) {
  ZeroPointReport rep;
  rep.points = rhs_zero_points(inst);
  const ParametricRhs p = parametric_rhs(inst);
  for (int b : rep.points.zeros) {
    const auto v = p.at(-b);
    if (v.pole) {
      rep.failures.push_back("b=" + std::to_string(b) + " listed as zero but is a pole");
    } else if (!v.value.is_zero()) {
      rep.failures.push_back("b=" + std::to_string(b) + " gives " + v.value.str());
    }
  }
  for (int b : rep.points.poles) {
    if (!p.at(-b).pole) rep.failures.push_back("b=" + std::to_string(b) + " listed as pole but denominator is nonzero");
  }
  return rep;
}

// --- tournaments ------------------------------------------------------------

TournamentCensus tournament_census(int n) {
  if (n < 0 || n > 8) throw std::invalid_argument("census: n must be in 0..8");
  TournamentCensus c;
  c.n = n;
  const int pairs = n * (n - 1) / 2;
  c.tournaments = std::uint64_t{1} << pairs;
  for (std::uint64_t code = 0; code < c.tournaments; ++code) {
    const Tournament t = Tournament::from_code(n, code);
    const auto dom = dominant_sets(t);
    if (is_transitive(t)) {
      ++c.transitive;
      bool shape_ok = static_cast<int>(dom.size()) == n;
      for (std::size_t i = 0; i < dom.size() && shape_ok; ++i)
        shape_ok = std::popcount(dom[i]) == static_cast<int>(i) + 1;
      if (!shape_ok) ++c.transitive_shape_violations;
    } else {
      ++c.nontransitive;
      if (static_cast<int>(dom.size()) > n - 2) ++c.dominant_bound_violations;
    }
  }
  return c;
}

FamilyBoundReport check_r1_bound(int n) {
  FamilyBoundReport rep;
  rep.n = n;
  for (const auto& q : all_qsets(n, Ground::FromTwo)) {
    ++rep.qsets;
    if (is_transitive(e_bar(q))) continue;
    ++rep.nontransitive;
    if (static_cast<int>(r1_family(q).size()) > n - 1) ++rep.violations;
  }
  return rep;
}

FamilyBoundReport check_r2_bound(int n) {
  FamilyBoundReport rep;
  rep.n = n;
  for (const auto& q : all_qsets(n, Ground::FromThree)) {
    ++rep.qsets;
    const R2Family fam = r2_family(q);
    if (!fam.consistent()) ++rep.inconsistent;
    if (is_transitive(e_bar(q))) continue;
    ++rep.nontransitive;
    if (static_cast<int>(fam.family.size()) > n - 1) ++rep.violations;
  }
  return rep;
}

}  // namespace ctw
