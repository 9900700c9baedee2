// Acceptance gate: every criterion at its stated bounds and time limit.
// Prints one PASS/FAIL line per criterion; exits nonzero if any fails.

#include "ctw/verify.hpp"

#include <chrono>
#include <cstdio>
#include <functional>
#include <string>
#include <thread>

using namespace ctw;

namespace {

using Vec = std::vector<int>;

struct Outcome {
  bool ok = true;
  std::string detail;
};

int jobs() { return static_cast<int>(std::max(1U, std::thread::hardware_concurrency())); }

Outcome all_match(const std::vector<VerificationReport>& reports) {
  const SweepSummary s = summarize(reports);
  Outcome out;
  out.ok = s.total > 0 && s.match == s.total;
  out.detail = std::to_string(s.match) + "/" + std::to_string(s.total) + " MATCH";
  if (s.mismatch) out.detail += ", " + std::to_string(s.mismatch) + " MISMATCH";
  if (s.skipped) out.detail += ", " + std::to_string(s.skipped) + " SKIPPED";
  for (const auto& r : reports) {
    if (r.verdict != Verdict::Match) {
      out.detail += "; first failure: " + r.reason;
      break;
    }
  }
  return out;
}

SweepSpec make_spec(Theorem t, int n_min, int n_max, int a_min, int a_max) {
  SweepSpec s;
  s.theorem = t;
  s.n_min = n_min;
  s.n_max = n_max;
  s.a_min = a_min;
  s.a_max = a_max;
  s.jobs = jobs();
  return s;
}

void append(std::vector<IdentityInstance>& into, const std::vector<IdentityInstance>& more) {
  into.insert(into.end(), more.begin(), more.end());
}

std::vector<IdentityInstance> main1_instances() {
  SweepSpec small = make_spec(Theorem::Main1, 2, 3, 1, 2);
  small.a0_max = 2;
  auto out = enumerate_instances(small);

  SweepSpec four = make_spec(Theorem::Main1, 4, 4, 1, 2);
  four.a0_max = 2;
  four.q_policy = QPolicy::List;
  // {(2,4)} and {(2,3),(3,4)} reverse into 3-cycles on {2,3,4}.
  four.q_list = {{}, {{2, 3}}, {{3, 4}}, {{2, 4}}, {{2, 3}, {3, 4}}};
  append(out, enumerate_instances(four));
  return out;
}

std::vector<IdentityInstance> main2_instances() {
  SweepSpec three = make_spec(Theorem::Main2, 3, 3, 1, 2);
  three.a0_max = 1;
  three.q_policy = QPolicy::EmptyOnly;
  auto out = enumerate_instances(three);

  SweepSpec four = make_spec(Theorem::Main2, 4, 4, 1, 2);
  four.a0_max = 1;
  four.q_policy = QPolicy::List;
  four.q_list = {{}, {{3, 4}}};
  append(out, enumerate_instances(four));
  return out;
}

Outcome criterion_dixon() {
  return all_match(sweep(make_spec(Theorem::Dixon, 0, 8, 0, 0)).reports);
}

Outcome criterion_dyson(Theorem t) {
  SweepSpec s = make_spec(t, 0, 2, 0, 6);
  s.sum_max = 6;
  const auto reports = sweep(s).reports;
  Outcome out = all_match(reports);
  if (t == Theorem::QDyson) {
    // q = 1 bridge to the classical multinomial.
    for (const auto& r : reports) {
      if (r.lhs_ct.eval(1) != dyson_rhs(r.instance.a)) {
        out.ok = false;
        out.detail += "; q=1 bridge failed";
        break;
      }
    }
  }
  return out;
}

Outcome criterion_bg() {
  const auto reports = sweep(make_spec(Theorem::BG, 2, 3, 1, 2)).reports;
  Outcome out = all_match(reports);
  std::size_t zero = 0;
  for (const auto& r : reports) {
    if (r.lhs_ct.is_zero() != !r.transitive) {
      out.ok = false;
      out.detail += "; zero value not tied to nontransitivity";
      break;
    }
    zero += r.lhs_ct.is_zero() ? 1 : 0;
  }
  out.detail += ", " + std::to_string(zero) + " zero (all nontransitive)";
  return out;
}

Outcome criterion_main(const std::vector<IdentityInstance>& instances) {
  const auto reports = verify_all(instances, jobs(), kDefaultTermCeiling);
  Outcome out = all_match(reports);
  std::size_t nontransitive = 0;
  for (const auto& r : reports) nontransitive += r.transitive ? 0 : 1;
  out.detail += ", " + std::to_string(nontransitive) + " nontransitive";
  return out;
}

Outcome criterion_corollaries() {
  std::vector<IdentityInstance> instances = enumerate_instances(make_spec(Theorem::CorI, 3, 3, 1, 2));
  append(instances, enumerate_instances(make_spec(Theorem::CorII, 4, 4, 1, 2)));
  return all_match(verify_all(instances, jobs(), kDefaultTermCeiling));
}

Outcome criterion_reflection() {
  Outcome out;
  std::uint64_t cases = 0;
  for (int n = 0; n <= 3; ++n) {
    const ReflectionReport rep = check_reflection(n, 2);
    cases += rep.cases;
    if (!rep.ok()) {
      out.ok = false;
      out.detail = "n=" + std::to_string(n) + ": " + rep.failures.front() + "; ";
    }
  }
  out.detail += std::to_string(cases) + " (a, Q) cases";
  return out;
}

Outcome criterion_dominant_bound() {
  Outcome out;
  std::uint64_t total = 0;
  for (int n = 1; n <= 6; ++n) {
    const TournamentCensus c = tournament_census(n);
    total += c.tournaments;
    if (c.dominant_bound_violations || c.transitive_shape_violations) {
      out.ok = false;
      out.detail += "n=" + std::to_string(n) + " violations; ";
    }
  }
  out.detail += std::to_string(total) + " tournaments";
  return out;
}

Outcome criterion_import1() {
  const Import1Report rep = check_lemma_import1(4, 3, 0);
  Outcome out{rep.ok(), std::to_string(rep.vectors_checked) + " (a, k) pairs"};
  if (!rep.ok()) out.detail += "; counterexample " + *rep.counterexample;
  return out;
}

Outcome criterion_degree_bound() {
  Outcome out;
  int checked = 0;
  for (int a1 = 1; a1 <= 3; ++a1)
    for (int a2 = 1; a2 <= 3; ++a2)
      for (int k = 0; k <= 2; ++k) {
        const DegreeBoundReport rep = check_degree_bound(Vec{a1, a2}, k, mpq_class(7, 5));
        ++checked;
        if (!rep.ok) {
          out.ok = false;
          out.detail += "a=(" + std::to_string(a1) + "," + std::to_string(a2) + ") k=" + std::to_string(k) + ": " +
                        rep.detail + "; ";
        }
      }
  out.detail += std::to_string(checked) + " (a, k) pairs";
  return out;
}

Outcome criterion_anchors() {
  std::vector<IdentityInstance> instances = enumerate_instances(make_spec(Theorem::X1, 3, 3, 1, 2));
  append(instances, enumerate_instances(make_spec(Theorem::X2, 3, 4, 1, 2)));
  return all_match(verify_all(instances, jobs(), kDefaultTermCeiling));
}

Outcome criterion_zero_points() {
  std::vector<IdentityInstance> instances = main1_instances();
  append(instances, main2_instances());
  Outcome out;
  std::size_t checked = 0, zeros = 0, poles = 0;
  for (const auto& inst : instances) {
    if (!is_transitive(e_bar(inst.qset()))) continue;
    const ZeroPointReport rep = check_zero_points(inst);
    ++checked;
    zeros += rep.points.zeros.size();
    poles += rep.points.poles.size();
    if (!rep.ok()) {
      out.ok = false;
      out.detail += rep.failures.front() + "; ";
    }
  }
  out.detail += std::to_string(checked) + " instances, " + std::to_string(zeros) + " zeros, " +
                std::to_string(poles) + " poles";
  return out;
}

struct Criterion {
  int id;
  const char* name;
  double limit_ms;
  std::function<Outcome()> run;
};

}  // namespace

int main() {
  const std::vector<Criterion> criteria{
      {1, "Dixon, 0 <= n <= 8", 1'000, criterion_dixon},
      {2, "Dyson, <= 3 variables, sum <= 6", 30'000, [] { return criterion_dyson(Theorem::Dyson); }},
      {3, "q-Dyson, <= 3 variables, sum <= 6", 60'000, [] { return criterion_dyson(Theorem::QDyson); }},
      {4, "BG product, n in {2,3}, all Q", 60'000, criterion_bg},
      {5, "MAIN1, n in {2,3} all Q1; n = 4 Q1 list", 300'000, [] { return criterion_main(main1_instances()); }},
      {6, "MAIN2, n = 3 and n = 4", 600'000, [] { return criterion_main(main2_instances()); }},
      {7, "Inversion-set corollaries, n = 3 and n = 4", 600'000, criterion_corollaries},
      {8, "Reflection identity, n <= 3", 60'000, criterion_reflection},
      {9, "Dominant-set bound, n <= 6", 60'000, criterion_dominant_bound},
      {10, "Integer lemma, s <= 4, a_i <= 3", 30'000, criterion_import1},
      {11, "Degree bound, n = 2, q0 = 7/5", 60'000, criterion_degree_bound},
      {12, "Anchor values X1 (n = 3), X2 (n = 3, 4)", 120'000, criterion_anchors},
      {13, "Zero points of transitive MAIN instances", 30'000, criterion_zero_points},
  };

  int failures = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome outcome;
    try {
      outcome = c.run();
    } catch (const std::exception& e) {
      outcome = {false, std::string("exception: ") + e.what()};
    }
    const double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    const bool in_time = ms <= c.limit_ms;
    const bool pass = outcome.ok && in_time;
    if (!pass) ++failures;
    std::printf("[%s] %2d %-45s %10.1f ms (limit %.0f ms)  %s%s\n", pass ? "PASS" : "FAIL", c.id, c.name, ms,
                c.limit_ms, outcome.detail.c_str(), in_time ? "" : "  TIME LIMIT EXCEEDED");
    std::fflush(stdout);
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failures, criteria.size());
  return failures == 0 ? 0 : 1;
}
