#include "ctw/verify.hpp"
#include "oracle.hpp"

#include <gtest/gtest.h>

using namespace ctw;

namespace {

using Vec = std::vector<int>;

SweepSpec spec_for(Theorem t, int n_min, int n_max, int a_max) {
  SweepSpec s;
  s.theorem = t;
  s.n_min = n_min;
  s.n_max = n_max;
  s.a_max = a_max;
  return s;
}

}  // namespace

TEST(Verify, QDysonSmall) {
  const auto r = verify_instance(IdentityInstance::make(Theorem::QDyson, {1, 1}));
  EXPECT_EQ(r.verdict, Verdict::Match);
  EXPECT_EQ(r.lhs_ct.str(), "1 + q");
}

TEST(Verify, CyclicBgIsZeroOnBothSides) {
  const auto r = verify_instance(IdentityInstance::make(Theorem::BG, {1, 1, 1}, {{1, 3}}));
  EXPECT_EQ(r.verdict, Verdict::Match);
  EXPECT_TRUE(r.lhs_ct.is_zero());
  EXPECT_TRUE(r.rhs.is_zero());
  EXPECT_FALSE(r.transitive);
  EXPECT_FALSE(r.sigma.has_value());
}

TEST(Verify, Main1EqualLeadersVanish) {
  const auto r = verify_instance(IdentityInstance::make(Theorem::Main1, {1, 1, 1}));
  EXPECT_EQ(r.verdict, Verdict::Match);
  EXPECT_TRUE(r.lhs_ct.is_zero());
  EXPECT_EQ(r.sigma, (Permutation{1, 2}));
}

TEST(Verify, InvalidInstanceIsSkipped) {
  const auto r = verify_instance(IdentityInstance::make(Theorem::Main1, {0, 0, 1}));
  EXPECT_EQ(r.verdict, Verdict::Skipped);
  EXPECT_FALSE(r.reason.empty());
}

TEST(Verify, CeilingSkips) {
  const auto r = verify_instance(IdentityInstance::make(Theorem::BG, {2, 2, 2}), 10);
  EXPECT_EQ(r.verdict, Verdict::Skipped);
  EXPECT_NE(r.reason.find("ceiling"), std::string::npos);
}

TEST(Verify, DixonUsesIntegers) {
  const auto r = verify_instance(IdentityInstance::make(Theorem::Dixon, {}, {}, {}, 3));
  EXPECT_EQ(r.verdict, Verdict::Match);
  EXPECT_EQ(r.lhs_ct.str(), "1680");
}

TEST(Verify, LhsSpecMatchesOracleExpansion) {
  const auto inst = IdentityInstance::make(Theorem::Main1, {1, 2, 1, 2}, {{2, 3}});
  const LaurentPoly built = build_product(lhs_spec(inst));
  oracle::Poly p = oracle::times_monomial(oracle::dn({1, 2, 1, 2}), {1, -1, -1, 1});
  LaurentPoly expected(4);
  for (const auto& [e, s] : p) expected.add_term(e, oracle::to_qpoly(s));
  EXPECT_EQ(built, expected);
  EXPECT_THROW(lhs_spec(IdentityInstance::make(Theorem::Dixon, {}, {}, {}, 2)), std::invalid_argument);
}

TEST(Verify, SweepOrderIsDeterministic) {
  SweepSpec s = spec_for(Theorem::BG, 2, 3, 2);
  const auto inst = enumerate_instances(s);
  EXPECT_EQ(inst.size(), 2u * 4u + 8u * 8u);
  EXPECT_EQ(inst.front().a, (Vec{1, 1}));
  EXPECT_TRUE(inst.front().q.empty());
  EXPECT_EQ(inst[1].q, (std::vector<Edge>{{1, 2}}));
  EXPECT_EQ(enumerate_instances(s), inst);

  s.jobs = 3;
  const auto threaded = sweep(s);
  s.jobs = 1;
  const auto serial = sweep(s);
  ASSERT_EQ(threaded.reports.size(), serial.reports.size());
  for (std::size_t k = 0; k < serial.reports.size(); ++k) {
    EXPECT_EQ(threaded.reports[k].instance, serial.reports[k].instance);
    EXPECT_EQ(threaded.reports[k].lhs_ct, serial.reports[k].lhs_ct);
  }
}

TEST(Verify, QDysonSweepAllMatch) {
  const auto res = sweep(spec_for(Theorem::QDyson, 1, 2, 2));
  EXPECT_EQ(res.summary.total, 9u + 27u);
  EXPECT_EQ(res.summary.match, res.summary.total);
}

TEST(Verify, BgSweepZeroExactlyOnCycles) {
  const auto res = sweep(spec_for(Theorem::BG, 3, 3, 2));
  EXPECT_EQ(res.summary.match, res.summary.total);
  std::size_t cyclic = 0;
  for (const auto& r : res.reports) {
    if (!r.transitive) {
      ++cyclic;
      EXPECT_TRUE(r.lhs_ct.is_zero());
    } else {
      EXPECT_FALSE(r.lhs_ct.is_zero());
    }
  }
  EXPECT_EQ(cyclic, 2u * 8u);
}

TEST(Verify, Main2ListSweep) {
  SweepSpec s = spec_for(Theorem::Main2, 4, 4, 2);
  s.q_policy = QPolicy::List;
  s.q_list = {{}, {{3, 4}}};
  s.a0_max = 0;
  const auto res = sweep(s);
  EXPECT_EQ(res.summary.total, 2u * 16u);
  EXPECT_EQ(res.summary.match, res.summary.total);
}

TEST(Verify, CorollarySweepEnumeratesPermutations) {
  SweepSpec s = spec_for(Theorem::CorI, 3, 3, 1);
  const auto inst = enumerate_instances(s);
  EXPECT_EQ(inst.size(), 6u);
  EXPECT_EQ(sweep(s).summary.match, 6u);
}

TEST(Verify, SweepValidation) {
  SweepSpec s = spec_for(Theorem::BG, 3, 2, 2);
  EXPECT_THROW(s.validate(), std::invalid_argument);
  s = spec_for(Theorem::BG, 2, 2, 2);
  s.q_policy = QPolicy::List;
  EXPECT_THROW(s.validate(), std::invalid_argument);
  s = spec_for(Theorem::BG, 2, 2, 2);
  s.jobs = 0;
  EXPECT_THROW(s.validate(), std::invalid_argument);
}

TEST(Verify, SumCapFiltersVectors) {
  SweepSpec s = spec_for(Theorem::Dyson, 2, 2, 6);
  s.sum_max = 6;
  for (const auto& inst : enumerate_instances(s)) {
    int sum = 0;
    for (int x : inst.a) sum += x;
    EXPECT_LE(sum, 6);
  }
  EXPECT_EQ(enumerate_instances(s).size(), 84u);  // C(6 + 3, 3)
}

TEST(DegreeBound, Examples) {
  const auto neg = check_degree_bound(Vec{1, 1}, 1);
  EXPECT_EQ(neg.bound, -1);
  EXPECT_TRUE(neg.ok) << neg.detail;
  EXPECT_GE(neg.values.size(), 3u);
  for (const auto& v : neg.values) EXPECT_EQ(v, 0);

  const auto flat = check_degree_bound(Vec{2, 1}, 1);
  EXPECT_EQ(flat.bound, 0);
  EXPECT_TRUE(flat.ok) << flat.detail;
  EXPECT_EQ(flat.values[0], flat.values[1]);

  const auto line = check_degree_bound(Vec{2, 2}, 1);
  EXPECT_EQ(line.bound, 1);
  EXPECT_TRUE(line.ok) << line.detail;
  EXPECT_EQ(line.values.size(), 3u);
}

TEST(DegreeBound, RejectsBadInput) {
  EXPECT_THROW(check_degree_bound(Vec{0, 1}, 0), std::invalid_argument);
  EXPECT_THROW(check_degree_bound(Vec{1, 1}, 0, mpq_class(1)), std::invalid_argument);
  EXPECT_THROW(check_degree_bound(Vec{}, 0), std::invalid_argument);
}

TEST(DegreeBound, NoPrefactor) {
  const auto honest = check_degree_bound(Vec{3, 3}, 0);
  ASSERT_TRUE(honest.ok) << honest.detail;
  EXPECT_EQ(honest.bound, 4);
}

TEST(Import1, Examples) {
  EXPECT_TRUE(import1_holds(Vec{2}, Vec{1}));
  EXPECT_TRUE(import1_holds(Vec{1, 1}, Vec{1, 1}));
  EXPECT_FALSE(import1_holds(Vec{1, 1}, Vec{2, 1}));  // k_1 = sum(a) is out of range
  const auto three = check_lemma_import1(3, 2, 2);
  EXPECT_TRUE(three.ok());
  const auto full = check_lemma_import1(4, 3);
  EXPECT_TRUE(full.ok()) << *full.counterexample;
  EXPECT_GT(full.vectors_checked, 0u);
}

TEST(Reflection, EmptyAndFullFlips) {
  const Vec a{1, 2, 1};
  EXPECT_EQ(reflected_product(a, {}), dn_product(a));
  std::vector<Edge> all{{0, 1}, {0, 2}, {1, 2}};
  LaurentPoly lhs = dn_product(a);
  lhs.mul_monomial({-2, 0, 2}, QPoly(1));
  EXPECT_EQ(reflected_product(a, all), lhs);
  LaurentPoly single = dn_product(a);
  single.mul_monomial({-1, 1, 0}, QPoly(1));
  EXPECT_EQ(reflected_product(a, std::vector<Edge>{{0, 1}}), single);
}

TEST(Reflection, SmallExhaustive) {
  const auto rep = check_reflection(2, 2);
  EXPECT_TRUE(rep.ok());
  EXPECT_EQ(rep.cases, 8u * 8u);
}

TEST(ZeroPoints, TransitiveMainInstances) {
  for (const auto& a : {Vec{0, 2, 2}, Vec{1, 3, 1, 2}, Vec{0, 1, 2, 3}}) {
    const auto rep = check_zero_points(IdentityInstance::make(Theorem::Main1, a));
    EXPECT_TRUE(rep.ok()) << rep.failures.front();
  }
  const auto rep = check_zero_points(IdentityInstance::make(Theorem::Main2, {0, 2, 1, 2, 1}, {{3, 4}}));
  EXPECT_TRUE(rep.ok());
  EXPECT_FALSE(rep.points.zeros.empty());
}
