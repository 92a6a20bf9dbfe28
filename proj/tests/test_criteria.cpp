#include <gtest/gtest.h>

#include <cmath>

#include "arcforge/criteria.hpp"
#include "arcforge/error.hpp"

using namespace arcforge;
using namespace arcforge::criteria;

namespace {

// Floating-point restatement, used only as an independent cross-check on
// inputs small enough that doubles are exact.
bool thmB_float(double d, double q, double eps) { return d * (d - 1) < (q + 1) * eps; }

}  // namespace

TEST(Criteria, ThmBExamples) {
  const auto r = thmB_condition(13, 27, 3);
  EXPECT_EQ(r.lhs, 156);
  EXPECT_EQ(r.rhs, 84);
  EXPECT_EQ(r.verdict, Verdict::Fail);
  EXPECT_EQ(thmB_condition(4, 9, 3).verdict, Verdict::Pass);  // 12 < 30
  EXPECT_EQ(thmB_condition(6, 25, 5).verdict, Verdict::Pass);  // 30 < 130
  EXPECT_EQ(thmB_condition(3, 4, 2).verdict, Verdict::Pass);
}

TEST(Criteria, ThmBBoundaryIsStrict) {
  // d(d-1) == (q+1) eps: d = 5, q = 9, eps = 2 gives 20 vs 20.
  EXPECT_EQ(thmB_condition(5, 9, 2).lhs, 20);
  EXPECT_EQ(thmB_condition(5, 9, 2).rhs, 20);
  EXPECT_EQ(thmB_condition(5, 9, 2).verdict, Verdict::Fail);
}

TEST(Criteria, Thm41) {
  // Hermitian q = 9: k = 28, d = 4, eps = 3, s = 0: 28 > 10.
  const auto r = thm41_condition(28, 4, 3, 9, 0);
  EXPECT_EQ(r.rhs, 10);
  EXPECT_TRUE(r.passed());
  // Example with s: (d - eps)(q + 1 - s) + (d - 1) s = 1*8 + 3*2 = 14.
  EXPECT_EQ(thm41_condition(14, 4, 3, 9, 2).verdict, Verdict::Fail);
  EXPECT_EQ(thm41_condition(15, 4, 3, 9, 2).verdict, Verdict::Pass);
  // fermat-d q = 27: 208 > 10 * 28 = 280 is false.
  EXPECT_EQ(thm41_condition(208, 13, 3, 27, 0).verdict, Verdict::Fail);
}

TEST(Criteria, Lemma21) {
  EXPECT_EQ(lemma21_count(4, 9), 28);
  EXPECT_EQ(lemma21_count(13, 27), 208);
  EXPECT_EQ(lemma21_count(6, 25), 126);
  EXPECT_THROW(lemma21_count(1, 9), Error);
  EXPECT_THROW(lemma21_count(11, 9), Error);
  EXPECT_EQ(lemma21_report(4, 9, 28, true, true).verdict, Verdict::Pass);
  EXPECT_EQ(lemma21_report(4, 9, 27, true, true).verdict, Verdict::Fail);
  EXPECT_EQ(lemma21_report(8, 9, 64, false, true).verdict, Verdict::HypothesisViolated);
  EXPECT_EQ(lemma21_report(4, 9, 28, true, false).verdict, Verdict::HypothesisViolated);
}

TEST(Criteria, EquivalenceWithLemmaCount) {
  // With k = d(q - d + 2) and s = 0 the two sufficiency conditions coincide.
  for (std::int64_t q : {4, 5, 7, 8, 9, 11, 13, 16, 25, 27})
    for (std::int64_t d = 2; d <= q + 1; ++d)
      for (std::int64_t eps = 2; eps <= d; ++eps) {
        const bool b = thmB_condition(d, q, eps).passed();
        EXPECT_EQ(b, thm41_condition(lemma21_count(d, q), d, eps, q, 0).passed()) << d << " " << q << " " << eps;
        EXPECT_EQ(b, thmB_float(static_cast<double>(d), static_cast<double>(q), static_cast<double>(eps)));
      }
}

TEST(Criteria, SanityBounds) {
  // Hermitian q = 9: eps = 3, d = 4, p = 3.
  const auto herm = remark22_sanity(3, 4, 9, 3, true);
  ASSERT_EQ(herm.size(), 5u);
  for (const auto& r : herm) EXPECT_EQ(r.verdict, Verdict::Pass) << r.id;
  // eps = 4 is not a power of 3.
  EXPECT_EQ(remark22_sanity(4, 4, 9, 3, true)[0].verdict, Verdict::Fail);
  // eps > sqrt(q) on a non-singular curve.
  EXPECT_EQ(remark22_sanity(9, 10, 27, 3, true)[2].verdict, Verdict::Fail);
  EXPECT_EQ(remark22_sanity(9, 10, 27, 3, false)[2].verdict, Verdict::Pass);
  // fermat-d q = 27, d = 13: sqrt(27)+1 <= 13 and 13 * 2 <= 26.
  const auto fd = remark22_sanity(3, 13, 27, 3, true);
  EXPECT_EQ(fd[3].verdict, Verdict::Pass);
  EXPECT_EQ(fd[4].verdict, Verdict::Pass);
  EXPECT_EQ(remark22_sanity(3, 14, 27, 3, true)[4].verdict, Verdict::Fail);
  EXPECT_EQ(remark22_sanity(3, 3, 9, 3, true)[3].verdict, Verdict::Fail);  // (3-1)^2 < 9
  // p = 2: clause (ii) does not apply; eps = 2 leaves (i) and (iv) out.
  const auto c2 = remark22_sanity(2, 3, 4, 2, true);
  EXPECT_EQ(c2[0].verdict, Verdict::NotApplicable);
  EXPECT_EQ(c2[1].verdict, Verdict::NotApplicable);
  EXPECT_EQ(c2[3].verdict, Verdict::NotApplicable);
}

TEST(Criteria, DualDegree) {
  EXPECT_EQ(dual_degree(4, 3, 9).value, 4);
  EXPECT_TRUE(dual_degree(4, 3, 9).bounded_by_q_plus_1);
  EXPECT_EQ(dual_degree(13, 3, 27).value, 52);
  EXPECT_FALSE(dual_degree(13, 3, 27).bounded_by_q_plus_1);
  EXPECT_FALSE(dual_degree(4, 3).bounded_by_q_plus_1);
  try {
    dual_degree(5, 3);
    ADD_FAILURE();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::NotDivisible);
  }
}

TEST(Criteria, Lambda) {
  // Brute-force oracle in doubles for small q.
  for (std::int64_t q : {9, 25, 27, 49, 81, 125, 243, 343})
    for (std::int64_t eps : {2, 3, 5, 7, 9}) {
      const auto r = remark41_lambda(q, eps);
      std::vector<std::int64_t> expect;
      for (std::int64_t l = 1; l < 100; ++l)
        if (std::sqrt(static_cast<double>(q)) / eps <= l && l < std::sqrt(static_cast<double>(q) / eps))
          expect.push_back(l);
      EXPECT_EQ(r.lambdas, expect) << q << " " << eps;
      for (std::size_t i = 0; i < r.lambdas.size(); ++i) EXPECT_EQ(r.degrees[i], r.lambdas[i] * eps + 1);
    }
  EXPECT_EQ(remark41_lambda(27, 3).lambdas, (std::vector<std::int64_t>{2}));
  EXPECT_EQ(remark41_lambda(125, 5).lambdas, (std::vector<std::int64_t>{3, 4}));
  EXPECT_EQ(remark41_lambda(9, 3).lambdas, (std::vector<std::int64_t>{1}));  // both ends exact
  EXPECT_TRUE(remark41_lambda(9, 9).empty());
  EXPECT_THROW(remark41_lambda(1, 3), Error);
}

TEST(Criteria, RecomputeMatches) {
  std::vector<CriterionReport> all{thmB_condition(13, 27, 3), thmB_condition(4, 9, 3), thm41_condition(28, 4, 3, 9, 0),
                                   lemma21_report(4, 9, 28, true, true), lemma21_report(8, 9, 64, false, true)};
  for (const auto& r : remark22_sanity(3, 13, 27, 3, true)) all.push_back(r);
  for (const auto& r : all) EXPECT_EQ(recompute(r), r.verdict) << r.id;
  CriterionReport bogus;
  bogus.id = "nope";
  EXPECT_THROW(recompute(bogus), Error);
  EXPECT_EQ(verdict_name(Verdict::HypothesisViolated), "hypothesis_violated");
}
