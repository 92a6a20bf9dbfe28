#pragma once

// Integer-exact checkers for the sufficiency inequalities and closed forms
// around complete arcs from Frobenius non-classical curves. Square roots are
// never taken: every bound involving sqrt(q) is compared after squaring.

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace arcforge::criteria {

enum class Verdict { Pass, Fail, NotApplicable, HypothesisViolated };

std::string_view verdict_name(Verdict v) noexcept;

struct CriterionReport {
  std::string id;
  std::vector<std::pair<std::string, std::int64_t>> inputs;
  Verdict verdict = Verdict::NotApplicable;
  /// The evaluated relation "lhs <relation> rhs".
  std::int64_t lhs = 0;
  std::int64_t rhs = 0;
  std::string relation;
  std::string note;

  bool passed() const noexcept { return verdict == Verdict::Pass; }
};

/// d(d-1) < (q+1) eps
CriterionReport thmB_condition(std::int64_t d, std::int64_t q, std::int64_t eps);

/// k > (d - eps)(q + 1 - s) + (d - 1) s
CriterionReport thm41_condition(std::int64_t k, std::int64_t d, std::int64_t eps, std::int64_t q, std::int64_t s);

/// d(q - d + 2). Throws BadParameters outside 2 <= d <= q+1.
std::int64_t lemma21_count(std::int64_t d, std::int64_t q);

/// Compares the closed-form count with an enumerated k. The formula only
/// holds for non-singular Frobenius non-classical curves; when either
/// hypothesis fails the verdict is HypothesisViolated.
CriterionReport lemma21_report(std::int64_t d, std::int64_t q, std::int64_t enumerated_k, bool frobenius_nonclassical,
                               bool nonsingular);

/// Clauses (i)-(iv) of the sanity bounds on eps for a claimed
/// Frobenius non-classical curve, in that order.
std::vector<CriterionReport> remark22_sanity(std::int64_t eps, std::int64_t d, std::int64_t q, std::int64_t p,
                                             bool nonsingular);

struct DualDegree {
  std::int64_t value = 0;  // d(d-1)/eps
  bool bounded_by_q_plus_1 = false;  // only meaningful when q was supplied
};

/// Throws NotDivisible unless eps | d(d-1).
DualDegree dual_degree(std::int64_t d, std::int64_t eps, std::int64_t q = 0);

struct LambdaRange {
  std::int64_t q = 0;
  std::int64_t eps = 0;
  /// All integers lambda >= 1 with sqrt(q)/eps <= lambda < sqrt(q/eps).
  std::vector<std::int64_t> lambdas;
  /// lambda*eps + 1 for each lambda.
  std::vector<std::int64_t> degrees;

  bool empty() const noexcept { return lambdas.empty(); }
};

LambdaRange remark41_lambda(std::int64_t q, std::int64_t eps);

/// Recomputes a report's verdict from its recorded inputs.
Verdict recompute(const CriterionReport& report);

}  // namespace arcforge::criteria
