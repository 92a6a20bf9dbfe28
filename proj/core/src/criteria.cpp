#include "arcforge/criteria.hpp"

#include "arcforge/error.hpp"

namespace arcforge::criteria {

std::string_view verdict_name(Verdict v) noexcept {
  switch (v) {
    case Verdict::Pass: return "pass";
    case Verdict::Fail: return "fail";
    case Verdict::NotApplicable: return "not_applicable";
    case Verdict::HypothesisViolated: return "hypothesis_violated";
  }
  return "unknown";
}

namespace {

Verdict of(bool b) { return b ? Verdict::Pass : Verdict::Fail; }

bool is_power_of(std::int64_t v, std::int64_t p) {
  if (v < 1 || p < 2) return false;
  while (v % p == 0) v /= p;
  return v == 1;
}

std::int64_t input(const CriterionReport& r, std::string_view name) {
  for (const auto& [k, v] : r.inputs)
    if (k == name) return v;
  throw Error(Errc::BadParameters, "report " + r.id + " lacks input " + std::string(name));
}

}  // namespace

CriterionReport thmB_condition(std::int64_t d, std::int64_t q, std::int64_t eps) {
  CriterionReport r;
  r.id = "thmB";
  r.inputs = {{"d", d}, {"q", q}, {"eps", eps}};
  r.lhs = d * (d - 1);
  r.rhs = (q + 1) * eps;
  r.relation = "<";
  r.verdict = of(r.lhs < r.rhs);
  return r;
}

CriterionReport thm41_condition(std::int64_t k, std::int64_t d, std::int64_t eps, std::int64_t q, std::int64_t s) {
  CriterionReport r;
  r.id = "thm41";
  r.inputs = {{"k", k}, {"d", d}, {"eps", eps}, {"q", q}, {"s", s}};
  r.lhs = k;
  r.rhs = (d - eps) * (q + 1 - s) + (d - 1) * s;
  r.relation = ">";
  r.verdict = of(r.lhs > r.rhs);
  if (r.passed()) r.note = "completeness implied by the sufficiency bound";
  return r;
}

std::int64_t lemma21_count(std::int64_t d, std::int64_t q) {
  if (d < 2 || d > q + 1) throw Error(Errc::BadParameters, "need 2 <= d <= q+1");
  return d * (q - d + 2);
}

CriterionReport lemma21_report(std::int64_t d, std::int64_t q, std::int64_t enumerated_k, bool frobenius_nonclassical,
                               bool nonsingular) {
  CriterionReport r;
  r.id = "lemma21";
  r.inputs = {{"d", d},
              {"q", q},
              {"k", enumerated_k},
              {"nonclassical", frobenius_nonclassical ? 1 : 0},
              {"nonsingular", nonsingular ? 1 : 0}};
  r.lhs = enumerated_k;
  r.rhs = lemma21_count(d, q);
  r.relation = "==";
  if (!frobenius_nonclassical || !nonsingular) {
    r.verdict = Verdict::HypothesisViolated;
    r.note = !frobenius_nonclassical ? "curve is Frobenius classical; d(q-d+2) does not apply"
                                     : "curve is singular; d(q-d+2) does not apply";
    return r;
  }
  r.verdict = of(r.lhs == r.rhs);
  return r;
}

std::vector<CriterionReport> remark22_sanity(std::int64_t eps, std::int64_t d, std::int64_t q, std::int64_t p,
                                             bool nonsingular) {
  const std::vector<std::pair<std::string, std::int64_t>> inputs = {
      {"eps", eps}, {"d", d}, {"q", q}, {"p", p}, {"nonsingular", nonsingular ? 1 : 0}};
  std::vector<CriterionReport> out;

  CriterionReport i;
  i.id = "remark22.i";
  i.inputs = inputs;
  i.lhs = eps;
  i.rhs = p;
  i.relation = "power_of";
  i.verdict = eps > 2 ? of(is_power_of(eps, p)) : Verdict::NotApplicable;
  out.push_back(i);

  CriterionReport ii;
  ii.id = "remark22.ii";
  ii.inputs = inputs;
  ii.lhs = eps;
  ii.rhs = 2;
  ii.relation = ">";
  ii.verdict = p > 2 ? of(eps > 2) : Verdict::NotApplicable;
  out.push_back(ii);

  CriterionReport iii;
  iii.id = "remark22.iii";
  iii.inputs = inputs;
  if (nonsingular) {
    // eps <= sqrt(q)
    iii.lhs = eps * eps;
    iii.rhs = q;
    iii.relation = "<=";
    iii.note = "eps^2 <= q";
  } else {
    iii.lhs = eps;
    iii.rhs = q;
    iii.relation = "<=";
  }
  iii.verdict = of(iii.lhs <= iii.rhs);
  out.push_back(iii);

  const bool iv_applies = nonsingular && eps > 2;
  CriterionReport lower;
  lower.id = "remark22.iv.lower";
  lower.inputs = inputs;
  // sqrt(q) + 1 <= d  <=>  (d-1)^2 >= q  (d >= 1)
  lower.lhs = (d - 1) * (d - 1);
  lower.rhs = q;
  lower.relation = ">=";
  lower.note = "(d-1)^2 >= q";
  lower.verdict = iv_applies ? of(d >= 1 && lower.lhs >= lower.rhs) : Verdict::NotApplicable;
  out.push_back(lower);

  CriterionReport upper;
  upper.id = "remark22.iv.upper";
  upper.inputs = inputs;
  // d <= (q-1)/(eps-1)  <=>  d(eps-1) <= q-1
  upper.lhs = d * (eps - 1);
  upper.rhs = q - 1;
  upper.relation = "<=";
  upper.note = "d(eps-1) <= q-1";
  upper.verdict = iv_applies ? of(upper.lhs <= upper.rhs) : Verdict::NotApplicable;
  out.push_back(upper);
  return out;
}

DualDegree dual_degree(std::int64_t d, std::int64_t eps, std::int64_t q) {
  if (eps <= 0 || (d * (d - 1)) % eps != 0)
    throw Error(Errc::NotDivisible, "eps does not divide d(d-1)");
  DualDegree out;
  out.value = d * (d - 1) / eps;
  out.bounded_by_q_plus_1 = q > 0 && out.value <= q + 1;
  return out;
}

LambdaRange remark41_lambda(std::int64_t q, std::int64_t eps) {
  if (q < 2 || eps < 1) throw Error(Errc::BadParameters, "need q >= 2 and eps >= 1");
  LambdaRange r;
  r.q = q;
  r.eps = eps;
  // sqrt(q)/eps <= lambda  <=>  (lambda*eps)^2 >= q
  // lambda < sqrt(q/eps)   <=>  lambda^2 * eps < q
  for (std::int64_t lambda = 1; lambda * lambda * eps < q; ++lambda) {
    if ((lambda * eps) * (lambda * eps) >= q) {
      r.lambdas.push_back(lambda);
      r.degrees.push_back(lambda * eps + 1);
    }
  }
  return r;
}

Verdict recompute(const CriterionReport& report) {
  const std::string& id = report.id;
  if (id == "thmB") return thmB_condition(input(report, "d"), input(report, "q"), input(report, "eps")).verdict;
  if (id == "thm41")
    return thm41_condition(input(report, "k"), input(report, "d"), input(report, "eps"), input(report, "q"),
                           input(report, "s"))
        .verdict;
  if (id == "lemma21")
    return lemma21_report(input(report, "d"), input(report, "q"), input(report, "k"), input(report, "nonclassical") != 0,
                          input(report, "nonsingular") != 0)
        .verdict;
  if (id.starts_with("remark22.")) {
    for (const auto& r : remark22_sanity(input(report, "eps"), input(report, "d"), input(report, "q"),
                                         input(report, "p"), input(report, "nonsingular") != 0))
      if (r.id == id) return r.verdict;
  }
  throw Error(Errc::BadParameters, "unknown criterion " + id);
}

}  // namespace arcforge::criteria
