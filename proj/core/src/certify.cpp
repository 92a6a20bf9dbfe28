#include "arcforge/certify.hpp"

#include <chrono>
#include <json.hpp>
#include <sstream>

#include "arcforge/error.hpp"
#include "arcforge/io.hpp"

#ifndef ARCFORGE_VERSION
#define ARCFORGE_VERSION "0.0.0"
#endif

namespace arcforge {

using ojson = nlohmann::ordered_json;

std::string_view tool_version() noexcept { return "arcforge " ARCFORGE_VERSION; }

CertifyInput input_from_family(FamilyInstance instance) {
  std::string source(family_name(instance.spec.id));
  return CertifyInput{std::move(source), std::move(instance.curve), std::move(instance.arc), std::move(instance.spec)};
}

namespace {

bool is_power_of(std::uint64_t v, std::uint64_t p) {
  if (v < 1) return false;
  while (v % p == 0) v /= p;
  return v == 1;
}

void run_curve_checks(const CertifyInput& input, const CertifyOptions& options, Certificate& cert) {
  const Curve& curve = *input.curve;
  const Field& f = curve.field();

  if (options.check_frobenius) {
    try {
      const auto verdict = frobenius_nonclassical_test(curve);
      FrobeniusSummary s;
      s.nonclassical = verdict.nonclassical;
      s.pivot = verdict.pivot;
      s.g_terms = verdict.g.size();
      if (verdict.nonclassical) {
        s.quotient_terms = verdict.quotient.size();
        s.quotient = verdict.quotient.to_string();
        if (!(curve.poly() * verdict.quotient == verdict.g))
          cert.failures.push_back("frobenius: F * quotient does not re-expand to G");
      } else {
        s.remainder_terms = verdict.remainder.size();
        const auto terms = verdict.remainder.terms();
        s.remainder_leading = Poly::from_terms(curve.field_ptr(), {terms.front()}).to_string();
      }
      cert.frobenius = s;
    } catch (const Error& ex) {
      if (ex.code() != Errc::NoPivot) throw;
      cert.diagnostics.push_back(std::string("frobenius: ") + ex.what());
    }
  }

  if (options.check_epsilon) {
    cert.epsilon = epsilon_estimate(curve, options.epsilon);
    const std::uint32_t eps = cert.epsilon->epsilon;
    if (cert.frobenius && cert.frobenius->nonclassical && f.p() > 2) {
      if (eps <= 2) cert.diagnostics.push_back("epsilon: nonclassical curve in odd characteristic needs eps > 2");
      if (eps > 2 && !is_power_of(eps, static_cast<std::uint64_t>(f.p())))
        cert.diagnostics.push_back("epsilon: eps > 2 must be a power of p");
    }
  }

  if (options.check_criteria) {
    const SingularScan scan = singular_points(curve, options.singular_m, options.epsilon.qmax);
    SingularSummary ss;
    ss.m = scan.m;
    ss.field_order = scan.extension.ext->q();
    for (const auto& p : scan.points) ss.points.push_back(io::format_triple(*scan.extension.ext, p.coords));
    ss.conditional = scan.m < 3;
    cert.singular = ss;

    const auto s = static_cast<std::int64_t>(scan.points.size());
    const bool nonsingular = s == 0;
    const bool nonclassical = cert.frobenius && cert.frobenius->nonclassical;
    const auto q = static_cast<std::int64_t>(cert.q);
    const auto d = static_cast<std::int64_t>(cert.d);
    const auto k = static_cast<std::int64_t>(cert.k);

    if (d <= q + 1) cert.criteria.push_back(criteria::lemma21_report(d, q, k, nonclassical, nonsingular));
    if (cert.epsilon) {
      const auto eps = static_cast<std::int64_t>(cert.epsilon->epsilon);
      auto thmb = criteria::thmB_condition(d, q, eps);
      if (!nonclassical || !nonsingular) thmb.note = "hypotheses not met: informational only";
      cert.criteria.push_back(thmb);

      auto thm41 = criteria::thm41_condition(k, d, eps, q, s);
      if (!nonclassical) {
        thm41.note = "curve is Frobenius classical: informational only";
      } else if (ss.conditional) {
        thm41.note += std::string(thm41.note.empty() ? "" : "; ") + "conditional on S complete (searched GF(q^" +
                      std::to_string(ss.m) + "))";
      }
      cert.criteria.push_back(thm41);
      if (nonclassical && thm41.passed() && cert.completeness_checked && !cert.is_complete)
        cert.failures.push_back("criteria: sufficiency bound holds but the exhaustive check found the arc incomplete");

      if (nonclassical) {
        for (auto& r : criteria::remark22_sanity(eps, d, q, f.p(), nonsingular)) cert.criteria.push_back(r);
      }
      if (eps > 0 && (d * (d - 1)) % eps == 0) cert.dual_degree = criteria::dual_degree(d, eps, q).value;
    }
  }
}

}  // namespace

Certificate certify(const CertifyInput& input, const CertifyOptions& options) {
  const auto start = std::chrono::steady_clock::now();
  const ArcSet& arc = input.arc;
  const Plane& plane = arc.plane();

  Certificate cert;
  cert.field = plane.field_ptr();
  cert.source = input.source;
  cert.route = input.family ? input.family->route : std::string("curve");
  cert.q = arc.q();
  cert.k = arc.size();
  cert.d = arc.declared_d();
  cert.options = options;
  cert.expect_complete = options.expect_complete;

  const SecantDistribution dist = secant_distribution(arc, options.workers);
  cert.max_secant = dist.max_secant;
  cert.secant_histogram = dist.histogram;
  cert.incidence_sum = dist.incidence_sum;
  cert.incidence_sum_ok = dist.incidence_sum == cert.k * (static_cast<std::uint64_t>(cert.q) + 1);
  cert.is_arc = is_arc(arc, dist);
  if (!cert.incidence_sum_ok) cert.failures.push_back("incidence: sum of meets differs from k(q+1)");
  for (PlaneIndex l = 0; l < dist.meets.size(); ++l)
    if (dist.meets[l] == 0) cert.external_lines.push_back(l);

  if (options.check_arc && !cert.is_arc)
    cert.failures.push_back("arc: max secant " + std::to_string(cert.max_secant) + " exceeds d = " +
                            std::to_string(cert.d));

  if (options.check_complete && cert.is_arc) {
    const auto result = completeness_check(arc, dist, options.workers);
    cert.completeness_checked = true;
    cert.is_complete = result.complete;
    cert.witnesses = result.witnesses;
    cert.addable = result.addable;
    for (const auto& w : result.witnesses) cert.witnesses_verified += verify_witness(arc, w) ? 1 : 0;
    if (cert.witnesses_verified != cert.witnesses.size())
      cert.failures.push_back("completeness: a witness line failed re-verification");
    if (cert.is_complete != options.expect_complete)
      cert.failures.push_back(std::string("completeness: expected ") +
                              (options.expect_complete ? "complete" : "incomplete") + ", found " +
                              (cert.is_complete ? "complete" : "incomplete"));

    if (input.family &&
        (input.family->id == FamilyId::FermatD || input.family->id == FamilyId::FermatQm1)) {
      FamilyWitnessCheck check;
      for (PlaneIndex p = 0; p < plane.size(); ++p) {
        if (arc.contains(p)) continue;
        ++check.checked;
        const ProjLine l = witness_secant(*input.family, plane.point_at(p));
        if (plane.incident(plane.point_at(p), l) && meet_count(arc, l) == cert.d) ++check.agreeing;
      }
      if (check.agreeing != check.checked)
        cert.failures.push_back("family: a prescribed secant does not meet the arc in d points");
      cert.family_witnesses = check;
    }
  } else if (options.check_complete) {
    cert.failures.push_back("completeness: skipped because the set is not an arc");
  }

  if (input.curve) run_curve_checks(input, options, cert);
  for (const auto& diag : cert.diagnostics) cert.failures.push_back("diagnostic: " + diag);

  if (options.record_timing)
    cert.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return cert;
}

namespace {

ojson report_json(const criteria::CriterionReport& r) {
  ojson j;
  j["id"] = r.id;
  ojson in = ojson::object();
  for (const auto& [k, v] : r.inputs) in[k] = v;
  j["inputs"] = in;
  j["lhs"] = r.lhs;
  j["relation"] = r.relation;
  j["rhs"] = r.rhs;
  j["verdict"] = criteria::verdict_name(r.verdict);
  if (!r.note.empty()) j["note"] = r.note;
  return j;
}

ojson build_json(const Certificate& cert) {
  const Plane plane(cert.field);
  const Field& f = *cert.field;
  auto fmt_point = [&](PlaneIndex i) { return ojson::parse(io::format_triple(f, plane.triple_at(i))); };

  ojson j;
  j["q"] = cert.q;
  j["source"] = cert.source;
  j["k"] = cert.k;
  j["d"] = cert.d;
  j["max_secant"] = cert.max_secant;
  j["is_arc"] = cert.is_arc;
  if (cert.completeness_checked)
    j["is_complete"] = cert.is_complete;
  else
    j["is_complete"] = nullptr;

  ojson wit = ojson::array();
  for (const auto& w : cert.witnesses)
    wit.push_back(ojson{{"point", fmt_point(w.point)}, {"line", fmt_point(w.line)}, {"meet", w.meet}});
  j["witnesses"] = wit;
  ojson ext = ojson::array();
  for (auto l : cert.external_lines) ext.push_back(fmt_point(l));
  j["external_lines"] = ext;

  if (cert.completeness_checked) {
    j["counterexample"] = cert.addable.empty() ? ojson(nullptr) : fmt_point(cert.addable.front());
    j["addable_points"] = cert.addable.size();
  }
  j["field"] = io::format_field_spec(f.spec());
  j["route"] = cert.route;
  j["secant_distribution"] = cert.secant_histogram;
  j["incidence_sum"] = {{"value", cert.incidence_sum}, {"expected", cert.k * (static_cast<std::uint64_t>(cert.q) + 1)},
                        {"ok", cert.incidence_sum_ok}};
  j["witnesses_verified"] = cert.witnesses_verified;
  if (cert.family_witnesses)
    j["family_witnesses"] = {{"checked", cert.family_witnesses->checked},
                             {"agreeing", cert.family_witnesses->agreeing}};

  if (cert.frobenius) {
    const auto& fr = *cert.frobenius;
    ojson fj;
    fj["verdict"] = fr.nonclassical ? "nonclassical" : "classical";
    fj["pivot"] = fr.pivot;
    fj["g_terms"] = fr.g_terms;
    if (fr.nonclassical) {
      fj["quotient_terms"] = fr.quotient_terms;
      fj["quotient"] = fr.quotient;
    } else {
      fj["remainder_terms"] = fr.remainder_terms;
      fj["remainder_leading"] = fr.remainder_leading;
    }
    j["frobenius"] = fj;
  }
  if (cert.epsilon) {
    const auto& e = *cert.epsilon;
    ojson ej;
    ej["value"] = e.epsilon;
    ej["kind"] = "empirical";
    ej["m_max"] = e.options.m_max;
    ej["sample_size"] = e.options.sample_size;
    ej["seed"] = e.options.seed;
    ojson levels = ojson::array();
    for (const auto& l : e.levels)
      levels.push_back({{"m", l.m},
                        {"field_order", l.field_order},
                        {"exhaustive", l.exhaustive},
                        {"escalated", l.escalated},
                        {"nonsingular_points", l.nonsingular_points},
                        {"sampled", l.sampled},
                        {"generic", l.generic},
                        {"min_multiplicity", l.min_multiplicity}});
    ej["levels"] = levels;
    j["epsilon"] = ej;
  }
  if (cert.singular) {
    const auto& s = *cert.singular;
    j["singular_points"] = {{"m", s.m},
                            {"field_order", s.field_order},
                            {"count", s.points.size()},
                            {"points", s.points},
                            {"conditional", s.conditional}};
  }
  if (!cert.criteria.empty()) {
    ojson cj = ojson::array();
    for (const auto& r : cert.criteria) cj.push_back(report_json(r));
    j["criteria"] = cj;
  }
  if (cert.dual_degree) j["dual_degree"] = *cert.dual_degree;
  j["diagnostics"] = cert.diagnostics;
  j["expect"] = cert.expect_complete ? "complete" : "incomplete";
  j["passed"] = cert.passed();
  j["failures"] = cert.failures;
  j["bounds"] = {{"qmax", cert.options.epsilon.qmax},
                 {"singular_m", cert.options.singular_m},
                 {"epsilon_m_max", cert.options.epsilon.m_max},
                 {"epsilon_samples", cert.options.epsilon.sample_size},
                 {"seed", cert.options.epsilon.seed}};
  j["tool_version"] = tool_version();
  if (cert.seconds) j["timing"] = {{"seconds", *cert.seconds}};
  return j;
}

}  // namespace

std::string certificate_json(const Certificate& cert, int indent) { return build_json(cert).dump(indent); }

std::string criteria_json(const std::vector<criteria::CriterionReport>& reports, int indent) {
  if (reports.size() == 1) return report_json(reports.front()).dump(indent);
  ojson arr = ojson::array();
  for (const auto& r : reports) arr.push_back(report_json(r));
  return arr.dump(indent);
}

std::string dual_degree_json(std::int64_t d, std::int64_t eps, std::int64_t q, const criteria::DualDegree& dual,
                             int indent) {
  ojson j;
  j["id"] = "dual_degree";
  j["inputs"] = {{"d", d}, {"eps", eps}, {"q", q}};
  j["value"] = dual.value;
  if (q > 0) j["bounded_by_q_plus_1"] = dual.bounded_by_q_plus_1;
  return j.dump(indent);
}

std::string lambda_json(const criteria::LambdaRange& range, int indent) {
  ojson j;
  j["id"] = "lambda";
  j["inputs"] = {{"q", range.q}, {"eps", range.eps}};
  j["lambdas"] = range.lambdas;
  j["degrees"] = range.degrees;
  j["empty"] = range.empty();
  return j.dump(indent);
}

std::string certificate_table(const Certificate& cert) {
  const ojson j = build_json(cert);
  std::ostringstream os;
  auto row = [&](const std::string& key, const std::string& value) {
    os << "  " << key << std::string(key.size() < 20 ? 20 - key.size() : 1, ' ') << value << "\n";
  };
  auto str = [](const ojson& v) { return v.is_string() ? v.get<std::string>() : v.dump(); };

  os << "certificate: " << str(j["source"]) << " over GF(" << cert.q << ")\n";
  row("field", str(j["field"]));
  row("k", str(j["k"]));
  row("d", str(j["d"]));
  row("max secant", str(j["max_secant"]));
  row("is arc", str(j["is_arc"]));
  row("is complete", str(j["is_complete"]));
  row("witnesses", std::to_string(j["witnesses"].size()) + " (" + str(j["witnesses_verified"]) + " re-verified)");
  if (j.contains("counterexample")) row("counterexample", str(j["counterexample"]));
  row("external lines", std::to_string(j["external_lines"].size()));
  row("incidence sum ok", str(j["incidence_sum"]["ok"]));
  if (j.contains("family_witnesses"))
    row("family secants", str(j["family_witnesses"]["agreeing"]) + "/" + str(j["family_witnesses"]["checked"]));
  if (j.contains("frobenius")) row("frobenius", str(j["frobenius"]["verdict"]));
  if (j.contains("epsilon")) row("epsilon", str(j["epsilon"]["value"]) + " (empirical)");
  if (j.contains("singular_points"))
    row("singular points", str(j["singular_points"]["count"]) + " over GF(" +
                               str(j["singular_points"]["field_order"]) + ")");
  if (j.contains("criteria"))
    for (const auto& c : j["criteria"])
      row("criterion " + str(c["id"]),
          str(c["verdict"]) + "  (" + str(c["lhs"]) + " " + str(c["relation"]) + " " + str(c["rhs"]) + ")");
  if (j.contains("dual_degree")) row("dual degree", str(j["dual_degree"]));
  row("passed", str(j["passed"]));
  for (const auto& fail : j["failures"]) row("failure", str(fail));
  return os.str();
}

}  // namespace arcforge
