#include "arcforge/repro.hpp"

#include <functional>
#include <iomanip>
#include <random>
#include <sstream>

#include <json.hpp>

#include "arcforge/arcs.hpp"
#include "arcforge/certify.hpp"
#include "arcforge/criteria.hpp"
#include "arcforge/curve.hpp"
#include "arcforge/error.hpp"
#include "arcforge/families.hpp"
#include "arcforge/io.hpp"

namespace arcforge {

namespace {

using json = nlohmann::ordered_json;

struct Outcome {
  bool pass = false;
  std::string detail;
};

struct RowDef {
  std::string claim;
  std::string name;
  std::uint32_t q;
  // Closed-form rows run regardless of --q-max.
  bool arithmetic;
  std::function<Outcome(const ReproOptions&)> run;
};

std::string yes_no(bool b) { return b ? "true" : "false"; }

// Checks size, d, the arc property, completeness and every witness recount.
// For the Fermat families the prescribed secant through each external point
// is recomputed and compared too.
Outcome arc_outcome(const FamilyInstance& inst, std::uint64_t k, std::uint32_t d, bool complete, unsigned workers) {
  const ArcSet& arc = inst.arc;
  const auto dist = secant_distribution(arc, workers);
  const bool arc_ok = is_arc(arc, dist) && dist.max_secant == d;
  std::ostringstream os;
  os << "k=" << arc.size() << " d=" << dist.max_secant << " arc=" << yes_no(arc_ok);
  bool pass = arc.size() == k && arc.declared_d() == d && arc_ok;
  if (!arc_ok) {
    os << " expected (" << k << "," << d << ")";
    return {false, os.str()};
  }
  const auto res = completeness_check(arc, dist, workers);
  std::uint64_t verified = 0;
  for (const auto& w : res.witnesses) verified += verify_witness(arc, w);
  os << " complete=" << yes_no(res.complete) << " witnesses=" << res.witnesses.size();
  pass = pass && res.complete == complete && verified == res.witnesses.size();
  const auto id = inst.spec.id;
  if (id == FamilyId::FermatD || id == FamilyId::FermatQm1) {
    const Plane& plane = arc.plane();
    std::uint64_t agree = 0;
    std::uint64_t external = 0;
    for (PlaneIndex i = 0; i < plane.size(); ++i) {
      if (arc.contains(i)) continue;
      ++external;
      const ProjPoint pt = plane.point_at(i);
      const ProjLine l = witness_secant(inst.spec, pt);
      agree += plane.incident(pt, l) && meet_count(arc, l) == d;
    }
    os << " family_witnesses=" << agree << "/" << external;
    pass = pass && agree == external;
  }
  return {pass, os.str()};
}

Outcome guarded(const std::function<Outcome()>& fn) {
  try {
    return fn();
  } catch (const std::exception& e) {
    return {false, std::string("error: ") + e.what()};
  }
}

FamilyInstance fermat_d(int p, int n, int a, int b) {
  const int ac[] = {a};
  const int bc[] = {b};
  return build_fermat_d(p, n, 1, ac, bc);
}

std::vector<RowDef> rows() {
  std::vector<RowDef> r;

  // Fermat curves a X^d + b Y^d + Z^d, d = (q-1)/(p-1), give complete (k,d)-arcs.
  struct Fd {
    int p, n, a, b;
    std::uint64_t k;
    std::uint32_t d;
  };
  for (const Fd f : {Fd{3, 2, 1, 1, 28, 4}, Fd{5, 2, 1, 1, 126, 6}, Fd{3, 3, 1, 1, 208, 13}, Fd{3, 3, 2, 1, 208, 13},
                     Fd{3, 3, 2, 2, 208, 13}}) {
    std::uint32_t q = 1;
    for (int i = 0; i < f.n; ++i) q *= static_cast<std::uint32_t>(f.p);
    r.push_back({"thmA1", "fermat-d a=" + std::to_string(f.a) + " b=" + std::to_string(f.b), q, false,
                 [f](const ReproOptions& o) {
                   return arc_outcome(fermat_d(f.p, f.n, f.a, f.b), f.k, f.d, true, o.workers);
                 }});
  }

  r.push_back({"ex31", "fermat-d q=p^3 closed form", 27, false, [](const ReproOptions& o) {
                 const std::uint64_t p = 3;
                 const std::uint64_t k = (p * p + p + 1) * (p * p * p - p * p - p + 1);
                 const auto inst = fermat_d(3, 3, 1, 1);
                 Outcome out = arc_outcome(inst, k, 13, true, o.workers);
                 const std::uint64_t q = 27;
                 const std::uint64_t external = q * q + q + 1 - k;
                 out.detail += " closed_form_k=" + std::to_string(k) + " external=" + std::to_string(external);
                 out.pass = out.pass && inst.arc.size() == k && external == 549;
                 return out;
               }});

  for (const auto& [p, n, k, d] : {std::tuple{3, 2, 64ull, 8u}, std::tuple{3, 3, 676ull, 26u}}) {
    const std::uint32_t q = n == 2 ? 9 : 27;
    r.push_back({"thmA2", "fermat-qm1", q, false, [p, n, k, d](const ReproOptions& o) {
                   return arc_outcome(build_fermat_qm1(p, n), k, d, true, o.workers);
                 }});
  }

  for (const int n : {2, 3}) {
    const std::uint32_t q = 1u << n;
    r.push_back({"rem30", "char2-fermat", q, false, [n](const ReproOptions& o) {
                   const auto inst = build_char2_fermat(n);
                   const ArcSet& arc = inst.arc;
                   const auto dist = secant_distribution(arc, o.workers);
                   const bool arc_ok = is_arc(arc, dist);
                   const auto res = completeness_check(arc, dist, o.workers);
                   const ProjPoint ones{{1, 1, 1}};
                   const PlaneIndex idx = arc.plane().index(ones);
                   bool addable = false;
                   for (auto a : res.addable) addable = addable || a == idx;
                   const bool still_arc = addable && is_arc(arc.with_point(ones));
                   std::ostringstream os;
                   os << "k=" << arc.size() << " d=" << arc.declared_d() << " arc=" << yes_no(arc_ok)
                      << " complete=" << yes_no(res.complete) << " addable=" << res.addable.size()
                      << " (1:1:1)_addable=" << yes_no(addable);
                   for (const auto& w : res.witnesses)
                     if (w.point == idx)
                       os << " witness_line=" << io::format_triple(arc.plane().field(), arc.plane().line_at(w.line).coeffs)
                          << " meets=" << w.meet;
                   return Outcome{arc_ok && !res.complete && addable && still_arc, os.str()};
                 }});
  }

  for (const int n : {2, 3}) {
    const std::uint32_t q = n == 2 ? 9 : 27;
    r.push_back({"rem31", "fermat-qm1 external line", q, false, [n](const ReproOptions&) {
                   const auto inst = build_fermat_qm1(3, n);
                   const auto bound = external_line_bound_check(inst.arc);
                   const std::uint32_t z0 = meet_count(inst.arc, ProjLine{{0, 0, 1}});
                   std::ostringstream os;
                   os << "k=" << bound.k << " bound=" << bound.bound << " Z=0_meets=" << z0
                      << " attained=" << yes_no(bound.attained);
                   return Outcome{bound.has_external_line && bound.holds && bound.attained && z0 == 0, os.str()};
                 }});
  }

  r.push_back({"rem32", "coordinate triangle", 5, false, [](const ReproOptions& o) {
                 const auto field = Field::create(5, 1);
                 const std::array<ProjLine, 3> axes{ProjLine{{1, 0, 0}}, ProjLine{{0, 1, 0}}, ProjLine{{0, 0, 1}}};
                 const auto tri = build_triangle_complement(field, axes);
                 const auto qm1 = build_fermat_qm1(5, 1);
                 Outcome out = arc_outcome(tri, 16, 4, true, o.workers);
                 const bool same = tri.arc.indices() == qm1.arc.indices();
                 out.detail += " equals_fermat_qm1=" + yes_no(same);
                 out.pass = out.pass && same;
                 return out;
               }});
  r.push_back({"rem32", "coordinate triangle", 9, false, [](const ReproOptions& o) {
                 const auto field = Field::create(3, 2);
                 const std::array<ProjLine, 3> axes{ProjLine{{1, 0, 0}}, ProjLine{{0, 1, 0}}, ProjLine{{0, 0, 1}}};
                 const auto tri = build_triangle_complement(field, axes);
                 const auto qm1 = build_fermat_qm1(3, 2);
                 Outcome out = arc_outcome(tri, 64, 8, true, o.workers);
                 const bool same = tri.arc.indices() == qm1.arc.indices();
                 out.detail += " equals_fermat_qm1=" + yes_no(same);
                 out.pass = out.pass && same;
                 return out;
               }});
  r.push_back({"rem32", "20 seeded non-concurrent triangles", 9, false, [](const ReproOptions& o) {
                 const auto field = Field::create(3, 2);
                 const Plane plane(field);
                 std::mt19937_64 rng(o.seed);
                 int done = 0;
                 int good = 0;
                 int rejected = 0;
                 while (done < 20) {
                   std::array<ProjLine, 3> lines{};
                   bool zero = false;
                   for (auto& l : lines) {
                     Triple t{};
                     for (auto& c : t) c = static_cast<Elem>(rng() % field->q());
                     zero = zero || (t[0] == 0 && t[1] == 0 && t[2] == 0);
                     if (!zero) l = plane.line(t);
                   }
                   if (zero) continue;
                   try {
                     const auto tri = build_triangle_complement(field, lines);
                     good += arc_outcome(tri, 64, 8, true, o.workers).pass;
                     ++done;
                   } catch (const Error& e) {
                     if (e.code() != Errc::ConcurrentLines) throw;
                     ++rejected;
                   }
                 }
                 std::ostringstream os;
                 os << "complete_(64,8)=" << good << "/20 concurrent_redrawn=" << rejected;
                 return Outcome{good == 20, os.str()};
               }});

  r.push_back({"frob", "hermitian", 9, false, [](const ReproOptions& o) {
                 const auto inst = build_hermitian(3, 2);
                 const auto v = frobenius_nonclassical_test(*inst.curve);
                 const bool square = v.nonclassical && v.quotient == inst.curve->poly().pow(2);
                 const auto inc = frobenius_tangent_incidence(*inst.curve, 200, o.seed);
                 std::ostringstream os;
                 os << "nonclassical=" << yes_no(v.nonclassical) << " quotient=F^2:" << yes_no(square)
                    << " tangent_incidence=" << inc.rational_on_tangent << "/" << inc.rational_checked << "+"
                    << inc.extension_on_tangent << "/" << inc.extension_checked;
                 return Outcome{square && inc.all_on_tangent() && inc.extension_checked > 0, os.str()};
               }});
  r.push_back({"frob", "fermat-d", 27, false, [](const ReproOptions&) {
                 const auto inst = fermat_d(3, 3, 1, 1);
                 const auto v = frobenius_nonclassical_test(*inst.curve);
                 const bool rebuilt = v.nonclassical && inst.curve->poly() * v.quotient == v.g;
                 return Outcome{rebuilt, "nonclassical=" + yes_no(v.nonclassical) + " F*Q=G:" + yes_no(rebuilt)};
               }});
  r.push_back({"frob", "fermat-qm1", 9, false, [](const ReproOptions&) {
                 const auto inst = build_fermat_qm1(3, 2);
                 const auto v = frobenius_nonclassical_test(*inst.curve);
                 return Outcome{!v.nonclassical && !v.remainder.is_zero(),
                                "nonclassical=" + yes_no(v.nonclassical) +
                                    " remainder_terms=" + std::to_string(v.remainder.size())};
               }});

  struct EpsRow {
    std::string name;
    std::uint32_t q;
    std::uint32_t expected;
    std::function<FamilyInstance()> build;
  };
  for (const auto& e : {EpsRow{"hermitian", 9, 3, [] { return build_hermitian(3, 2); }},
                        EpsRow{"hermitian", 25, 5, [] { return build_hermitian(5, 2); }},
                        EpsRow{"fermat-d", 27, 3, [] { return fermat_d(3, 3, 1, 1); }}}) {
    r.push_back({"eps", e.name, e.q, false, [e](const ReproOptions& o) {
                   EpsilonOptions eo;
                   eo.seed = o.seed;
                   const auto est = epsilon_estimate(*e.build().curve, eo);
                   std::ostringstream os;
                   os << "eps=" << est.epsilon << " expected=" << e.expected << " levels=" << est.levels.size();
                   return Outcome{est.epsilon == e.expected, os.str()};
                 }});
  }

  struct CountRow {
    std::string name;
    std::uint32_t q;
    std::function<FamilyInstance()> build;
    criteria::Verdict expected;
  };
  for (const auto& c : {CountRow{"hermitian", 9, [] { return build_hermitian(3, 2); }, criteria::Verdict::Pass},
                        CountRow{"hermitian", 25, [] { return build_hermitian(5, 2); }, criteria::Verdict::Pass},
                        CountRow{"fermat-d", 27, [] { return fermat_d(3, 3, 1, 1); }, criteria::Verdict::Pass},
                        CountRow{"fermat-qm1", 9, [] { return build_fermat_qm1(3, 2); },
                                 criteria::Verdict::HypothesisViolated}}) {
    r.push_back({"lemma21", c.name, c.q, false, [c](const ReproOptions&) {
                   const auto inst = c.build();
                   const bool nc = frobenius_nonclassical_test(*inst.curve).nonclassical;
                   const bool smooth = singular_points(*inst.curve, 1).points.empty();
                   const auto rep = criteria::lemma21_report(inst.spec.d, inst.spec.q,
                                                             static_cast<std::int64_t>(inst.arc.size()), nc, smooth);
                   std::ostringstream os;
                   os << "k=" << inst.arc.size() << " d(q-d+2)=" << rep.rhs
                      << " verdict=" << criteria::verdict_name(rep.verdict);
                   return Outcome{rep.verdict == c.expected, os.str()};
                 }});
  }

  struct BRow {
    std::string name;
    std::uint32_t q;
    std::int64_t d, eps;
    bool holds;
    std::function<FamilyInstance()> build;
  };
  for (const auto& b : {BRow{"hermitian", 4, 3, 2, true, [] { return build_hermitian(2, 2); }},
                        BRow{"hermitian", 9, 4, 3, true, [] { return build_hermitian(3, 2); }},
                        BRow{"hermitian", 25, 6, 5, true, [] { return build_hermitian(5, 2); }},
                        BRow{"fermat-d", 27, 13, 3, false, [] { return fermat_d(3, 3, 1, 1); }}}) {
    r.push_back({"thmB", b.name, b.q, false, [b](const ReproOptions& o) {
                   const auto rep = criteria::thmB_condition(b.d, b.q, b.eps);
                   const auto inst = b.build();
                   const bool complete = completeness_check(inst.arc, o.workers).complete;
                   std::ostringstream os;
                   os << "d(d-1)=" << rep.lhs << " (q+1)eps=" << rep.rhs << " holds=" << yes_no(rep.passed())
                      << " complete=" << yes_no(complete);
                   // When the condition holds the arc must be complete; when it
                   // fails completeness is decided by enumeration alone.
                   return Outcome{rep.passed() == b.holds && (!rep.passed() || complete), os.str()};
                 }});
  }
  r.push_back({"thmB", "equivalence with k = d(q-d+2), s = 0", 0, true, [](const ReproOptions&) {
                 std::uint64_t cases = 0;
                 std::uint64_t agree = 0;
                 for (std::int64_t q : {4, 5, 7, 8, 9, 16, 25, 27, 32, 49, 64, 81, 125}) {
                   for (std::int64_t d = 2; d <= q + 1; ++d) {
                     for (std::int64_t eps = 1; eps <= q; ++eps) {
                       const bool a = criteria::thmB_condition(d, q, eps).passed();
                       const bool c = criteria::thm41_condition(d * (q - d + 2), d, eps, q, 0).passed();
                       ++cases;
                       agree += a == c;
                     }
                   }
                 }
                 return Outcome{agree == cases, "agree=" + std::to_string(agree) + "/" + std::to_string(cases)};
               }});

  r.push_back({"thm41", "hermitian (28,4) eps=3 s=0", 9, false, [](const ReproOptions& o) {
                 const auto rep = criteria::thm41_condition(28, 4, 3, 9, 0);
                 const auto inst = build_hermitian(3, 2);
                 const bool complete = completeness_check(inst.arc, o.workers).complete;
                 std::ostringstream os;
                 os << "lhs=" << rep.lhs << " rhs=" << rep.rhs << " holds=" << yes_no(rep.passed())
                    << " complete=" << yes_no(complete);
                 return Outcome{rep.passed() && complete, os.str()};
               }});
  r.push_back({"thm41", "fermat-d (208,13) eps=3 s=0", 27, false, [](const ReproOptions& o) {
                 const auto rep = criteria::thm41_condition(208, 13, 3, 27, 0);
                 const auto inst = fermat_d(3, 3, 1, 1);
                 const bool complete = completeness_check(inst.arc, o.workers).complete;
                 std::ostringstream os;
                 os << "lhs=" << rep.lhs << " rhs=" << rep.rhs << " holds=" << yes_no(rep.passed())
                    << " complete=" << yes_no(complete);
                 return Outcome{!rep.passed() && complete, os.str()};
               }});

  struct LRow {
    std::int64_t q, eps;
    std::vector<std::int64_t> lambdas, degrees;
  };
  for (const auto& l : {LRow{9, 3, {1}, {4}}, LRow{27, 3, {2}, {7}}, LRow{125, 5, {3, 4}, {16, 21}}}) {
    r.push_back({"lambda", "eps=" + std::to_string(l.eps), static_cast<std::uint32_t>(l.q), true,
                 [l](const ReproOptions&) {
                   const auto range = criteria::remark41_lambda(l.q, l.eps);
                   std::ostringstream os;
                   os << "lambda=[";
                   for (std::size_t i = 0; i < range.lambdas.size(); ++i) os << (i ? "," : "") << range.lambdas[i];
                   os << "] d=[";
                   for (std::size_t i = 0; i < range.degrees.size(); ++i) os << (i ? "," : "") << range.degrees[i];
                   os << "]";
                   return Outcome{range.lambdas == l.lambdas && range.degrees == l.degrees, os.str()};
                 }});
  }
  return r;
}

}  // namespace

bool ReproReport::all_pass() const noexcept {
  for (const auto& r : rows)
    if (!r.pass) return false;
  return true;
}

std::vector<std::string> repro_claims() {
  return {"thmA1", "ex31", "thmA2", "rem30", "rem31", "rem32", "frob", "eps", "lemma21", "thmB", "thm41", "lambda"};
}

ReproReport run_repro(const ReproOptions& options) {
  if (!options.only.empty()) {
    bool known = false;
    for (const auto& c : repro_claims()) known = known || c == options.only;
    if (!known) throw Error(Errc::BadParameters, "unknown claim id '" + options.only + "'");
  }
  ReproReport report;
  for (const auto& def : rows()) {
    if (!options.only.empty() && def.claim != options.only) continue;
    if (!def.arithmetic && def.q > options.q_max) continue;
    const Outcome out = guarded([&] { return def.run(options); });
    report.rows.push_back({def.claim, def.name, def.q, out.pass, out.detail});
  }
  return report;
}

std::string repro_json(const ReproReport& report, int indent) {
  json rows = json::array();
  std::size_t passed = 0;
  for (const auto& r : report.rows) {
    rows.push_back({{"claim", r.claim}, {"name", r.name}, {"q", r.q}, {"pass", r.pass}, {"detail", r.detail}});
    passed += r.pass;
  }
  json j;
  j["tool_version"] = std::string(tool_version());
  j["rows"] = std::move(rows);
  j["passed"] = passed;
  j["failed"] = report.rows.size() - passed;
  j["all_pass"] = report.all_pass();
  return j.dump(indent);
}

std::string repro_table(const ReproReport& report) {
  std::ostringstream os;
  os << std::left << std::setw(8) << "claim" << std::setw(40) << "name" << std::setw(6) << "q" << std::setw(6)
     << "ok" << "detail\n";
  for (const auto& r : report.rows) {
    os << std::setw(8) << r.claim << std::setw(40) << r.name << std::setw(6) << r.q << std::setw(6)
       << (r.pass ? "PASS" : "FAIL") << r.detail << "\n";
  }
  return os.str();
}

}  // namespace arcforge
