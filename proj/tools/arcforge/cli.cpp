#include "arcforge/cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "arcforge/certify.hpp"
#include "arcforge/criteria.hpp"
#include "arcforge/error.hpp"
#include "arcforge/families.hpp"
#include "arcforge/io.hpp"
#include "arcforge/repro.hpp"

namespace arcforge::cli {

namespace {

struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct SourceArgs {
  std::string family;
  int p = 0;
  int n = 0;
  int e = 1;
  int m = 0;
  std::string a = "[1]";
  std::string b = "[1]";
  std::string lines;
  std::string field;
  std::string curve_file;
  std::uint32_t d = 0;
};

struct Options {
  SourceArgs src;
  std::string format;  // per-subcommand default
  std::string out;
  unsigned jobs = 0;

  // construct
  std::string curve_out;
  std::string curve_format = "text";
  std::string points_out;

  // certify
  std::string checks = "arc,complete,frobenius,epsilon,criteria";
  std::string expect = "complete";
  std::uint64_t seed = 0;
  int m_max = 2;
  std::uint32_t samples = 200;
  int singular_m = 1;
  bool timing = false;

  // criteria
  std::string check;
  std::int64_t d = 0, q = 0, eps = 0, k = 0, s = 0, p = 0;
  bool classical = false;
  bool singular = false;

  // repro-paper
  std::string only;
  std::uint32_t q_max = 27;
};

// "[1,2]", "[]" or a bare integer.
std::vector<int> parse_coeffs(const std::string& text, const char* flag) {
  std::string body = text;
  if (!body.empty() && body.front() == '[') {
    if (body.back() != ']') throw ConfigError(std::string(flag) + ": unbalanced brackets in '" + text + "'");
    body = body.substr(1, body.size() - 2);
  }
  std::vector<int> out;
  std::stringstream ss(body);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      const int v = std::stoi(item, &used);
      if (item.find_first_not_of(" \t", used) != std::string::npos) throw std::invalid_argument(item);
      out.push_back(v);
    } catch (const std::logic_error&) {
      throw ConfigError(std::string(flag) + ": '" + item + "' is not an integer");
    }
  }
  return out;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot read '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_output(const std::string& path, const std::string& text, std::ostream& out) {
  if (path.empty() || path == "-") {
    out << text;
    if (!text.empty() && text.back() != '\n') out << '\n';
    return;
  }
  std::ofstream f(path);
  if (!f) throw ConfigError("cannot write '" + path + "'");
  f << text;
  if (!text.empty() && text.back() != '\n') f << '\n';
}

FieldPtr source_field(const SourceArgs& a) {
  if (!a.field.empty()) return io::field_from_spec(io::parse_field_spec(a.field));
  if (a.p == 0 || a.n == 0) throw ConfigError("need --field or both --p and --n");
  return Field::create(a.p, a.n);
}

FamilyInstance build_family(const SourceArgs& a, std::uint32_t qmax) {
  const std::string& f = a.family;
  if (f == "fermat-d") {
    if (a.p == 0 || a.n == 0) throw ConfigError("fermat-d needs --p and --n");
    const auto ac = parse_coeffs(a.a, "--a");
    const auto bc = parse_coeffs(a.b, "--b");
    return build_fermat_d(a.p, a.n, a.e, ac, bc, qmax);
  }
  if (f == "fermat-qm1") {
    if (a.p == 0 || a.n == 0) throw ConfigError("fermat-qm1 needs --p and --n");
    return build_fermat_qm1(a.p, a.n, qmax);
  }
  if (f == "hermitian") {
    if (a.p == 0 || (a.m == 0 && a.n == 0)) throw ConfigError("hermitian needs --p and --m (q = p^(2m))");
    return build_hermitian(a.p, a.m > 0 ? 2 * a.m : a.n, qmax);
  }
  if (f == "char2" || f == "char2-fermat") {
    if (a.p != 0 && a.p != 2) throw ConfigError("char2 is defined over p = 2 only");
    if (a.n == 0) throw ConfigError("char2 needs --n (q = 2^n)");
    return build_char2_fermat(a.n, qmax);
  }
  if (f == "triangle") {
    if (a.lines.empty()) throw ConfigError("triangle needs --lines \"l1;l2;l3\"");
    const FieldPtr field = source_field(a);
    return build_triangle_complement(field, io::parse_lines(*field, a.lines), qmax);
  }
  throw ConfigError("unknown family '" + f + "'");
}

CertifyInput load_input(const SourceArgs& a, std::uint32_t qmax, unsigned jobs) {
  const bool has_family = !a.family.empty();
  const bool has_curve = !a.curve_file.empty();
  if (has_family == has_curve) throw ConfigError("give exactly one of --family or --curve");
  if (has_family) {
    auto inst = build_family(a, qmax);
    if (a.d != 0) inst.arc = inst.arc.with_declared_d(a.d);
    return input_from_family(std::move(inst));
  }
  FieldPtr field;
  if (!a.field.empty() || (a.p != 0 && a.n != 0)) field = source_field(a);
  Curve curve = io::parse_curve(read_file(a.curve_file), field);
  const std::uint32_t d = a.d != 0 ? a.d : curve.degree();
  const auto idx = rational_point_indices(curve, qmax, jobs);
  ArcSet arc(Plane(curve.field_ptr()), idx, d, qmax);
  return CertifyInput{"curve-file", std::move(curve), std::move(arc), std::nullopt};
}

void add_source_options(CLI::App* cmd, SourceArgs& a, bool allow_curve) {
  cmd->add_option("--family", a.family, "fermat-d | fermat-qm1 | hermitian | char2 | triangle");
  cmd->add_option("--p", a.p, "Characteristic");
  cmd->add_option("--n", a.n, "Extension degree, q = p^n");
  cmd->add_option("--e", a.e, "fermat-d: subfield degree e | n, d = (q-1)/(p^e-1)")->capture_default_str();
  cmd->add_option("--m", a.m, "hermitian: q = p^(2m)");
  cmd->add_option("--a", a.a, "fermat-d: coefficient of X^d as a coefficient list, e.g. [1]")->capture_default_str();
  cmd->add_option("--b", a.b, "fermat-d: coefficient of Y^d")->capture_default_str();
  cmd->add_option("--lines", a.lines, "triangle: three lines \"[[..],[..],[..]];...;...\"");
  cmd->add_option("--field", a.field, "Field spec p=..,n=..[,poly=[..]]");
  if (allow_curve) {
    cmd->add_option("--curve", a.curve_file, "Curve file (text or JSON); the arc is its GF(q)-rational points");
    cmd->add_option("--d", a.d, "Declared d for the arc (default: curve degree / family value)");
  }
}

int cmd_construct(const Options& o, std::ostream& out) {
  if (o.src.family.empty()) throw ConfigError("construct needs --family");
  const auto inst = build_family(o.src, default_qmax());
  const Field& f = *inst.spec.field;
  if (!o.curve_out.empty()) {
    if (!inst.curve) throw ConfigError("family '" + o.src.family + "' has no defining curve");
    const std::string text =
        o.curve_format == "json" ? io::format_curve_json(*inst.curve) : io::format_curve_text(*inst.curve);
    write_output(o.curve_out, text, out);
  }
  if (!o.points_out.empty()) write_output(o.points_out, io::format_point_list(f, inst.arc.points()), out);

  std::ostringstream os;
  const std::string field = io::format_field_spec(f.spec());
  if (o.format == "json") {
    os << "{\"family\":\"" << family_name(inst.spec.id) << "\",\"route\":\"" << inst.spec.route << "\",\"field\":\""
       << field << "\",\"q\":" << inst.spec.q << ",\"k\":" << inst.arc.size() << ",\"d\":" << inst.spec.d
       << ",\"expected_k\":" << inst.spec.expected_k << "}\n";
  } else {
    os << "family " << family_name(inst.spec.id) << "\nroute  " << inst.spec.route << "\nfield  " << field
       << "\nq      " << inst.spec.q << "\nk      " << inst.arc.size() << "\nd      " << inst.spec.d << "\n";
  }
  write_output(o.out, os.str(), out);
  return inst.arc.size() == inst.spec.expected_k ? kOk : kCheckFailed;
}

int cmd_certify(const Options& o, std::ostream& out) {
  CertifyOptions co;
  co.check_arc = co.check_complete = co.check_frobenius = co.check_epsilon = co.check_criteria = false;
  std::stringstream ss(o.checks);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item == "arc") co.check_arc = true;
    else if (item == "complete") co.check_complete = true;
    else if (item == "frobenius") co.check_frobenius = true;
    else if (item == "epsilon") co.check_epsilon = true;
    else if (item == "criteria") co.check_criteria = true;
    else if (item == "all") co.check_arc = co.check_complete = co.check_frobenius = co.check_epsilon = co.check_criteria = true;
    else throw ConfigError("unknown check '" + item + "'");
  }
  if (o.expect != "complete" && o.expect != "incomplete") throw ConfigError("--expect must be complete or incomplete");
  co.expect_complete = o.expect == "complete";
  co.epsilon.m_max = o.m_max;
  co.epsilon.sample_size = o.samples;
  co.epsilon.seed = o.seed;
  co.singular_m = o.singular_m;
  co.workers = o.jobs;
  co.record_timing = o.timing;

  const CertifyInput input = load_input(o.src, default_qmax(), o.jobs);
  const Certificate cert = certify(input, co);
  write_output(o.out, o.format == "table" ? certificate_table(cert) : certificate_json(cert, 2), out);
  return cert.passed() ? kOk : kCheckFailed;
}

int cmd_criteria(const Options& o, std::ostream& out, const CLI::App& cmd) {
  auto need = [&](std::initializer_list<const char*> names) {
    for (const char* n : names)
      if (cmd.count(std::string("--") + n) == 0) throw ConfigError("--check " + o.check + " needs --" + n);
  };
  using namespace criteria;
  std::vector<CriterionReport> reports;
  if (o.check == "thmB") {
    need({"d", "q", "eps"});
    reports.push_back(thmB_condition(o.d, o.q, o.eps));
  } else if (o.check == "thm41") {
    need({"k", "d", "eps", "q"});
    reports.push_back(thm41_condition(o.k, o.d, o.eps, o.q, o.s));
  } else if (o.check == "lemma21") {
    need({"d", "q", "k"});
    reports.push_back(lemma21_report(o.d, o.q, o.k, !o.classical, !o.singular));
  } else if (o.check == "remark22") {
    need({"eps", "d", "q", "p"});
    reports = remark22_sanity(o.eps, o.d, o.q, o.p, !o.singular);
  } else if (o.check == "dual") {
    need({"d", "eps"});
    write_output(o.out, dual_degree_json(o.d, o.eps, o.q, dual_degree(o.d, o.eps, o.q)), out);
    return kOk;
  } else if (o.check == "lambda") {
    need({"q", "eps"});
    write_output(o.out, lambda_json(remark41_lambda(o.q, o.eps)), out);
    return kOk;
  } else {
    throw ConfigError("unknown --check '" + o.check + "'");
  }

  if (o.format == "table") {
    std::ostringstream os;
    for (const auto& r : reports)
      os << r.id << ": " << r.lhs << " " << r.relation << " " << r.rhs << " -> " << verdict_name(r.verdict)
         << (r.note.empty() ? "" : "  (" + r.note + ")") << "\n";
    write_output(o.out, os.str(), out);
  } else {
    write_output(o.out, criteria_json(reports), out);
  }
  for (const auto& r : reports)
    if (r.verdict == Verdict::Fail || r.verdict == Verdict::HypothesisViolated) return kCheckFailed;
  return kOk;
}

int cmd_repro(const Options& o, std::ostream& out) {
  ReproOptions ro;
  ro.only = o.only;
  ro.q_max = o.q_max;
  ro.workers = o.jobs;
  ro.seed = o.seed;
  const auto report = run_repro(ro);
  write_output(o.out, o.format == "json" ? repro_json(report) : repro_table(report), out);
  return report.all_pass() ? kOk : kCheckFailed;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  Options o;
  o.jobs = default_workers();

  CLI::App app{"Construct and verify complete (k,d)-arcs from plane curves over finite fields."};
  app.name("arcforge");
  app.set_version_flag("--version", std::string(tool_version()));
  app.require_subcommand(1);
  const std::string qmax_note = "Env ARCFORGE_QMAX overrides the field-size cap (default 1024).";
  app.footer(qmax_note);

  auto* construct = app.add_subcommand("construct", "Build a family's arc; print k and d, optionally write files");
  add_source_options(construct, o.src, false);
  construct->add_option("--format", o.format, "table (default) | json")->check(CLI::IsMember({"json", "table"}));
  construct->add_option("--out", o.out, "Write the summary here instead of stdout");
  construct->add_option("--curve-out", o.curve_out, "Write the canonical curve file");
  construct->add_option("--curve-format", o.curve_format, "text | json")
      ->check(CLI::IsMember({"text", "json"}))
      ->capture_default_str();
  construct->add_option("--points-out", o.points_out, "Write the point list, one point per line");

  auto* cert = app.add_subcommand("certify", "Verify a family or curve file and emit a certificate");
  add_source_options(cert, o.src, true);
  cert->add_option("--checks", o.checks, "Comma list of arc,complete,frobenius,epsilon,criteria (or all)")
      ->capture_default_str();
  cert->add_option("--expect", o.expect, "Expected completeness verdict: complete | incomplete")
      ->capture_default_str();
  cert->add_option("--seed", o.seed, "Seed for eps sampling")->capture_default_str();
  cert->add_option("--m-max", o.m_max, "Largest extension degree for eps sampling")->capture_default_str();
  cert->add_option("--samples", o.samples, "Points sampled per extension level")->capture_default_str();
  cert->add_option("--singular-m", o.singular_m, "Scan PG(2, q^m) for singular points")->capture_default_str();
  cert->add_option("--jobs", o.jobs, "Worker threads (default: available cores)");
  cert->add_option("--format", o.format, "json (default) | table")->check(CLI::IsMember({"json", "table"}));
  cert->add_option("--out", o.out, "Output path (default stdout)");
  cert->add_flag("--timing", o.timing, "Record wall-clock time (breaks byte-identical output)");

  auto* crit = app.add_subcommand("criteria", "Evaluate one integer criterion and print a JSON report");
  crit->add_option("--check", o.check, "thmB | thm41 | lemma21 | remark22 | dual | lambda")->required();
  crit->add_option("--d", o.d, "Degree / arc parameter d");
  crit->add_option("--q", o.q, "Field order");
  crit->add_option("--eps", o.eps, "Frobenius order eps");
  crit->add_option("--k", o.k, "Arc size");
  crit->add_option("--s", o.s, "Number of singular points on the curve")->capture_default_str();
  crit->add_option("--p", o.p, "Characteristic");
  crit->add_flag("--classical", o.classical, "lemma21: the curve is Frobenius classical");
  crit->add_flag("--singular", o.singular, "lemma21/remark22: the curve has singular points");
  crit->add_option("--format", o.format, "json (default) | table")->check(CLI::IsMember({"json", "table"}));
  crit->add_option("--out", o.out, "Output path (default stdout)");

  auto* repro = app.add_subcommand("repro-paper", "Run the full reproduction matrix and print a pass/fail table");
  repro->add_option("--only", o.only, "Run one claim id (" + [] {
    std::string s;
    for (const auto& c : repro_claims()) s += (s.empty() ? "" : ", ") + c;
    return s;
  }() + ")");
  repro->add_option("--q-max", o.q_max, "Skip rows over larger fields")->capture_default_str();
  repro->add_option("--seed", o.seed, "Seed for sampled rows")->capture_default_str();
  repro->add_option("--jobs", o.jobs, "Worker threads (default: available cores)");
  repro->add_option("--format", o.format, "table (default) | json")->check(CLI::IsMember({"json", "table"}));
  repro->add_option("--out", o.out, "Output path (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kConfigError;
  }
  if (o.jobs == 0) o.jobs = 1;

  try {
    if (construct->parsed()) {
      if (o.format.empty()) o.format = "table";
      return cmd_construct(o, out);
    }
    if (cert->parsed()) {
      if (o.format.empty()) o.format = "json";
      return cmd_certify(o, out);
    }
    if (crit->parsed()) {
      if (o.format.empty()) o.format = "json";
      return cmd_criteria(o, out, *crit);
    }
    if (o.format.empty()) o.format = "table";
    return cmd_repro(o, out);
  } catch (const ConfigError& e) {
    err << "arcforge: " << e.what() << "\n";
  } catch (const Error& e) {
    err << "arcforge: " << e.what() << "\n";
  } catch (const std::exception& e) {
    err << "arcforge: unexpected failure: " << e.what() << "\n";
  }
  return kConfigError;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  std::vector<const char*> argv{"arcforge"};
  for (const auto& a : args) argv.push_back(a.c_str());
  return run(static_cast<int>(argv.size()), argv.data(), out, err);
}

}  // namespace arcforge::cli
