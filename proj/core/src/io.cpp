#include "arcforge/io.hpp"

#include <json.hpp>
#include <regex>
#include <sstream>

#include "arcforge/error.hpp"

namespace arcforge::io {

using nlohmann::json;

namespace {

std::string trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r\n");
  return std::string(s.substr(b, e - b + 1));
}

json parse_json(std::string_view text, const char* what) {
  try {
    return json::parse(text);
  } catch (const json::exception& ex) {
    throw Error(Errc::ParseError, std::string("bad ") + what + ": " + ex.what());
  }
}

std::vector<int> int_list(const json& j, const char* what) {
  if (!j.is_array()) throw Error(Errc::ParseError, std::string(what) + " must be a list");
  std::vector<int> out;
  for (const auto& v : j) {
    if (!v.is_number_integer()) throw Error(Errc::ParseError, std::string(what) + " must hold integers");
    out.push_back(v.get<int>());
  }
  return out;
}

json coeff_json(const Field& f, Elem e) { return f.coeffs(e); }

Exponents exps_from(const std::vector<int>& e) {
  if (e.size() != 3) throw Error(Errc::ParseError, "exponent triple must have three entries");
  for (int v : e)
    if (v < 0) throw Error(Errc::ParseError, "negative exponent");
  return {static_cast<std::uint32_t>(e[0]), static_cast<std::uint32_t>(e[1]), static_cast<std::uint32_t>(e[2])};
}

}  // namespace

FieldSpec parse_field_spec(std::string_view text) {
  static const std::regex re(R"(^\s*p\s*=\s*(\d+)\s*,\s*n\s*=\s*(\d+)\s*(?:,\s*poly\s*=\s*(\[[^\]]*\]))?\s*$)");
  const std::string s(text);
  std::smatch m;
  if (!std::regex_match(s, m, re)) throw Error(Errc::ParseError, "field spec must look like p=3,n=2,poly=[1,0,1]");
  FieldSpec spec;
  spec.p = std::stoi(m[1].str());
  spec.n = std::stoi(m[2].str());
  if (m[3].matched) spec.poly = int_list(parse_json(m[3].str(), "polynomial"), "polynomial");
  return spec;
}

std::string format_field_spec(const FieldSpec& spec) {
  std::string out = "p=" + std::to_string(spec.p) + ",n=" + std::to_string(spec.n);
  if (!spec.poly.empty()) out += ",poly=" + json(spec.poly).dump();
  return out;
}

FieldPtr field_from_spec(const FieldSpec& spec) {
  if (spec.poly.empty()) return Field::create(spec.p, spec.n);
  return Field::create(spec);
}

Triple parse_triple(const Field& field, std::string_view text) {
  const json j = parse_json(text, "triple");
  if (!j.is_array() || j.size() != 3) throw Error(Errc::ParseError, "a triple has three element lists");
  Triple t{};
  for (std::size_t i = 0; i < 3; ++i) t[i] = field.from_coeffs(int_list(j[i], "element"));
  return t;
}

std::string format_triple(const Field& field, const Triple& t) {
  std::string out = "[";
  for (std::size_t i = 0; i < 3; ++i) {
    if (i) out += ',';
    out += field.format(t[i]);
  }
  return out + "]";
}

std::array<ProjLine, 3> parse_lines(const Field& field, std::string_view text) {
  std::array<ProjLine, 3> out;
  std::size_t start = 0;
  for (std::size_t i = 0; i < 3; ++i) {
    const auto pos = text.find(';', start);
    if ((i < 2) != (pos != std::string_view::npos))
      throw Error(Errc::ParseError, "expected three ';'-separated lines");
    const auto piece = text.substr(start, i < 2 ? pos - start : std::string_view::npos);
    out[i] = ProjLine{parse_triple(field, trim(piece))};
    start = pos + 1;
  }
  return out;
}

std::string format_curve_text(const Curve& curve) {
  const Field& f = curve.field();
  std::ostringstream os;
  os << "# field " << format_field_spec(f.spec()) << "\n";
  os << "# degree " << curve.degree() << "\n";
  for (const auto& t : curve.monomials())
    os << "coef=" << f.format(t.coeff) << " exp=" << t.exps[0] << "," << t.exps[1] << "," << t.exps[2] << "\n";
  return os.str();
}

std::string format_curve_json(const Curve& curve) {
  const Field& f = curve.field();
  json mons = json::array();
  for (const auto& t : curve.monomials()) mons.push_back({{"c", coeff_json(f, t.coeff)}, {"e", t.exps}});
  nlohmann::ordered_json out;
  out["field"] = format_field_spec(f.spec());
  out["monomials"] = mons;
  return out.dump();
}

Curve parse_curve(std::string_view text, const FieldPtr& field_in) {
  FieldPtr field = field_in;
  const std::string body = trim(text);

  if (!body.empty() && body.front() == '{') {
    const json j = parse_json(body, "curve JSON");
    if (!field) {
      if (!j.contains("field")) throw Error(Errc::ParseError, "curve JSON names no field and none was given");
      field = field_from_spec(parse_field_spec(j.at("field").get<std::string>()));
    }
    if (!j.contains("monomials") || !j["monomials"].is_array())
      throw Error(Errc::ParseError, "curve JSON needs a monomials list");
    Poly poly(field);
    for (const auto& m : j["monomials"]) {
      const Elem c = field->from_coeffs(int_list(m.at("c"), "coefficient"));
      if (c == 0) throw Error(Errc::ParseError, "zero coefficient in curve");
      poly.add_term(c, exps_from(int_list(m.at("e"), "exponents")));
    }
    return Curve(std::move(poly));
  }

  static const std::regex mono_re(R"(^coef\s*=\s*(\[[^\]]*\])\s+exp\s*=\s*(\d+)\s*,\s*(\d+)\s*,\s*(\d+)$)");
  static const std::regex field_re(R"(^#\s*field\s*[:=]?\s*(.+)$)");
  std::vector<std::pair<std::string, Exponents>> raw;
  std::istringstream in{std::string(body)};
  std::string line;
  while (std::getline(in, line)) {
    line = trim(line);
    if (line.empty()) continue;
    std::smatch m;
    if (line.front() == '#') {
      if (!field && std::regex_match(line, m, field_re)) field = field_from_spec(parse_field_spec(m[1].str()));
      continue;
    }
    if (!std::regex_match(line, m, mono_re)) throw Error(Errc::ParseError, "bad monomial line: " + line);
    raw.emplace_back(m[1].str(), Exponents{static_cast<std::uint32_t>(std::stoul(m[2].str())),
                                           static_cast<std::uint32_t>(std::stoul(m[3].str())),
                                           static_cast<std::uint32_t>(std::stoul(m[4].str()))});
  }
  if (!field) throw Error(Errc::ParseError, "curve file names no field and none was given");
  Poly poly(field);
  for (const auto& [coef, e] : raw) {
    const Elem c = field->parse(coef);
    if (c == 0) throw Error(Errc::ParseError, "zero coefficient in curve");
    poly.add_term(c, e);
  }
  return Curve(std::move(poly));
}

std::string format_point_list(const Field& field, const std::vector<ProjPoint>& points) {
  std::string out;
  for (const auto& p : points) out += format_triple(field, p.coords) + "\n";
  return out;
}

}  // namespace arcforge::io
