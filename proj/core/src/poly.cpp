#include "arcforge/poly.hpp"

#include "arcforge/error.hpp"

namespace arcforge {

Poly Poly::monomial(FieldPtr field, Elem coeff, Exponents exps) {
  Poly p(std::move(field));
  p.add_term(coeff, exps);
  return p;
}

Poly Poly::variable(FieldPtr field, int i) {
  Exponents e{0, 0, 0};
  e.at(static_cast<std::size_t>(i)) = 1;
  return monomial(std::move(field), Field::one(), e);
}

Poly Poly::from_terms(FieldPtr field, const std::vector<Term>& terms) {
  Poly p(std::move(field));
  for (const auto& t : terms) p.add_term(t.coeff, t.exps);
  return p;
}

std::vector<Term> Poly::terms() const {
  std::vector<Term> out;
  out.reserve(terms_.size());
  for (const auto& [e, c] : terms_) out.push_back(Term{c, e});
  return out;
}

Elem Poly::coeff(const Exponents& e) const {
  const auto it = terms_.find(e);
  return it == terms_.end() ? 0 : it->second;
}

std::uint32_t Poly::degree() const noexcept {
  std::uint32_t d = 0;
  for (const auto& [e, c] : terms_) d = std::max(d, e[0] + e[1] + e[2]);
  return d;
}

bool Poly::is_homogeneous() const noexcept {
  if (terms_.empty()) return true;
  const auto& first = terms_.begin()->first;
  const std::uint32_t d = first[0] + first[1] + first[2];
  for (const auto& [e, c] : terms_)
    if (e[0] + e[1] + e[2] != d) return false;
  return true;
}

void Poly::add_term(Elem coeff, const Exponents& exps) {
  if (coeff == 0) return;
  auto [it, inserted] = terms_.try_emplace(exps, coeff);
  if (!inserted) {
    it->second = field_->add(it->second, coeff);
    if (it->second == 0) terms_.erase(it);
  }
}

void Poly::check_field(const Poly& o) const {
  if (!same_field(*field_, *o.field_)) throw Error(Errc::FieldMismatch, "polynomials over different fields");
}

Poly Poly::operator+(const Poly& o) const {
  check_field(o);
  Poly r = *this;
  for (const auto& [e, c] : o.terms_) r.add_term(c, e);
  return r;
}

Poly Poly::operator-(const Poly& o) const {
  check_field(o);
  Poly r = *this;
  for (const auto& [e, c] : o.terms_) r.add_term(field_->neg(c), e);
  return r;
}

Poly Poly::operator*(const Poly& o) const {
  check_field(o);
  Poly r(field_);
  for (const auto& [ea, ca] : terms_)
    for (const auto& [eb, cb] : o.terms_)
      r.add_term(field_->mul(ca, cb), {ea[0] + eb[0], ea[1] + eb[1], ea[2] + eb[2]});
  return r;
}

Poly Poly::scaled(Elem c) const {
  Poly r(field_);
  for (const auto& [e, v] : terms_) r.add_term(field_->mul(v, c), e);
  return r;
}

Poly Poly::pow(std::uint64_t k) const {
  Poly result = constant(field_, Field::one());
  Poly base = *this;
  while (k > 0) {
    if (k & 1) result = result * base;
    k >>= 1;
    if (k) base = base * base;
  }
  return result;
}

Poly Poly::partial(int i) const {
  const auto idx = static_cast<std::size_t>(i);
  if (idx > 2) throw Error(Errc::BadParameters, "coordinate index must be 0, 1 or 2");
  Poly r(field_);
  for (const auto& [e, c] : terms_) {
    if (e[idx] == 0) continue;
    const Elem factor = field_->from_int(static_cast<std::int64_t>(e[idx] % static_cast<std::uint32_t>(field_->p())));
    if (factor == 0) continue;
    Exponents ne = e;
    --ne[idx];
    r.add_term(field_->mul(c, factor), ne);
  }
  return r;
}

Elem Poly::evaluate(const std::array<Elem, 3>& x) const noexcept {
  const Field& f = *field_;
  Elem acc = 0;
  for (const auto& [e, c] : terms_) {
    Elem t = c;
    for (std::size_t i = 0; i < 3 && t != 0; ++i)
      if (e[i]) t = f.mul(t, f.pow(x[i], e[i]));
    acc = f.add(acc, t);
  }
  return acc;
}

Poly Poly::base_change(const Extension& ext) const {
  if (!same_field(*field_, *ext.base)) throw Error(Errc::FieldMismatch, "extension base differs from polynomial field");
  Poly r(ext.ext);
  for (const auto& [e, c] : terms_) r.add_term(ext.map(c), e);
  return r;
}

bool Poly::operator==(const Poly& o) const {
  return same_field(*field_, *o.field_) && terms_ == o.terms_;
}

std::string Poly::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    if (!first) out += " + ";
    first = false;
    std::string mono;
    for (int i = 0; i < 3; ++i) {
      if (e[i] == 0) continue;
      if (!mono.empty()) mono += '*';
      mono += "X" + std::to_string(i);
      if (e[i] > 1) mono += "^" + std::to_string(e[i]);
    }
    std::string coeff;
    if (field_->in_prime_field(c))
      coeff = std::to_string(c);
    else
      coeff = field_->format(c);
    if (mono.empty())
      out += coeff;
    else if (c == 1)
      out += mono;
    else
      out += coeff + "*" + mono;
  }
  return out;
}

PivotDivision divide_by_pivot(const Poly& dividend, const Poly& divisor, int pivot) {
  const auto pv = static_cast<std::size_t>(pivot);
  if (pv > 2) throw Error(Errc::BadParameters, "pivot must be 0, 1 or 2");
  if (divisor.is_zero()) throw Error(Errc::DivisionByZero, "division by the zero polynomial");

  std::uint32_t lead_deg = 0;
  for (const auto& t : divisor.terms()) lead_deg = std::max(lead_deg, t.exps[pv]);
  Exponents lead_exps{0, 0, 0};
  lead_exps[pv] = lead_deg;
  Elem lead = 0;
  for (const auto& t : divisor.terms()) {
    if (t.exps[pv] != lead_deg) continue;
    if (t.exps != lead_exps)
      throw Error(Errc::NoPivot, "leading coefficient in the pivot variable is not a constant");
    lead = t.coeff;
  }
  const Field& f = divisor.field();
  const Elem lead_inv = f.inv(lead);

  Poly quotient(divisor.field_ptr());
  Poly remainder = dividend;
  while (true) {
    // The remainder term of highest pivot degree that can still be reduced.
    bool found = false;
    Term best;
    for (const auto& t : remainder.terms()) {
      if (t.exps[pv] >= lead_deg && (!found || t.exps[pv] > best.exps[pv])) {
        best = t;
        found = true;
      }
    }
    if (!found) break;
    Exponents qe = best.exps;
    qe[pv] -= lead_deg;
    const Poly step = Poly::monomial(divisor.field_ptr(), f.mul(best.coeff, lead_inv), qe);
    quotient.add_term(f.mul(best.coeff, lead_inv), qe);
    remainder = remainder - step * divisor;
  }
  return {std::move(quotient), std::move(remainder)};
}

}  // namespace arcforge
