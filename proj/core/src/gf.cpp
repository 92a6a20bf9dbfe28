#include "arcforge/gf.hpp"

#include <algorithm>
#include <charconv>
#include <sstream>

#include "arcforge/error.hpp"

namespace arcforge {

bool is_prime(std::int64_t v) noexcept {
  if (v < 2) return false;
  for (std::int64_t d = 2; d * d <= v; ++d)
    if (v % d == 0) return false;
  return true;
}

namespace detail {
namespace {

int mod_p(std::int64_t v, int p) {
  const auto r = static_cast<int>(v % p);
  return r < 0 ? r + p : r;
}

int inv_mod_p(int a, int p) {
  // p is prime, a != 0
  std::int64_t result = 1, base = a, e = p - 2;
  while (e > 0) {
    if (e & 1) result = result * base % p;
    base = base * base % p;
    e >>= 1;
  }
  return static_cast<int>(result);
}

void trim(PrimePoly& f) {
  while (!f.empty() && f.back() == 0) f.pop_back();
}

PrimePoly poly_mod(PrimePoly a, const PrimePoly& m, int p) {
  trim(a);
  const std::size_t dm = m.size() - 1;
  const int lead_inv = inv_mod_p(m.back(), p);
  while (a.size() > dm) {
    const int factor = a.back() * lead_inv % p;
    const std::size_t shift = a.size() - 1 - dm;
    for (std::size_t i = 0; i <= dm; ++i)
      a[shift + i] = mod_p(a[shift + i] - static_cast<std::int64_t>(factor) * m[i], p);
    trim(a);
  }
  return a;
}

PrimePoly poly_mulmod(const PrimePoly& a, const PrimePoly& b, const PrimePoly& m, int p) {
  if (a.empty() || b.empty()) return {};
  PrimePoly r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j)
      r[i + j] = static_cast<int>((r[i + j] + static_cast<std::int64_t>(a[i]) * b[j]) % p);
  return poly_mod(std::move(r), m, p);
}

PrimePoly poly_powmod(PrimePoly base, std::uint64_t e, const PrimePoly& m, int p) {
  PrimePoly result{1};
  base = poly_mod(std::move(base), m, p);
  while (e > 0) {
    if (e & 1) result = poly_mulmod(result, base, m, p);
    base = poly_mulmod(base, base, m, p);
    e >>= 1;
  }
  return poly_mod(std::move(result), m, p);
}

PrimePoly poly_gcd(PrimePoly a, PrimePoly b, int p) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    PrimePoly r = poly_mod(a, b, p);
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

}  // namespace

bool is_irreducible(const PrimePoly& f_in, int p) {
  PrimePoly f = f_in;
  trim(f);
  if (f.size() < 2) return false;
  const int n = static_cast<int>(f.size()) - 1;
  if (n == 1) return true;
  // f has no factor of degree <= n/2  <=>  gcd(f, X^{p^i} - X) = 1 for i <= n/2
  PrimePoly x_pow{0, 1};  // X^{p^i} mod f, starting at i = 0
  for (int i = 1; i <= n / 2; ++i) {
    x_pow = poly_powmod(x_pow, static_cast<std::uint64_t>(p), f, p);
    PrimePoly diff = x_pow;
    if (diff.size() < 2) diff.resize(2, 0);
    diff[1] = mod_p(diff[1] - 1, p);
    trim(diff);
    if (diff.empty()) return false;  // X^{p^i} == X mod f
    if (poly_gcd(f, diff, p).size() > 1) return false;
  }
  return true;
}

PrimePoly smallest_irreducible(int p, int n) {
  std::uint64_t count = 1;
  for (int i = 0; i < n; ++i) count *= static_cast<std::uint64_t>(p);
  PrimePoly f(static_cast<std::size_t>(n) + 1, 0);
  f[n] = 1;
  for (std::uint64_t idx = 0; idx < count; ++idx) {
    std::uint64_t v = idx;
    for (int i = 0; i < n; ++i) {
      f[i] = static_cast<int>(v % p);
      v /= p;
    }
    if (is_irreducible(f, p)) return f;
  }
  throw Error(Errc::InvariantViolation, "no irreducible polynomial found");
}

}  // namespace detail

namespace {

std::vector<int> digits_of(std::uint64_t v, int p, int n) {
  std::vector<int> d(static_cast<std::size_t>(n), 0);
  for (int i = 0; i < n; ++i) {
    d[i] = static_cast<int>(v % p);
    v /= p;
  }
  return d;
}

std::uint64_t value_of(const std::vector<int>& d, int p) {
  std::uint64_t v = 0;
  for (auto it = d.rbegin(); it != d.rend(); ++it) v = v * p + static_cast<std::uint64_t>(*it);
  return v;
}

std::vector<std::uint64_t> prime_factors(std::uint64_t v) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t d = 2; d * d <= v; ++d) {
    if (v % d == 0) {
      out.push_back(d);
      while (v % d == 0) v /= d;
    }
  }
  if (v > 1) out.push_back(v);
  return out;
}

}  // namespace

FieldPtr Field::create(int p, int n, std::optional<std::vector<int>> poly) {
  if (!is_prime(p)) throw Error(Errc::NotPrime, std::to_string(p) + " is not prime");
  if (n < 1) throw Error(Errc::BadParameters, "extension degree must be >= 1");
  std::uint64_t q = 1;
  for (int i = 0; i < n; ++i) {
    q *= static_cast<std::uint64_t>(p);
    if (q > kMaxFieldOrder)
      throw Error(Errc::TooLarge, "field order exceeds " + std::to_string(kMaxFieldOrder));
  }

  std::vector<int> f;
  if (poly) {
    f = *poly;
    if (f.size() != static_cast<std::size_t>(n) + 1 || f.back() != 1)
      throw Error(Errc::BadParameters, "defining polynomial must be monic of degree n");
    for (int c : f)
      if (c < 0 || c >= p) throw Error(Errc::BadParameters, "polynomial coefficient out of range");
    if (!detail::is_irreducible(f, p))
      throw Error(Errc::NotIrreducible, "defining polynomial factors over GF(p)");
  } else {
    f = detail::smallest_irreducible(p, n);
  }

  std::shared_ptr<Field> field(new Field());
  field->spec_ = FieldSpec{p, n, std::move(f)};
  field->q_ = static_cast<std::uint32_t>(q);
  field->order_ = field->q_ - 1;
  field->build_tables();
  return field;
}

void Field::build_tables() {
  const int p = spec_.p;
  const int n = spec_.n;
  const auto& f = spec_.poly;

  // Polynomial-basis multiplication, only used while bootstrapping the tables.
  auto slow_mul = [&](std::uint64_t a, std::uint64_t b) {
    auto da = digits_of(a, p, n);
    auto db = digits_of(b, p, n);
    return value_of(detail::poly_mulmod(da, db, f, p), p);
  };
  auto slow_pow = [&](std::uint64_t a, std::uint64_t e) {
    std::uint64_t result = 1;
    while (e > 0) {
      if (e & 1) result = slow_mul(result, a);
      a = slow_mul(a, a);
      e >>= 1;
    }
    return result;
  };

  Elem gen = 1;
  if (q_ > 2) {
    const auto factors = prime_factors(order_);
    for (std::uint64_t cand = 2; cand < q_; ++cand) {
      bool primitive = true;
      for (auto r : factors) {
        if (slow_pow(cand, order_ / r) == 1) {
          primitive = false;
          break;
        }
      }
      if (primitive) {
        gen = static_cast<Elem>(cand);
        break;
      }
    }
  }

  log_.assign(q_, 0);
  exp_.assign(2 * static_cast<std::size_t>(order_), 0);
  std::uint64_t cur = 1;
  for (std::uint32_t i = 0; i < order_; ++i) {
    exp_[i] = static_cast<Elem>(cur);
    exp_[i + order_] = static_cast<Elem>(cur);
    log_[cur] = i;
    cur = slow_mul(cur, gen);
  }
  if (cur != 1) throw Error(Errc::InvariantViolation, "generator search failed");

  // zech_[k] = log(1 + g^k)
  zech_.assign(order_, kNoLog);
  for (std::uint32_t k = 0; k < order_; ++k) {
    const Elem x = exp_[k];
    const Elem c0 = x % static_cast<Elem>(p);
    const Elem sum = x - c0 + (c0 + 1) % static_cast<Elem>(p);
    zech_[k] = sum == 0 ? kNoLog : log_[sum];
  }
  minus_one_ = static_cast<Elem>(p - 1);
}

Elem Field::inv(Elem a) const {
  if (a == 0) throw Error(Errc::DivisionByZero, "inverse of zero");
  return exp_[(order_ - log_[a]) % order_];
}

Elem Field::pow(Elem a, std::uint64_t k) const noexcept {
  Elem result = 1;
  Elem base = a;
  while (k > 0) {
    if (k & 1) result = mul(result, base);
    base = mul(base, base);
    k >>= 1;
  }
  return result;
}

Elem Field::frobenius(Elem x, unsigned e) const noexcept {
  e %= static_cast<unsigned>(spec_.n);
  for (unsigned i = 0; i < e; ++i) x = pow(x, static_cast<std::uint64_t>(spec_.p));
  return x;
}

Elem Field::from_int(std::int64_t v) const noexcept {
  auto r = v % spec_.p;
  if (r < 0) r += spec_.p;
  return static_cast<Elem>(r);
}

Elem Field::from_coeffs(std::span<const int> coeffs) const {
  if (coeffs.size() > static_cast<std::size_t>(spec_.n)) {
    for (std::size_t i = spec_.n; i < coeffs.size(); ++i)
      if (coeffs[i] != 0)
        throw Error(Errc::BadElement, "coefficient list longer than extension degree");
  }
  std::uint64_t v = 0;
  const std::size_t len = std::min(coeffs.size(), static_cast<std::size_t>(spec_.n));
  for (std::size_t i = len; i-- > 0;) {
    if (coeffs[i] < 0 || coeffs[i] >= spec_.p)
      throw Error(Errc::BadElement, "coefficient " + std::to_string(coeffs[i]) + " not in [0,p)");
    v = v * spec_.p + static_cast<std::uint64_t>(coeffs[i]);
  }
  return static_cast<Elem>(v);
}

std::vector<int> Field::coeffs(Elem a) const { return digits_of(a, spec_.p, spec_.n); }

std::string Field::format(Elem a) const {
  std::string out = "[";
  const auto c = coeffs(a);
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(c[i]);
  }
  out += ']';
  return out;
}

Elem Field::parse(std::string_view text) const {
  std::vector<int> c;
  std::size_t i = 0;
  auto skip_ws = [&] {
    while (i < text.size() && (text[i] == ' ' || text[i] == '\t')) ++i;
  };
  skip_ws();
  if (i >= text.size() || text[i] != '[')
    throw Error(Errc::ParseError, "element must look like [c0,c1,...]: " + std::string(text));
  ++i;
  skip_ws();
  if (i < text.size() && text[i] == ']') {
    ++i;
  } else {
    while (true) {
      skip_ws();
      int v = 0;
      const auto* first = text.data() + i;
      auto [ptr, ec] = std::from_chars(first, text.data() + text.size(), v);
      if (ec != std::errc()) throw Error(Errc::ParseError, "bad coefficient in " + std::string(text));
      i += static_cast<std::size_t>(ptr - first);
      c.push_back(v);
      skip_ws();
      if (i < text.size() && text[i] == ',') {
        ++i;
        continue;
      }
      if (i < text.size() && text[i] == ']') {
        ++i;
        break;
      }
      throw Error(Errc::ParseError, "unterminated element " + std::string(text));
    }
  }
  skip_ws();
  if (i != text.size()) throw Error(Errc::ParseError, "trailing characters in " + std::string(text));
  return from_coeffs(c);
}

bool same_field(const Field& a, const Field& b) noexcept { return &a == &b || a.spec() == b.spec(); }

// FieldElement

FieldElement::FieldElement(FieldPtr field, Elem value) : field_(std::move(field)), value_(value) {
  if (!field_) throw Error(Errc::BadParameters, "null field");
  if (!field_->contains(value_)) throw Error(Errc::BadElement, "value outside field");
}

FieldElement FieldElement::from_coeffs(FieldPtr field, std::span<const int> coeffs) {
  const Elem v = field->from_coeffs(coeffs);
  return {std::move(field), v};
}

void FieldElement::check_same(const FieldElement& o) const {
  if (!same_field(*field_, *o.field_)) throw Error(Errc::FieldMismatch, "operands from different fields");
}

FieldElement FieldElement::operator+(const FieldElement& o) const {
  check_same(o);
  return {field_, field_->add(value_, o.value_)};
}
FieldElement FieldElement::operator-(const FieldElement& o) const {
  check_same(o);
  return {field_, field_->sub(value_, o.value_)};
}
FieldElement FieldElement::operator*(const FieldElement& o) const {
  check_same(o);
  return {field_, field_->mul(value_, o.value_)};
}
FieldElement FieldElement::operator/(const FieldElement& o) const {
  check_same(o);
  return {field_, field_->div(value_, o.value_)};
}
FieldElement FieldElement::operator-() const { return {field_, field_->neg(value_)}; }
FieldElement FieldElement::inv() const { return {field_, field_->inv(value_)}; }
FieldElement FieldElement::pow(std::uint64_t k) const { return {field_, field_->pow(value_, k)}; }
FieldElement FieldElement::frobenius(unsigned e) const { return {field_, field_->frobenius(value_, e)}; }

bool FieldElement::operator==(const FieldElement& o) const {
  return same_field(*field_, *o.field_) && value_ == o.value_;
}

// Subfields

bool SubfieldEmbedding::contains(Elem x) const {
  return std::binary_search(members.begin(), members.end(), x);
}

SubfieldEmbedding subfield(const Field& field, int e) {
  if (e < 1 || field.n() % e != 0)
    throw Error(Errc::NotADivisor, std::to_string(e) + " does not divide " + std::to_string(field.n()));
  SubfieldEmbedding sub;
  sub.e = e;
  sub.order = 1;
  for (int i = 0; i < e; ++i) sub.order *= static_cast<std::uint32_t>(field.p());
  for (Elem x = 0; x < field.q(); ++x)
    if (field.frobenius(x, static_cast<unsigned>(e)) == x) sub.members.push_back(x);
  if (sub.members.size() != sub.order)
    throw Error(Errc::InvariantViolation, "subfield size mismatch");
  sub.generator = field.pow(field.primitive(), (field.q() - 1) / (sub.order - 1));
  return sub;
}

std::vector<Elem> dth_roots(const Field& field, const SubfieldEmbedding& sub, Elem a, Elem b,
                            std::uint64_t d) {
  if (a == 0 || b == 0 || !sub.contains(a) || !sub.contains(b))
    throw Error(Errc::BadParameters, "A and B must be nonzero subfield elements");
  if (sub.order < 2 || d != (field.q() - 1) / (sub.order - 1))
    throw Error(Errc::BadParameters, "d must equal (q-1)/(q'-1)");
  if (d % static_cast<std::uint64_t>(field.p()) == 0)
    throw Error(Errc::BadParameters, "p divides d");
  std::vector<Elem> roots;
  for (Elem x = 1; x < field.q(); ++x)
    if (field.add(field.mul(a, field.pow(x, d)), b) == 0) roots.push_back(x);
  if (roots.size() != d)
    throw Error(Errc::InvariantViolation, "expected " + std::to_string(d) + " roots, found " +
                                              std::to_string(roots.size()));
  return roots;
}

Extension extend(const FieldPtr& base, int m) {
  if (m < 1) throw Error(Errc::BadParameters, "extension degree must be >= 1");
  Extension ext;
  ext.base = base;
  ext.m = m;
  if (m == 1) {
    ext.ext = base;
    ext.image.resize(base->q());
    for (Elem x = 0; x < base->q(); ++x) ext.image[x] = x;
    return ext;
  }
  ext.ext = Field::create(base->p(), base->n() * m);
  const Field& big = *ext.ext;
  const auto& f = base->spec().poly;

  // A root of the base defining polynomial among the q-fixed points of the big field.
  const unsigned base_n = static_cast<unsigned>(base->n());
  Elem theta = 0;
  bool found = false;
  for (Elem x = 0; x < big.q() && !found; ++x) {
    if (big.frobenius(x, base_n) != x) continue;
    Elem acc = 0;
    for (std::size_t i = f.size(); i-- > 0;) acc = big.add(big.mul(acc, x), big.from_int(f[i]));
    if (acc == 0) {
      theta = x;
      found = true;
    }
  }
  if (!found) throw Error(Errc::InvariantViolation, "no root of the base polynomial in extension");

  ext.image.resize(base->q());
  for (Elem x = 0; x < base->q(); ++x) {
    const auto c = base->coeffs(x);
    Elem acc = 0;
    for (std::size_t i = c.size(); i-- > 0;) acc = big.add(big.mul(acc, theta), big.from_int(c[i]));
    ext.image[x] = acc;
  }
  return ext;
}

}  // namespace arcforge
