#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include "arcforge/gf.hpp"

namespace arcforge {

using Exponents = std::array<std::uint32_t, 3>;

struct Term {
  Elem coeff = 0;
  Exponents exps{};
};

/// Sparse polynomial in X0, X1, X2 over a finite field. Terms are kept in
/// descending lexicographic exponent order with no zero coefficients, so
/// equality is structural.
class Poly {
 public:
  explicit Poly(FieldPtr field) : field_(std::move(field)) {}

  static Poly monomial(FieldPtr field, Elem coeff, Exponents exps);
  static Poly constant(FieldPtr field, Elem c) { return monomial(std::move(field), c, {0, 0, 0}); }
  static Poly variable(FieldPtr field, int i);
  static Poly from_terms(FieldPtr field, const std::vector<Term>& terms);

  const FieldPtr& field_ptr() const noexcept { return field_; }
  const Field& field() const noexcept { return *field_; }

  bool is_zero() const noexcept { return terms_.empty(); }
  std::size_t size() const noexcept { return terms_.size(); }
  std::vector<Term> terms() const;
  Elem coeff(const Exponents& e) const;

  /// Total degree of the highest term; 0 for the zero polynomial.
  std::uint32_t degree() const noexcept;
  bool is_homogeneous() const noexcept;

  void add_term(Elem coeff, const Exponents& exps);

  Poly operator+(const Poly& o) const;
  Poly operator-(const Poly& o) const;
  Poly operator*(const Poly& o) const;
  Poly scaled(Elem c) const;
  Poly pow(std::uint64_t k) const;

  /// Formal partial derivative in X_i with mod-p exponent arithmetic.
  Poly partial(int i) const;
  Elem evaluate(const std::array<Elem, 3>& x) const noexcept;
  /// Coefficients re-read in the extension field.
  Poly base_change(const Extension& ext) const;

  bool operator==(const Poly& o) const;

  /// Human-readable, e.g. "X0^4 + 2*X1^4 + [0,1]*X2^4".
  std::string to_string() const;

 private:
  void check_field(const Poly& o) const;

  FieldPtr field_;
  std::map<Exponents, Elem, std::greater<Exponents>> terms_;
};

/// Result of dividing by a polynomial whose pivot-variable leading term is
/// a lone constant multiple of X_pivot^d.
struct PivotDivision {
  Poly quotient;
  Poly remainder;
};

/// Exact division of `dividend` by `divisor`, treating both as univariate in
/// X_pivot over the ring of the other two variables. Requires the divisor to
/// be homogeneous of degree d with a nonzero X_pivot^d term.
PivotDivision divide_by_pivot(const Poly& dividend, const Poly& divisor, int pivot);

}  // namespace arcforge
