#pragma once

// Arithmetic in GF(p^n).
//
// Elements are stored as a single integer: the little-endian base-p encoding
// of the coefficient vector [c0, ..., c_{n-1}] in the power basis of the
// generator t, i.e. value = c0 + c1*p + ... + c_{n-1}*p^{n-1}. Zero encodes
// as 0 and one as 1. Multiplication and addition go through log / Zech
// tables built once per field, so every operation is O(1) table work.

#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace arcforge {

using Elem = std::uint32_t;

/// Largest field order accepted by Field::create.
inline constexpr std::uint64_t kMaxFieldOrder = std::uint64_t{1} << 20;

struct FieldSpec {
  int p = 0;
  int n = 0;
  /// Monic defining polynomial, constant term first; size n + 1.
  std::vector<int> poly;

  friend bool operator==(const FieldSpec&, const FieldSpec&) = default;
};

class Field;
using FieldPtr = std::shared_ptr<const Field>;

class Field {
 public:
  /// Validates p and the defining polynomial. When `poly` is omitted the
  /// lexicographically smallest monic irreducible of degree n is used
  /// (constant term varying fastest).
  static FieldPtr create(int p, int n, std::optional<std::vector<int>> poly = std::nullopt);
  static FieldPtr create(const FieldSpec& spec) { return create(spec.p, spec.n, spec.poly); }

  const FieldSpec& spec() const noexcept { return spec_; }
  int p() const noexcept { return spec_.p; }
  int n() const noexcept { return spec_.n; }
  std::uint32_t q() const noexcept { return q_; }

  static constexpr Elem zero() noexcept { return 0; }
  static constexpr Elem one() noexcept { return 1; }
  Elem minus_one() const noexcept { return minus_one_; }

  /// A fixed primitive element (generator of the multiplicative group).
  Elem primitive() const noexcept { return q_ == 2 ? 1 : exp_[1]; }

  Elem add(Elem a, Elem b) const noexcept {
    if (a == 0) return b;
    if (b == 0) return a;
    const std::uint32_t la = log_[a];
    std::uint32_t k = log_[b] + order_ - la;
    if (k >= order_) k -= order_;
    const std::uint32_t z = zech_[k];
    if (z == kNoLog) return 0;
    return exp_[la + z];
  }
  Elem neg(Elem a) const noexcept { return mul(a, minus_one_); }
  Elem sub(Elem a, Elem b) const noexcept { return add(a, neg(b)); }
  Elem mul(Elem a, Elem b) const noexcept {
    if (a == 0 || b == 0) return 0;
    return exp_[log_[a] + log_[b]];
  }
  /// Throws DivisionByZero for a == 0.
  Elem inv(Elem a) const;
  Elem div(Elem a, Elem b) const { return mul(a, inv(b)); }
  /// Square-and-multiply; pow(0, 0) == 1.
  Elem pow(Elem a, std::uint64_t k) const noexcept;
  /// x^(p^e).
  Elem frobenius(Elem x, unsigned e) const noexcept;

  /// Discrete log w.r.t. primitive(); a must be nonzero.
  std::uint32_t log(Elem a) const noexcept { return log_[a]; }
  Elem exp(std::uint64_t k) const noexcept { return exp_[k % order_]; }

  /// Image of an integer in the prime field.
  Elem from_int(std::int64_t v) const noexcept;
  /// Coefficient list (length <= n, entries in [0, p)). Throws BadElement.
  Elem from_coeffs(std::span<const int> coeffs) const;
  /// Length-n coefficient list [c0, ..., c_{n-1}].
  std::vector<int> coeffs(Elem a) const;

  bool contains(Elem a) const noexcept { return a < q_; }
  bool in_prime_field(Elem a) const noexcept { return a < static_cast<Elem>(spec_.p); }

  /// "[c0,c1,...]".
  std::string format(Elem a) const;
  /// Inverse of format; trailing coefficients may be omitted.
  Elem parse(std::string_view text) const;

 private:
  static constexpr std::uint32_t kNoLog = 0xffffffffu;

  Field() = default;
  void build_tables();

  FieldSpec spec_;
  std::uint32_t q_ = 0;
  std::uint32_t order_ = 0;  // q - 1
  Elem minus_one_ = 0;
  std::vector<std::uint32_t> log_;
  std::vector<Elem> exp_;  // doubled so that exp_[i + j] needs no reduction
  std::vector<std::uint32_t> zech_;
};

bool same_field(const Field& a, const Field& b) noexcept;

/// Field-bound element with checked operators. Hot loops use Field + Elem
/// directly; this type is the safe surface.
class FieldElement {
 public:
  FieldElement(FieldPtr field, Elem value);
  static FieldElement from_coeffs(FieldPtr field, std::span<const int> coeffs);

  const FieldPtr& field() const noexcept { return field_; }
  Elem value() const noexcept { return value_; }
  std::vector<int> coeffs() const { return field_->coeffs(value_); }
  bool is_zero() const noexcept { return value_ == 0; }

  FieldElement operator+(const FieldElement& o) const;
  FieldElement operator-(const FieldElement& o) const;
  FieldElement operator*(const FieldElement& o) const;
  FieldElement operator/(const FieldElement& o) const;
  FieldElement operator-() const;
  FieldElement inv() const;
  FieldElement pow(std::uint64_t k) const;
  FieldElement frobenius(unsigned e) const;

  bool operator==(const FieldElement& o) const;

 private:
  void check_same(const FieldElement& o) const;

  FieldPtr field_;
  Elem value_;
};

/// GF(p^e) realized inside GF(p^n) as {x : x^(p^e) = x}.
struct SubfieldEmbedding {
  int e = 0;
  std::uint32_t order = 0;  // p^e
  std::vector<Elem> members;  // ascending
  Elem generator = 0;  // primitive element of the subfield

  bool contains(Elem x) const;
};

/// Throws NotADivisor unless e | n.
SubfieldEmbedding subfield(const Field& field, int e);

/// All x in GF(q) with A*x^d + B = 0, where A, B are nonzero members of
/// `sub` and d = (q - 1)/(q' - 1). The result always has exactly d elements;
/// anything else throws InvariantViolation.
std::vector<Elem> dth_roots(const Field& field, const SubfieldEmbedding& sub, Elem a, Elem b,
                            std::uint64_t d);

/// Canonical inclusion GF(q) -> GF(q^m).
struct Extension {
  FieldPtr base;
  FieldPtr ext;
  int m = 1;
  std::vector<Elem> image;  // indexed by base element

  Elem map(Elem x) const { return image[x]; }
};

/// m == 1 returns the identity inclusion. Throws TooLarge past kMaxFieldOrder.
Extension extend(const FieldPtr& base, int m);

bool is_prime(std::int64_t v) noexcept;

namespace detail {

/// Coefficient-list polynomials over GF(p), constant term first.
using PrimePoly = std::vector<int>;

bool is_irreducible(const PrimePoly& f, int p);
PrimePoly smallest_irreducible(int p, int n);

}  // namespace detail

}  // namespace arcforge
