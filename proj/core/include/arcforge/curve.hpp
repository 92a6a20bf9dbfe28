#pragma once

// Homogeneous plane curves over GF(q): evaluation, rational points, tangent
// lines, singular points, contact orders with lines, and the Frobenius
// non-classicality test.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "arcforge/gf.hpp"
#include "arcforge/plane.hpp"
#include "arcforge/poly.hpp"

namespace arcforge {

class Curve {
 public:
  /// Throws DegreeMismatch if `poly` is zero or not homogeneous.
  explicit Curve(Poly poly);

  const Poly& poly() const noexcept { return poly_; }
  const FieldPtr& field_ptr() const noexcept { return poly_.field_ptr(); }
  const Field& field() const noexcept { return poly_.field(); }
  std::uint32_t degree() const noexcept { return degree_; }
  std::vector<Term> monomials() const { return poly_.terms(); }

  Curve base_change(const Extension& ext) const { return Curve(poly_.base_change(ext)); }

 private:
  Poly poly_;
  std::uint32_t degree_;
};

/// Throws FieldMismatch when the point's plane is over another field.
Elem evaluate(const Curve& curve, const ProjPoint& p);
bool on_curve(const Curve& curve, const ProjPoint& p);

/// All points of PG(2,q) on the curve, in canonical order.
std::vector<ProjPoint> rational_points(const Curve& curve, std::uint32_t qmax = default_qmax(),
                                       unsigned workers = 1);
std::vector<PlaneIndex> rational_point_indices(const Curve& curve, std::uint32_t qmax = default_qmax(),
                                               unsigned workers = 1);

/// May be the zero polynomial.
Poly partial(const Curve& curve, int i);

/// Gradient of F at p (not normalized).
Triple gradient(const Curve& curve, const ProjPoint& p);
bool is_singular_at(const Curve& curve, const ProjPoint& p);

/// Throws NotOnCurve or SingularPoint.
ProjLine tangent_line(const Curve& curve, const ProjPoint& p);

struct SingularScan {
  Extension extension;  // GF(q) -> GF(q^m) the scan ran over
  int m = 1;
  std::vector<ProjPoint> points;  // coordinates in extension.ext
};

/// Exhaustive scan of PG(2, q^m). Throws TooLarge when q^m > qmax.
SingularScan singular_points(const Curve& curve, int m, std::uint32_t qmax = default_qmax());

/// Order of vanishing at s = 0 of F(P + sB), B the first canonical point of
/// the line other than P. Returns degree + 1 when the line is a component.
/// Throws NotIncident or NotOnCurve.
std::uint32_t intersection_multiplicity(const Curve& curve, const ProjLine& line, const ProjPoint& p);

struct FrobeniusVerdict {
  bool nonclassical = false;
  int pivot = 0;
  Poly g;  // sum_i X_i^q * dF/dX_i
  Poly quotient;  // G / F when nonclassical
  Poly remainder;  // nonzero witness when classical
};

/// F divides X0^q F_0 + X1^q F_1 + X2^q F_2, decided by exact division in a
/// pivot variable X_i whose X_i^d coefficient is a nonzero constant.
/// Throws NoPivot when no such variable exists.
FrobeniusVerdict frobenius_nonclassical_test(const Curve& curve);

struct TangentIncidence {
  std::uint64_t rational_checked = 0;
  std::uint64_t rational_on_tangent = 0;
  std::uint64_t extension_checked = 0;
  std::uint64_t extension_on_tangent = 0;

  bool all_on_tangent() const noexcept {
    return rational_checked == rational_on_tangent && extension_checked == extension_on_tangent;
  }
};

/// For every non-singular point over GF(q) and for `sample_size` seeded
/// non-singular points over GF(q^2), tests whether (x0^q : x1^q : x2^q) lies
/// on the tangent line at the point.
TangentIncidence frobenius_tangent_incidence(const Curve& curve, std::uint32_t sample_size, std::uint64_t seed,
                                             std::uint32_t qmax = default_qmax());

struct EpsilonLevel {
  int m = 1;
  std::uint32_t field_order = 0;
  /// false when PG(2, q^m) was too large to enumerate and points were found
  /// by scanning seeded vertical lines Z = 1, X = x instead.
  bool exhaustive = true;
  /// true for levels beyond m_max, visited because no earlier level had a
  /// point outside PG(2, q).
  bool escalated = false;
  std::uint64_t nonsingular_points = 0;
  std::uint64_t sampled = 0;
  /// Sampled points not defined over GF(q).
  std::uint64_t generic = 0;
  std::uint32_t min_multiplicity = 0;  // 0 when nothing was sampled
};

struct EpsilonOptions {
  int m_max = 2;
  std::uint32_t sample_size = 200;
  std::uint64_t seed = 0;
  std::uint32_t qmax = default_qmax();
};

struct EpsilonEstimate {
  std::uint32_t epsilon = 0;
  std::vector<EpsilonLevel> levels;
  EpsilonOptions options;
};

/// Minimum tangent contact order over seeded samples of non-singular curve
/// points over GF(q^m), m = 1..m_max. If none of those levels has a point
/// outside PG(2, q) (the Hermitian curve over GF(q^2) has none), further
/// levels are visited until one does, up to m_max + 2 and kMaxFieldOrder.
/// Empirical; throws NoPointsFound.
EpsilonEstimate epsilon_estimate(const Curve& curve, const EpsilonOptions& options = {});

enum class IdentityVariant {
  /// F*H = X0*P0^eps + X1*P1^eps + X2*P2^eps
  Eps,
  /// F*H = X0^(q/eps)*P0 + X1^(q/eps)*P1 + X2^(q/eps)*P2
  QOverEps,
};

/// Expands both sides and compares. Throws DegreeMismatch for inconsistent
/// degrees or non-homogeneous inputs, BadParameters when eps does not divide q
/// for the QOverEps variant.
bool verify_identity(const Curve& curve, const Poly& h, const std::array<Poly, 3>& parts,
                     std::uint32_t eps, IdentityVariant variant);

}  // namespace arcforge
