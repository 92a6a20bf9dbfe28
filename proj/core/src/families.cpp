#include "arcforge/families.hpp"

#include "arcforge/error.hpp"

namespace arcforge {

std::string_view family_name(FamilyId id) noexcept {
  switch (id) {
    case FamilyId::FermatD: return "fermat-d";
    case FamilyId::FermatQm1: return "fermat-qm1";
    case FamilyId::Hermitian: return "hermitian";
    case FamilyId::Char2Fermat: return "char2-fermat";
    case FamilyId::TriangleComplement: return "triangle";
  }
  return "unknown";
}

namespace {

std::uint32_t ipow(std::uint32_t base, int e) {
  std::uint32_t r = 1;
  for (int i = 0; i < e; ++i) r *= base;
  return r;
}

Poly fermat_poly(const FieldPtr& field, std::uint32_t d, Elem a, Elem b, Elem c) {
  Poly f(field);
  f.add_term(a, {d, 0, 0});
  f.add_term(b, {0, d, 0});
  f.add_term(c, {0, 0, d});
  return f;
}

FamilyInstance from_curve(FamilySpec spec, Curve curve, std::uint32_t qmax) {
  const Plane plane(spec.field);
  const auto pts = rational_point_indices(curve, qmax);
  ArcSet arc(plane, pts, spec.d, qmax);
  if (arc.size() != spec.expected_k)
    throw Error(Errc::InvariantViolation, std::string(family_name(spec.id)) + ": expected k = " +
                                              std::to_string(spec.expected_k) + ", enumerated " +
                                              std::to_string(arc.size()));
  return FamilyInstance{std::move(spec), std::move(curve), std::move(arc)};
}

}  // namespace

FamilyInstance build_fermat_d(const FieldPtr& field, int e, Elem a, Elem b, std::uint32_t qmax) {
  const int p = field->p();
  const int n = field->n();
  if (p < 3) throw Error(Errc::BadParameters, "p >= 3 required");
  if (e < 1 || e >= n || n % e != 0) throw Error(Errc::BadParameters, "need e | n and e < n");
  const SubfieldEmbedding sub = subfield(*field, e);
  if (a == 0 || b == 0 || !sub.contains(a) || !sub.contains(b))
    throw Error(Errc::BadParameters, "a and b must be nonzero elements of GF(p^e)");

  FamilySpec spec;
  spec.id = FamilyId::FermatD;
  spec.field = field;
  spec.p = p;
  spec.n = n;
  spec.e = e;
  spec.a = a;
  spec.b = b;
  spec.q = field->q();
  spec.q_sub = sub.order;
  spec.d = (spec.q - 1) / (spec.q_sub - 1);
  spec.expected_k = static_cast<std::uint64_t>(spec.d) * (spec.q - spec.d + 2);
  spec.route = "fermat-d";
  Curve curve(fermat_poly(field, spec.d, a, b, Field::one()));
  return from_curve(std::move(spec), std::move(curve), qmax);
}

FamilyInstance build_fermat_d(int p, int n, int e, std::span<const int> a_coeffs, std::span<const int> b_coeffs,
                              std::uint32_t qmax) {
  if (p == 2) throw Error(Errc::BadParameters, "p >= 3 required");
  const FieldPtr field = Field::create(p, n);
  return build_fermat_d(field, e, field->from_coeffs(a_coeffs), field->from_coeffs(b_coeffs), qmax);
}

FamilyInstance build_fermat_qm1(int p, int n, std::uint32_t qmax) {
  if (p < 3) throw Error(Errc::BadParameters, "p >= 3 required");
  const FieldPtr field = Field::create(p, n);
  FamilySpec spec;
  spec.id = FamilyId::FermatQm1;
  spec.field = field;
  spec.p = p;
  spec.n = n;
  spec.q = field->q();
  spec.d = spec.q - 1;
  spec.expected_k = static_cast<std::uint64_t>(spec.q - 1) * (spec.q - 1);
  spec.route = "fermat-qm1";
  const Elem minus_two = field->from_int(-2);
  if (spec.d < 2) throw Error(Errc::BadParameters, "q - 1 must be at least 2");
  Curve curve(fermat_poly(field, spec.d, 1, 1, minus_two));
  return from_curve(std::move(spec), std::move(curve), qmax);
}

FamilyInstance build_hermitian(int p, int n, std::uint32_t qmax) {
  if (n < 2 || n % 2 != 0) throw Error(Errc::OddDegreeField, "Hermitian curves need q = p^n with n even");
  const FieldPtr field = Field::create(p, n);
  FamilySpec spec;
  spec.id = FamilyId::Hermitian;
  spec.field = field;
  spec.p = p;
  spec.n = n;
  spec.e = n / 2;
  spec.q = field->q();
  spec.q_sub = ipow(static_cast<std::uint32_t>(p), n / 2);
  spec.d = spec.q_sub + 1;
  spec.expected_k = static_cast<std::uint64_t>(spec.q) * spec.q_sub + 1;
  spec.route = "hermitian";
  Curve curve(fermat_poly(field, spec.d, 1, 1, 1));
  return from_curve(std::move(spec), std::move(curve), qmax);
}

FamilyInstance build_char2_fermat(int n, std::uint32_t qmax) {
  if (n < 2) throw Error(Errc::BadParameters, "q = 2^n needs n >= 2");
  const FieldPtr field = Field::create(2, n);
  FamilySpec spec;
  spec.id = FamilyId::Char2Fermat;
  spec.field = field;
  spec.p = 2;
  spec.n = n;
  spec.q = field->q();
  spec.d = spec.q - 1;
  spec.route = "char2-fermat";
  Curve curve(fermat_poly(field, spec.d, 1, 1, 1));
  const Plane plane(field);
  ArcSet arc(plane, rational_point_indices(curve, qmax), spec.d, qmax);
  spec.expected_k = arc.size();
  return FamilyInstance{std::move(spec), std::move(curve), std::move(arc)};
}

FamilyInstance build_triangle_complement(const FieldPtr& field, const std::array<ProjLine, 3>& lines,
                                         std::uint32_t qmax) {
  const Field& f = *field;
  const Plane plane(field);
  std::array<ProjLine, 3> norm;
  for (std::size_t i = 0; i < 3; ++i) norm[i] = plane.line(lines[i].coeffs);
  const auto& r0 = norm[0].coeffs;
  const auto& r1 = norm[1].coeffs;
  const auto& r2 = norm[2].coeffs;
  const Elem det = f.add(f.add(f.mul(r0[0], f.sub(f.mul(r1[1], r2[2]), f.mul(r1[2], r2[1]))),
                               f.mul(r0[1], f.sub(f.mul(r1[2], r2[0]), f.mul(r1[0], r2[2])))),
                         f.mul(r0[2], f.sub(f.mul(r1[0], r2[1]), f.mul(r1[1], r2[0]))));
  if (det == 0) throw Error(Errc::ConcurrentLines, "the three lines share a point");

  plane.require_enumerable(qmax);
  std::vector<PlaneIndex> pts;
  for (PlaneIndex i = 0; i < plane.size(); ++i) {
    const ProjPoint pt = plane.point_at(i);
    if (!plane.incident(pt, norm[0]) && !plane.incident(pt, norm[1]) && !plane.incident(pt, norm[2]))
      pts.push_back(i);
  }
  FamilySpec spec;
  spec.id = FamilyId::TriangleComplement;
  spec.field = field;
  spec.p = field->p();
  spec.n = field->n();
  spec.lines = norm;
  spec.q = field->q();
  spec.d = spec.q - 1;
  spec.expected_k = static_cast<std::uint64_t>(spec.q - 1) * (spec.q - 1);
  spec.route = "triangle";
  ArcSet arc(plane, pts, spec.d, qmax);
  if (arc.size() != spec.expected_k)
    throw Error(Errc::InvariantViolation, "triangle complement has the wrong size");
  return FamilyInstance{std::move(spec), std::nullopt, std::move(arc)};
}

ProjLine witness_secant(const FamilySpec& spec, const ProjPoint& p) {
  const Field& f = *spec.field;
  const Plane plane(spec.field);
  const Triple c = plane.normalize(p.coords);
  const std::uint32_t d = spec.d;

  if (spec.id == FamilyId::FermatD) {
    const Elem value = f.add(f.add(f.mul(spec.a, f.pow(c[0], d)), f.mul(spec.b, f.pow(c[1], d))), f.pow(c[2], d));
    if (value == 0) throw Error(Errc::PointOnArc, "point lies on the curve");
    // Case 1: P = (alpha:beta:0), line Z = 0.
    if (c[2] == 0) return plane.line({0, 0, 1});
    const Elem gamma_inv = f.inv(c[2]);
    const Elem alpha = f.mul(c[0], gamma_inv);
    const Elem beta = f.mul(c[1], gamma_inv);
    // Case 2: a*alpha^d + 1 != 0, line X = alpha Z.
    if (f.add(f.mul(spec.a, f.pow(alpha, d)), Field::one()) != 0) return plane.line({1, 0, f.neg(alpha)});
    // Case 3: b*beta^d + 1 != 0, line Y = beta Z.
    if (f.add(f.mul(spec.b, f.pow(beta, d)), Field::one()) != 0) return plane.line({0, 1, f.neg(beta)});
    // Case 4: line beta X = alpha Y.
    return plane.line({beta, f.neg(alpha), 0});
  }

  if (spec.id == FamilyId::FermatQm1) {
    if (c[0] != 0 && c[1] != 0 && c[2] != 0) throw Error(Errc::PointOnArc, "point has full support");
    if (c[2] == 0) {
      // Case 1: P = (1:0:0), line Y = Z.
      if (c[1] == 0) return plane.line({0, 1, f.neg(1)});
      // Case 2: P = (alpha:beta:0), beta != 0, line Y = (beta/alpha) X.
      if (c[0] != 0) return plane.line({f.div(c[1], c[0]), f.neg(1), 0});
      // P = (0:1:0) has alpha = 0, where Y = bX cannot pass through P; the
      // line X = Z meets the arc in (1:lambda:1), lambda != 0.
      return plane.line({1, 0, f.neg(1)});
    }
    const Elem gamma_inv = f.inv(c[2]);
    const Elem alpha = f.mul(c[0], gamma_inv);
    const Elem beta = f.mul(c[1], gamma_inv);
    // Case 3: P = (0:0:1), line X = Y.
    if (alpha == 0 && beta == 0) return plane.line({1, f.neg(1), 0});
    // Case 4: alpha != 0, line X = alpha Z.
    if (alpha != 0) return plane.line({1, 0, f.neg(alpha)});
    // Case 5: beta != 0, line Y = beta Z.
    return plane.line({0, 1, f.neg(beta)});
  }

  throw Error(Errc::UnsupportedFamily, std::string(family_name(spec.id)) + " has no prescribed witness lines");
}

}  // namespace arcforge
