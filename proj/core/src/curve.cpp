#include "arcforge/curve.hpp"

#include <algorithm>
#include <random>

#include "arcforge/error.hpp"

namespace arcforge {

Curve::Curve(Poly poly) : poly_(std::move(poly)), degree_(0) {
  if (poly_.is_zero()) throw Error(Errc::DegreeMismatch, "the zero polynomial does not define a curve");
  if (!poly_.is_homogeneous()) throw Error(Errc::DegreeMismatch, "curve polynomial must be homogeneous");
  degree_ = poly_.degree();
  if (degree_ == 0) throw Error(Errc::DegreeMismatch, "a nonzero constant does not define a curve");
}

namespace {

void check_point(const Field& f, const Triple& t) {
  for (Elem c : t)
    if (!f.contains(c)) throw Error(Errc::FieldMismatch, "point coordinates outside the curve's field");
}

using Univariate = std::vector<Elem>;

Univariate uni_mul(const Field& f, const Univariate& a, const Univariate& b) {
  Univariate r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] = f.add(r[i + j], f.mul(a[i], b[j]));
  }
  return r;
}

Univariate uni_pow(const Field& f, Univariate base, std::uint32_t e) {
  Univariate result{Field::one()};
  while (e > 0) {
    if (e & 1) result = uni_mul(f, result, base);
    e >>= 1;
    if (e) base = uni_mul(f, base, base);
  }
  return result;
}

}  // namespace

Elem evaluate(const Curve& curve, const ProjPoint& p) {
  check_point(curve.field(), p.coords);
  return curve.poly().evaluate(p.coords);
}

bool on_curve(const Curve& curve, const ProjPoint& p) { return evaluate(curve, p) == 0; }

std::vector<PlaneIndex> rational_point_indices(const Curve& curve, std::uint32_t qmax, unsigned workers) {
  const Plane plane(curve.field_ptr());
  plane.require_enumerable(qmax);
  if (workers == 0) workers = default_workers();
  std::vector<std::vector<PlaneIndex>> chunks(std::max(1u, workers));
  std::vector<PlaneIndex> chunk_begin(chunks.size(), 0);
  const PlaneIndex chunk = (plane.size() + chunks.size() - 1) / chunks.size();
  parallel_ranges(plane.size(), workers, [&](PlaneIndex begin, PlaneIndex end) {
    auto& out = chunks[begin / chunk];
    for (PlaneIndex i = begin; i < end; ++i)
      if (curve.poly().evaluate(plane.triple_at(i)) == 0) out.push_back(i);
  });
  std::vector<PlaneIndex> all;
  for (auto& c : chunks) all.insert(all.end(), c.begin(), c.end());
  std::sort(all.begin(), all.end());
  return all;
}

std::vector<ProjPoint> rational_points(const Curve& curve, std::uint32_t qmax, unsigned workers) {
  const Plane plane(curve.field_ptr());
  std::vector<ProjPoint> out;
  for (auto idx : rational_point_indices(curve, qmax, workers)) out.push_back(plane.point_at(idx));
  return out;
}

Poly partial(const Curve& curve, int i) { return curve.poly().partial(i); }

Triple gradient(const Curve& curve, const ProjPoint& p) {
  check_point(curve.field(), p.coords);
  Triple g{};
  for (int i = 0; i < 3; ++i) g[static_cast<std::size_t>(i)] = curve.poly().partial(i).evaluate(p.coords);
  return g;
}

bool is_singular_at(const Curve& curve, const ProjPoint& p) {
  if (evaluate(curve, p) != 0) return false;
  const Triple g = gradient(curve, p);
  return g[0] == 0 && g[1] == 0 && g[2] == 0;
}

ProjLine tangent_line(const Curve& curve, const ProjPoint& p) {
  if (evaluate(curve, p) != 0) throw Error(Errc::NotOnCurve, "tangent requested at a point off the curve");
  const Triple g = gradient(curve, p);
  if (g[0] == 0 && g[1] == 0 && g[2] == 0) throw Error(Errc::SingularPoint, "all partial derivatives vanish");
  const Plane plane(curve.field_ptr());
  const ProjLine l = plane.line(g);
  if (!plane.incident(p, l)) throw Error(Errc::InvariantViolation, "tangent line misses its point");
  return l;
}

SingularScan singular_points(const Curve& curve, int m, std::uint32_t qmax) {
  if (m < 1) throw Error(Errc::BadParameters, "extension degree must be >= 1");
  std::uint64_t order = 1;
  for (int i = 0; i < m; ++i) {
    order *= curve.field().q();
    if (order > qmax)
      throw Error(Errc::TooLarge, "q^m = " + std::to_string(order) + " exceeds plane cap " + std::to_string(qmax));
  }
  SingularScan scan;
  scan.m = m;
  scan.extension = extend(curve.field_ptr(), m);
  const Poly f = curve.poly().base_change(scan.extension);
  const std::array<Poly, 3> grad{f.partial(0), f.partial(1), f.partial(2)};
  const Plane plane(scan.extension.ext);
  for (PlaneIndex i = 0; i < plane.size(); ++i) {
    const Triple t = plane.triple_at(i);
    if (grad[0].evaluate(t) == 0 && grad[1].evaluate(t) == 0 && grad[2].evaluate(t) == 0 && f.evaluate(t) == 0)
      scan.points.push_back(ProjPoint{t});
  }
  return scan;
}

std::uint32_t intersection_multiplicity(const Curve& curve, const ProjLine& line, const ProjPoint& p) {
  const Field& f = curve.field();
  check_point(f, p.coords);
  check_point(f, line.coeffs);
  const Plane plane(curve.field_ptr());
  if (!plane.incident(p, line)) throw Error(Errc::NotIncident, "point is not on the line");
  if (evaluate(curve, p) != 0) throw Error(Errc::NotOnCurve, "point is not on the curve");

  Triple b = plane.orthogonal_at(line.coeffs, 0);
  if (b == p.coords) b = plane.orthogonal_at(line.coeffs, 1);

  Univariate g(static_cast<std::size_t>(curve.degree()) + 1, 0);
  for (const auto& t : curve.monomials()) {
    Univariate term{t.coeff};
    for (std::size_t i = 0; i < 3; ++i) {
      if (t.exps[i] == 0) continue;
      term = uni_mul(f, term, uni_pow(f, Univariate{p.coords[i], b[i]}, t.exps[i]));
    }
    for (std::size_t k = 0; k < term.size(); ++k) g[k] = f.add(g[k], term[k]);
  }
  for (std::size_t k = 0; k < g.size(); ++k)
    if (g[k] != 0) return static_cast<std::uint32_t>(k);
  return curve.degree() + 1;
}

FrobeniusVerdict frobenius_nonclassical_test(const Curve& curve) {
  const FieldPtr& field = curve.field_ptr();
  const std::uint32_t d = curve.degree();
  int pivot = -1;
  for (int i = 0; i < 3 && pivot < 0; ++i) {
    Exponents e{0, 0, 0};
    e[static_cast<std::size_t>(i)] = d;
    if (curve.poly().coeff(e) != 0) pivot = i;
  }
  if (pivot < 0) throw Error(Errc::NoPivot, "no monomial X_i^d to divide by; unsupported curve");

  Poly g(field);
  for (int i = 0; i < 3; ++i) {
    Exponents e{0, 0, 0};
    e[static_cast<std::size_t>(i)] = field->q();
    g = g + Poly::monomial(field, Field::one(), e) * curve.poly().partial(i);
  }
  auto division = divide_by_pivot(g, curve.poly(), pivot);
  const bool nonclassical = division.remainder.is_zero();
  return FrobeniusVerdict{nonclassical, pivot, std::move(g),
                          nonclassical ? std::move(division.quotient) : Poly(field),
                          std::move(division.remainder)};
}

namespace {

template <typename Rng>
void seeded_shuffle(std::vector<PlaneIndex>& v, Rng& rng) {
  // Fisher-Yates with raw engine output; std::shuffle is not portable.
  for (std::size_t i = v.size(); i > 1; --i) {
    const std::size_t j = static_cast<std::size_t>(rng() % i);
    std::swap(v[i - 1], v[j]);
  }
}

}  // namespace

TangentIncidence frobenius_tangent_incidence(const Curve& curve, std::uint32_t sample_size, std::uint64_t seed,
                                             std::uint32_t qmax) {
  TangentIncidence out;
  const std::uint64_t q = curve.field().q();
  std::mt19937_64 rng(seed);
  for (int m = 1; m <= 2; ++m) {
    const Extension ext = extend(curve.field_ptr(), m);
    const Curve lifted = curve.base_change(ext);
    const Field& f = *ext.ext;
    const Plane plane(ext.ext);
    std::vector<PlaneIndex> smooth;
    for (auto idx : rational_point_indices(lifted, qmax, 1))
      if (!is_singular_at(lifted, plane.point_at(idx))) smooth.push_back(idx);
    if (m == 2) {
      seeded_shuffle(smooth, rng);
      if (smooth.size() > sample_size) smooth.resize(sample_size);
    }
    for (auto idx : smooth) {
      const ProjPoint pt = plane.point_at(idx);
      const Triple image{f.pow(pt.coords[0], q), f.pow(pt.coords[1], q), f.pow(pt.coords[2], q)};
      const bool on = plane.incident(ProjPoint{image}, tangent_line(lifted, pt));
      if (m == 1) {
        ++out.rational_checked;
        out.rational_on_tangent += on;
      } else {
        ++out.extension_checked;
        out.extension_on_tangent += on;
      }
    }
  }
  return out;
}

namespace {

bool over_base(const Field& f, std::uint64_t q, const Triple& t) {
  for (Elem c : t)
    if (f.pow(c, q) != c) return false;
  return true;
}

// Nonsingular points of PG(2, Q) on the curve, when the plane is too big to
// enumerate: seeded x values, every y on the line Z = 1, X = x.
std::vector<Triple> scan_vertical_lines(const Curve& lifted, std::uint32_t wanted, std::mt19937_64& rng) {
  const Field& f = lifted.field();
  const std::uint32_t Q = f.q();
  std::vector<Triple> found;
  const std::uint32_t tries = 4 * wanted + 16;
  for (std::uint32_t t = 0; t < tries && found.size() < wanted; ++t) {
    const Elem x = static_cast<Elem>(rng() % Q);
    for (Elem y = 0; y < Q && found.size() < wanted; ++y) {
      const Triple pt{x, y, Field::one()};
      if (lifted.poly().evaluate(pt) == 0 && !is_singular_at(lifted, ProjPoint{pt})) found.push_back(pt);
    }
  }
  std::sort(found.begin(), found.end());
  found.erase(std::unique(found.begin(), found.end()), found.end());
  return found;
}

}  // namespace

EpsilonEstimate epsilon_estimate(const Curve& curve, const EpsilonOptions& options) {
  if (options.m_max < 1) throw Error(Errc::BadParameters, "m_max must be >= 1");
  EpsilonEstimate result;
  result.options = options;
  std::mt19937_64 rng(options.seed);
  std::uint32_t best = 0;
  bool generic_seen = false;
  const std::uint64_t q = curve.field().q();

  std::uint64_t order = 1;
  for (int m = 1; m <= options.m_max + 2; ++m) {
    if (m > options.m_max && generic_seen) break;
    order *= q;
    if (order > kMaxFieldOrder) {
      if (m <= options.m_max) throw Error(Errc::TooLarge, "GF(q^" + std::to_string(m) + ") is too large");
      break;
    }
    const Extension ext = extend(curve.field_ptr(), m);
    const Curve lifted = curve.base_change(ext);
    const Field& f = *ext.ext;

    EpsilonLevel level;
    level.m = m;
    level.field_order = f.q();
    level.escalated = m > options.m_max;

    std::vector<Triple> sample;
    if (f.q() <= options.qmax) {
      const Plane plane(ext.ext);
      std::vector<PlaneIndex> smooth;
      for (auto idx : rational_point_indices(lifted, options.qmax, 1))
        if (!is_singular_at(lifted, plane.point_at(idx))) smooth.push_back(idx);
      seeded_shuffle(smooth, rng);
      level.nonsingular_points = smooth.size();
      const std::size_t take = std::min<std::size_t>(smooth.size(), options.sample_size);
      for (std::size_t s = 0; s < take; ++s) sample.push_back(plane.triple_at(smooth[s]));
    } else {
      level.exhaustive = false;
      sample = scan_vertical_lines(lifted, options.sample_size, rng);
      level.nonsingular_points = sample.size();
    }

    for (const Triple& t : sample) {
      const ProjPoint pt{t};
      const std::uint32_t mult = intersection_multiplicity(lifted, tangent_line(lifted, pt), pt);
      if (level.min_multiplicity == 0 || mult < level.min_multiplicity) level.min_multiplicity = mult;
      level.generic += !over_base(f, q, t);
    }
    level.sampled = sample.size();
    generic_seen = generic_seen || level.generic > 0;
    if (level.min_multiplicity != 0 && (best == 0 || level.min_multiplicity < best)) best = level.min_multiplicity;
    result.levels.push_back(level);
  }
  if (best == 0) throw Error(Errc::NoPointsFound, "no non-singular points found to sample");
  result.epsilon = best;
  return result;
}

bool verify_identity(const Curve& curve, const Poly& h, const std::array<Poly, 3>& parts,
                     std::uint32_t eps, IdentityVariant variant) {
  const FieldPtr& field = curve.field_ptr();
  if (eps == 0) throw Error(Errc::BadParameters, "eps must be positive");
  if (!h.is_homogeneous()) throw Error(Errc::DegreeMismatch, "H must be homogeneous");
  for (const auto& part : parts)
    if (!part.is_homogeneous()) throw Error(Errc::DegreeMismatch, "P_i must be homogeneous");

  std::uint32_t x_power = 1;
  std::uint64_t part_power = eps;
  if (variant == IdentityVariant::QOverEps) {
    if (field->q() % eps != 0) throw Error(Errc::BadParameters, "eps must divide q");
    x_power = field->q() / eps;
    part_power = 1;
  }

  Poly rhs(field);
  std::optional<std::uint64_t> rhs_degree;
  for (std::size_t i = 0; i < 3; ++i) {
    if (parts[i].is_zero()) continue;
    const std::uint64_t deg = x_power + part_power * parts[i].degree();
    if (rhs_degree && *rhs_degree != deg) throw Error(Errc::DegreeMismatch, "right-hand terms differ in degree");
    rhs_degree = deg;
    Exponents e{0, 0, 0};
    e[i] = x_power;
    rhs = rhs + Poly::monomial(field, Field::one(), e) * parts[i].pow(part_power);
  }
  const Poly lhs = curve.poly() * h;
  if (!h.is_zero() && rhs_degree && *rhs_degree != curve.degree() + h.degree())
    throw Error(Errc::DegreeMismatch, "deg(F*H) differs from the right-hand side");
  return lhs == rhs;
}

}  // namespace arcforge
