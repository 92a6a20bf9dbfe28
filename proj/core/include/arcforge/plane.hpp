#pragma once

// PG(2,q): normalized points and lines, incidence, pencils.
//
// Both points and lines are triples scaled so that the first nonzero entry
// is 1. Each normalized triple has a canonical index:
//   (1:a:b) -> a*q + b,  (0:1:b) -> q^2 + b,  (0:0:1) -> q^2 + q
// where a, b are the integer encodings of field elements. Enumeration order
// is index order.

#include <array>
#include <compare>
#include <cstdint>
#include <functional>
#include <span>
#include <vector>

#include "arcforge/gf.hpp"

namespace arcforge {

using Triple = std::array<Elem, 3>;
using PlaneIndex = std::uint64_t;

struct ProjPoint {
  Triple coords{};
  auto operator<=>(const ProjPoint&) const = default;
};

struct ProjLine {
  Triple coeffs{};
  auto operator<=>(const ProjLine&) const = default;
};

inline constexpr std::uint32_t kDefaultQMax = 1024;

/// Plane-scan cap: ARCFORGE_QMAX when set, kDefaultQMax otherwise.
std::uint32_t default_qmax();

class Plane {
 public:
  explicit Plane(FieldPtr field);

  const FieldPtr& field_ptr() const noexcept { return field_; }
  const Field& field() const noexcept { return *field_; }
  std::uint32_t q() const noexcept { return q_; }
  /// q^2 + q + 1, the number of points (and of lines).
  PlaneIndex size() const noexcept { return size_; }

  /// Throws TooLarge when q exceeds `qmax`. Every full-plane scan calls this.
  void require_enumerable(std::uint32_t qmax) const;

  /// Scales the first nonzero entry to 1. Throws ZeroVector.
  Triple normalize(Triple v) const;
  ProjPoint point(Triple v) const { return ProjPoint{normalize(v)}; }
  ProjLine line(Triple v) const { return ProjLine{normalize(v)}; }

  PlaneIndex index(const Triple& normalized) const noexcept;
  PlaneIndex index(const ProjPoint& p) const noexcept { return index(p.coords); }
  PlaneIndex index(const ProjLine& l) const noexcept { return index(l.coeffs); }
  Triple triple_at(PlaneIndex idx) const noexcept;
  ProjPoint point_at(PlaneIndex idx) const noexcept { return ProjPoint{triple_at(idx)}; }
  ProjLine line_at(PlaneIndex idx) const noexcept { return ProjLine{triple_at(idx)}; }

  Elem dot(const Triple& a, const Triple& b) const noexcept;
  bool incident(const ProjPoint& p, const ProjLine& l) const noexcept {
    return dot(p.coords, l.coeffs) == 0;
  }

  /// Throws SamePoint.
  ProjLine line_through(const ProjPoint& a, const ProjPoint& b) const;
  /// Throws SamePoint (identical lines).
  ProjPoint meet(const ProjLine& a, const ProjLine& b) const;

  /// The i-th (0 <= i <= q) normalized triple orthogonal to `normal`, in
  /// increasing canonical-index order. Points on a line and lines through a
  /// point are both this operation.
  Triple orthogonal_at(const Triple& normal, std::uint32_t i) const noexcept;
  /// Writes the q+1 canonical indices orthogonal to `normal` into `out`.
  void orthogonal_indices(const Triple& normal, std::span<PlaneIndex> out) const noexcept;

  /// Canonical order. Requires q <= qmax.
  std::vector<ProjPoint> enumerate_points(std::uint32_t qmax = default_qmax()) const;
  std::vector<ProjPoint> points_on_line(const ProjLine& l) const;
  std::vector<ProjLine> pencil(const ProjPoint& p) const;

 private:
  FieldPtr field_;
  std::uint32_t q_;
  PlaneIndex size_;
};

/// Runs fn(begin, end) over [0, count) split into `workers` contiguous chunks.
void parallel_ranges(PlaneIndex count, unsigned workers,
                     const std::function<void(PlaneIndex, PlaneIndex)>& fn);

/// Worker count used when callers pass 0.
unsigned default_workers();

}  // namespace arcforge
