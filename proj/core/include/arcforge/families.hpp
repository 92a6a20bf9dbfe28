#pragma once

// Constructors for the Fermat-type curves and arcs, each with the explicit
// secant that certifies a given external point cannot be added.

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <string>

#include "arcforge/arcs.hpp"
#include "arcforge/curve.hpp"

namespace arcforge {

enum class FamilyId {
  FermatD,  // a X^d + b Y^d + Z^d, d = (q-1)/(q'-1)
  FermatQm1,  // X^(q-1) + Y^(q-1) - 2 Z^(q-1)
  Hermitian,  // X^(r+1) + Y^(r+1) + Z^(r+1), q = r^2
  Char2Fermat,  // X^(q-1) + Y^(q-1) + Z^(q-1), q = 2^n
  TriangleComplement,  // points on none of three non-concurrent lines
};

std::string_view family_name(FamilyId id) noexcept;

struct FamilySpec {
  FamilyId id = FamilyId::FermatD;
  FieldPtr field;
  int p = 0;
  int n = 0;
  int e = 0;  // FermatD: subfield degree; Hermitian: n/2
  Elem a = 1;
  Elem b = 1;
  std::array<ProjLine, 3> lines{};  // TriangleComplement only
  std::uint32_t q = 0;
  std::uint32_t q_sub = 0;  // q' for FermatD / Hermitian
  std::uint32_t d = 0;
  std::uint64_t expected_k = 0;
  /// Which constructor produced the instance, e.g. "hermitian" or "fermat-d".
  std::string route;
};

struct FamilyInstance {
  FamilySpec spec;
  std::optional<Curve> curve;
  ArcSet arc;
};

/// a, b are GF(q) elements that must lie in GF(p^e)^*. Throws BadParameters.
FamilyInstance build_fermat_d(const FieldPtr& field, int e, Elem a, Elem b, std::uint32_t qmax = default_qmax());
FamilyInstance build_fermat_d(int p, int n, int e, std::span<const int> a_coeffs, std::span<const int> b_coeffs,
                              std::uint32_t qmax = default_qmax());

/// Throws BadParameters for p = 2.
FamilyInstance build_fermat_qm1(int p, int n, std::uint32_t qmax = default_qmax());

/// Throws OddDegreeField for odd n.
FamilyInstance build_hermitian(int p, int n, std::uint32_t qmax = default_qmax());

/// q = 2^n, n >= 2.
FamilyInstance build_char2_fermat(int n, std::uint32_t qmax = default_qmax());

/// Throws ConcurrentLines (also for repeated lines).
FamilyInstance build_triangle_complement(const FieldPtr& field, const std::array<ProjLine, 3>& lines,
                                         std::uint32_t qmax = default_qmax());

/// The line the construction prescribes through an external point P.
/// Throws PointOnArc or UnsupportedFamily (only FermatD and FermatQm1).
ProjLine witness_secant(const FamilySpec& spec, const ProjPoint& p);

}  // namespace arcforge
