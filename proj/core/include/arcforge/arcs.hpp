#pragma once

// (k,d)-arc verification over PG(2,q).
//
// Membership is a flat byte table indexed by canonical point index, so a
// line's meet count is q+1 table lookups and a full secant scan is O(q^3).

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "arcforge/plane.hpp"

namespace arcforge {

class ArcSet {
 public:
  /// Throws DuplicatePoint, BadParameters (d < 2 or d > q+1) or TooLarge.
  ArcSet(Plane plane, std::span<const PlaneIndex> indices, std::uint32_t declared_d,
         std::uint32_t qmax = default_qmax());
  static ArcSet from_points(const Plane& plane, std::span<const ProjPoint> points, std::uint32_t declared_d,
                            std::uint32_t qmax = default_qmax());

  const Plane& plane() const noexcept { return plane_; }
  std::uint32_t q() const noexcept { return plane_.q(); }
  std::uint32_t declared_d() const noexcept { return declared_d_; }
  std::size_t size() const noexcept { return indices_.size(); }
  /// Ascending canonical indices.
  const std::vector<PlaneIndex>& indices() const noexcept { return indices_; }
  std::vector<ProjPoint> points() const;

  bool contains(PlaneIndex idx) const noexcept { return member_[idx] != 0; }
  bool contains(const ProjPoint& p) const noexcept { return contains(plane_.index(p)); }
  std::span<const std::uint8_t> membership() const noexcept { return member_; }

  ArcSet with_point(const ProjPoint& p) const;
  ArcSet with_declared_d(std::uint32_t d) const;

 private:
  Plane plane_;
  std::vector<std::uint8_t> member_;
  std::vector<PlaneIndex> indices_;
  std::uint32_t declared_d_;
};

struct SecantDistribution {
  /// histogram[i] = number of lines meeting the set in exactly i points, i = 0..q+1.
  std::vector<std::uint64_t> histogram;
  /// meets[line index] = |line ∩ K|.
  std::vector<std::uint32_t> meets;
  std::uint32_t max_secant = 0;
  /// Sum of meets over all lines; equals k*(q+1).
  std::uint64_t incidence_sum = 0;
};

SecantDistribution secant_distribution(const ArcSet& arc, unsigned workers = 1);

/// |line ∩ K| computed directly from the membership table.
std::uint32_t meet_count(const ArcSet& arc, const ProjLine& line);

bool is_arc(const ArcSet& arc);
bool is_arc(const ArcSet& arc, const SecantDistribution& dist);

struct Witness {
  PlaneIndex point = 0;
  PlaneIndex line = 0;
  std::uint32_t meet = 0;
};

struct CompletenessResult {
  bool complete = false;
  /// One per external point that has a d-secant through it, ascending point index.
  std::vector<Witness> witnesses;
  /// External points with no d-secant (each can be added), ascending.
  std::vector<PlaneIndex> addable;

  std::optional<PlaneIndex> counterexample() const {
    if (addable.empty()) return std::nullopt;
    return addable.front();
  }
};

/// Throws NotAnArc.
CompletenessResult completeness_check(const ArcSet& arc, unsigned workers = 1);
CompletenessResult completeness_check(const ArcSet& arc, const SecantDistribution& dist, unsigned workers = 1);

std::vector<ProjLine> external_lines(const ArcSet& arc);
std::vector<ProjLine> external_lines(const ArcSet& arc, const SecantDistribution& dist);

struct ExternalLineBound {
  bool has_external_line = false;
  std::uint64_t k = 0;
  std::uint64_t bound = 0;  // (q-1)^2
  bool holds = true;  // vacuous when there is no external line
  bool attained = false;
};

/// The bound k <= (q-1)^2 for (k, q-1)-arcs with an external line.
/// Throws WrongD unless declared_d == q-1.
ExternalLineBound external_line_bound_check(const ArcSet& arc);

/// Independent recount of a witness: the line passes through the point, the
/// point is outside K, and the line meets K in exactly `meet` = d points.
bool verify_witness(const ArcSet& arc, const Witness& w);

}  // namespace arcforge
