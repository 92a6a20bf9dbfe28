#include <gtest/gtest.h>

#include <atomic>
#include <set>

#include "arcforge/error.hpp"
#include "arcforge/plane.hpp"

using namespace arcforge;

namespace {

std::vector<FieldPtr> small_fields() {
  return {Field::create(2, 1), Field::create(3, 1), Field::create(2, 2), Field::create(5, 1),
          Field::create(7, 1), Field::create(2, 3), Field::create(3, 2)};
}

}  // namespace

TEST(Plane, Counts) {
  EXPECT_EQ(Plane(Field::create(2, 1)).enumerate_points().size(), 7u);
  EXPECT_EQ(Plane(Field::create(3, 2)).enumerate_points().size(), 91u);
  EXPECT_EQ(Plane(Field::create(3, 3)).enumerate_points().size(), 757u);
}

TEST(Plane, IndexRoundTripAndOrder) {
  for (const auto& f : small_fields()) {
    const Plane plane(f);
    const auto pts = plane.enumerate_points();
    for (PlaneIndex i = 0; i < plane.size(); ++i) {
      EXPECT_EQ(plane.index(pts[i]), i);
      EXPECT_EQ(plane.normalize(pts[i].coords), pts[i].coords);
    }
    EXPECT_EQ(pts.front().coords, (Triple{1, 0, 0}));
    EXPECT_EQ(pts.back().coords, (Triple{0, 0, 1}));
    EXPECT_TRUE(std::is_sorted(pts.begin(), pts.end(), [&](const ProjPoint& a, const ProjPoint& b) {
      return plane.index(a) < plane.index(b);
    }));
  }
}

TEST(Plane, NormalizeScalesFirstNonzero) {
  const auto f = Field::create(5, 1);
  const Plane plane(f);
  EXPECT_EQ(plane.normalize({0, 3, 1}), (Triple{0, 1, 2}));
  EXPECT_EQ(plane.normalize({2, 4, 0}), (Triple{1, 2, 0}));
  EXPECT_THROW(plane.normalize({0, 0, 0}), Error);
}

TEST(Plane, LinesHaveQPlusOnePointsAndPencilsQPlusOneLines) {
  for (const auto& f : small_fields()) {
    const Plane plane(f);
    for (PlaneIndex i = 0; i < plane.size(); ++i) {
      const auto pts = plane.points_on_line(plane.line_at(i));
      ASSERT_EQ(pts.size(), plane.q() + 1);
      std::set<PlaneIndex> idx;
      for (const auto& p : pts) {
        EXPECT_TRUE(plane.incident(p, plane.line_at(i)));
        idx.insert(plane.index(p));
      }
      EXPECT_EQ(idx.size(), plane.q() + 1);
      EXPECT_EQ(plane.pencil(plane.point_at(i)).size(), plane.q() + 1);
    }
  }
}

TEST(Plane, IncidenceDualityExhaustive) {
  for (const auto& f : small_fields()) {
    const Plane plane(f);
    for (PlaneIndex a = 0; a < plane.size(); ++a) {
      for (PlaneIndex b = 0; b < plane.size(); ++b) {
        // Point a on line b iff point b on line a.
        ASSERT_EQ(plane.incident(plane.point_at(a), plane.line_at(b)),
                  plane.incident(plane.point_at(b), plane.line_at(a)));
      }
    }
  }
}

TEST(Plane, TwoPointsOneLineTwoLinesOnePoint) {
  for (const auto& f : small_fields()) {
    const Plane plane(f);
    for (PlaneIndex a = 0; a < plane.size(); ++a) {
      for (PlaneIndex b = a + 1; b < plane.size(); ++b) {
        const ProjPoint pa = plane.point_at(a), pb = plane.point_at(b);
        const ProjLine l = plane.line_through(pa, pb);
        ASSERT_TRUE(plane.incident(pa, l) && plane.incident(pb, l));
        int common = 0;
        for (PlaneIndex li = 0; li < plane.size(); ++li)
          common += plane.incident(pa, plane.line_at(li)) && plane.incident(pb, plane.line_at(li));
        ASSERT_EQ(common, 1);
        const ProjLine la = plane.line_at(a), lb = plane.line_at(b);
        const ProjPoint m = plane.meet(la, lb);
        ASSERT_TRUE(plane.incident(m, la) && plane.incident(m, lb));
      }
    }
  }
}

TEST(Plane, LineThroughExamples) {
  const auto f = Field::create(3, 2);
  const Plane plane(f);
  EXPECT_EQ(plane.line_through(ProjPoint{{1, 0, 0}}, ProjPoint{{0, 1, 0}}).coeffs, (Triple{0, 0, 1}));
  EXPECT_EQ(plane.line_through(ProjPoint{{1, 1, 1}}, ProjPoint{{1, 0, 0}}).coeffs, (Triple{0, 1, f->minus_one()}));
  try {
    plane.line_through(ProjPoint{{1, 1, 1}}, ProjPoint{{1, 1, 1}});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::SamePoint);
  }
}

TEST(Plane, PencilCoversPlane) {
  const Plane plane(Field::create(3, 2));
  for (PlaneIndex i = 0; i < plane.size(); i += 7) {
    const ProjPoint p = plane.point_at(i);
    std::vector<int> hits(plane.size(), 0);
    for (const auto& l : plane.pencil(p))
      for (const auto& x : plane.points_on_line(l)) ++hits[plane.index(x)];
    for (PlaneIndex j = 0; j < plane.size(); ++j) EXPECT_EQ(hits[j], j == i ? 10 : 1);
  }
}

TEST(Plane, LineAtInfinity) {
  const Plane plane(Field::create(3, 2));
  const auto pts = plane.points_on_line(ProjLine{{0, 0, 1}});
  ASSERT_EQ(pts.size(), 10u);
  EXPECT_EQ(pts.front().coords, (Triple{1, 0, 0}));
  for (std::size_t i = 1; i < pts.size(); ++i) EXPECT_EQ(pts[i].coords[2], 0u);
}

TEST(Plane, CapIsEnforced) {
  const Plane plane(Field::create(3, 3));
  EXPECT_NO_THROW(plane.require_enumerable(27));
  try {
    plane.require_enumerable(9);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::TooLarge);
  }
  EXPECT_THROW(plane.enumerate_points(9), Error);
}

TEST(Plane, ParallelRangesCoverOnce) {
  for (unsigned workers : {1u, 2u, 3u, 8u, 64u}) {
    for (PlaneIndex count : {PlaneIndex{0}, PlaneIndex{1}, PlaneIndex{5}, PlaneIndex{91}, PlaneIndex{757}}) {
      std::vector<std::atomic<int>> hits(count);
      parallel_ranges(count, workers, [&](PlaneIndex b, PlaneIndex e) {
        for (PlaneIndex i = b; i < e; ++i) ++hits[i];
      });
      for (auto& h : hits) EXPECT_EQ(h.load(), 1);
    }
  }
}
