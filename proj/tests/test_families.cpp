#include <gtest/gtest.h>

#include <random>
#include <set>

#include "arcforge/error.hpp"
#include "arcforge/families.hpp"

using namespace arcforge;

namespace {

template <typename Fn>
void expect_error(Errc code, Fn&& fn) {
  try {
    fn();
    ADD_FAILURE() << "expected " << errc_name(code);
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), code) << e.what();
  }
}

std::uint64_t ipow(std::uint64_t b, int e) {
  std::uint64_t r = 1;
  while (e-- > 0) r *= b;
  return r;
}

// Every external point gets a prescribed line that passes through it and
// meets the arc in exactly d points.
void expect_witnesses_valid(const FamilyInstance& inst) {
  const Plane& plane = inst.arc.plane();
  std::uint64_t checked = 0;
  for (PlaneIndex i = 0; i < plane.size(); ++i) {
    if (inst.arc.contains(i)) continue;
    const ProjPoint p = plane.point_at(i);
    const ProjLine l = witness_secant(inst.spec, p);
    ASSERT_TRUE(plane.incident(p, l)) << "point index " << i;
    EXPECT_EQ(meet_count(inst.arc, l), inst.spec.d) << "point index " << i;
    ++checked;
  }
  EXPECT_EQ(checked, plane.size() - inst.arc.size());
}

}  // namespace

TEST(Families, FermatDClosedForm) {
  struct Case {
    int p, n, e;
  };
  for (const Case c : {Case{3, 2, 1}, Case{3, 3, 1}, Case{5, 2, 1}, Case{7, 2, 1}, Case{3, 4, 2}}) {
    const auto inst = build_fermat_d(c.p, c.n, c.e, std::vector<int>{1}, std::vector<int>{1});
    const std::uint64_t q = ipow(c.p, c.n), qs = ipow(c.p, c.e);
    const std::uint64_t d = (q - 1) / (qs - 1);
    EXPECT_EQ(inst.spec.d, d);
    EXPECT_EQ(inst.arc.size(), d * (q - d + 2));
    EXPECT_EQ(inst.spec.expected_k, d * (q - d + 2));
    EXPECT_TRUE(is_arc(inst.arc));
  }
  EXPECT_EQ(build_fermat_d(3, 3, 1, std::vector<int>{1}, std::vector<int>{1}).arc.size(), 208u);
}

TEST(Families, FermatDRejectsBadParameters) {
  const std::vector<int> one{1}, zero{0}, t{0, 1};
  expect_error(Errc::BadParameters, [&] { build_fermat_d(2, 2, 1, one, one); });
  expect_error(Errc::BadParameters, [&] { build_fermat_d(3, 3, 2, one, one); });
  expect_error(Errc::BadParameters, [&] { build_fermat_d(3, 2, 2, one, one); });
  expect_error(Errc::BadParameters, [&] { build_fermat_d(3, 2, 1, zero, one); });
  expect_error(Errc::BadParameters, [&] { build_fermat_d(3, 2, 1, one, t); });  // t is not in GF(3)
}

TEST(Families, FermatDWitnessSecants) {
  for (const auto& ab : std::vector<std::pair<int, int>>{{1, 1}, {2, 1}, {2, 2}}) {
    expect_witnesses_valid(build_fermat_d(3, 2, 1, std::vector<int>{ab.first}, std::vector<int>{ab.second}));
    expect_witnesses_valid(build_fermat_d(3, 3, 1, std::vector<int>{ab.first}, std::vector<int>{ab.second}));
  }
  expect_witnesses_valid(build_fermat_d(5, 2, 1, std::vector<int>{2}, std::vector<int>{3}));
}

TEST(Families, FermatDWitnessCases) {
  const auto inst = build_fermat_d(3, 2, 1, std::vector<int>{1}, std::vector<int>{1});
  // Case 1: a point on Z = 0 off the curve gets Z = 0.
  const Plane& plane = inst.arc.plane();
  for (PlaneIndex i = 0; i < plane.size(); ++i) {
    const ProjPoint p = plane.point_at(i);
    if (p.coords[2] == 0 && !inst.arc.contains(i)) {
      EXPECT_EQ(witness_secant(inst.spec, p), (ProjLine{{0, 0, 1}}));
    }
  }
  // (0:0:1): alpha = 0, a*0 + 1 != 0, so the line is X = 0.
  EXPECT_EQ(witness_secant(inst.spec, ProjPoint{{0, 0, 1}}), (ProjLine{{1, 0, 0}}));
  expect_error(Errc::PointOnArc, [&] { witness_secant(inst.spec, plane.point_at(inst.arc.indices().front())); });
}

TEST(Families, FermatQm1) {
  for (const auto& pn : std::vector<std::pair<int, int>>{{3, 1}, {5, 1}, {7, 1}, {3, 2}, {5, 2}, {3, 3}}) {
    const auto inst = build_fermat_qm1(pn.first, pn.second);
    const std::uint64_t q = ipow(pn.first, pn.second);
    EXPECT_EQ(inst.spec.d, q - 1);
    EXPECT_EQ(inst.arc.size(), (q - 1) * (q - 1));
    // The arc is exactly the points with all coordinates nonzero.
    for (const auto& p : inst.arc.points())
      EXPECT_TRUE(p.coords[0] != 0 && p.coords[1] != 0 && p.coords[2] != 0);
    if (q <= 27) expect_witnesses_valid(inst);
  }
  const auto inst = build_fermat_qm1(3, 2);
  EXPECT_EQ(witness_secant(inst.spec, ProjPoint{{1, 0, 0}}), (ProjLine{{0, 1, 2}}));
  EXPECT_EQ(witness_secant(inst.spec, ProjPoint{{0, 0, 1}}), (ProjLine{{1, 2, 0}}));
  EXPECT_EQ(witness_secant(inst.spec, ProjPoint{{0, 1, 0}}), (ProjLine{{1, 0, 2}}));
  expect_error(Errc::PointOnArc, [&] { witness_secant(inst.spec, ProjPoint{{1, 1, 1}}); });
  expect_error(Errc::BadParameters, [&] { build_fermat_qm1(2, 3); });
}

TEST(Families, Hermitian) {
  for (const auto& pn : std::vector<std::pair<int, int>>{{2, 2}, {3, 2}, {5, 2}, {2, 4}}) {
    const auto inst = build_hermitian(pn.first, pn.second);
    const std::uint64_t r = ipow(pn.first, pn.second / 2);
    EXPECT_EQ(inst.spec.d, r + 1);
    EXPECT_EQ(inst.arc.size(), r * r * r + 1);
    EXPECT_TRUE(inst.curve.has_value());
    EXPECT_EQ(rational_points(*inst.curve).size(), inst.arc.size());
  }
  expect_error(Errc::OddDegreeField, [&] { build_hermitian(3, 3); });
  expect_error(Errc::UnsupportedFamily,
               [&] { witness_secant(build_hermitian(3, 2).spec, ProjPoint{{1, 0, 0}}); });
}

TEST(Families, Char2Fermat) {
  // q = 4: X^3 + Y^3 + Z^3 is Hermitian, 9 points.
  const auto q4 = build_char2_fermat(2);
  EXPECT_EQ(q4.spec.d, 3u);
  EXPECT_EQ(q4.arc.size(), 9u);
  const auto q8 = build_char2_fermat(3);
  EXPECT_EQ(q8.spec.d, 7u);
  EXPECT_EQ(q8.arc.size(), 21u);
  EXPECT_FALSE(q8.arc.contains(ProjPoint{{1, 1, 1}}));
  EXPECT_TRUE(is_arc(q8.arc));
  EXPECT_TRUE(is_arc(q8.arc.with_point(ProjPoint{{1, 1, 1}})));
  expect_error(Errc::BadParameters, [&] { build_char2_fermat(1); });
}

TEST(Families, TriangleComplement) {
  const auto f = Field::create(3, 2);
  const std::array<ProjLine, 3> coord{ProjLine{{1, 0, 0}}, ProjLine{{0, 1, 0}}, ProjLine{{0, 0, 1}}};
  const auto tri = build_triangle_complement(f, coord);
  EXPECT_EQ(tri.arc.indices(), build_fermat_qm1(3, 2).arc.indices());
  EXPECT_EQ(tri.spec.d, 8u);

  const std::array<ProjLine, 3> concurrent{ProjLine{{1, 0, 0}}, ProjLine{{0, 1, 0}}, ProjLine{{1, 1, 0}}};
  expect_error(Errc::ConcurrentLines, [&] { build_triangle_complement(f, concurrent); });
  const std::array<ProjLine, 3> repeated{ProjLine{{1, 0, 0}}, ProjLine{{1, 0, 0}}, ProjLine{{0, 0, 1}}};
  expect_error(Errc::ConcurrentLines, [&] { build_triangle_complement(f, repeated); });

  std::mt19937_64 rng(9);
  const Plane plane(f);
  for (int trial = 0; trial < 5; ++trial) {
    std::array<ProjLine, 3> lines;
    for (;;) {
      for (auto& l : lines) l = plane.line_at(rng() % plane.size());
      if (lines[0] == lines[1] || lines[1] == lines[2] || lines[0] == lines[2]) continue;
      if (plane.incident(plane.meet(lines[0], lines[1]), lines[2])) continue;
      break;
    }
    const auto inst = build_triangle_complement(f, lines);
    EXPECT_EQ(inst.arc.size(), 64u);
    EXPECT_TRUE(is_arc(inst.arc));
    EXPECT_TRUE(completeness_check(inst.arc).complete);
  }
}

TEST(Families, Names) {
  std::set<std::string_view> names;
  for (auto id : {FamilyId::FermatD, FamilyId::FermatQm1, FamilyId::Hermitian, FamilyId::Char2Fermat,
                  FamilyId::TriangleComplement})
    names.insert(family_name(id));
  EXPECT_EQ(names.size(), 5u);
  EXPECT_EQ(family_name(FamilyId::Hermitian), "hermitian");
}
