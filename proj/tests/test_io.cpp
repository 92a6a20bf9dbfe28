#include <gtest/gtest.h>

#include "arcforge/error.hpp"
#include "arcforge/families.hpp"
#include "arcforge/io.hpp"

using namespace arcforge;

namespace {

Errc code_of(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  return Errc::InvariantViolation;
}

}  // namespace

TEST(Io, FieldSpec) {
  const auto s = io::parse_field_spec("p=3,n=2,poly=[1,0,1]");
  EXPECT_EQ(s.p, 3);
  EXPECT_EQ(s.n, 2);
  EXPECT_EQ(s.poly, (std::vector<int>{1, 0, 1}));
  EXPECT_EQ(io::format_field_spec(s), "p=3,n=2,poly=[1,0,1]");
  const auto bare = io::parse_field_spec("p=5,n=1");
  EXPECT_TRUE(bare.poly.empty());
  EXPECT_EQ(io::field_from_spec(bare)->q(), 5u);
  EXPECT_EQ(io::field_from_spec(io::parse_field_spec("p=3,n=2"))->spec().poly, (std::vector<int>{1, 0, 1}));
  EXPECT_EQ(code_of([] { io::parse_field_spec("q=9"); }), Errc::ParseError);
}

TEST(Io, Triples) {
  const auto f = Field::create(3, 2);
  const Triple t = io::parse_triple(*f, "[[0],[1],[1,1]]");
  EXPECT_EQ(t, (Triple{0, 1, 4}));
  EXPECT_EQ(io::format_triple(*f, t), "[[0,0],[1,0],[1,1]]");
  EXPECT_EQ(io::parse_triple(*f, io::format_triple(*f, t)), t);
  EXPECT_EQ(code_of([&] { io::parse_triple(*f, "[[0],[1]]"); }), Errc::ParseError);
  EXPECT_EQ(code_of([&] { io::parse_triple(*f, "[[0],[1],[3]]"); }), Errc::BadElement);
  const auto lines = io::parse_lines(*f, "[[1],[0],[0]];[[0],[1],[0]];[[0],[0],[1]]");
  EXPECT_EQ(lines[2].coeffs, (Triple{0, 0, 1}));
  EXPECT_EQ(code_of([&] { io::parse_lines(*f, "[[1],[0],[0]]"); }), Errc::ParseError);
}

TEST(Io, CurveRoundTrip) {
  for (const auto& inst : {build_hermitian(3, 2), build_fermat_qm1(5, 1),
                           build_fermat_d(3, 3, 1, std::vector<int>{2}, std::vector<int>{1})}) {
    const Curve& c = *inst.curve;
    const std::string text = io::format_curve_text(c);
    const std::string json = io::format_curve_json(c);
    // Both formats name their field, so no field needs to be passed.
    EXPECT_EQ(io::parse_curve(text, nullptr).poly(), c.poly());
    EXPECT_EQ(io::parse_curve(json, nullptr).poly(), c.poly());
    EXPECT_EQ(io::format_curve_text(io::parse_curve(text, nullptr)), text);
  }
}

TEST(Io, CurveTextHandWritten) {
  const auto f = Field::create(3, 2);
  const std::string text =
      "# Hermitian over GF(9)\n"
      "coef=[1] exp=4,0,0\n"
      "coef=[1] exp=0,4,0\n"
      "\n"
      "coef=[1,0] exp=0,0,4\n";
  const Curve c = io::parse_curve(text, f);
  EXPECT_EQ(c.degree(), 4u);
  EXPECT_EQ(rational_points(c).size(), 28u);
  EXPECT_EQ(code_of([&] { io::parse_curve(text, nullptr); }), Errc::ParseError);
  EXPECT_EQ(code_of([&] { io::parse_curve("coef=[0] exp=1,0,0\n", f); }), Errc::ParseError);
  EXPECT_EQ(code_of([&] { io::parse_curve("coef=[1] exp=1,0\n", f); }), Errc::ParseError);
  EXPECT_EQ(code_of([&] { io::parse_curve("coef=[1] exp=2,0,0\ncoef=[1] exp=1,0,0\n", f); }), Errc::DegreeMismatch);
}

TEST(Io, CurveJsonHandWritten) {
  const std::string json =
      R"({"field":"p=7,n=1","monomials":[{"c":[1],"e":[2,0,0]},{"c":[6],"e":[0,1,1]}]})";
  const Curve c = io::parse_curve(json, nullptr);
  EXPECT_EQ(c.field().q(), 7u);
  EXPECT_EQ(rational_points(c).size(), 8u);
  EXPECT_EQ(code_of([] { io::parse_curve(R"({"field":"p=7,n=1"})", nullptr); }), Errc::ParseError);
  EXPECT_EQ(code_of([] { io::parse_curve(R"({"monomials":[]})", nullptr); }), Errc::ParseError);
}

TEST(Io, PointList) {
  const auto f = Field::create(2, 2);
  const Plane plane(f);
  const std::vector<ProjPoint> pts{plane.point_at(0), plane.point_at(20)};
  const std::string out = io::format_point_list(*f, pts);
  EXPECT_EQ(out, "[[1,0],[0,0],[0,0]]\n[[0,0],[0,0],[1,0]]\n");
}
