#include <doctest.h>

#include <random>

#include "congruent/ellipse.hpp"
#include "congruent/errors.hpp"
#include "oracles.hpp"

using namespace congruent;

namespace {

Rat q(const char* text) { return Rat::parse(text); }

RightTriangleLegs legs(const char* u, const char* v, const char* h) { return {q(u), q(v), q(h)}; }

}  // namespace

TEST_CASE("EllipseSpec") {
  EllipseSpec e(Rat(2));
  CHECK(e.center() == Point2{Rat(2), q("1/2")});
  CHECK(e.semi_axes() == std::pair<Rat, Rat>{Rat(2), q("1/2")});
  // Tangent to both axes at (axis, 0) and (0, 1/axis).
  CHECK(e.contains({Rat(2), Rat(0)}));
  CHECK(e.contains({Rat(0), q("1/2")}));
  CHECK_FALSE(e.contains({Rat(0), Rat(0)}));
  CHECK_THROWS_AS(EllipseSpec(Rat(0)), InvalidParameter);
  CHECK_NOTHROW(EllipseSpec(Rat(-3)));
}

TEST_CASE("affine_map") {
  CHECK(affine_map(EllipseSpec(Rat(2)), {Rat(4), Rat(3)}) == Point2{Rat(2), Rat(6)});
  CHECK(affine_map(EllipseSpec(Rat(1)), {q("5/7"), q("-2")}) == Point2{q("5/7"), q("-2")});
}

TEST_CASE("affine_map sends rational points of the ellipse onto the shifted unit circle") {
  // Rational points of the ellipse: centre + (a c, s / a) for (c, s) on the
  // unit circle, c = (1 - m^2)/(1 + m^2), s = 2m/(1 + m^2).
  std::mt19937_64 rng(5);
  for (int i = 0; i < 200; ++i) {
    Rat axis = oracle::random_positive(rng, 30, 30);
    if (i % 4 == 0) axis = -axis;
    Rat m = oracle::random_positive(rng, 50, 50);
    Rat c = (Rat(1) - m * m) / (Rat(1) + m * m);
    Rat s = Rat(2) * m / (Rat(1) + m * m);
    EllipseSpec e(axis);
    Point2 p{axis + axis * c, axis.inverse() + s / axis};
    REQUIRE(e.contains(p));
    CHECK(on_shifted_unit_circle(affine_map(e, p)));
  }
}

TEST_CASE("affine_map preserves triangle areas") {
  std::mt19937_64 rng(6);
  auto area2 = [](const Point2& a, const Point2& b, const Point2& c) {
    return (b.x - a.x) * (c.y - a.y) - (c.x - a.x) * (b.y - a.y);
  };
  for (int i = 0; i < 100; ++i) {
    EllipseSpec e(oracle::random_positive(rng, 20, 20));
    Point2 a{oracle::random_positive(rng, 9, 9), oracle::random_positive(rng, 9, 9)};
    Point2 b{oracle::random_positive(rng, 9, 9), -oracle::random_positive(rng, 9, 9)};
    Point2 c{-oracle::random_positive(rng, 9, 9), oracle::random_positive(rng, 9, 9)};
    CHECK(area2(affine_map(e, a), affine_map(e, b), affine_map(e, c)) == area2(a, b, c));
  }
}

TEST_CASE("UnitCircleCurvePoint") {
  auto p = UnitCircleCurvePoint::from_parameter(Rat(3));
  CHECK(p.x() == Rat(4));
  CHECK(p.y() == q("5/3"));
  CHECK(p.parameter() == Rat(3));
  CHECK_THROWS_AS(UnitCircleCurvePoint(Rat(2), Rat(2)), InvalidParameter);
  CHECK_THROWS_AS(UnitCircleCurvePoint::from_parameter(Rat(0)), InvalidParameter);
}

TEST_CASE("triangle_from_point") {
  CHECK(triangle_from_point(EllipseSpec(Rat(1)), UnitCircleCurvePoint(Rat(2), Rat(3))) == legs("3", "4", "5"));
  CHECK(triangle_from_point(EllipseSpec(Rat(2)), UnitCircleCurvePoint(Rat(2), Rat(3))) == legs("6", "2", "5"));
  CHECK(triangle_from_point(EllipseSpec(Rat(1)), UnitCircleCurvePoint(Rat(4), q("5/3"))) == legs("5", "8/3", "17/3"));
  CHECK(tangency_identity_holds(EllipseSpec(Rat(2)), Rat(6), Rat(2)));
  // x <= 1: the hypotenuse line is tangent but the circle lies outside.
  CHECK_THROWS_AS(triangle_from_point(EllipseSpec(Rat(1)), UnitCircleCurvePoint::from_parameter(q("-3/2"))),
                  DegenerateTriangle);
  CHECK_THROWS_AS(triangle_from_point(EllipseSpec(Rat(1)), UnitCircleCurvePoint::from_parameter(Rat(-1))),
                  DegenerateTriangle);
  CHECK_THROWS_AS(triangle_from_point(EllipseSpec(Rat(-1)), UnitCircleCurvePoint(Rat(2), Rat(3))), InvalidParameter);
}

TEST_CASE("triangle_from_t") {
  CHECK(triangle_from_t(EllipseSpec(Rat(1)), Rat(1)) == legs("3", "4", "5"));
  CHECK(triangle_from_t(EllipseSpec(Rat(1)), Rat(4)) == legs("6", "5/2", "13/2"));
  CHECK(triangle_from_t(EllipseSpec(Rat(3)), Rat(1)) == legs("9", "4/3", "5"));
  CHECK(triangle_from_t(EllipseSpec(Rat(3)), Rat(1)).area() == Rat(6));
  CHECK_THROWS_AS(triangle_from_t(EllipseSpec(Rat(1)), Rat(0)), InvalidParameter);
  CHECK_THROWS_AS(triangle_from_t(EllipseSpec(Rat(1)), q("-1/2")), InvalidParameter);
}

TEST_CASE("area_and_class") {
  CHECK(area_and_class(Rat(1)).area == Rat(6));
  CHECK(area_and_class(Rat(1)).cls.value() == 6);
  CHECK(area_and_class(Rat(3)).cls.value() == 15);
  CHECK(area_and_class(Rat(4)).area == q("15/2"));
  CHECK(area_and_class(Rat(4)).cls.value() == 30);
  CHECK(area_and_class(Rat(5)).cls.value() == 210);
  CHECK(oracle::squarefree_part(6 * 7 * 8) == 21);
  CHECK(area_and_class(Rat(6)).cls.value() == 21);
  CHECK_THROWS_AS(area_and_class(Rat(0)), InvalidParameter);
}

TEST_CASE("consecutive_product_triangle") {
  RightTriangle t1 = consecutive_product_triangle(1);
  CHECK(t1.sides() == std::array<Rat, 3>{Rat(3), Rat(4), Rat(5)});
  CHECK(consecutive_product_triangle(3).sides() == std::array<Rat, 3>{Rat(15), Rat(8), Rat(17)});
  RightTriangle t4 = consecutive_product_triangle(4);
  CHECK(t4.sides() == std::array<Rat, 3>{Rat(24), Rat(10), Rat(26)});
  CHECK(t4.area() == Rat(120));
  CHECK_THROWS_AS(consecutive_product_triangle(0), InvalidParameter);
}

TEST_CASE("random (axis, t): tangency, transformed Pythagoras, axis independence") {
  std::mt19937_64 rng(8);
  for (int i = 0; i < 300; ++i) {
    Rat axis = oracle::random_positive(rng, 40, 40);
    Rat t = oracle::random_positive(rng, 80, 40);
    EllipseSpec e(axis);
    RightTriangleLegs l = triangle_from_t(e, t);
    CHECK(triangle_from_point(e, UnitCircleCurvePoint::from_parameter(t)) == l);
    CHECK(tangency_identity_holds(e, l.u, l.v));
    Rat big_u = l.u / axis;
    Rat big_v = axis * l.v;
    CHECK(big_u + big_v - l.u * l.v < Rat(0));
    CHECK(l.hyp == l.u * l.v - big_u - big_v);
    CHECK(big_u * big_u + big_v * big_v == l.hyp * l.hyp);
    CHECK(l.area() == big_u * big_v / Rat(2));
    CHECK(l.area() == triangle_from_t(EllipseSpec(Rat(1)), t).area());
    CHECK(l.area() == area_and_class(t).area);
  }
}
