#pragma once

#include <utility>

#include "congruent/rational.hpp"
#include "congruent/squarefree.hpp"
#include "congruent/triangle.hpp"

namespace congruent {

struct Point2 {
  Rat x, y;
  friend bool operator==(const Point2&, const Point2&) = default;
};

// The area-pi ellipse (x - a)^2 / a^2 + a^2 (y - 1/a)^2 = 1, where a is
// `axis`. It touches both coordinate axes.
class EllipseSpec {
 public:
  // Throws InvalidParameter when axis = 0.
  explicit EllipseSpec(Rat axis);

  const Rat& axis() const { return axis_; }
  Point2 center() const { return {axis_, axis_.inverse()}; }
  std::pair<Rat, Rat> semi_axes() const { return {axis_.abs(), axis_.inverse().abs()}; }
  bool contains(const Point2& p) const;  // on the ellipse itself

 private:
  Rat axis_;
};

// T(x, y) = (x / axis, axis * y). Determinant 1; sends the ellipse onto the
// unit circle centred at (1, 1).
Point2 affine_map(const EllipseSpec& e, const Point2& p);

bool on_shifted_unit_circle(const Point2& p);  // (X - 1)^2 + (Y - 1)^2 = 1

// Point on xy = x + y + 1, i.e. (x - 1)(y - 1) = 2.
class UnitCircleCurvePoint {
 public:
  // Throws InvalidParameter if the point is off the curve.
  UnitCircleCurvePoint(Rat x, Rat y);
  // (1 + t, 1 + 2/t); throws InvalidParameter when t = 0.
  static UnitCircleCurvePoint from_parameter(const Rat& t);

  const Rat& x() const { return x_; }
  const Rat& y() const { return y_; }
  Rat parameter() const { return x_ - Rat(1); }

 private:
  Rat x_, y_;
};

// Legs (0,0)-(u,0) and (0,0)-(0,v) of a right triangle circumscribing the
// ellipse. hyp is the hypotenuse of the image triangle under the affine map,
// |u/axis + axis v - u v|; it equals sqrt(u^2 + v^2) only when axis = 1.
struct RightTriangleLegs {
  Rat u, v, hyp;

  Rat area() const { return u * v / Rat(2); }
  friend bool operator==(const RightTriangleLegs&, const RightTriangleLegs&) = default;
};

// (u/axis + axis v - u v)^2 == (u/axis)^2 + (axis v)^2.
bool tangency_identity_holds(const EllipseSpec& e, const Rat& u, const Rat& v);

// u = axis (x + 1), v = (y + 1) / axis. Needs x > 1 and axis > 0, otherwise
// throws DegenerateTriangle (x) or InvalidParameter (axis).
RightTriangleLegs triangle_from_point(const EllipseSpec& e, const UnitCircleCurvePoint& p);

// u = axis (t + 2), v = (2 + 2/t) / axis. Throws InvalidParameter if t <= 0.
RightTriangleLegs triangle_from_t(const EllipseSpec& e, const Rat& t);

// area = (t + 2)(t + 1)/t, class of t (t + 1)(t + 2).
AreaClass area_and_class(const Rat& t, const FactorLimits& limits = {});

// The axis = 1 triangle for t scaled by t: a right triangle of area
// t (t + 1)(t + 2). Throws InvalidParameter if t < 1.
RightTriangle consecutive_product_triangle(const BigInt& t);

}  // namespace congruent
