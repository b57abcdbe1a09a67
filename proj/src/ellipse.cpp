#include "congruent/ellipse.hpp"

#include "congruent/errors.hpp"

namespace congruent {

namespace {

void require_positive_axis(const EllipseSpec& e) {
  if (e.axis().sign() < 0) {
    throw InvalidParameter("axis " + e.axis().str() + " < 0 puts the ellipse outside the first quadrant");
  }
}

}  // namespace

EllipseSpec::EllipseSpec(Rat axis) : axis_(std::move(axis)) {
  if (axis_.is_zero()) throw InvalidParameter("ellipse axis must be nonzero");
}

bool EllipseSpec::contains(const Point2& p) const {
  Rat dx = p.x - axis_;
  Rat dy = p.y - axis_.inverse();
  return square(dx) / square(axis_) + square(axis_) * square(dy) == Rat(1);
}

Point2 affine_map(const EllipseSpec& e, const Point2& p) { return {p.x / e.axis(), e.axis() * p.y}; }

bool on_shifted_unit_circle(const Point2& p) { return square(p.x - Rat(1)) + square(p.y - Rat(1)) == Rat(1); }

UnitCircleCurvePoint::UnitCircleCurvePoint(Rat x, Rat y) : x_(std::move(x)), y_(std::move(y)) {
  if ((x_ - Rat(1)) * (y_ - Rat(1)) != Rat(2)) {
    throw InvalidParameter("(" + x_.str() + ", " + y_.str() + ") is not on xy = x + y + 1");
  }
}

UnitCircleCurvePoint UnitCircleCurvePoint::from_parameter(const Rat& t) {
  if (t.is_zero()) throw InvalidParameter("curve parameter t must be nonzero");
  return UnitCircleCurvePoint(Rat(1) + t, Rat(1) + Rat(2) / t);
}

bool tangency_identity_holds(const EllipseSpec& e, const Rat& u, const Rat& v) {
  Rat big_u = u / e.axis();
  Rat big_v = e.axis() * v;
  return square(big_u + big_v - u * v) == square(big_u) + square(big_v);
}

RightTriangleLegs triangle_from_point(const EllipseSpec& e, const UnitCircleCurvePoint& p) {
  require_positive_axis(e);
  if (p.x() <= Rat(1)) {
    throw DegenerateTriangle("curve point x = " + p.x().str() + " <= 1 gives no circumscribing triangle");
  }
  Rat u = e.axis() * (p.x() + Rat(1));
  Rat v = (p.y() + Rat(1)) / e.axis();
  Rat hyp = (u / e.axis() + e.axis() * v - u * v).abs();
  if (u.sign() <= 0 || v.sign() <= 0 || hyp.sign() <= 0) {
    throw DegenerateTriangle("non-positive side in (" + u.str() + ", " + v.str() + ", " + hyp.str() + ")");
  }
  return {std::move(u), std::move(v), std::move(hyp)};
}

RightTriangleLegs triangle_from_t(const EllipseSpec& e, const Rat& t) {
  if (t.sign() <= 0) throw InvalidParameter("ellipse parameter t must be positive, got " + t.str());
  require_positive_axis(e);
  Rat u = e.axis() * (t + Rat(2));
  Rat v = (Rat(2) + Rat(2) / t) / e.axis();
  Rat hyp = (u / e.axis() + e.axis() * v - u * v).abs();
  return {std::move(u), std::move(v), std::move(hyp)};
}

AreaClass area_and_class(const Rat& t, const FactorLimits& limits) {
  if (t.sign() <= 0) throw InvalidParameter("ellipse parameter t must be positive, got " + t.str());
  Rat area = (t + Rat(2)) * (t + Rat(1)) / t;
  return {area, squarefree_class(t * (t + Rat(1)) * (t + Rat(2)), limits)};
}

RightTriangle consecutive_product_triangle(const BigInt& t) {
  if (t < 1) throw InvalidParameter("consecutive product needs t >= 1, got " + t.str());
  Rat scale(t);
  RightTriangleLegs legs = triangle_from_t(EllipseSpec(Rat(1)), scale);
  return RightTriangle(legs.u * scale, legs.v * scale, legs.hyp * scale);
}

}  // namespace congruent
