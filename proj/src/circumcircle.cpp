#include "congruent/circumcircle.hpp"

#include "congruent/errors.hpp"

namespace congruent {

CircumParam::CircumParam(Rat radius, Rat t) : radius_(std::move(radius)), t_(std::move(t)) {
  if (radius_.sign() <= 0) throw InvalidParameter("circumradius must be positive, got " + radius_.str());
  if (t_.sign() <= 0 || t_ >= Rat(1)) throw InvalidParameter("t must lie in (0, 1), got " + t_.str());
}

RightTriangle inscribed_triangle(const CircumParam& p) {
  Rat diameter = Rat(2) * p.radius();
  Rat t2 = square(p.t());
  Rat denom = Rat(1) + t2;
  return RightTriangle(diameter * (Rat(1) - t2) / denom, diameter * Rat(2) * p.t() / denom, diameter);
}

AreaClass circum_area_and_class(const CircumParam& p, const FactorLimits& limits) {
  const Rat& t = p.t();
  Rat one_minus = Rat(1) - square(t);
  Rat area = Rat(4) * square(p.radius()) * t * one_minus / square(Rat(1) + square(t));
  return {std::move(area), squarefree_class(t * one_minus, limits)};
}

}  // namespace congruent
