#pragma once

#include "congruent/rational.hpp"
#include "congruent/squarefree.hpp"
#include "congruent/triangle.hpp"

namespace congruent {

// Circumradius R > 0 and unit-circle parameter t in (0, 1).
class CircumParam {
 public:
  // Throws InvalidParameter outside R > 0, 0 < t < 1.
  CircumParam(Rat radius, Rat t);

  const Rat& radius() const { return radius_; }
  const Rat& t() const { return t_; }

 private:
  Rat radius_, t_;
};

// (2R (1 - t^2)/(1 + t^2), 2R 2t/(1 + t^2), 2R); the hypotenuse is a diameter.
RightTriangle inscribed_triangle(const CircumParam& p);

// area = 4 R^2 t (1 - t^2)/(1 + t^2)^2, class of t (1 - t^2).
AreaClass circum_area_and_class(const CircumParam& p, const FactorLimits& limits = {});

}  // namespace congruent
