#pragma once

#include <array>

#include "congruent/rational.hpp"
#include "congruent/squarefree.hpp"

namespace congruent {

// Rational right triangle with legs a, b and hypotenuse c.
class RightTriangle {
 public:
  // Throws InvalidParameter unless a, b, c > 0 and a^2 + b^2 = c^2.
  RightTriangle(Rat a, Rat b, Rat c);

  const Rat& a() const { return a_; }
  const Rat& b() const { return b_; }
  const Rat& c() const { return c_; }
  std::array<Rat, 3> sides() const { return {a_, b_, c_}; }

  Rat semiperimeter() const { return (a_ + b_ + c_) / Rat(2); }
  Rat area() const { return a_ * b_ / Rat(2); }
  RightTriangle scaled(const Rat& factor) const;

  friend bool operator==(const RightTriangle&, const RightTriangle&) = default;

 private:
  Rat a_, b_, c_;
};

bool is_pythagorean(const Rat& a, const Rat& b, const Rat& c);

// Area together with its class modulo rational squares.
struct AreaClass {
  Rat area;
  SquarefreeClass cls;
};

}  // namespace congruent
