#include "congruent/triangle.hpp"

#include "congruent/errors.hpp"

namespace congruent {

bool is_pythagorean(const Rat& a, const Rat& b, const Rat& c) { return a * a + b * b == c * c; }

RightTriangle::RightTriangle(Rat a, Rat b, Rat c) : a_(std::move(a)), b_(std::move(b)), c_(std::move(c)) {
  if (a_.sign() <= 0 || b_.sign() <= 0 || c_.sign() <= 0) {
    throw InvalidParameter("right triangle sides must be positive: (" + a_.str() + ", " + b_.str() + ", " +
                           c_.str() + ")");
  }
  if (!is_pythagorean(a_, b_, c_)) {
    throw InvalidParameter("not a right triangle: (" + a_.str() + ", " + b_.str() + ", " + c_.str() + ")");
  }
}

RightTriangle RightTriangle::scaled(const Rat& factor) const {
  return RightTriangle(a_ * factor, b_ * factor, c_ * factor);
}

}  // namespace congruent
