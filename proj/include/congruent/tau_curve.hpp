#pragma once

#include <array>
#include <optional>
#include <vector>

#include "congruent/rational.hpp"
#include "congruent/squarefree.hpp"

namespace congruent {

// tau = tan(theta / 2) for the prescribed angle theta in (0, pi). The angle
// itself is never materialized; only its exact sine and cosine are.
class Tau {
 public:
  // Throws InvalidParameter unless tau > 0.
  explicit Tau(Rat tau);

  const Rat& value() const { return tau_; }
  Rat cos_theta() const;  // (1 - tau^2) / (1 + tau^2)
  Rat sin_theta() const;  // 2 tau / (1 + tau^2)

  // 1/tau when it is a positive integer.
  std::optional<BigInt> integral_inverse() const;

  friend bool operator==(const Tau&, const Tau&) = default;

 private:
  Rat tau_;
};

// Rational point on X_tau: xy = tau (x + y) + 1, with x != tau.
class XTauPoint {
 public:
  // Throws InvalidParameter if (x, y) is off the curve or x = tau.
  XTauPoint(Tau tau, Rat x, Rat y);

  const Tau& tau() const { return tau_; }
  const Rat& x() const { return x_; }
  const Rat& y() const { return y_; }

  // (y, x), also on X_tau.
  XTauPoint swapped() const { return XTauPoint(tau_, y_, x_); }

  friend bool operator==(const XTauPoint&, const XTauPoint&) = default;

 private:
  Tau tau_;
  Rat x_, y_;
};

bool on_tau_curve(const Tau& tau, const Rat& x, const Rat& y);

// Triangle with angle theta between sides a and b.
struct HeronTriangle {
  Rat a, b, c;
  Tau tau;

  std::array<Rat, 3> sides() const { return {a, b, c}; }
  Rat semiperimeter() const { return (a + b + c) / Rat(2); }
  Rat area() const;  // a b sin(theta) / 2
  Rat inradius() const { return area() / semiperimeter(); }

  bool satisfies_law_of_cosines() const;
  bool satisfies_triangle_inequality() const;

  friend bool operator==(const HeronTriangle&, const HeronTriangle&) = default;
};

// y = (tau x + 1)/(x - tau). Throws PoleInput when x = tau.
XTauPoint point_from_x(const Tau& tau, const Rat& x);

// All integer points on X_tau when 1/tau is a positive integer, from the
// divisors d of tau^-2 + 1 with d = -1 (mod 1/tau). Sorted lexicographically.
// Throws NonIntegralInverseTau otherwise.
std::vector<XTauPoint> integer_points(const Tau& tau, const FactorLimits& limits = {});

// Integer points with |x|, |y| <= bound found by scanning x and solving for
// y. Valid for any rational tau; sorted lexicographically.
std::vector<XTauPoint> scan_integer_points(const Tau& tau, long long bound);

// Sides (y + 1/tau, x + 1/tau, x + y); the incircle is the unit circle.
// Throws DegenerateTriangle unless x > 0 and y > 0.
HeronTriangle heron_triangle(const XTauPoint& p);

struct TauCongruent {
  Rat area;  // xy / tau, the exact triangle area
  Rat n;     // tau x y, same class as area
  SquarefreeClass cls;
};

// Throws DegenerateTriangle unless x > 0 and y > 0.
TauCongruent tau_congruent_number(const XTauPoint& p, const FactorLimits& limits = {});

// The first `count` points with x > tau, taking x in Stern-Brocot order.
std::vector<XTauPoint> sample_tau_points(const Tau& tau, std::size_t count);

}  // namespace congruent
