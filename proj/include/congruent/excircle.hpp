#pragma once

#include <optional>
#include <string_view>

#include "congruent/rational.hpp"
#include "congruent/squarefree.hpp"
#include "congruent/triangle.hpp"

namespace congruent {

// Which excircle: opposite leg a, leg b, or the hypotenuse c.
enum class ExcircleKind { A, B, C };

std::string_view to_string(ExcircleKind kind);  // "a", "b", "c"
std::optional<ExcircleKind> parse_excircle_kind(std::string_view text);

struct Exradii {
  Rat r_a, r_b, r_c;

  const Rat& get(ExcircleKind kind) const;
  friend bool operator==(const Exradii&, const Exradii&) = default;
};

// r_a = (a - b + c)/2, r_b = (c - a + b)/2, r_c = (a + b + c)/2.
Exradii exradii(const RightTriangle& t);

// Area / (s - l) for the side l opposite the chosen excircle. Independent of
// the closed forms above; holds for any triangle.
Rat exradius_from_area(const RightTriangle& t, ExcircleKind kind);

// Point on the kind's defining curve over x: (x, z) on z(1 - x) = 1 + x for
// A, (x, z) on z(x - 1) + x + 1 = 0 for B, (x, y) on xy + x + y = 1 for C.
struct ExcircleCurvePoint {
  ExcircleKind kind;
  Rat x, w;  // w is z for kinds A and B, y for kind C
};

// Throws InvalidParameter unless 0 < x < 1.
ExcircleCurvePoint excircle_curve_point(ExcircleKind kind, const Rat& x);
bool on_excircle_curve(const ExcircleCurvePoint& p);

// A: (x + 1, z - 1, z - x); B: (z - 1, x + 1, z - x); C: (1 - y, 1 - x, x + y).
// The selected exradius is 1. Throws InvalidParameter unless 0 < x < 1.
RightTriangle triangle_with_unit_exradius(ExcircleKind kind, const Rat& x);

// x (x + 1)/(1 - x) for A and B, x (1 - x)/(1 + x) for C.
AreaClass excircle_area_class(ExcircleKind kind, const Rat& x, const FactorLimits& limits = {});

// t scaled by 1 / r_kind.
RightTriangle normalize_to_unit_exradius(const RightTriangle& t, ExcircleKind kind);

}  // namespace congruent
