#include "congruent/excircle.hpp"

#include "congruent/errors.hpp"

namespace congruent {

namespace {

void require_unit_interval(const Rat& x) {
  if (x.sign() <= 0 || x >= Rat(1)) throw InvalidParameter("x must lie in (0, 1), got " + x.str());
}

}  // namespace

std::string_view to_string(ExcircleKind kind) {
  switch (kind) {
    case ExcircleKind::A:
      return "a";
    case ExcircleKind::B:
      return "b";
    case ExcircleKind::C:
      return "c";
  }
  return "?";
}

std::optional<ExcircleKind> parse_excircle_kind(std::string_view text) {
  if (text == "a" || text == "A") return ExcircleKind::A;
  if (text == "b" || text == "B") return ExcircleKind::B;
  if (text == "c" || text == "C") return ExcircleKind::C;
  return std::nullopt;
}

const Rat& Exradii::get(ExcircleKind kind) const {
  switch (kind) {
    case ExcircleKind::A:
      return r_a;
    case ExcircleKind::B:
      return r_b;
    case ExcircleKind::C:
      break;
  }
  return r_c;
}

Exradii exradii(const RightTriangle& t) {
  const Rat two(2);
  return {(t.a() - t.b() + t.c()) / two, (t.c() - t.a() + t.b()) / two, (t.a() + t.b() + t.c()) / two};
}

Rat exradius_from_area(const RightTriangle& t, ExcircleKind kind) {
  Rat s = t.semiperimeter();
  switch (kind) {
    case ExcircleKind::A:
      return t.area() / (s - t.a());
    case ExcircleKind::B:
      return t.area() / (s - t.b());
    case ExcircleKind::C:
      break;
  }
  return t.area() / (s - t.c());
}

ExcircleCurvePoint excircle_curve_point(ExcircleKind kind, const Rat& x) {
  require_unit_interval(x);
  const Rat one(1);
  if (kind == ExcircleKind::C) return {kind, x, (one - x) / (one + x)};
  return {kind, x, (one + x) / (one - x)};
}

bool on_excircle_curve(const ExcircleCurvePoint& p) {
  const Rat one(1);
  switch (p.kind) {
    case ExcircleKind::A:
      return p.w - p.w * p.x - p.x == one;
    case ExcircleKind::B:
      return p.w * (p.x - one) + p.x + one == Rat(0);
    case ExcircleKind::C:
      break;
  }
  return p.x * p.w + p.x + p.w == one;
}

RightTriangle triangle_with_unit_exradius(ExcircleKind kind, const Rat& x) {
  ExcircleCurvePoint p = excircle_curve_point(kind, x);
  const Rat one(1);
  switch (kind) {
    case ExcircleKind::A:
      return RightTriangle(x + one, p.w - one, p.w - x);
    case ExcircleKind::B:
      return RightTriangle(p.w - one, x + one, p.w - x);
    case ExcircleKind::C:
      break;
  }
  return RightTriangle(one - p.w, one - x, x + p.w);
}

AreaClass excircle_area_class(ExcircleKind kind, const Rat& x, const FactorLimits& limits) {
  require_unit_interval(x);
  const Rat one(1);
  Rat area = kind == ExcircleKind::C ? x * (one - x) / (one + x) : x * (x + one) / (one - x);
  SquarefreeClass cls = squarefree_class(area, limits);
  return {std::move(area), std::move(cls)};
}

RightTriangle normalize_to_unit_exradius(const RightTriangle& t, ExcircleKind kind) {
  return t.scaled(exradii(t).get(kind).inverse());
}

}  // namespace congruent
