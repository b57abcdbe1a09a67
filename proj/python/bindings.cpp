// Python bindings for the congruent library. Rationals cross the boundary as
// canonical "p/q" strings; the congruent package wraps them in Fraction.

#include <string>
#include <tuple>
#include <vector>

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "congruent/congruent.hpp"

namespace py = pybind11;
using namespace congruent;

namespace {

using Triple = std::tuple<std::string, std::string, std::string>;

Rat rat(const std::string& text) { return Rat::parse(text); }

Triple triple(const std::array<Rat, 3>& s) { return {s[0].str(), s[1].str(), s[2].str()}; }

ExcircleKind kind_of(const std::string& text) {
  auto kind = parse_excircle_kind(text);
  if (!kind) throw InvalidParameter("excircle kind must be 'a', 'b' or 'c', got '" + text + "'");
  return *kind;
}

XTauPoint tau_point(const std::string& tau, const std::string& x, const std::string& y) {
  return XTauPoint(Tau(rat(tau)), rat(x), rat(y));
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Exact rational triangles and congruent numbers";

  static py::exception<Error> base(m, "CongruentError", PyExc_ValueError);
  py::register_exception<ParseError>(m, "ParseError", base.ptr());
  py::register_exception<NonPositiveInput>(m, "NonPositiveInput", base.ptr());
  py::register_exception<FactorizationLimitExceeded>(m, "FactorizationLimitExceeded", base.ptr());
  py::register_exception<PoleInput>(m, "PoleInput", base.ptr());
  py::register_exception<NonIntegralInverseTau>(m, "NonIntegralInverseTau", base.ptr());
  py::register_exception<DegenerateTriangle>(m, "DegenerateTriangle", base.ptr());
  py::register_exception<InvalidParameter>(m, "InvalidParameter", base.ptr());

  m.def("canonical", [](const std::string& q) { return rat(q).str(); }, py::arg("q"));

  m.def(
      "squarefree_class", [](const std::string& q) { return squarefree_class(rat(q), FactorLimits::from_environment()).str(); },
      py::arg("q"));
  m.def(
      "signed_divisors",
      [](const std::string& n) {
        Rat value = rat(n);
        if (!value.is_integer() || value.sign() <= 0) throw InvalidParameter("n must be a positive integer");
        std::vector<std::string> out;
        for (const auto& d : signed_divisors(value.num(), FactorLimits::from_environment())) out.push_back(d.str());
        return out;
      },
      py::arg("n"));
  m.def("is_rational_square", [](const std::string& q) { return is_rational_square(rat(q)); }, py::arg("q"));

  m.def(
      "point_from_x",
      [](const std::string& tau, const std::string& x) {
        XTauPoint p = point_from_x(Tau(rat(tau)), rat(x));
        return std::make_pair(p.x().str(), p.y().str());
      },
      py::arg("tau"), py::arg("x"));
  m.def(
      "integer_points",
      [](const std::string& tau) {
        std::vector<std::pair<std::string, std::string>> out;
        for (const auto& p : integer_points(Tau(rat(tau)), FactorLimits::from_environment())) {
          out.emplace_back(p.x().str(), p.y().str());
        }
        return out;
      },
      py::arg("tau"));
  m.def(
      "heron_triangle",
      [](const std::string& tau, const std::string& x, const std::string& y) {
        return triple(heron_triangle(tau_point(tau, x, y)).sides());
      },
      py::arg("tau"), py::arg("x"), py::arg("y"));
  m.def(
      "tau_congruent_number",
      [](const std::string& tau, const std::string& x, const std::string& y) {
        TauCongruent n = tau_congruent_number(tau_point(tau, x, y), FactorLimits::from_environment());
        return std::make_tuple(n.area.str(), n.n.str(), n.cls.str());
      },
      py::arg("tau"), py::arg("x"), py::arg("y"));

  m.def(
      "triangle_from_t",
      [](const std::string& axis, const std::string& t) {
        RightTriangleLegs legs = triangle_from_t(EllipseSpec(rat(axis)), rat(t));
        return Triple{legs.u.str(), legs.v.str(), legs.hyp.str()};
      },
      py::arg("axis"), py::arg("t"));
  m.def(
      "ellipse_area_and_class",
      [](const std::string& t) {
        AreaClass ac = area_and_class(rat(t), FactorLimits::from_environment());
        return std::make_pair(ac.area.str(), ac.cls.str());
      },
      py::arg("t"));
  m.def(
      "consecutive_product_triangle",
      [](const std::string& t) {
        Rat value = rat(t);
        if (!value.is_integer()) throw InvalidParameter("t must be an integer");
        return triple(consecutive_product_triangle(value.num()).sides());
      },
      py::arg("t"));

  m.def(
      "inscribed_triangle",
      [](const std::string& radius, const std::string& t) {
        return triple(inscribed_triangle(CircumParam(rat(radius), rat(t))).sides());
      },
      py::arg("radius"), py::arg("t"));
  m.def(
      "circum_area_and_class",
      [](const std::string& radius, const std::string& t) {
        AreaClass ac = circum_area_and_class(CircumParam(rat(radius), rat(t)), FactorLimits::from_environment());
        return std::make_pair(ac.area.str(), ac.cls.str());
      },
      py::arg("radius"), py::arg("t"));

  m.def(
      "exradii",
      [](const std::string& a, const std::string& b, const std::string& c) {
        Exradii r = exradii(RightTriangle(rat(a), rat(b), rat(c)));
        return Triple{r.r_a.str(), r.r_b.str(), r.r_c.str()};
      },
      py::arg("a"), py::arg("b"), py::arg("c"));
  m.def(
      "triangle_with_unit_exradius",
      [](const std::string& kind, const std::string& x) {
        return triple(triangle_with_unit_exradius(kind_of(kind), rat(x)).sides());
      },
      py::arg("kind"), py::arg("x"));
  m.def(
      "excircle_area_class",
      [](const std::string& kind, const std::string& x) {
        AreaClass ac = excircle_area_class(kind_of(kind), rat(x), FactorLimits::from_environment());
        return std::make_pair(ac.area.str(), ac.cls.str());
      },
      py::arg("kind"), py::arg("x"));
  m.def(
      "normalize_to_unit_exradius",
      [](const std::string& a, const std::string& b, const std::string& c, const std::string& kind) {
        return triple(normalize_to_unit_exradius(RightTriangle(rat(a), rat(b), rat(c)), kind_of(kind)).sides());
      },
      py::arg("a"), py::arg("b"), py::arg("c"), py::arg("kind"));

  m.def("render_tables", []() { return render_tables(FactorLimits::from_environment()); });
  m.def(
      "check_record", [](const std::string& line) { return check_record(parse_record(line), FactorLimits::from_environment()); },
      py::arg("line"));
  m.def(
      "tau_record",
      [](const std::string& tau, const std::string& x) {
        return to_json_line(tau_record(point_from_x(Tau(rat(tau)), rat(x)), FactorLimits::from_environment()));
      },
      py::arg("tau"), py::arg("x"));
}
