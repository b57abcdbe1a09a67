#include "congruent/records.hpp"

#include <limits>
#include <sstream>

#include <json.hpp>

#include "congruent/circumcircle.hpp"
#include "congruent/errors.hpp"
#include "congruent/triangle.hpp"

namespace congruent {

namespace {

using Json = nlohmann::ordered_json;

const char* const kSideFailure = "Pythagoras/law-of-cosines failed";

const Rat& need(const OutputRecord& r, std::string_view name) {
  const Rat* value = r.parameter(name);
  if (value == nullptr) throw InvalidParameter("missing parameter '" + std::string(name) + "'");
  return *value;
}

std::string sides_text(const std::array<Rat, 3>& s) {
  return "(" + s[0].str() + ", " + s[1].str() + ", " + s[2].str() + ")";
}

// Shared tail of every triangle family: the record must carry sides, an area
// and a class; the class must be the class of the stated area.
bool has_triangle_fields(const OutputRecord& r, std::vector<std::string>& failures) {
  if (!r.sides || !r.area || !r.cls) {
    failures.emplace_back("record lacks sides, area or class");
    return false;
  }
  return true;
}

void check_class(const OutputRecord& r, const FactorLimits& limits, std::vector<std::string>& failures) {
  if (r.area->sign() <= 0) {
    failures.emplace_back("area is not positive");
    return;
  }
  SquarefreeClass expected = squarefree_class(*r.area, limits);
  if (expected.value() != *r.cls) {
    failures.emplace_back("class mismatch: record has " + r.cls->str() + ", area gives " + expected.str());
  }
}

void check_sides_match(const std::array<Rat, 3>& have, const std::array<Rat, 3>& want,
                       std::vector<std::string>& failures) {
  if (have != want) {
    failures.emplace_back("sides " + sides_text(have) + " do not match parameters, expected " + sides_text(want));
  }
}

void check_tau(const OutputRecord& r, const FactorLimits& limits, std::vector<std::string>& failures) {
  Tau tau(need(r, "tau"));
  const Rat& x = need(r, "x");
  const Rat& y = need(r, "y");
  if (x == tau.value() || !on_tau_curve(tau, x, y)) {
    failures.emplace_back("point is not on X_tau");
    return;
  }
  bool triangle_branch = x.sign() > 0 && y.sign() > 0;
  if (r.degenerate) {
    if (triangle_branch) failures.emplace_back("degenerate flag set on a point with x, y > 0");
    if (r.sides || r.area || r.cls) failures.emplace_back("degenerate record carries triangle fields");
    return;
  }
  if (!triangle_branch) {
    failures.emplace_back("point with x <= 0 or y <= 0 is not flagged degenerate");
    return;
  }
  if (!has_triangle_fields(r, failures)) return;
  const auto& s = *r.sides;
  HeronTriangle given{s[0], s[1], s[2], tau};
  if (!given.satisfies_triangle_inequality()) failures.emplace_back("triangle inequality failed");
  if (!given.satisfies_law_of_cosines()) failures.emplace_back(kSideFailure);
  XTauPoint p(tau, x, y);
  check_sides_match(s, heron_triangle(p).sides(), failures);
  if (given.satisfies_triangle_inequality() && given.inradius() != Rat(1)) {
    failures.emplace_back("inradius is " + given.inradius().str() + ", not 1");
  }
  if (*r.area != x * y / tau.value()) failures.emplace_back("area mismatch: expected xy/tau");
  check_class(r, limits, failures);
}

void check_ellipse(const OutputRecord& r, const FactorLimits& limits, std::vector<std::string>& failures) {
  EllipseSpec e(need(r, "axis"));
  const Rat& t = need(r, "t");
  const Rat* scale_param = r.parameter("scale");
  Rat scale = scale_param ? *scale_param : Rat(1);
  if (scale.sign() <= 0) throw InvalidParameter("scale must be positive");
  if (!has_triangle_fields(r, failures)) return;
  const auto& s = *r.sides;
  Rat u = s[0] / scale;
  Rat v = s[1] / scale;
  Rat hyp = s[2] / scale;
  Rat big_u = u / e.axis();
  Rat big_v = e.axis() * v;
  if (!tangency_identity_holds(e, u, v)) failures.emplace_back("tangency identity failed");
  if (square(big_u) + square(big_v) != square(hyp) || hyp != (big_u + big_v - u * v).abs()) {
    failures.emplace_back(kSideFailure);
  }
  RightTriangleLegs want = triangle_from_t(e, t);
  check_sides_match(s, {want.u * scale, want.v * scale, want.hyp * scale}, failures);
  if (*r.area != s[0] * s[1] / Rat(2) || *r.area != square(scale) * (t + Rat(2)) * (t + Rat(1)) / t) {
    failures.emplace_back("area mismatch: expected uv/2 = (t+2)(t+1)/t");
  }
  check_class(r, limits, failures);
  if (r.cls && *r.cls != area_and_class(t, limits).cls.value()) {
    failures.emplace_back("class mismatch: not the class of t(t+1)(t+2)");
  }
}

void check_circumcircle(const OutputRecord& r, const FactorLimits& limits, std::vector<std::string>& failures) {
  CircumParam p(need(r, "radius"), need(r, "t"));
  if (!has_triangle_fields(r, failures)) return;
  const auto& s = *r.sides;
  if (!is_pythagorean(s[0], s[1], s[2])) failures.emplace_back(kSideFailure);
  if (s[2] != Rat(2) * p.radius()) failures.emplace_back("hypotenuse is not the diameter 2R");
  check_sides_match(s, inscribed_triangle(p).sides(), failures);
  if (*r.area != s[0] * s[1] / Rat(2) || *r.area != circum_area_and_class(p, limits).area) {
    failures.emplace_back("area mismatch: expected ab/2 = 4R^2 t(1-t^2)/(1+t^2)^2");
  }
  check_class(r, limits, failures);
}

void check_excircle(const OutputRecord& r, const FactorLimits& limits, std::vector<std::string>& failures) {
  if (!r.kind) throw InvalidParameter("excircle record lacks kind");
  const Rat& x = need(r, "x");
  if (!has_triangle_fields(r, failures)) return;
  const auto& s = *r.sides;
  bool positive = s[0].sign() > 0 && s[1].sign() > 0 && s[2].sign() > 0;
  if (!positive || !is_pythagorean(s[0], s[1], s[2])) {
    failures.emplace_back(kSideFailure);
  } else {
    RightTriangle given(s[0], s[1], s[2]);
    if (exradii(given).get(*r.kind) != Rat(1) || exradius_from_area(given, *r.kind) != Rat(1)) {
      failures.emplace_back("exradius r_" + std::string(to_string(*r.kind)) + " is not 1");
    }
  }
  check_sides_match(s, triangle_with_unit_exradius(*r.kind, x).sides(), failures);
  if (*r.area != s[0] * s[1] / Rat(2) || *r.area != excircle_area_class(*r.kind, x, limits).area) {
    failures.emplace_back("area mismatch: expected the closed-form area");
  }
  check_class(r, limits, failures);
}

Json rat_json(const Rat& q) { return q.str(); }

Rat rat_from_json(const Json& j, std::string_view field) {
  if (!j.is_string()) throw ParseError("field '" + std::string(field) + "' must be a \"p/q\" string");
  return Rat::parse(j.get<std::string>());
}

}  // namespace

std::string_view to_string(Family f) {
  switch (f) {
    case Family::Tau:
      return "tau";
    case Family::Ellipse:
      return "ellipse";
    case Family::Circumcircle:
      return "circumcircle";
    case Family::Excircle:
      return "excircle";
  }
  return "?";
}

std::optional<Family> parse_family(std::string_view text) {
  for (Family f : {Family::Tau, Family::Ellipse, Family::Circumcircle, Family::Excircle}) {
    if (to_string(f) == text) return f;
  }
  return std::nullopt;
}

const Rat* OutputRecord::parameter(std::string_view name) const {
  for (const auto& [key, value] : parameters) {
    if (key == name) return &value;
  }
  return nullptr;
}

std::vector<std::string> check_record(const OutputRecord& r, const FactorLimits& limits) {
  std::vector<std::string> failures;
  try {
    switch (r.family) {
      case Family::Tau:
        check_tau(r, limits, failures);
        break;
      case Family::Ellipse:
        check_ellipse(r, limits, failures);
        break;
      case Family::Circumcircle:
        check_circumcircle(r, limits, failures);
        break;
      case Family::Excircle:
        check_excircle(r, limits, failures);
        break;
    }
  } catch (const FactorizationLimitExceeded&) {
    throw;
  } catch (const Error& e) {
    failures.emplace_back(std::string("invalid parameters: ") + e.what());
  }
  return failures;
}

OutputRecord tau_record(const XTauPoint& p, const FactorLimits& limits) {
  OutputRecord r;
  r.family = Family::Tau;
  r.parameters = {{"tau", p.tau().value()}, {"x", p.x()}, {"y", p.y()}};
  if (p.x().sign() <= 0 || p.y().sign() <= 0) {
    r.degenerate = true;
  } else {
    TauCongruent n = tau_congruent_number(p, limits);
    r.sides = heron_triangle(p).sides();
    r.area = n.area;
    r.cls = n.cls.value();
  }
  r.verified = check_record(r, limits).empty();
  return r;
}

OutputRecord ellipse_record(const Rat& axis, const Rat& t, const FactorLimits& limits) {
  OutputRecord r;
  r.family = Family::Ellipse;
  r.parameters = {{"axis", axis}, {"t", t}};
  RightTriangleLegs legs = triangle_from_t(EllipseSpec(axis), t);
  AreaClass ac = area_and_class(t, limits);
  r.sides = {legs.u, legs.v, legs.hyp};
  r.area = legs.area();
  r.cls = ac.cls.value();
  r.verified = check_record(r, limits).empty();
  return r;
}

OutputRecord consecutive_record(const BigInt& t, const FactorLimits& limits) {
  OutputRecord r;
  r.family = Family::Ellipse;
  r.parameters = {{"axis", Rat(1)}, {"t", Rat(t)}, {"scale", Rat(t)}};
  RightTriangle tri = consecutive_product_triangle(t);
  r.sides = tri.sides();
  r.area = tri.area();
  r.cls = squarefree_class(tri.area(), limits).value();
  r.verified = check_record(r, limits).empty();
  return r;
}

OutputRecord circumcircle_record(const Rat& radius, const Rat& t, const FactorLimits& limits) {
  OutputRecord r;
  r.family = Family::Circumcircle;
  r.parameters = {{"radius", radius}, {"t", t}};
  CircumParam p(radius, t);
  AreaClass ac = circum_area_and_class(p, limits);
  r.sides = inscribed_triangle(p).sides();
  r.area = ac.area;
  r.cls = ac.cls.value();
  r.verified = check_record(r, limits).empty();
  return r;
}

OutputRecord excircle_record(ExcircleKind kind, const Rat& x, const FactorLimits& limits) {
  OutputRecord r;
  r.family = Family::Excircle;
  r.kind = kind;
  r.parameters = {{"x", x}};
  AreaClass ac = excircle_area_class(kind, x, limits);
  r.sides = triangle_with_unit_exradius(kind, x).sides();
  r.area = ac.area;
  r.cls = ac.cls.value();
  r.verified = check_record(r, limits).empty();
  return r;
}

std::string to_json_line(const OutputRecord& r) {
  Json j;
  j["family"] = std::string(to_string(r.family));
  if (r.kind) j["kind"] = std::string(to_string(*r.kind));
  Json params = Json::object();
  for (const auto& [name, value] : r.parameters) params[name] = rat_json(value);
  j["parameters"] = std::move(params);
  if (r.degenerate) j["degenerate"] = true;
  if (r.sides) j["sides"] = Json::array({rat_json((*r.sides)[0]), rat_json((*r.sides)[1]), rat_json((*r.sides)[2])});
  if (r.area) j["area"] = rat_json(*r.area);
  if (r.cls) {
    if (*r.cls <= std::numeric_limits<std::uint64_t>::max()) {
      j["class"] = static_cast<std::uint64_t>(*r.cls);
    } else {
      j["class"] = r.cls->str();
    }
  }
  j["verified"] = r.verified;
  return j.dump();
}

OutputRecord parse_record(std::string_view line) {
  Json j;
  try {
    j = Json::parse(line);
  } catch (const Json::parse_error& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
  if (!j.is_object()) throw ParseError("record must be a JSON object");

  OutputRecord r;
  if (!j.contains("family") || !j["family"].is_string()) throw ParseError("missing string field 'family'");
  auto family = parse_family(j["family"].get<std::string>());
  if (!family) throw ParseError("unknown family '" + j["family"].get<std::string>() + "'");
  r.family = *family;

  if (j.contains("kind")) {
    if (!j["kind"].is_string()) throw ParseError("field 'kind' must be a string");
    r.kind = parse_excircle_kind(j["kind"].get<std::string>());
    if (!r.kind) throw ParseError("unknown excircle kind '" + j["kind"].get<std::string>() + "'");
  }

  if (!j.contains("parameters") || !j["parameters"].is_object()) throw ParseError("missing object field 'parameters'");
  for (const auto& [name, value] : j["parameters"].items()) {
    r.parameters.emplace_back(name, rat_from_json(value, name));
  }

  if (j.contains("degenerate")) {
    if (!j["degenerate"].is_boolean()) throw ParseError("field 'degenerate' must be a boolean");
    r.degenerate = j["degenerate"].get<bool>();
  }
  if (j.contains("sides")) {
    const Json& s = j["sides"];
    if (!s.is_array() || s.size() != 3) throw ParseError("field 'sides' must be an array of three rationals");
    r.sides = std::array<Rat, 3>{rat_from_json(s[0], "sides"), rat_from_json(s[1], "sides"),
                                 rat_from_json(s[2], "sides")};
  }
  if (j.contains("area")) r.area = rat_from_json(j["area"], "area");
  if (j.contains("class")) {
    const Json& c = j["class"];
    if (c.is_number_unsigned()) {
      r.cls = BigInt(c.get<std::uint64_t>());
    } else if (c.is_string()) {
      Rat value = Rat::parse(c.get<std::string>());
      if (!value.is_integer() || value.sign() <= 0) throw ParseError("field 'class' must be a positive integer");
      r.cls = value.num();
    } else {
      throw ParseError("field 'class' must be a positive integer");
    }
  }
  if (!j.contains("verified") || !j["verified"].is_boolean()) throw ParseError("missing boolean field 'verified'");
  r.verified = j["verified"].get<bool>();
  return r;
}

std::string to_text_line(const OutputRecord& r) {
  std::ostringstream out;
  out << to_string(r.family);
  if (r.kind) out << " kind=" << to_string(*r.kind);
  for (const auto& [name, value] : r.parameters) out << ' ' << name << '=' << value;
  if (r.degenerate) {
    out << "  degenerate (x <= 0 or y <= 0, no triangle)";
  } else {
    if (r.sides) out << "  sides=" << sides_text(*r.sides);
    if (r.area) out << "  area=" << *r.area;
    if (r.family == Family::Tau) {
      out << "  n=" << (*r.parameter("tau") * *r.parameter("x") * *r.parameter("y"));
    }
    if (r.cls) out << "  class=" << r.cls->str();
  }
  out << (r.verified ? "  verified" : "  FAILED");
  return out.str();
}

}  // namespace congruent
