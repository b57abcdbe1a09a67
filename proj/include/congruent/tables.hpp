#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "congruent/rational.hpp"
#include "congruent/squarefree.hpp"

namespace congruent {

// Rows of the three reference tables, each computed from its inputs. The
// published values are kept only so that disagreeing rows can be annotated.

struct TauTableRow {
  Rat tau, x, y, n;
  BigInt cls;
  bool verified = false;
  std::optional<std::string> erratum;
};

struct EllipseTableRow {
  BigInt t;
  BigInt product;  // t (t + 1)(t + 2)
  Rat area;        // (t + 2)(t + 1)/t
  BigInt cls;
  bool verified = false;
  std::optional<std::string> erratum;
};

struct ExcircleTableRow {
  std::string kind;
  std::string parametrization;
  std::string curve;
  std::string area_formula;
  Rat sample_x;
  std::array<Rat, 3> sample_sides;
  Rat sample_area;
  BigInt sample_cls;
  bool verified = false;
};

std::vector<TauTableRow> tau_table(const FactorLimits& limits = {});
std::vector<EllipseTableRow> ellipse_table(const FactorLimits& limits = {});
std::vector<ExcircleTableRow> excircle_table(const FactorLimits& limits = {});

// All three tables as plain text.
std::string render_tables(const FactorLimits& limits = {});

}  // namespace congruent
