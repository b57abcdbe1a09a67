#include "congruent/tables.hpp"

#include <algorithm>
#include <sstream>

#include "congruent/ellipse.hpp"
#include "congruent/excircle.hpp"
#include "congruent/tau_curve.hpp"

namespace congruent {

namespace {

struct PublishedTauRow {
  const char* tau;
  const char* x;
  const char* y;
  const char* n;
  unsigned cls;
};

// As printed; consulted only for erratum annotations.
constexpr PublishedTauRow kPublishedTau[] = {
    {"1/2", "2", "4/3", "4/3", 3}, {"1", "2", "3", "6", 6},      {"3/2", "2", "8", "24", 6},
    {"2", "3", "7", "42", 42},     {"3", "4", "13", "156", 39},
};

struct PublishedEllipseRow {
  unsigned t;
  unsigned cls;
};

constexpr PublishedEllipseRow kPublishedEllipse[] = {{1, 6}, {3, 15}, {4, 30}, {5, 210}, {6, 42}};

using Table = std::vector<std::vector<std::string>>;

void render(std::ostream& out, const Table& rows) {
  std::vector<std::size_t> width;
  for (const auto& row : rows) {
    width.resize(std::max(width.size(), row.size()), 0);
    for (std::size_t i = 0; i < row.size(); ++i) width[i] = std::max(width[i], row[i].size());
  }
  for (const auto& row : rows) {
    std::string line = " ";
    for (std::size_t i = 0; i < row.size(); ++i) {
      line += ' ';
      line += row[i];
      if (i + 1 < row.size()) line.append(width[i] - row[i].size() + 2, ' ');
    }
    while (!line.empty() && line.back() == ' ') line.pop_back();
    out << line << '\n';
  }
}

std::string triple(const std::array<Rat, 3>& s) {
  return "(" + s[0].str() + ", " + s[1].str() + ", " + s[2].str() + ")";
}

}  // namespace

std::vector<TauTableRow> tau_table(const FactorLimits& limits) {
  std::vector<TauTableRow> rows;
  for (const auto& published : kPublishedTau) {
    Tau tau(Rat::parse(published.tau));
    XTauPoint p = point_from_x(tau, Rat::parse(published.x));
    TauCongruent n = tau_congruent_number(p, limits);
    HeronTriangle tri = heron_triangle(p);
    TauTableRow row{tau.value(), p.x(), p.y(), n.n, n.cls.value()};
    row.verified = tri.satisfies_law_of_cosines() && tri.inradius() == Rat(1) &&
                   squarefree_class(n.area, limits) == n.cls;
    std::vector<std::string> diffs;
    if (row.y != Rat::parse(published.y)) diffs.push_back("y " + std::string(published.y));
    if (row.n != Rat::parse(published.n)) diffs.push_back("n " + std::string(published.n));
    if (row.cls != published.cls) diffs.push_back("class " + std::to_string(published.cls));
    if (!diffs.empty()) {
      std::string note = "erratum: published table prints";
      for (const auto& d : diffs) note += " " + d;
      row.erratum = note;
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

std::vector<EllipseTableRow> ellipse_table(const FactorLimits& limits) {
  std::vector<EllipseTableRow> rows;
  for (const auto& published : kPublishedEllipse) {
    BigInt t = published.t;
    AreaClass ac = area_and_class(Rat(t), limits);
    RightTriangle scaled = consecutive_product_triangle(t);
    EllipseTableRow row{t, t * (t + 1) * (t + 2), ac.area, ac.cls.value()};
    row.verified = scaled.area() == Rat(row.product) && squarefree_class(ac.area, limits) == ac.cls;
    if (row.cls != published.cls) {
      row.erratum = "erratum: published table prints " + std::to_string(published.cls);
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

std::vector<ExcircleTableRow> excircle_table(const FactorLimits& limits) {
  struct Formula {
    ExcircleKind kind;
    const char* parametrization;
    const char* curve;
    const char* area;
  };
  const Formula formulas[] = {
      {ExcircleKind::A, "(x+1, z-1, z-x)", "z(1-x)-x-1=0", "x(x+1)/(1-x)"},
      {ExcircleKind::B, "(z-1, x+1, z-x)", "z(x-1)+x+1=0", "x(x+1)/(1-x)"},
      {ExcircleKind::C, "(1-y, 1-x, x+y)", "xy+x+y=1", "x(1-x)/(1+x)"},
  };
  const Rat x(BigInt(1), BigInt(2));
  std::vector<ExcircleTableRow> rows;
  for (const auto& f : formulas) {
    RightTriangle tri = triangle_with_unit_exradius(f.kind, x);
    AreaClass ac = excircle_area_class(f.kind, x, limits);
    ExcircleTableRow row{std::string(to_string(f.kind)), f.parametrization, f.curve, f.area, x, tri.sides(),
                         ac.area, ac.cls.value()};
    row.verified = on_excircle_curve(excircle_curve_point(f.kind, x)) && exradii(tri).get(f.kind) == Rat(1) &&
                   exradius_from_area(tri, f.kind) == Rat(1) && tri.area() == ac.area;
    rows.push_back(std::move(row));
  }
  return rows;
}

std::string render_tables(const FactorLimits& limits) {
  std::ostringstream out;

  out << "Table 1. tau-congruent numbers from Heron triangles circumscribing the unit circle\n";
  Table t1{{"tau", "x", "y = (tau x + 1)/(x - tau)", "n = tau x y", "n mod Q^x2", "check", ""}};
  for (const auto& row : tau_table(limits)) {
    t1.push_back({row.tau.str(), row.x.str(), row.y.str(), row.n.str(), row.cls.str(),
                  row.verified ? "ok" : "FAILED", row.erratum.value_or("")});
  }
  render(out, t1);

  out << "\nTable 2. Congruent numbers from right triangles circumscribing E_a\n";
  Table t2{{"t", "A = t(t+1)(t+2)", "A mod Q^x2", "check", ""}};
  for (const auto& row : ellipse_table(limits)) {
    std::string product = row.t.str() + "*" + BigInt(row.t + 1).str() + "*" + BigInt(row.t + 2).str() + " = " +
                          row.product.str();
    t2.push_back({row.t.str(), product, row.cls.str(), row.verified ? "ok" : "FAILED", row.erratum.value_or("")});
  }
  render(out, t2);

  out << "\nTable 3. Right triangles with unit exradius\n";
  Table t3{{"excircle", "sides", "curve", "area", "sides at x = 1/2", "area", "class", "check"}};
  for (const auto& row : excircle_table(limits)) {
    t3.push_back({row.kind, row.parametrization, row.curve, row.area_formula, triple(row.sample_sides),
                  row.sample_area.str(), row.sample_cls.str(), row.verified ? "ok" : "FAILED"});
  }
  render(out, t3);
  return out.str();
}

}  // namespace congruent
