#include <doctest.h>

#include "congruent/tables.hpp"

using namespace congruent;

TEST_CASE("tau table rows") {
  auto rows = tau_table();
  REQUIRE(rows.size() == 5);
  const char* expected[][5] = {
      {"1/2", "2", "4/3", "4/3", "3"}, {"1", "2", "3", "6", "6"},      {"3/2", "2", "8", "24", "6"},
      {"2", "3", "7", "42", "42"},     {"3", "4", "13", "156", "39"},
  };
  for (std::size_t i = 0; i < rows.size(); ++i) {
    CAPTURE(i);
    CHECK(rows[i].tau.str() == expected[i][0]);
    CHECK(rows[i].x.str() == expected[i][1]);
    CHECK(rows[i].y.str() == expected[i][2]);
    CHECK(rows[i].n.str() == expected[i][3]);
    CHECK(rows[i].cls.str() == expected[i][4]);
    CHECK(rows[i].verified);
    CHECK_FALSE(rows[i].erratum);
  }
}

TEST_CASE("ellipse table flags the t = 6 row") {
  auto rows = ellipse_table();
  REQUIRE(rows.size() == 5);
  const unsigned t[] = {1, 3, 4, 5, 6};
  const unsigned cls[] = {6, 15, 30, 210, 21};
  for (std::size_t i = 0; i < rows.size(); ++i) {
    CAPTURE(i);
    CHECK(rows[i].t == t[i]);
    CHECK(rows[i].product == BigInt(t[i]) * (t[i] + 1) * (t[i] + 2));
    CHECK(rows[i].cls == cls[i]);
    CHECK(rows[i].verified);
  }
  for (std::size_t i = 0; i < 4; ++i) CHECK_FALSE(rows[i].erratum);
  REQUIRE(rows[4].erratum);
  CHECK(*rows[4].erratum == "erratum: published table prints 42");
}

TEST_CASE("excircle table") {
  auto rows = excircle_table();
  REQUIRE(rows.size() == 3);
  for (const auto& r : rows) CHECK(r.verified);
  CHECK(rows[0].sample_area.str() == "3/2");
  CHECK(rows[2].sample_area.str() == "1/6");
  CHECK(rows[2].sample_cls == 6);
}

TEST_CASE("rendered tables are deterministic and carry the annotation") {
  std::string text = render_tables();
  CHECK(text == render_tables());
  CHECK(text.find("erratum: published table prints 42") != std::string::npos);
  CHECK(text.find("FAILED") == std::string::npos);
}
