#include <doctest.h>

#include <random>
#include <sstream>

#include "congruent/errors.hpp"
#include "congruent/rational.hpp"

using congruent::BigInt;
using congruent::Rat;

TEST_CASE("canonical form on construction") {
  Rat q(BigInt(6), BigInt(-4));
  CHECK(q.num() == -3);
  CHECK(q.den() == 2);
  CHECK(q.str() == "-3/2");
  CHECK(Rat(BigInt(0), BigInt(-7)).str() == "0");
  CHECK(Rat(BigInt(0), BigInt(-7)).den() == 1);
  CHECK(Rat(BigInt(8), BigInt(4)).str() == "2");
  CHECK(Rat(BigInt(24), BigInt(54)) == Rat(BigInt(4), BigInt(9)));
  CHECK_THROWS_AS(Rat(BigInt(1), BigInt(0)), std::domain_error);
}

TEST_CASE("parse accepts the canonical text form") {
  CHECK(Rat::parse("4/3").str() == "4/3");
  CHECK(Rat::parse("6").str() == "6");
  CHECK(Rat::parse("-1/2").str() == "-1/2");
  CHECK(Rat::parse("+10/4").str() == "5/2");
  CHECK(Rat::parse("123456789012345678901234567890/3").str() == "41152263004115226300411522630");
  for (const char* bad : {"", "/", "1/", "/2", "1/0", "1.5", "a", "1/-2", "--1", "1 /2", " 1"}) {
    CAPTURE(bad);
    CHECK_THROWS_AS(Rat::parse(bad), congruent::ParseError);
  }
}

TEST_CASE("arithmetic and ordering") {
  Rat a = Rat::parse("1/2");
  Rat b = Rat::parse("1/3");
  CHECK((a + b).str() == "5/6");
  CHECK((a - b).str() == "1/6");
  CHECK((a * b).str() == "1/6");
  CHECK((a / b).str() == "3/2");
  CHECK((-a).str() == "-1/2");
  CHECK(b < a);
  CHECK(-a < b);
  CHECK(a.inverse() == Rat(2));
  CHECK(Rat::parse("-3/4").abs().str() == "3/4");
  CHECK_THROWS_AS(a / Rat(0), std::domain_error);
  CHECK_THROWS_AS(Rat(0).inverse(), std::domain_error);
  std::ostringstream os;
  os << Rat::parse("-7/9");
  CHECK(os.str() == "-7/9");
}

TEST_CASE("field identities hold on random fractions") {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<long long> dist(-1'000'000, 1'000'000);
  auto draw = [&] {
    long long d = 0;
    while (d == 0) d = dist(rng);
    return Rat(BigInt(dist(rng)), BigInt(d));
  };
  for (int i = 0; i < 2000; ++i) {
    Rat x = draw(), y = draw(), z = draw();
    CHECK(x + y == y + x);
    CHECK((x + y) * z == x * z + y * z);
    CHECK(x - x == Rat(0));
    if (!y.is_zero()) CHECK(x / y * y == x);
    CHECK(Rat::parse(x.str()) == x);
    CHECK(boost::multiprecision::gcd(x.num(), x.den()) == 1);
    CHECK(x.den() > 0);
  }
}
