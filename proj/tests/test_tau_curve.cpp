#include <doctest.h>

#include <random>

#include "congruent/errors.hpp"
#include "congruent/tau_curve.hpp"
#include "oracles.hpp"

using namespace congruent;

namespace {

Rat q(const char* text) { return Rat::parse(text); }
Tau tau_of(const char* text) { return Tau(Rat::parse(text)); }

std::vector<std::pair<long long, long long>> as_pairs(const std::vector<XTauPoint>& pts) {
  std::vector<std::pair<long long, long long>> out;
  for (const auto& p : pts) {
    REQUIRE(p.x().is_integer());
    REQUIRE(p.y().is_integer());
    out.emplace_back(static_cast<long long>(p.x().num()), static_cast<long long>(p.y().num()));
  }
  return out;
}

using Pairs = std::vector<std::pair<long long, long long>>;

}  // namespace

TEST_CASE("Tau accessors") {
  Tau t = tau_of("1/2");
  CHECK(t.cos_theta() == q("3/5"));
  CHECK(t.sin_theta() == q("4/5"));
  CHECK(tau_of("1").cos_theta() == Rat(0));
  CHECK(tau_of("2").cos_theta() == q("-3/5"));
  CHECK(*t.integral_inverse() == 2);
  CHECK_FALSE(tau_of("2/3").integral_inverse());
  CHECK_THROWS_AS(Tau(Rat(0)), InvalidParameter);
  CHECK_THROWS_AS(Tau(q("-1/2")), InvalidParameter);
}

TEST_CASE("point_from_x") {
  CHECK(point_from_x(tau_of("1/2"), Rat(2)).y() == q("4/3"));
  CHECK(point_from_x(tau_of("2"), Rat(3)).y() == Rat(7));
  CHECK(point_from_x(tau_of("1"), Rat(0)).y() == Rat(-1));
  CHECK_THROWS_AS(point_from_x(tau_of("1"), Rat(1)), PoleInput);
  CHECK_THROWS_AS(point_from_x(tau_of("3/2"), q("3/2")), PoleInput);
  CHECK_THROWS_AS(XTauPoint(tau_of("1"), Rat(2), Rat(4)), InvalidParameter);
}

TEST_CASE("integer_points from divisors") {
  CHECK(as_pairs(integer_points(tau_of("1"))) == Pairs{{-1, 0}, {0, -1}, {2, 3}, {3, 2}});
  CHECK(as_pairs(integer_points(tau_of("1/2"))) == Pairs{{-2, 0}, {0, -2}, {1, 3}, {3, 1}});
  CHECK(as_pairs(integer_points(tau_of("1/3"))) == Pairs{{-3, 0}, {0, -3}, {1, 2}, {2, 1}});
  CHECK(oracle::integer_points_box(1, 2, 50) == Pairs{{-2, 0}, {0, -2}, {1, 3}, {3, 1}});
  CHECK(oracle::integer_points_box(1, 3, 50) == Pairs{{-3, 0}, {0, -3}, {1, 2}, {2, 1}});
  CHECK_THROWS_AS(integer_points(tau_of("2/3")), NonIntegralInverseTau);
  CHECK_THROWS_AS(integer_points(tau_of("2")), NonIntegralInverseTau);
}

TEST_CASE("integer_points match a brute-force box scan") {
  for (long long k = 1; k <= 12; ++k) {
    CAPTURE(k);
    Tau tau(Rat(BigInt(1), BigInt(k)));
    // Every integer point satisfies |x|, |y| <= (k^2 + 2)/k, well inside 200.
    Pairs expected = oracle::integer_points_box(1, k, 200);
    CHECK(as_pairs(integer_points(tau)) == expected);
    CHECK(as_pairs(scan_integer_points(tau, 200)) == expected);
  }
}

TEST_CASE("scan_integer_points for general rational tau") {
  for (auto [p, qq] : std::vector<std::pair<long long, long long>>{{2, 1}, {3, 1}, {2, 3}, {3, 2}, {5, 7}}) {
    CAPTURE(p);
    CAPTURE(qq);
    Tau tau{Rat(BigInt(p), BigInt(qq))};
    CHECK(as_pairs(scan_integer_points(tau, 120)) == oracle::integer_points_box(p, qq, 120));
  }
}

TEST_CASE("heron_triangle") {
  HeronTriangle t1 = heron_triangle(point_from_x(tau_of("1"), Rat(2)));
  CHECK(t1.sides() == std::array<Rat, 3>{Rat(4), Rat(3), Rat(5)});
  HeronTriangle t2 = heron_triangle(point_from_x(tau_of("1/2"), Rat(2)));
  CHECK(t2.sides() == std::array<Rat, 3>{q("10/3"), Rat(4), q("10/3")});
  HeronTriangle t3 = heron_triangle(point_from_x(tau_of("2"), Rat(3)));
  CHECK(t3.sides() == std::array<Rat, 3>{q("15/2"), q("7/2"), Rat(10)});
  for (const auto& t : {t1, t2, t3}) {
    CHECK(t.satisfies_law_of_cosines());
    CHECK(t.satisfies_triangle_inequality());
    CHECK(t.inradius() == Rat(1));
  }
  CHECK_THROWS_AS(heron_triangle(point_from_x(tau_of("1"), Rat(0))), DegenerateTriangle);
  CHECK_THROWS_AS(heron_triangle(point_from_x(tau_of("1"), q("1/2"))), DegenerateTriangle);
}

TEST_CASE("tau_congruent_number") {
  auto n1 = tau_congruent_number(point_from_x(tau_of("1"), Rat(2)));
  CHECK(n1.area == Rat(6));
  CHECK(n1.cls.value() == 6);
  auto n2 = tau_congruent_number(point_from_x(tau_of("3"), Rat(4)));
  CHECK(n2.n == Rat(156));
  CHECK(n2.cls.value() == 39);
  auto n3 = tau_congruent_number(point_from_x(tau_of("3/2"), Rat(2)));
  CHECK(n3.n == Rat(24));
  CHECK(n3.cls.value() == 6);
  CHECK_THROWS_AS(tau_congruent_number(point_from_x(tau_of("1"), Rat(-1))), DegenerateTriangle);
}

TEST_CASE("random points: curve, triangle and class identities") {
  std::mt19937_64 rng(3);
  for (int i = 0; i < 300; ++i) {
    Tau tau(oracle::random_positive(rng, 40, 20));
    Rat x = tau.value() + oracle::random_positive(rng, 60, 30);
    XTauPoint p = point_from_x(tau, x);
    CHECK(on_tau_curve(tau, p.x(), p.y()));
    CHECK(p.y().sign() > 0);
    HeronTriangle t = heron_triangle(p);
    CHECK(t.satisfies_law_of_cosines());
    CHECK(t.satisfies_triangle_inequality());
    CHECK(t.inradius() == Rat(1));
    TauCongruent n = tau_congruent_number(p);
    CHECK(t.area() == n.area);
    CHECK(squarefree_class(n.area) == n.cls);

    HeronTriangle mirror = heron_triangle(p.swapped());
    CHECK(mirror.a == t.b);
    CHECK(mirror.b == t.a);
    CHECK(mirror.c == t.c);
    CHECK(mirror.area() == t.area());
  }
}

TEST_CASE("sample_tau_points walks x > tau in Stern-Brocot order") {
  auto pts = sample_tau_points(tau_of("1"), 4);
  REQUIRE(pts.size() == 4);
  CHECK(pts[0].x() == Rat(2));
  CHECK(pts[1].x() == q("3/2"));
  CHECK(pts[2].x() == Rat(3));
  CHECK(pts[3].x() == q("4/3"));
  for (const auto& p : sample_tau_points(tau_of("7/3"), 50)) CHECK(p.x() > q("7/3"));
}
