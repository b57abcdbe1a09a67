#include "congruent/tau_curve.hpp"

#include <algorithm>

#include "congruent/errors.hpp"

namespace congruent {

namespace {

bool lex_less(const XTauPoint& p, const XTauPoint& q) {
  if (p.x() != q.x()) return p.x() < q.x();
  return p.y() < q.y();
}

}  // namespace

Tau::Tau(Rat tau) : tau_(std::move(tau)) {
  if (tau_.sign() <= 0) throw InvalidParameter("tau must be positive, got " + tau_.str());
}

Rat Tau::cos_theta() const {
  Rat t2 = square(tau_);
  return (Rat(1) - t2) / (Rat(1) + t2);
}

Rat Tau::sin_theta() const { return Rat(2) * tau_ / (Rat(1) + square(tau_)); }

std::optional<BigInt> Tau::integral_inverse() const {
  if (tau_.num() != 1) return std::nullopt;
  return tau_.den();
}

bool on_tau_curve(const Tau& tau, const Rat& x, const Rat& y) {
  return x * y == tau.value() * (x + y) + Rat(1);
}

XTauPoint::XTauPoint(Tau tau, Rat x, Rat y) : tau_(std::move(tau)), x_(std::move(x)), y_(std::move(y)) {
  if (x_ == tau_.value()) throw InvalidParameter("x equals tau, the pole of the parametrization");
  if (!on_tau_curve(tau_, x_, y_)) {
    throw InvalidParameter("(" + x_.str() + ", " + y_.str() + ") is not on X_tau for tau = " + tau_.value().str());
  }
}

Rat HeronTriangle::area() const { return a * b * tau.sin_theta() / Rat(2); }

bool HeronTriangle::satisfies_law_of_cosines() const {
  return c * c == a * a + b * b - Rat(2) * a * b * tau.cos_theta();
}

bool HeronTriangle::satisfies_triangle_inequality() const {
  if (a.sign() <= 0 || b.sign() <= 0 || c.sign() <= 0) return false;
  return a + b > c && b + c > a && a + c > b;
}

XTauPoint point_from_x(const Tau& tau, const Rat& x) {
  const Rat& t = tau.value();
  if (x == t) throw PoleInput("x = " + x.str() + " is the pole x = tau");
  Rat y = (t * x + Rat(1)) / (x - t);
  return XTauPoint(tau, x, std::move(y));
}

std::vector<XTauPoint> integer_points(const Tau& tau, const FactorLimits& limits) {
  auto k = tau.integral_inverse();
  if (!k) throw NonIntegralInverseTau("1/tau = " + tau.value().inverse().str() + " is not a positive integer");
  // (x k - 1)(y k - 1) = k^2 + 1 with k = 1/tau.
  BigInt n = *k * *k + 1;
  std::vector<XTauPoint> out;
  for (const BigInt& d : signed_divisors(n, limits)) {
    BigInt r = (d + 1) % *k;
    if (!r.is_zero()) continue;
    Rat x = tau.value() * Rat(d + 1);
    Rat y = tau.value() * Rat(n / d + 1);
    out.emplace_back(tau, std::move(x), std::move(y));
  }
  std::sort(out.begin(), out.end(), lex_less);
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<XTauPoint> scan_integer_points(const Tau& tau, long long bound) {
  // q x y = p (x + y) + q with tau = p/q, so y (q x - p) = p x + q.
  const BigInt& p = tau.value().num();
  const BigInt& q = tau.value().den();
  std::vector<XTauPoint> out;
  for (long long xv = -bound; xv <= bound; ++xv) {
    BigInt x(xv);
    BigInt denom = q * x - p;
    if (denom.is_zero()) continue;
    BigInt numer = p * x + q;
    if (BigInt(numer % denom) != 0) continue;
    BigInt y = numer / denom;
    if (y < -bound || y > bound) continue;
    out.emplace_back(tau, Rat(x), Rat(y));
  }
  std::sort(out.begin(), out.end(), lex_less);
  return out;
}

HeronTriangle heron_triangle(const XTauPoint& p) {
  if (p.x().sign() <= 0 || p.y().sign() <= 0) {
    throw DegenerateTriangle("point (" + p.x().str() + ", " + p.y().str() + ") does not give a triangle; need x, y > 0");
  }
  Rat inv = p.tau().value().inverse();
  return HeronTriangle{p.y() + inv, p.x() + inv, p.x() + p.y(), p.tau()};
}

TauCongruent tau_congruent_number(const XTauPoint& p, const FactorLimits& limits) {
  if (p.x().sign() <= 0 || p.y().sign() <= 0) {
    throw DegenerateTriangle("point (" + p.x().str() + ", " + p.y().str() + ") does not give a triangle; need x, y > 0");
  }
  const Rat& t = p.tau().value();
  Rat xy = p.x() * p.y();
  Rat n = t * xy;
  return TauCongruent{xy / t, n, squarefree_class(n, limits)};
}

std::vector<XTauPoint> sample_tau_points(const Tau& tau, std::size_t count) {
  std::vector<XTauPoint> out;
  out.reserve(count);
  SternBrocot offsets;
  while (out.size() < count) out.push_back(point_from_x(tau, tau.value() + offsets.next()));
  return out;
}

}  // namespace congruent
