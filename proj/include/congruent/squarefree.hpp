#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "congruent/rational.hpp"

namespace congruent {

// Budget for integer factorization. Trial division runs over all primes up
// to trial_bound; any composite cofactor left over goes to Pollard-Brent rho
// with at most rho_budget polynomial steps in total.
struct FactorLimits {
  std::uint64_t trial_bound = 1'000'000;
  std::uint64_t rho_budget = std::uint64_t{1} << 22;

  // Defaults, with trial_bound overridden by the FACTOR_LIMIT environment
  // variable when it holds a positive integer. Throws InvalidParameter on a
  // malformed value.
  static FactorLimits from_environment();
};

class SquarefreeClass;

// The unique squarefree s >= 1 with q = s * r^2, r rational. Computed as the
// squarefree part of num(q) * den(q). Throws NonPositiveInput for q <= 0.
SquarefreeClass squarefree_class(const Rat& q, const FactorLimits& limits = {});

// Positive squarefree integer naming the class of a positive rational in
// Q_{>0} / (Q^x)^2.
class SquarefreeClass {
 public:
  const BigInt& value() const { return value_; }
  std::string str() const { return value_.str(); }
  Rat as_rat() const { return Rat(value_); }

  friend bool operator==(const SquarefreeClass&, const SquarefreeClass&) = default;

 private:
  friend SquarefreeClass squarefree_class(const Rat& q, const FactorLimits& limits);
  explicit SquarefreeClass(BigInt v) : value_(std::move(v)) {}

  BigInt value_;
};

using Factorization = std::vector<std::pair<BigInt, unsigned>>;

// Prime factorization of n >= 1, primes ascending. factorize(1) is empty.
Factorization factorize(const BigInt& n, const FactorLimits& limits = {});

// Miller-Rabin; deterministic below 3.3e24, 32 extra seeded rounds above.
bool is_probable_prime(const BigInt& n);

// The squarefree s with n / s a perfect square, for n >= 1.
BigInt squarefree_part(const BigInt& n, const FactorLimits& limits = {});

// Every positive and negative divisor of n >= 1, ascending.
std::vector<BigInt> signed_divisors(const BigInt& n, const FactorLimits& limits = {});

// sqrt(q) when it is rational, otherwise nullopt. Needs no factorization.
std::optional<Rat> rational_sqrt(const Rat& q);

// True for 0 and for every positive rational square.
bool is_rational_square(const Rat& q);

// Positive rationals in breadth-first Stern-Brocot order:
// 1, 1/2, 2, 1/3, 2/3, 3/2, 3, 1/4, ...
// Each level is emitted in ascending order.
class SternBrocot {
 public:
  SternBrocot();
  Rat next();

 private:
  struct Frac {
    BigInt num, den;
  };
  std::vector<Frac> row_;  // full in-order row including 0/1 and 1/0
  std::vector<Rat> level_;
  std::size_t cursor_ = 0;
  void descend();
};

}  // namespace congruent
