#pragma once

// Brute-force reference routines for the tests. Plain 64-bit arithmetic, no
// calls into the library, so they stay independent of what they check.

#include <cstdint>
#include <numeric>
#include <random>
#include <utility>
#include <vector>

#include "congruent/rational.hpp"

namespace oracle {

// Squarefree part by trial division over every d >= 2.
inline std::uint64_t squarefree_part(std::uint64_t n) {
  std::uint64_t s = 1;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    unsigned e = 0;
    while (n % d == 0) {
      n /= d;
      ++e;
    }
    if (e % 2 == 1) s *= d;
  }
  return s * n;
}

// Squarefree class of num/den (both positive) via squarefree_part(num * den).
inline std::uint64_t squarefree_class(std::uint64_t num, std::uint64_t den) {
  std::uint64_t g = std::gcd(num, den);
  return squarefree_part((num / g) * (den / g));
}

inline std::vector<long long> signed_divisors(long long n) {
  std::vector<long long> out;
  for (long long d = -n; d <= n; ++d) {
    if (d != 0 && n % d == 0) out.push_back(d);
  }
  return out;
}

// Integer solutions of xy = tau (x + y) + 1 with tau = p/q and |x|, |y| <=
// bound, testing every pair of the box against q x y = p (x + y) + q.
inline std::vector<std::pair<long long, long long>> integer_points_box(long long p, long long q, long long bound) {
  std::vector<std::pair<long long, long long>> out;
  for (long long x = -bound; x <= bound; ++x) {
    for (long long y = -bound; y <= bound; ++y) {
      if (q * x * y == p * (x + y) + q) out.emplace_back(x, y);
    }
  }
  return out;
}

inline congruent::Rat random_positive(std::mt19937_64& rng, std::uint64_t max_num, std::uint64_t max_den) {
  std::uniform_int_distribution<std::uint64_t> num(1, max_num);
  std::uniform_int_distribution<std::uint64_t> den(1, max_den);
  return congruent::Rat(congruent::BigInt(num(rng)), congruent::BigInt(den(rng)));
}

// Rational strictly inside (0, 1).
inline congruent::Rat random_unit(std::mt19937_64& rng, std::uint64_t max_den) {
  std::uniform_int_distribution<std::uint64_t> den(2, max_den);
  std::uint64_t d = den(rng);
  std::uniform_int_distribution<std::uint64_t> num(1, d - 1);
  return congruent::Rat(congruent::BigInt(num(rng)), congruent::BigInt(d));
}

// Primitive Pythagorean triple from Euclid's formula, m > n > 0 coprime and
// not both odd, times a rational scale.
inline std::vector<congruent::Rat> random_pythagorean(std::mt19937_64& rng) {
  std::uniform_int_distribution<long long> pick(1, 60);
  long long m = 0;
  long long n = 0;
  do {
    m = pick(rng);
    n = pick(rng);
  } while (!(m > n && std::gcd(m, n) == 1 && (m - n) % 2 == 1));
  congruent::Rat scale = random_positive(rng, 50, 50);
  return {congruent::Rat(m * m - n * n) * scale, congruent::Rat(2 * m * n) * scale,
          congruent::Rat(m * m + n * n) * scale};
}

}  // namespace oracle
