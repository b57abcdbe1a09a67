#include "congruent/squarefree.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdlib>
#include <limits>
#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <random>
#include <string_view>
#include <type_traits>
#include <utility>

#include "congruent/errors.hpp"

namespace congruent {

namespace mp = boost::multiprecision;

namespace {

using u64 = std::uint64_t;
using u128 = unsigned __int128;
// Fixed width for rho on cofactors below 2^128: products never overflow and
// nothing allocates.
using U256 = mp::uint256_t;

constexpr u64 kDefaultSieve = 1'000'000;
constexpr u64 kMaxTrialBound = 1'000'000'000;

// Odd p divides m iff m * p^-1 <= floor(max / p), arithmetic mod 2^64 or
// 2^128. Division-free, which is what makes a full scan to 10^6 cheap.
struct FastDivisor {
  u64 inverse;
  u64 limit;
  u128 inverse128;
  u128 limit128;
};

struct PrimeTable {
  std::vector<std::uint32_t> primes;
  // Entries for odd primes <= kDefaultSieve, aligned with `primes`; slot 0
  // (p = 2) is unused.
  std::vector<FastDivisor> fast;

  template <class W>
  bool divides(std::size_t i, W m) const {
    if (i == 0) return (m & 1) == 0;
    if (i >= fast.size()) return m % primes[i] == 0;
    if constexpr (std::is_same_v<W, u64>) {
      return m * fast[i].inverse <= fast[i].limit;
    } else {
      return m * fast[i].inverse128 <= fast[i].limit128;
    }
  }
};

// Primes up to at least `bound`, shared across threads. The sieve only grows.
std::shared_ptr<const PrimeTable> primes_up_to(u64 bound) {
  static std::mutex mu;
  static std::shared_ptr<const PrimeTable> cache;
  static u64 cache_limit = 0;
  std::lock_guard lock(mu);
  if (!cache || cache_limit < bound) {
    u64 limit = std::max(bound, kDefaultSieve);
    std::vector<bool> composite(limit + 1, false);
    auto table = std::make_shared<PrimeTable>();
    for (u64 i = 2; i <= limit; ++i) {
      if (composite[i]) continue;
      table->primes.push_back(static_cast<std::uint32_t>(i));
      for (u64 j = i * i; j <= limit; j += i) composite[j] = true;
    }
    for (std::uint32_t p : table->primes) {
      if (p > kDefaultSieve) break;
      u128 inverse = p;  // Newton iteration doubles the correct low bits each step.
      for (int k = 0; k < 6; ++k) inverse *= 2 - p * inverse;
      table->fast.push_back({static_cast<u64>(inverse), std::numeric_limits<u64>::max() / p, inverse,
                             ~u128(0) / p});
    }
    cache = std::move(table);
    cache_limit = limit;
  }
  return cache;
}

bool fits_u64(const BigInt& n) { return n <= std::numeric_limits<u64>::max(); }

u64 mulmod(u64 a, u64 b, u64 n) { return static_cast<u64>(static_cast<u128>(a) * b % n); }
BigInt mulmod(const BigInt& a, const BigInt& b, const BigInt& n) { return a * b % n; }
U256 mulmod(const U256& a, const U256& b, const U256& n) { return a * b % n; }

u64 addmod(u64 a, u64 b, u64 n) { return static_cast<u64>((static_cast<u128>(a) + b) % n); }
BigInt addmod(const BigInt& a, const BigInt& b, const BigInt& n) { return (a + b) % n; }
U256 addmod(const U256& a, const U256& b, const U256& n) { return (a + b) % n; }

u64 powmod(u64 base, u64 exp, u64 n) {
  u64 result = 1 % n;
  base %= n;
  while (exp) {
    if (exp & 1) result = mulmod(result, base, n);
    base = mulmod(base, base, n);
    exp >>= 1;
  }
  return result;
}
BigInt powmod(const BigInt& base, const BigInt& exp, const BigInt& n) { return mp::powm(base, exp, n); }
U256 powmod(const U256& base, const U256& exp, const U256& n) { return mp::powm(base, exp, n); }

u64 gcd_of(u64 a, u64 b) { return std::gcd(a, b); }
BigInt gcd_of(const BigInt& a, const BigInt& b) { return mp::gcd(a, b); }
U256 gcd_of(const U256& a, const U256& b) { return mp::gcd(a, b); }

u64 low_bits(u64 n) { return n; }
u64 low_bits(const BigInt& n) { return static_cast<u64>(n & std::numeric_limits<u64>::max()); }
u64 low_bits(const U256& n) { return static_cast<u64>(n & std::numeric_limits<u64>::max()); }

template <class Int>
bool miller_rabin_round(const Int& n, const Int& d, unsigned s, const Int& base) {
  Int a = base % n;
  if (a == 0) return true;
  Int x = powmod(a, d, n);
  if (x == 1 || x == n - 1) return true;
  for (unsigned r = 1; r < s; ++r) {
    x = mulmod(x, x, n);
    if (x == n - 1) return true;
  }
  return false;
}

constexpr unsigned kWitnesses[] = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41};

template <class Int>
bool miller_rabin(const Int& n) {
  if (n < 2) return false;
  for (unsigned p : kWitnesses) {
    if (n == p) return true;
    if (n % p == 0) return false;
  }
  Int d = n - 1;
  unsigned s = 0;
  while ((low_bits(d) & 1) == 0) {
    d >>= 1;
    ++s;
  }
  for (unsigned p : kWitnesses) {
    if (!miller_rabin_round<Int>(n, d, s, Int(p))) return false;
  }
  return true;
}

// Brent's variant of Pollard rho. Returns a nontrivial factor, or 0 when the
// budget runs out.
template <class Int>
Int brent_rho(const Int& n, u64& budget, std::mt19937_64& rng) {
  if ((low_bits(n) & 1) == 0) return Int(2);
  auto step = [&n](const Int& v, const Int& c) { return addmod(mulmod(v, v, n), c, n); };
  auto diff = [](const Int& a, const Int& b) { return a > b ? Int(a - b) : Int(b - a); };
  constexpr u64 kBatch = 128;
  while (budget > 0) {
    Int y = Int(rng()) % n;
    Int c = Int(rng()) % (n - 1) + 1;
    Int x = y, ys = y, g = 1, q = 1;
    u64 r = 1;
    while (g == 1 && budget > 0) {
      x = y;
      for (u64 i = 0; i < r; ++i) y = step(y, c);
      u64 k = 0;
      while (k < r && g == 1 && budget > 0) {
        ys = y;
        u64 lim = std::min(kBatch, r - k);
        for (u64 i = 0; i < lim; ++i) {
          y = step(y, c);
          q = mulmod(q, diff(x, y), n);
        }
        budget = budget > lim ? budget - lim : 0;
        g = gcd_of(q, n);
        k += kBatch;
      }
      r *= 2;
    }
    if (g == n) {
      do {
        ys = step(ys, c);
        g = gcd_of(diff(x, ys), n);
      } while (g == 1);
    }
    if (g != 1 && g != n) return g;
  }
  return Int(0);
}

using PrimeMap = std::map<BigInt, unsigned>;

// Montgomery arithmetic modulo an odd n < 2^127, so sums of two residues
// never overflow. Values stay in Montgomery form throughout rho: x -> x^2 + c
// there is still a pseudo-random polynomial map modulo every prime factor.
class Mont128 {
 public:
  explicit Mont128(u128 n) : n_(n), neg_inv_(0) {
    u128 inv = n;  // Newton iteration doubles the correct low bits each step.
    for (int k = 0; k < 7; ++k) inv *= 2 - n * inv;
    neg_inv_ = -inv;
  }

  u128 mul(u128 a, u128 b) const {
    auto [hi, lo] = wide(a, b);
    u128 m = lo * neg_inv_;
    auto [mhi, mlo] = wide(m, n_);
    u128 t = hi + mhi + (lo != 0 ? 1 : 0);  // lo + mlo == 0 mod 2^128
    (void)mlo;
    return t >= n_ ? t - n_ : t;
  }

  u128 add(u128 a, u128 b) const {
    u128 t = a + b;
    return t >= n_ ? t - n_ : t;
  }

 private:
  // Full 256-bit product as (high, low) halves.
  static std::pair<u128, u128> wide(u128 a, u128 b) {
    u128 a0 = static_cast<u64>(a), a1 = a >> 64, b0 = static_cast<u64>(b), b1 = b >> 64;
    u128 p00 = a0 * b0, p01 = a0 * b1, p10 = a1 * b0, p11 = a1 * b1;
    u128 mid = (p00 >> 64) + static_cast<u64>(p01) + static_cast<u64>(p10);
    u128 lo = (mid << 64) | static_cast<u64>(p00);
    u128 hi = p11 + (p01 >> 64) + (p10 >> 64) + (mid >> 64);
    return {hi, lo};
  }

  u128 n_;
  u128 neg_inv_;
};

u128 gcd128(u128 a, u128 b) {
  while (b != 0) {
    u128 t = a % b;
    a = b;
    b = t;
  }
  return a;
}

// Brent's rho as above, for odd n < 2^127 in Montgomery form.
u128 brent_rho_mont(u128 n, u64& budget, std::mt19937_64& rng) {
  Mont128 mont(n);
  auto step = [&mont](u128 v, u128 c) { return mont.add(mont.mul(v, v), c); };
  auto diff = [](u128 a, u128 b) { return a > b ? a - b : b - a; };
  auto draw = [&rng, n] { return ((static_cast<u128>(rng()) << 64) | rng()) % n; };
  constexpr u64 kBatch = 128;
  while (budget > 0) {
    u128 y = draw();
    u128 c = draw() % (n - 1) + 1;
    u128 x = y, ys = y, g = 1, q = 1;
    u64 r = 1;
    while (g == 1 && budget > 0) {
      x = y;
      for (u64 i = 0; i < r; ++i) y = step(y, c);
      u64 k = 0;
      while (k < r && g == 1 && budget > 0) {
        ys = y;
        u64 lim = std::min(kBatch, r - k);
        for (u64 i = 0; i < lim; ++i) {
          y = step(y, c);
          q = mont.mul(q, diff(x, y));
        }
        budget = budget > lim ? budget - lim : 0;
        g = gcd128(q, n);
        k += kBatch;
      }
      r *= 2;
    }
    if (g == n) {
      do {
        ys = step(ys, c);
        g = gcd128(diff(x, ys), n);
      } while (g == 1);
    }
    if (g != 1 && g != n) return g;
  }
  return 0;
}

U256 find_factor(const U256& m, u64& budget, std::mt19937_64& rng) {
  if (mp::bit_test(m, 0) && mp::msb(m) < 127) {
    u128 n = (static_cast<u128>(static_cast<u64>(m >> 64)) << 64) | static_cast<u64>(m & ~u64(0));
    u128 f = brent_rho_mont(n, budget, rng);
    return (U256(static_cast<u64>(f >> 64)) << 64) | static_cast<u64>(f);
  }
  return brent_rho<U256>(m, budget, rng);
}
u64 find_factor(u64 m, u64& budget, std::mt19937_64& rng) { return brent_rho<u64>(m, budget, rng); }
BigInt find_factor(const BigInt& m, u64& budget, std::mt19937_64& rng) { return brent_rho<BigInt>(m, budget, rng); }

bool prime_test(u64 m) { return miller_rabin<u64>(m); }
bool prime_test(const BigInt& m) { return is_probable_prime(m); }
bool prime_test(const U256& m) { return is_probable_prime(BigInt(m)); }

struct Splitter {
  u64 budget;
  std::mt19937_64 rng{0x5eed5eedULL};

  template <class Int>
  void split(const Int& m, PrimeMap& out) {
    if (m == 1) return;
    if (prime_test(m)) {
      ++out[BigInt(m)];
      return;
    }
    Int root = sqrt(m);
    if (root * root == m) {
      PrimeMap half;
      dispatch(BigInt(root), half);
      for (auto& [p, e] : half) out[p] += 2 * e;
      return;
    }
    Int f = find_factor(m, budget, rng);
    if (f == 0) {
      throw FactorizationLimitExceeded("could not factor composite cofactor " + BigInt(m).str() +
                                       " within the rho budget");
    }
    dispatch(BigInt(f), out);
    dispatch(BigInt(m / f), out);
  }

  void dispatch(const BigInt& m, PrimeMap& out) {
    if (fits_u64(m)) {
      split<u64>(static_cast<u64>(m), out);
    } else if (mp::msb(m) < 128) {
      split<U256>(U256(m), out);
    } else {
      split<BigInt>(m, out);
    }
  }

  static u64 sqrt(u64 m) {
    u64 r = static_cast<u64>(std::sqrt(static_cast<long double>(m)));
    while (static_cast<u128>(r) * r > m) --r;
    while (static_cast<u128>(r + 1) * (r + 1) <= m) ++r;
    return r;
  }
  static BigInt sqrt(const BigInt& m) { return mp::sqrt(m); }
  static U256 sqrt(const U256& m) { return mp::sqrt(m); }
};

static_assert(sizeof(mp::limb_type) == sizeof(u64), "limb folding assumes 64-bit limbs");

// (hi * 2^64 + lo) mod d, for hi < d.
inline u64 fold(u64 hi, u64 lo, u64 d) {
#if defined(__x86_64__)
  u64 quotient, remainder;
  __asm__("divq %4" : "=a"(quotient), "=d"(remainder) : "a"(lo), "d"(hi), "rm"(d));
  return remainder;
#else
  return static_cast<u64>(((static_cast<u128>(hi) << 64) | lo) % d);
#endif
}

// m mod d for a multi-limb m, folding limbs from the most significant end.
u64 residue(const BigInt& m, u64 d) {
  const auto& b = m.backend();
  u64 r = 0;
  for (std::size_t i = b.size(); i-- > 0;) r = fold(r, b.limbs()[i], d);
  return r;
}

BigInt to_big(u64 m) { return BigInt(m); }
BigInt to_big(u128 m) { return (BigInt(static_cast<u64>(m >> 64)) << 64) | static_cast<u64>(m); }

// Called once no prime <= bound divides m: records m if it is 1 or prime.
bool settle(BigInt& m, u64 bound, PrimeMap& out) {
  if (m == 1) return true;
  // A composite m without a factor <= bound is at least (bound + 1)^2.
  BigInt b1 = BigInt(bound) + 1;
  if (m < b1 * b1 || prime_test(m)) {
    ++out[m];
    m = 1;
    return true;
  }
  return false;
}

// Trial division of m by primes[i, end). Returns true when m is fully
// factored; otherwise leaves the cofactor in `rest`. A prime cofactor cannot
// shrink further, so an occasional primality check ends the scan early
// without changing the result.
template <class W>
bool scan(W m, const PrimeTable& table, std::size_t i, std::size_t end, u64 bound, PrimeMap& out,
          BigInt& rest) {
  constexpr std::size_t kBlock = 64;
  std::size_t checkpoint = std::max<std::size_t>(256, 4 * i);
  bool unit_or_prime = false;
  while (i < end) {
    if constexpr (std::is_same_v<W, u128>) {
      if ((m >> 64) == 0) return scan<u64>(static_cast<u64>(m), table, i, end, bound, out, rest);
    }
    W p = table.primes[i];
    if (p * p > m) {
      unit_or_prime = true;
      break;
    }
    if (i >= checkpoint) {
      checkpoint *= 4;
      if (prime_test(to_big(m))) {
        unit_or_prime = true;
        break;
      }
    }
    for (std::size_t stop = std::min(i + kBlock, end); i < stop; ++i) {
      if (!table.divides(i, m)) continue;
      W q = table.primes[i];
      unsigned e = 0;
      do {
        m /= q;
        ++e;
      } while (table.divides(i, m));
      out[BigInt(q)] += e;
    }
  }
  rest = to_big(m);
  if (unit_or_prime) {
    if (rest != 1) ++out[rest];
    rest = 1;
    return true;
  }
  return settle(rest, bound, out);
}

bool scan_any(BigInt& m, const PrimeTable& table, std::size_t i, std::size_t end, u64 bound, PrimeMap& out) {
  if (fits_u64(m)) return scan<u64>(static_cast<u64>(m), table, i, end, bound, out, m);
  return scan<u128>(
      (static_cast<u128>(static_cast<u64>(m >> 64)) << 64) | static_cast<u64>(m & std::numeric_limits<u64>::max()),
      table, i, end, bound, out, m);
}

// Strips every prime <= bound from m. Returns true if m is left as 1 (fully
// factored); otherwise m is a composite whose prime factors all exceed bound.
// Values wider than 128 bits are tested against batches of primes whose
// product fits a word, and drop to the word-sized scan once they are narrow.
bool trial_divide(BigInt& m, u64 bound, PrimeMap& out) {
  auto table = primes_up_to(bound);
  const auto& primes = table->primes;
  std::size_t n = std::upper_bound(primes.begin(), primes.end(), bound) - primes.begin();
  std::size_t checkpoint = 256;
  std::size_t i = 0;
  while (i < n) {
    if (mp::msb(m) < 128) return scan_any(m, *table, i, n, bound, out);
    if (i >= checkpoint) {
      checkpoint *= 4;
      if (prime_test(m)) break;
    }
    u64 batch = 1;
    std::size_t j = i;
    while (j < n && static_cast<u128>(batch) * primes[j] <= std::numeric_limits<u64>::max()) {
      batch *= primes[j++];
    }
    u64 r = residue(m, batch);
    for (; i < j; ++i) {
      u64 p = primes[i];
      if (!table->divides(i, r)) continue;
      unsigned e = 0;
      while (residue(m, p) == 0) {
        m /= p;
        ++e;
      }
      out[BigInt(p)] += e;
    }
  }
  if (mp::msb(m) < 128) return scan_any(m, *table, n, n, bound, out);
  return settle(m, bound, out);
}

// Fixed witnesses, then seeded random rounds beyond their deterministic range.
template <class Int>
bool probable_prime_wide(const Int& n) {
  if (!miller_rabin<Int>(n)) return false;
  static const Int kDeterministicLimit("3317044064679887385961981");
  if (n < kDeterministicLimit) return true;
  std::mt19937_64 rng(0x9e3779b97f4a7c15ULL);
  Int d = n - 1;
  unsigned s = 0;
  while (!mp::bit_test(d, 0)) {
    d >>= 1;
    ++s;
  }
  for (int i = 0; i < 32; ++i) {
    Int a = Int(rng()) % Int(n - 3) + 2;
    if (!miller_rabin_round<Int>(n, d, s, a)) return false;
  }
  return true;
}

}  // namespace

FactorLimits FactorLimits::from_environment() {
  FactorLimits limits;
  const char* raw = std::getenv("FACTOR_LIMIT");
  if (raw == nullptr || *raw == '\0') return limits;
  std::string_view text(raw);
  u64 value = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || ptr != text.data() + text.size() || value == 0 || value > kMaxTrialBound) {
    throw InvalidParameter("FACTOR_LIMIT must be an integer in [1, 1000000000], got '" + std::string(text) + "'");
  }
  limits.trial_bound = value;
  return limits;
}

bool is_probable_prime(const BigInt& n) {
  if (fits_u64(n)) return miller_rabin<u64>(static_cast<u64>(n));
  if (mp::msb(n) < 128) return probable_prime_wide<U256>(U256(n));
  return probable_prime_wide<BigInt>(n);
}

Factorization factorize(const BigInt& n, const FactorLimits& limits) {
  if (n < 1) throw NonPositiveInput("factorize requires n >= 1, got " + n.str());
  if (limits.trial_bound > kMaxTrialBound) throw InvalidParameter("trial bound exceeds 1000000000");
  PrimeMap primes;
  BigInt rest = n;
  bool done = trial_divide(rest, limits.trial_bound, primes);
  if (!done) {
    Splitter splitter{limits.rho_budget};
    splitter.dispatch(rest, primes);
  }
  return {primes.begin(), primes.end()};
}

BigInt squarefree_part(const BigInt& n, const FactorLimits& limits) {
  BigInt s = 1;
  for (const auto& [p, e] : factorize(n, limits)) {
    if (e % 2 == 1) s *= p;
  }
  return s;
}

SquarefreeClass squarefree_class(const Rat& q, const FactorLimits& limits) {
  if (q.sign() <= 0) throw NonPositiveInput("squarefree class needs a positive rational, got " + q.str());
  // num and den are coprime, so their squarefree parts multiply directly.
  return SquarefreeClass(squarefree_part(q.num(), limits) * squarefree_part(q.den(), limits));
}

std::vector<BigInt> signed_divisors(const BigInt& n, const FactorLimits& limits) {
  std::vector<BigInt> positive{1};
  for (const auto& [p, e] : factorize(n, limits)) {
    std::size_t count = positive.size();
    BigInt power = 1;
    for (unsigned k = 0; k < e; ++k) {
      power *= p;
      for (std::size_t i = 0; i < count; ++i) positive.push_back(positive[i] * power);
    }
  }
  std::sort(positive.begin(), positive.end());
  std::vector<BigInt> out;
  out.reserve(2 * positive.size());
  for (auto it = positive.rbegin(); it != positive.rend(); ++it) out.push_back(-*it);
  out.insert(out.end(), positive.begin(), positive.end());
  return out;
}

std::optional<Rat> rational_sqrt(const Rat& q) {
  if (q.sign() < 0) return std::nullopt;
  BigInt n = mp::sqrt(q.num());
  if (n * n != q.num()) return std::nullopt;
  BigInt d = mp::sqrt(q.den());
  if (d * d != q.den()) return std::nullopt;
  return Rat(n, d);
}

bool is_rational_square(const Rat& q) { return rational_sqrt(q).has_value(); }

SternBrocot::SternBrocot() : row_{{0, 1}, {1, 0}} {}

void SternBrocot::descend() {
  std::vector<Frac> next;
  next.reserve(2 * row_.size() - 1);
  level_.clear();
  for (std::size_t i = 0; i + 1 < row_.size(); ++i) {
    next.push_back(row_[i]);
    Frac mediant{row_[i].num + row_[i + 1].num, row_[i].den + row_[i + 1].den};
    level_.emplace_back(mediant.num, mediant.den);
    next.push_back(std::move(mediant));
  }
  next.push_back(row_.back());
  row_ = std::move(next);
  cursor_ = 0;
}

Rat SternBrocot::next() {
  if (cursor_ == level_.size()) descend();
  return level_[cursor_++];
}

}  // namespace congruent
