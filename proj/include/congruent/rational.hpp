#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

namespace congruent {

using BigInt = boost::multiprecision::cpp_int;

// Exact fraction num/den, always stored in lowest terms with den > 0.
// Canonicalization happens in every constructor, so two values compare
// equal exactly when their fields are identical.
class Rat {
 public:
  Rat() = default;
  Rat(long long n) : num_(n) {}  // NOLINT(google-explicit-constructor)
  Rat(BigInt n) : num_(std::move(n)) {}  // NOLINT(google-explicit-constructor)
  Rat(BigInt num, BigInt den);

  // Parses "p/q", "p", "-p/q". Throws ParseError on anything else.
  static Rat parse(std::string_view text);

  const BigInt& num() const { return num_; }
  const BigInt& den() const { return den_; }

  int sign() const { return num_.sign(); }
  bool is_zero() const { return num_.is_zero(); }
  bool is_integer() const { return den_ == 1; }

  // Canonical textual form: "p/q", or "p" when q = 1.
  std::string str() const;

  Rat abs() const;
  Rat inverse() const;

  Rat operator-() const;
  Rat& operator+=(const Rat& rhs);
  Rat& operator-=(const Rat& rhs);
  Rat& operator*=(const Rat& rhs);
  Rat& operator/=(const Rat& rhs);

  friend Rat operator+(Rat lhs, const Rat& rhs) { return lhs += rhs; }
  friend Rat operator-(Rat lhs, const Rat& rhs) { return lhs -= rhs; }
  friend Rat operator*(Rat lhs, const Rat& rhs) { return lhs *= rhs; }
  friend Rat operator/(Rat lhs, const Rat& rhs) { return lhs /= rhs; }

  friend bool operator==(const Rat& lhs, const Rat& rhs) {
    return lhs.num_ == rhs.num_ && lhs.den_ == rhs.den_;
  }
  friend std::strong_ordering operator<=>(const Rat& lhs, const Rat& rhs);

 private:
  void normalize();

  BigInt num_{0};
  BigInt den_{1};
};

inline Rat square(const Rat& q) { return q * q; }

std::ostream& operator<<(std::ostream& os, const Rat& q);

// Decimal string for a big integer.
std::string to_string(const BigInt& n);

}  // namespace congruent
