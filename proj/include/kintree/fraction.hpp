#pragma once

#include "kintree/bigint.hpp"

#include <compare>
#include <string>
#include <string_view>

namespace kintree {

/// Reduced non-negative fraction num/den. The formal boundary value 1/0 is admitted;
/// it supports comparison and mediants but no other arithmetic.
class Fraction {
public:
  /// 1/1.
  Fraction() = default;

  /// Reduces num/den. Throws DomainError on a negative part or 0/0.
  Fraction(BigInt num, BigInt den);
  explicit Fraction(long long integer) : Fraction(BigInt(integer), BigInt(1)) {}

  static Fraction zero() { return Fraction(BigInt(0), BigInt(1)); }
  static Fraction infinity() { return Fraction(BigInt(1), BigInt(0)); }

  const BigInt& num() const noexcept { return num_; }
  const BigInt& den() const noexcept { return den_; }
  bool is_finite() const noexcept { return den_ != 0; }
  bool is_positive_finite() const noexcept { return den_ != 0 && num_ != 0; }

  friend bool operator==(const Fraction&, const Fraction&) = default;
  friend std::strong_ordering operator<=>(const Fraction& a, const Fraction& b);

  friend Fraction operator+(const Fraction& a, const Fraction& b);
  /// Requires a >= b (fractions are non-negative).
  friend Fraction operator-(const Fraction& a, const Fraction& b);
  friend Fraction operator*(const Fraction& a, const Fraction& b);

  /// 1/x for finite positive x.
  Fraction reciprocal() const;

private:
  BigInt num_ = 1;
  BigInt den_ = 1;
};

/// (a + c) / (b + d); defined for the boundary values too.
Fraction mediant(const Fraction& x, const Fraction& y);

/// |x - y| for finite x, y.
Fraction distance(const Fraction& x, const Fraction& y);

/// "p/q".
std::string format_fraction(const Fraction& x);

/// First `digits` decimal places of a finite fraction by long division, truncated:
/// 10/7 with 4 digits -> "1.4285".
std::string format_decimal(const Fraction& x, unsigned digits);

/// Accepts "p/q" or an integer "p"; the result is reduced. "1/0" gives the boundary value.
Fraction parse_fraction(std::string_view text);

}  // namespace kintree
