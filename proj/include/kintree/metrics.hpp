#pragma once

// Order metric r(S) (dyadic, in [0,2]) and breadth-first position N(S) of LR-strings,
// in recursive and closed form, plus the position inverse and the run-sequence order.

#include "kintree/bigint.hpp"
#include "kintree/gen_string.hpp"

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace kintree {

/// Exact dyadic rational numerator / 2^exponent, kept with an odd numerator unless the
/// exponent is zero.
class Dyadic {
public:
  Dyadic() = default;
  Dyadic(BigInt numerator, std::uint64_t exponent);
  explicit Dyadic(long long integer) : numerator_(integer) {}

  /// 2^-e.
  static Dyadic inverse_pow2(std::uint64_t e) { return Dyadic(BigInt(1), e); }

  const BigInt& numerator() const noexcept { return numerator_; }
  std::uint64_t exponent() const noexcept { return exponent_; }

  friend Dyadic operator+(const Dyadic& a, const Dyadic& b);
  friend Dyadic operator-(const Dyadic& a, const Dyadic& b);
  friend Dyadic operator*(const Dyadic& a, const Dyadic& b);

  friend bool operator==(const Dyadic&, const Dyadic&) = default;
  friend std::strong_ordering operator<=>(const Dyadic& a, const Dyadic& b);

private:
  BigInt numerator_ = 0;
  std::uint64_t exponent_ = 0;
};

/// "a/2^e".
std::string format_dyadic(const Dyadic& x);

/// Binary-point form with at least one fractional digit: 1 -> "1.0", 5/4 -> "1.01".
/// Negative values are rejected.
std::string format_binary_point(const Dyadic& x);

/// Accepts "a/2^e", "1.011" (binary point), or a plain decimal integer.
Dyadic parse_dyadic(std::string_view text);

/// A position value: a natural number, or -1 (R^-1), or -1/2 (L^-1).
class ExtPosition {
public:
  enum class Kind : unsigned char { Natural, NegOne, NegHalf };

  ExtPosition() = default;
  explicit ExtPosition(BigInt n);
  static ExtPosition neg_one() { return ExtPosition(Kind::NegOne); }
  static ExtPosition neg_half() { return ExtPosition(Kind::NegHalf); }

  Kind kind() const noexcept { return kind_; }
  bool is_natural() const noexcept { return kind_ == Kind::Natural; }

  /// The natural value; throws DomainError for the negative sentinels.
  const BigInt& natural() const;

  /// 2N + 1, an integer for every kind.
  BigInt twice_plus_one() const;

  friend bool operator==(const ExtPosition&, const ExtPosition&) = default;

private:
  explicit ExtPosition(Kind kind) : kind_(kind) {}

  Kind kind_ = Kind::Natural;
  BigInt value_ = 0;
};

/// Decimal, "-1", or "-1/2".
std::string format_position(const ExtPosition& n);
ExtPosition parse_position(std::string_view text);

/// r via r(e) = 1, r(SL) = r(S) - 2^-|SL|, r(SR) = r(S) + 2^-|SR|, letter by letter.
/// r(R^-1) = 0, r(L^-1) = 2.
Dyadic r_recursive(const GenString& s);

/// r = 2(1 - 2^-k0 + 2^-(k0+k1) - ... + (-1)^m 2^-(k0+..+k_{m-1}) + (-1)^(m+1) 2^-(|S|+1)),
/// evaluated over a single integer numerator. Words only.
Dyadic r_closed(const GenString& s);

/// The same value as r_closed written as 2 sum_{i=0}^{m+1} (-1)^i 2^-e_i + (-1)^(m+2) 2^-|S|
/// with e_i = k_0 + ... + k_{i-1}, accumulated term by term in Dyadic arithmetic.
Dyadic r_closed_alternating(const GenString& s);

/// r of any generalized string, using the closed form for words.
Dyadic r_value(const GenString& s);

/// N via N(e) = 0, N(SL) = 2N(S) + 1, N(SR) = 2N(S) + 2, letter by letter.
ExtPosition position_recursive(const GenString& s);

/// N = 2^(|S|+1) - 2^(k1+..+km) + 2^(k2+..+km) - ... + (-1)^m 2^km - (2 if m even else 1).
/// Words only.
ExtPosition position_closed(const GenString& s);

/// N of any generalized string, using the closed form for words.
ExtPosition position(const GenString& s);

/// The word with N(s) = n: binary digits of n + 1 after the leading one, 0 -> L, 1 -> R.
GenString string_at_position(const BigInt& n);

/// The generalized string with r(s) = x. Throws DomainError if x is not an r-value.
GenString string_with_r(const Dyadic& x);

/// Tree order (left to right) decided on run sequences: at even run indices a longer run
/// is greater, at odd indices a longer run is smaller; a missing run counts as 0.
/// R^-1 is the global minimum and L^-1 the global maximum.
std::strong_ordering compare_strings(const GenString& a, const GenString& b);

/// Default bound for enumerating whole levels of the tree.
inline constexpr unsigned kDefaultLevelBound = 20;

/// r-values of all words at level m (cumulative = false) or at levels 0..m (cumulative =
/// true), obtained by enumeration, sorted ascending. Throws ResourceError if m > bound.
std::vector<Dyadic> level_r_values(unsigned m, bool cumulative, unsigned bound = kDefaultLevelBound);

/// {(2k-1)/2^m : 1 <= k <= 2^m}, or {l/2^m : 1 <= l <= 2^(m+1)-1} when cumulative, sorted.
std::vector<Dyadic> level_r_formula(unsigned m, bool cumulative, unsigned bound = kDefaultLevelBound);

/// a(n) = 2 N(P_D(N^-1(n))) + 1 for n = 1..count.
std::vector<BigInt> distant_parent_sequence(std::uint64_t count);

}  // namespace kintree
