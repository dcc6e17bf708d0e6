#include "kintree/metrics.hpp"

#include "kintree/error.hpp"

#include <algorithm>

namespace kintree {
namespace {

using boost::multiprecision::bit_test;
using boost::multiprecision::lsb;
using boost::multiprecision::msb;

std::uint64_t word_length(const GenString& s) { return to_u64(length(s)); }

void check_level_bound(unsigned m, unsigned bound) {
  if (m > bound) {
    throw ResourceError("level " + std::to_string(m) + " exceeds the enumeration bound " +
                        std::to_string(bound));
  }
}

}  // namespace

Dyadic::Dyadic(BigInt numerator, std::uint64_t exponent)
    : numerator_(std::move(numerator)), exponent_(exponent) {
  if (numerator_ == 0) {
    exponent_ = 0;
    return;
  }
  const BigInt magnitude = abs(numerator_);
  const std::uint64_t shift = std::min<std::uint64_t>(lsb(magnitude), exponent_);
  if (shift > 0) {
    numerator_ >>= static_cast<unsigned>(shift);
    exponent_ -= shift;
  }
}

Dyadic operator+(const Dyadic& a, const Dyadic& b) {
  const std::uint64_t e = std::max(a.exponent_, b.exponent_);
  BigInt sum = (a.numerator_ << static_cast<unsigned>(e - a.exponent_)) +
               (b.numerator_ << static_cast<unsigned>(e - b.exponent_));
  return Dyadic(std::move(sum), e);
}

Dyadic operator-(const Dyadic& a, const Dyadic& b) {
  return a + Dyadic(BigInt(-b.numerator_), b.exponent_);
}

Dyadic operator*(const Dyadic& a, const Dyadic& b) {
  return Dyadic(a.numerator_ * b.numerator_, a.exponent_ + b.exponent_);
}

std::strong_ordering operator<=>(const Dyadic& a, const Dyadic& b) {
  const std::uint64_t e = std::max(a.exponent_, b.exponent_);
  const BigInt lhs = a.numerator_ << static_cast<unsigned>(e - a.exponent_);
  const BigInt rhs = b.numerator_ << static_cast<unsigned>(e - b.exponent_);
  if (lhs < rhs) return std::strong_ordering::less;
  if (lhs > rhs) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

std::string format_dyadic(const Dyadic& x) {
  return x.numerator().str() + "/2^" + std::to_string(x.exponent());
}

std::string format_binary_point(const Dyadic& x) {
  if (x.numerator() < 0) throw DomainError("binary-point form is only produced for non-negative values");
  const auto e = static_cast<unsigned>(x.exponent());
  const BigInt whole = x.numerator() >> e;
  std::string out;
  if (whole == 0) {
    out = "0";
  } else {
    for (std::size_t b = msb(whole) + 1; b-- > 0;) out.push_back(bit_test(whole, b) ? '1' : '0');
  }
  out.push_back('.');
  if (e == 0) {
    out.push_back('0');
  } else {
    for (unsigned b = e; b-- > 0;) out.push_back(bit_test(x.numerator(), b) ? '1' : '0');
  }
  return out;
}

Dyadic parse_dyadic(std::string_view text) {
  if (const auto slash = text.find('/'); slash != std::string_view::npos) {
    std::size_t pos = 0;
    BigInt numerator = parse_natural(text, pos);
    if (pos != slash) throw ParseError("expected '/'", pos);
    if (text.substr(slash, 3) != "/2^") throw ParseError("expected '/2^'", slash);
    pos = slash + 3;
    const BigInt exponent = parse_natural(text, pos);
    if (pos != text.size()) throw ParseError("trailing characters", pos);
    return Dyadic(std::move(numerator), to_u64(exponent));
  }
  if (const auto point = text.find('.'); point != std::string_view::npos) {
    if (point == 0) throw ParseError("expected a binary digit before '.'", 0);
    BigInt numerator = 0;
    std::uint64_t exponent = 0;
    for (std::size_t i = 0; i < text.size(); ++i) {
      if (i == point) continue;
      const char c = text[i];
      if (c != '0' && c != '1') throw ParseError("expected a binary digit", i);
      numerator = (numerator << 1) + (c - '0');
      if (i > point) ++exponent;
    }
    if (exponent == 0) throw ParseError("expected a binary digit after '.'", text.size());
    return Dyadic(std::move(numerator), exponent);
  }
  std::size_t pos = 0;
  BigInt integer = parse_natural(text, pos);
  if (pos != text.size()) throw ParseError("trailing characters", pos);
  return Dyadic(std::move(integer), 0);
}

ExtPosition::ExtPosition(BigInt n) : kind_(Kind::Natural), value_(std::move(n)) {
  if (value_ < 0) throw DomainError("a natural position must be non-negative");
}

const BigInt& ExtPosition::natural() const {
  if (kind_ != Kind::Natural) throw DomainError("position of a generalized string is not a natural number");
  return value_;
}

BigInt ExtPosition::twice_plus_one() const {
  switch (kind_) {
    case Kind::NegOne: return BigInt(-1);
    case Kind::NegHalf: return BigInt(0);
    case Kind::Natural: break;
  }
  return 2 * value_ + 1;
}

std::string format_position(const ExtPosition& n) {
  switch (n.kind()) {
    case ExtPosition::Kind::NegOne: return "-1";
    case ExtPosition::Kind::NegHalf: return "-1/2";
    case ExtPosition::Kind::Natural: break;
  }
  return n.natural().str();
}

ExtPosition parse_position(std::string_view text) {
  if (text == "-1") return ExtPosition::neg_one();
  if (text == "-1/2") return ExtPosition::neg_half();
  std::size_t pos = 0;
  BigInt n = parse_natural(text, pos);
  if (pos != text.size()) throw ParseError("trailing characters", pos);
  return ExtPosition(std::move(n));
}

Dyadic r_recursive(const GenString& s) {
  switch (s.kind()) {
    case GenString::Kind::RInverse: return Dyadic(0);
    case GenString::Kind::LInverse: return Dyadic(2);
    case GenString::Kind::Word: break;
  }
  // r(S) = num / 2^|S|; appending a letter doubles the scale and moves by one unit.
  BigInt num = 1;
  std::uint64_t e = 0;
  for_each_letter(s, [&](Letter d) {
    num <<= 1;
    if (d == Letter::L) {
      --num;
    } else {
      ++num;
    }
    ++e;
  });
  return Dyadic(std::move(num), e);
}

Dyadic r_closed(const GenString& s) {
  if (s.is_sentinel()) throw DomainError("the closed form of r is stated for words only");
  const auto runs = s.runs();
  const std::size_t m = runs.size() - 1;
  const std::uint64_t n = word_length(s);
  // r = 2 * sum / 2^(n+1): scale every term by 2^(n+1).
  BigInt num = 0;
  std::uint64_t prefix = 0;
  for (std::size_t i = 0; i <= m; ++i) {
    const BigInt term = pow2(n + 1 - prefix);
    if (i % 2 == 0) {
      num += term;
    } else {
      num -= term;
    }
    prefix += runs[i].convert_to<std::uint64_t>();
  }
  num += (m % 2 == 0) ? -1 : 1;
  return Dyadic(std::move(num), n);
}

Dyadic r_closed_alternating(const GenString& s) {
  if (s.is_sentinel()) throw DomainError("the closed form of r is stated for words only");
  const auto runs = s.runs();
  const std::size_t m = runs.size() - 1;
  const std::uint64_t n = word_length(s);
  Dyadic sum;
  std::uint64_t prefix = 0;
  for (std::size_t i = 0; i <= m + 1; ++i) {
    const Dyadic term = Dyadic::inverse_pow2(prefix);
    sum = (i % 2 == 0) ? sum + term : sum - term;
    if (i <= m) prefix += runs[i].convert_to<std::uint64_t>();
  }
  const Dyadic tail = Dyadic::inverse_pow2(n);
  return (m % 2 == 0) ? Dyadic(2) * sum + tail : Dyadic(2) * sum - tail;
}

Dyadic r_value(const GenString& s) { return s.is_word() ? r_closed(s) : r_recursive(s); }

ExtPosition position_recursive(const GenString& s) {
  switch (s.kind()) {
    case GenString::Kind::RInverse: return ExtPosition::neg_one();
    case GenString::Kind::LInverse: return ExtPosition::neg_half();
    case GenString::Kind::Word: break;
  }
  BigInt n = 0;
  for_each_letter(s, [&](Letter d) { n = 2 * n + (d == Letter::L ? 1 : 2); });
  return ExtPosition(std::move(n));
}

ExtPosition position_closed(const GenString& s) {
  if (s.is_sentinel()) throw DomainError("the closed form of N is stated for words only");
  const auto runs = s.runs();
  const std::size_t m = runs.size() - 1;
  BigInt n = pow2(word_length(s) + 1);
  // suffix = k_i + ... + k_m, walked from the right.
  std::vector<std::uint64_t> suffix(m + 2, 0);
  for (std::size_t i = m + 1; i-- > 0;) suffix[i] = suffix[i + 1] + to_u64(runs[i]);
  for (std::size_t i = 1; i <= m; ++i) {
    if (i % 2 == 0) {
      n += pow2(suffix[i]);
    } else {
      n -= pow2(suffix[i]);
    }
  }
  n -= (m % 2 == 0) ? 2 : 1;
  return ExtPosition(std::move(n));
}

ExtPosition position(const GenString& s) { return s.is_word() ? position_closed(s) : position_recursive(s); }

GenString string_at_position(const BigInt& n) {
  if (n < 0) throw DomainError("position must be non-negative");
  const BigInt v = n + 1;
  const std::size_t top = msb(v);
  if (top > kMaxMaterializedBits) throw ResourceError("position exceeds the materialization bound");
  std::vector<BigInt> runs{BigInt(0)};
  for (std::size_t b = top; b-- > 0;) {
    const Letter d = bit_test(v, b) ? Letter::R : Letter::L;
    if (run_letter(runs.size() - 1) == d) {
      ++runs.back();
    } else {
      runs.emplace_back(1);
    }
  }
  return GenString::from_runs(std::move(runs));
}

GenString string_with_r(const Dyadic& x) {
  if (x == Dyadic(0)) return GenString::r_inverse();
  if (x == Dyadic(2)) return GenString::l_inverse();
  if (x < Dyadic(0) || x > Dyadic(2)) throw DomainError("r-values lie in [0, 2]");
  // Level e holds the odd numerators 1, 3, ..., 2^(e+1) - 1 over 2^e, left to right.
  const std::uint64_t e = x.exponent();
  if (e == 0 && x.numerator() != 1) throw DomainError("not an r-value of a generalized string");
  const BigInt index = (x.numerator() - 1) / 2;
  return string_at_position(pow2(e) - 1 + index);
}

std::strong_ordering compare_strings(const GenString& a, const GenString& b) {
  using std::strong_ordering;
  const auto rank = [](const GenString& s) {
    switch (s.kind()) {
      case GenString::Kind::RInverse: return 0;
      case GenString::Kind::Word: return 1;
      case GenString::Kind::LInverse: return 2;
    }
    return 1;
  };
  if (a.is_sentinel() || b.is_sentinel()) return rank(a) <=> rank(b);

  const auto ra = a.runs();
  const auto rb = b.runs();
  const BigInt zero = 0;
  const std::size_t n = std::max(ra.size(), rb.size());
  for (std::size_t i = 0; i < n; ++i) {
    const BigInt& ka = i < ra.size() ? ra[i] : zero;
    const BigInt& kb = i < rb.size() ? rb[i] : zero;
    if (ka == kb) continue;
    const bool a_longer = ka > kb;
    if (i % 2 == 0) return a_longer ? strong_ordering::greater : strong_ordering::less;
    return a_longer ? strong_ordering::less : strong_ordering::greater;
  }
  return strong_ordering::equal;
}

std::vector<Dyadic> level_r_values(unsigned m, bool cumulative, unsigned bound) {
  check_level_bound(m, bound);
  std::vector<Dyadic> values;
  for (unsigned level = cumulative ? 0 : m; level <= m; ++level) {
    for (const auto& s : level_strings(level)) values.push_back(r_recursive(s));
  }
  std::sort(values.begin(), values.end());
  return values;
}

std::vector<Dyadic> level_r_formula(unsigned m, bool cumulative, unsigned bound) {
  check_level_bound(m, bound);
  std::vector<Dyadic> values;
  const BigInt top = cumulative ? pow2(m + 1) - 1 : pow2(m);
  for (BigInt k = 1; k <= top; ++k) values.emplace_back(cumulative ? k : 2 * k - 1, m);
  return values;
}

std::vector<BigInt> distant_parent_sequence(std::uint64_t count) {
  std::vector<BigInt> out;
  out.reserve(count);
  for (std::uint64_t n = 1; n <= count; ++n) {
    out.push_back(position(parent_distant(string_at_position(BigInt(n)))).twice_plus_one());
  }
  return out;
}

}  // namespace kintree
