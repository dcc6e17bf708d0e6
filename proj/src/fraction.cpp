#include "kintree/fraction.hpp"

#include "kintree/error.hpp"

namespace kintree {
namespace {

void require_finite(const Fraction& x, const char* op) {
  if (!x.is_finite()) throw DomainError(std::string(op) + " is undefined for the boundary value 1/0");
}

}  // namespace

Fraction::Fraction(BigInt num, BigInt den) : num_(std::move(num)), den_(std::move(den)) {
  if (num_ < 0 || den_ < 0) throw DomainError("fractions are non-negative");
  if (num_ == 0 && den_ == 0) throw DomainError("0/0 is not a fraction");
  const BigInt g = gcd(num_, den_);
  if (g != 1) {
    num_ /= g;
    den_ /= g;
  }
}

std::strong_ordering operator<=>(const Fraction& a, const Fraction& b) {
  const BigInt lhs = a.num_ * b.den_;
  const BigInt rhs = b.num_ * a.den_;
  if (lhs < rhs) return std::strong_ordering::less;
  if (lhs > rhs) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

Fraction operator+(const Fraction& a, const Fraction& b) {
  require_finite(a, "addition");
  require_finite(b, "addition");
  return Fraction(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

Fraction operator-(const Fraction& a, const Fraction& b) {
  require_finite(a, "subtraction");
  require_finite(b, "subtraction");
  BigInt num = a.num_ * b.den_ - b.num_ * a.den_;
  if (num < 0) throw DomainError("subtraction would produce a negative fraction");
  return Fraction(std::move(num), a.den_ * b.den_);
}

Fraction operator*(const Fraction& a, const Fraction& b) {
  require_finite(a, "multiplication");
  require_finite(b, "multiplication");
  return Fraction(a.num_ * b.num_, a.den_ * b.den_);
}

Fraction Fraction::reciprocal() const {
  if (!is_positive_finite()) throw DomainError("reciprocal requires a positive finite fraction");
  Fraction out;
  out.num_ = den_;
  out.den_ = num_;
  return out;
}

Fraction mediant(const Fraction& x, const Fraction& y) { return Fraction(x.num() + y.num(), x.den() + y.den()); }

Fraction distance(const Fraction& x, const Fraction& y) { return x < y ? y - x : x - y; }

std::string format_fraction(const Fraction& x) { return x.num().str() + "/" + x.den().str(); }

std::string format_decimal(const Fraction& x, unsigned digits) {
  require_finite(x, "decimal expansion");
  BigInt q;
  BigInt r;
  divide_qr(x.num(), x.den(), q, r);
  std::string out = q.str();
  if (digits == 0) return out;
  out.push_back('.');
  for (unsigned i = 0; i < digits; ++i) {
    const BigInt scaled = r * 10;
    divide_qr(scaled, x.den(), q, r);
    out += q.str();
  }
  return out;
}

Fraction parse_fraction(std::string_view text) {
  std::size_t pos = 0;
  BigInt num = parse_natural(text, pos);
  BigInt den = 1;
  if (pos < text.size()) {
    if (text[pos] != '/') throw ParseError("expected '/'", pos);
    ++pos;
    den = parse_natural(text, pos);
    if (pos != text.size()) throw ParseError("trailing characters", pos);
  }
  if (num == 0 && den == 0) throw ParseError("0/0 is not a fraction", 0);
  return Fraction(std::move(num), std::move(den));
}

}  // namespace kintree
