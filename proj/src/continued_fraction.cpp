#include "kintree/continued_fraction.hpp"

#include "kintree/error.hpp"

#include <algorithm>
#include <optional>

namespace kintree {
namespace {

std::vector<BigInt> copy_quotients(const ContinuedFraction& c) {
  const auto q = c.quotients();
  return {q.begin(), q.end()};
}

void require_interval(const Fraction& x, const Fraction& y) {
  if (!x.is_positive_finite() || !y.is_positive_finite()) {
    throw DomainError("interval endpoints must be positive finite fractions");
  }
  if (!(x < y)) throw DomainError("empty interval: need x < y");
}

// Expansion of z as a limit from above (from_above) or below, as a sequence closed by
// an infinite quotient (nullopt). Appending t -> infinity after index l approaches the
// value from above when l is even, so the expansion ending at an even index is chosen
// for z + 0 and the one ending at an odd index for z - 0.
std::vector<std::optional<BigInt>> one_sided_expansion(const Fraction& z, bool from_above) {
  const ContinuedFraction cf = cf_of_rational(z);
  const auto q = cf.quotients();
  std::vector<std::optional<BigInt>> out(q.begin(), q.end());
  const bool ends_even = (q.size() - 1) % 2 == 0;
  if (ends_even != from_above) {
    // [.., a_n] = [.., a_n - 1, 1]
    *out.back() -= 1;
    out.emplace_back(BigInt(1));
  }
  out.emplace_back(std::nullopt);
  return out;
}

}  // namespace

bool quotients_are_valid(std::span<const BigInt> q) {
  if (q.empty() || q[0] < 0) return false;
  const std::size_t m = q.size() - 1;
  if (m == 0) return q[0] >= 1;
  for (std::size_t i = 1; i < m; ++i) {
    if (q[i] < 1) return false;
  }
  return q[m] >= 2;
}

ContinuedFraction ContinuedFraction::from_quotients(std::vector<BigInt> quotients) {
  if (!quotients_are_valid(quotients)) {
    throw ValidationError(
        "continued fraction needs q0 >= 0, inner quotients >= 1, a final quotient >= 2 "
        "(or a single quotient >= 1)");
  }
  return ContinuedFraction(std::move(quotients));
}

Fraction vertex_value(const CfVertex& v) {
  if (const auto* b = std::get_if<Boundary>(&v)) {
    return *b == Boundary::Zero ? Fraction::zero() : Fraction::infinity();
  }
  return eval_cf(std::get<ContinuedFraction>(v));
}

std::string format_cf(const ContinuedFraction& c, bool compact) {
  std::string out = "[";
  const auto q = c.quotients();
  for (std::size_t i = 0; i < q.size(); ++i) {
    if (i && !compact) out.push_back(',');
    out += q[i].str();
  }
  out.push_back(']');
  return out;
}

std::string format_vertex(const CfVertex& v, bool compact) {
  if (const auto* b = std::get_if<Boundary>(&v)) return *b == Boundary::Zero ? "[0]" : "[ ]";
  return format_cf(std::get<ContinuedFraction>(v), compact);
}

ContinuedFraction parse_cf(std::string_view text) {
  if (text.empty() || text[0] != '[') throw ParseError("expected '['", 0);
  std::vector<BigInt> q;
  std::size_t pos = 1;
  while (true) {
    q.push_back(parse_natural(text, pos));
    if (pos >= text.size()) throw ParseError("unterminated continued fraction, expected ']'", pos);
    if (text[pos] == ']') break;
    if (text[pos] != ',') throw ParseError("expected ',' or ']'", pos);
    ++pos;
  }
  if (pos + 1 != text.size()) throw ParseError("trailing characters after ']'", pos + 1);
  return ContinuedFraction::from_quotients(std::move(q));
}

CfVertex parse_cf_vertex(std::string_view text) {
  if (text == "[0]") return Boundary::Zero;
  if (text == "[]" || text == "[ ]") return Boundary::Infinity;
  return parse_cf(text);
}

Fraction eval_cf(const ContinuedFraction& c) {
  BigInt p_prev = 1, p_prev2 = 0;
  BigInt q_prev = 0, q_prev2 = 1;
  for (const auto& a : c.quotients()) {
    BigInt p = a * p_prev + p_prev2;
    BigInt q = a * q_prev + q_prev2;
    p_prev2 = std::move(p_prev);
    p_prev = std::move(p);
    q_prev2 = std::move(q_prev);
    q_prev = std::move(q);
  }
  return Fraction(std::move(p_prev), std::move(q_prev));
}

Fraction eval_cf_fold(const ContinuedFraction& c) {
  const auto q = c.quotients();
  Fraction value(q.back(), BigInt(1));
  for (std::size_t i = q.size() - 1; i-- > 0;) {
    value = Fraction(q[i], BigInt(1)) + value.reciprocal();
  }
  return value;
}

ContinuedFraction cf_of_rational(const Fraction& x) {
  if (!x.is_positive_finite()) throw DomainError("only positive finite rationals are tree vertices");
  std::vector<BigInt> q;
  BigInt a = x.num();
  BigInt b = x.den();
  while (true) {
    BigInt quotient;
    BigInt remainder;
    divide_qr(a, b, quotient, remainder);
    q.push_back(std::move(quotient));
    if (remainder == 0) break;
    a = std::move(b);
    b = std::move(remainder);
  }
  if (q.size() > 1 && q.back() == 1) {
    q.pop_back();
    ++q.back();
  }
  return ContinuedFraction::from_quotients(std::move(q));
}

std::pair<ContinuedFraction, ContinuedFraction> cf_children(const ContinuedFraction& c) {
  auto split = copy_quotients(c);  // [.., q_m - 1, 2]
  --split.back();
  split.emplace_back(2);
  auto bump = copy_quotients(c);  // [.., q_m + 1]
  ++bump.back();
  auto a = ContinuedFraction::from_quotients(std::move(split));
  auto b = ContinuedFraction::from_quotients(std::move(bump));
  if (c.last_index() % 2 == 0) return {std::move(a), std::move(b)};
  return {std::move(b), std::move(a)};
}

GenString cf_to_string(const ContinuedFraction& c) {
  auto runs = copy_quotients(c);
  --runs.back();
  return GenString::from_runs(std::move(runs));
}

ContinuedFraction string_to_cf(const GenString& s) {
  if (s.is_sentinel()) throw DomainError("generalized strings correspond to boundary vertices, not continued fractions");
  const auto runs = s.runs();
  std::vector<BigInt> q(runs.begin(), runs.end());
  ++q.back();
  return ContinuedFraction::from_quotients(std::move(q));
}

CfVertex string_to_vertex(const GenString& s) {
  switch (s.kind()) {
    case GenString::Kind::RInverse: return Boundary::Zero;
    case GenString::Kind::LInverse: return Boundary::Infinity;
    case GenString::Kind::Word: break;
  }
  return string_to_cf(s);
}

CfParents cf_parents(const ContinuedFraction& c) {
  if (c.is_root()) return {Boundary::Zero, Boundary::Infinity};
  const GenString s = cf_to_string(c);
  return {string_to_vertex(parent_close(s)), string_to_vertex(parent_distant(s))};
}

BigInt cf_level(const ContinuedFraction& c) {
  BigInt total = -1;
  for (const auto& q : c.quotients()) total += q;
  return total;
}

std::vector<ContinuedFraction> level_cfs(unsigned m) {
  std::vector<ContinuedFraction> row{ContinuedFraction()};
  for (unsigned level = 0; level < m; ++level) {
    std::vector<ContinuedFraction> next;
    next.reserve(row.size() * 2);
    for (const auto& c : row) {
      auto [left, right] = cf_children(c);
      next.push_back(std::move(left));
      next.push_back(std::move(right));
    }
    row = std::move(next);
  }
  return row;
}

std::pair<Fraction, Fraction> best_lower_level(const ContinuedFraction& c) {
  if (c.is_root()) throw DomainError("the root's parents are boundary vertices");
  const auto parents = cf_parents(c);
  return {vertex_value(parents.close), vertex_value(parents.distant)};
}

Fraction simplest_between(const Fraction& x, const Fraction& y) {
  require_interval(x, y);
  const BigInt& xn = x.num();
  const BigInt& xd = x.den();
  const BigInt& yn = y.num();
  const BigInt& yd = y.den();
  // Bounds a/b < current < c/d, starting from 0/1 and 1/0; current is their mediant.
  BigInt a = 0, b = 1, c = 1, d = 0;
  while (true) {
    const BigInt mn = a + c;
    const BigInt md = b + d;
    if (mn * xd <= xn * md) {
      // Mediant at or left of x: step right while (a + t c)/(b + t d) <= x.
      const BigInt t = (xn * b - a * xd) / (c * xd - d * xn);
      a += t * c;
      b += t * d;
    } else if (mn * yd >= yn * md) {
      // Mediant at or right of y: step left while (t a + c)/(t b + d) >= y.
      const BigInt t = (c * yd - d * yn) / (b * yn - a * yd);
      c += t * a;
      d += t * b;
    } else {
      return Fraction(mn, md);
    }
  }
}

Fraction simplest_between_cf_formula(const Fraction& x, const Fraction& y) {
  require_interval(x, y);
  const auto a = one_sided_expansion(x, true);
  const auto b = one_sided_expansion(y, false);
  std::vector<BigInt> c;
  for (std::size_t k = 0;; ++k) {
    // Both sequences end in an infinite quotient and differ before it, since x != y.
    if (a[k] == b[k]) {
      c.push_back(*a[k]);
      continue;
    }
    const BigInt& smaller = !a[k] ? *b[k] : !b[k] ? *a[k] : std::min(*a[k], *b[k]);
    c.push_back(smaller + 1);
    break;
  }
  return eval_cf(ContinuedFraction::from_quotients(std::move(c)));
}

}  // namespace kintree
