#include "kintree/formats.hpp"

#include "kintree/continued_fraction.hpp"
#include "kintree/error.hpp"
#include "kintree/metrics.hpp"
#include "kintree/rational_trees.hpp"

#include <array>
#include <utility>

namespace kintree {
namespace {

constexpr std::array<std::pair<std::string_view, ValueFormat>, 6> kNames = {{
    {"string", ValueFormat::String},
    {"runs", ValueFormat::Runs},
    {"position", ValueFormat::Position},
    {"r", ValueFormat::R},
    {"cf", ValueFormat::Cf},
    {"fraction", ValueFormat::Fraction},
}};

std::string with_decimal(std::string text, const Fraction& x, const ValueStyle& style) {
  if (style.decimal && x.is_finite()) text += " " + format_decimal(x, *style.decimal);
  return text;
}

}  // namespace

ValueFormat parse_value_format(std::string_view name) {
  for (const auto& [n, f] : kNames) {
    if (n == name) return f;
  }
  throw ParseError("unknown format '" + std::string(name) + "'", 0);
}

std::string value_format_name(ValueFormat format) {
  for (const auto& [n, f] : kNames) {
    if (f == format) return std::string(n);
  }
  return "?";
}

const std::vector<std::string>& value_format_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> out;
    for (const auto& [n, f] : kNames) out.emplace_back(n);
    return out;
  }();
  return names;
}

GenString parse_value(std::string_view text, ValueFormat from) {
  switch (from) {
    case ValueFormat::String:
      return parse_string(text);
    case ValueFormat::Runs:
      if (!text.starts_with("S(") && text != "L^-1" && text != "R^-1") throw ParseError("expected S(k0,...)", 0);
      return parse_string(text);
    case ValueFormat::Position: {
      const ExtPosition n = parse_position(text);
      if (n.kind() == ExtPosition::Kind::NegOne) return GenString::r_inverse();
      if (n.kind() == ExtPosition::Kind::NegHalf) return GenString::l_inverse();
      return string_at_position(n.natural());
    }
    case ValueFormat::R:
      return string_with_r(parse_dyadic(text));
    case ValueFormat::Cf: {
      const CfVertex v = parse_cf_vertex(text);
      if (const auto* b = std::get_if<Boundary>(&v)) {
        return *b == Boundary::Zero ? GenString::r_inverse() : GenString::l_inverse();
      }
      return cf_to_string(std::get<ContinuedFraction>(v));
    }
    case ValueFormat::Fraction: {
      const Fraction x = parse_fraction(text);
      if (x == Fraction::zero()) return GenString::r_inverse();
      if (x == Fraction::infinity()) return GenString::l_inverse();
      return stern_brocot_locate(x);
    }
  }
  throw ParseError("unknown format", 0);
}

std::string format_value(const GenString& s, ValueFormat to, const ValueStyle& style) {
  switch (to) {
    case ValueFormat::String: return format_string(s);
    case ValueFormat::Runs: return format_runs(s);
    case ValueFormat::Position: return format_position(position(s));
    case ValueFormat::R: {
      const Dyadic r = r_value(s);
      return with_decimal(style.binary ? format_binary_point(r) : format_dyadic(r),
                          Fraction(r.numerator(), pow2(r.exponent())), style);
    }
    case ValueFormat::Cf: return format_vertex(string_to_vertex(s), style.compact);
    case ValueFormat::Fraction: {
      const Fraction x = stern_brocot_value(s);
      return with_decimal(format_fraction(x), x, style);
    }
  }
  throw ParseError("unknown format", 0);
}

}  // namespace kintree
