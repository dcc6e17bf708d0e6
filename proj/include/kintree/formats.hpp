#pragma once

// Text representations of tree vertices, all converted through the generalized string.
// Sentinels stand for the boundary vertices in every format (R^-1 = [0] = 0/1 = position -1,
// L^-1 = [ ] = 1/0 = position -1/2).

#include "kintree/gen_string.hpp"

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace kintree {

enum class ValueFormat { String, Runs, Position, R, Cf, Fraction };

/// "string", "runs", "position", "r", "cf", "fraction". Throws ParseError otherwise.
ValueFormat parse_value_format(std::string_view name);
std::string value_format_name(ValueFormat format);
const std::vector<std::string>& value_format_names();

struct ValueStyle {
  bool binary = false;              ///< r as "1.011" instead of "11/2^3"
  bool compact = false;             ///< cf as "[13]"
  std::optional<unsigned> decimal;  ///< append this many decimal digits to r and fraction values
};

GenString parse_value(std::string_view text, ValueFormat from);
std::string format_value(const GenString& s, ValueFormat to, const ValueStyle& style = {});

}  // namespace kintree
