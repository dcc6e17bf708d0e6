#pragma once

// Stern-Brocot and Calkin-Wilf value maps on LR-strings, and whole-level rows of every
// labelled tree.

#include "kintree/fraction.hpp"
#include "kintree/gen_string.hpp"
#include "kintree/metrics.hpp"

#include <string>
#include <string_view>
#include <vector>

namespace kintree {

/// Fraction at position s of the Stern-Brocot tree, found by narrowing the bounds
/// 0/1 .. 1/0 run by run and taking the final mediant. R^-1 -> 0/1, L^-1 -> 1/0.
Fraction stern_brocot_value(const GenString& s);

/// Fraction at position s of the Calkin-Wilf tree: from 1/1, a left step maps
/// a/b -> a/(a+b) and a right step a/b -> (a+b)/b. Words only.
Fraction calkin_wilf_value(const GenString& s);

/// The word at which x sits in the Stern-Brocot tree.
GenString stern_brocot_locate(const Fraction& x);

enum class TreeKind { SternBrocot, CalkinWilf, ContinuedFractions, RMetric, Position, String, RunCount };

/// "stern_brocot", "calkin_wilf", "cf", "r_metric", "position", "string", "m".
TreeKind parse_tree_kind(std::string_view name);
std::string tree_kind_name(TreeKind kind);

std::vector<Fraction> stern_brocot_row(unsigned m, unsigned bound = kDefaultLevelBound);
std::vector<Fraction> calkin_wilf_row(unsigned m, unsigned bound = kDefaultLevelBound);

struct RowFormat {
  bool compact_cf = false;    ///< "[13]" rather than "[1,3]"
  bool binary_point = false;  ///< r-values as "1.011" rather than "11/2^3"
};

/// The 2^m values at level m, left to right, rendered as text.
std::vector<std::string> enumerate_level_values(TreeKind tree, unsigned m, RowFormat format = {},
                                                unsigned bound = kDefaultLevelBound);

}  // namespace kintree
