#include "kintree/rational_trees.hpp"

#include "kintree/continued_fraction.hpp"
#include "kintree/error.hpp"

namespace kintree {
namespace {

void check_bound(unsigned m, unsigned bound) {
  if (m > bound) {
    throw ResourceError("level " + std::to_string(m) + " exceeds the enumeration bound " +
                        std::to_string(bound));
  }
}

}  // namespace

Fraction stern_brocot_value(const GenString& s) {
  switch (s.kind()) {
    case GenString::Kind::RInverse: return Fraction::zero();
    case GenString::Kind::LInverse: return Fraction::infinity();
    case GenString::Kind::Word: break;
  }
  BigInt a = 0, b = 1, c = 1, d = 0;
  const auto runs = s.runs();
  for (std::size_t i = 0; i < runs.size(); ++i) {
    const BigInt& k = runs[i];
    if (run_letter(i) == Letter::R) {
      // k right steps: the left bound becomes (a + k c)/(b + k d).
      a += k * c;
      b += k * d;
    } else {
      c += k * a;
      d += k * b;
    }
  }
  return Fraction(a + c, b + d);
}

Fraction calkin_wilf_value(const GenString& s) {
  if (s.is_sentinel()) throw DomainError("the Calkin-Wilf map is defined on words only");
  BigInt p = 1, q = 1;
  const auto runs = s.runs();
  for (std::size_t i = 0; i < runs.size(); ++i) {
    if (run_letter(i) == Letter::R) {
      p += runs[i] * q;
    } else {
      q += runs[i] * p;
    }
  }
  return Fraction(std::move(p), std::move(q));
}

GenString stern_brocot_locate(const Fraction& x) { return cf_to_string(cf_of_rational(x)); }

TreeKind parse_tree_kind(std::string_view name) {
  if (name == "stern_brocot") return TreeKind::SternBrocot;
  if (name == "calkin_wilf") return TreeKind::CalkinWilf;
  if (name == "cf") return TreeKind::ContinuedFractions;
  if (name == "r_metric") return TreeKind::RMetric;
  if (name == "position") return TreeKind::Position;
  if (name == "string") return TreeKind::String;
  if (name == "m") return TreeKind::RunCount;
  throw ParseError("unknown tree '" + std::string(name) + "'", 0);
}

std::string tree_kind_name(TreeKind kind) {
  switch (kind) {
    case TreeKind::SternBrocot: return "stern_brocot";
    case TreeKind::CalkinWilf: return "calkin_wilf";
    case TreeKind::ContinuedFractions: return "cf";
    case TreeKind::RMetric: return "r_metric";
    case TreeKind::Position: return "position";
    case TreeKind::String: return "string";
    case TreeKind::RunCount: return "m";
  }
  return "?";
}

std::vector<Fraction> stern_brocot_row(unsigned m, unsigned bound) {
  check_bound(m, bound);
  std::vector<Fraction> row;
  for (const auto& s : level_strings(m)) row.push_back(stern_brocot_value(s));
  return row;
}

std::vector<Fraction> calkin_wilf_row(unsigned m, unsigned bound) {
  check_bound(m, bound);
  std::vector<Fraction> row;
  for (const auto& s : level_strings(m)) row.push_back(calkin_wilf_value(s));
  return row;
}

std::vector<std::string> enumerate_level_values(TreeKind tree, unsigned m, RowFormat format, unsigned bound) {
  check_bound(m, bound);
  std::vector<std::string> out;
  if (tree == TreeKind::ContinuedFractions) {
    for (const auto& c : level_cfs(m)) out.push_back(format_cf(c, format.compact_cf));
    return out;
  }
  for (const auto& s : level_strings(m)) {
    switch (tree) {
      case TreeKind::SternBrocot: out.push_back(format_fraction(stern_brocot_value(s))); break;
      case TreeKind::CalkinWilf: out.push_back(format_fraction(calkin_wilf_value(s))); break;
      case TreeKind::RMetric: {
        const Dyadic r = r_value(s);
        out.push_back(format.binary_point ? format_binary_point(r) : format_dyadic(r));
        break;
      }
      case TreeKind::Position: out.push_back(format_position(position(s))); break;
      case TreeKind::String: out.push_back(format_string(s)); break;
      case TreeKind::RunCount: out.push_back(std::to_string(run_count(s))); break;
      case TreeKind::ContinuedFractions: break;
    }
  }
  return out;
}

}  // namespace kintree
