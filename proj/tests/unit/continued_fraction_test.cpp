#include "kintree/continued_fraction.hpp"
#include "kintree/error.hpp"

#include <gtest/gtest.h>

#include <numeric>
#include <set>

using namespace kintree;

namespace {

ContinuedFraction C(const char* text) { return parse_cf(text); }
Fraction F(const char* text) { return parse_fraction(text); }
GenString S(const char* text) { return parse_string(text); }

std::vector<std::string> texts(const std::vector<ContinuedFraction>& row) {
  std::vector<std::string> out;
  for (const auto& c : row) out.push_back(format_cf(c));
  return out;
}

// Least denominator, then least numerator, in (x, y); small inputs only.
Fraction brute_simplest(const Fraction& x, const Fraction& y) {
  for (BigInt q = 1;; ++q) {
    for (BigInt p = 1; p <= 64 * q; ++p) {
      const Fraction c(p, q);
      if (x < c && c < y) return c;
    }
  }
}

}  // namespace

TEST(ContinuedFraction, Validation) {
  EXPECT_NO_THROW(C("[1]"));
  EXPECT_NO_THROW(C("[0,1,1,2]"));
  EXPECT_THROW(C("[1,1]"), ValidationError);  // final quotient 1
  EXPECT_THROW(C("[0]"), ValidationError);     // boundary, not a vertex
  EXPECT_THROW(C("[1,0,2]"), ValidationError);
  EXPECT_THROW(C("[1,2"), ParseError);
  EXPECT_THROW(C("1,2]"), ParseError);
  EXPECT_THROW(C("[1,2]x"), ParseError);
}

TEST(ContinuedFraction, Boundaries) {
  EXPECT_EQ(std::get<Boundary>(parse_cf_vertex("[0]")), Boundary::Zero);
  EXPECT_EQ(std::get<Boundary>(parse_cf_vertex("[ ]")), Boundary::Infinity);
  EXPECT_EQ(std::get<Boundary>(parse_cf_vertex("[]")), Boundary::Infinity);
  EXPECT_EQ(format_vertex(Boundary::Infinity), "[ ]");
  EXPECT_EQ(vertex_value(Boundary::Zero), Fraction::zero());
}

TEST(Eval, Examples) {
  EXPECT_EQ(eval_cf(C("[1]")), F("1/1"));
  EXPECT_EQ(eval_cf(C("[1,3]")), F("4/3"));
  EXPECT_EQ(eval_cf(C("[2,2]")), F("5/2"));
  EXPECT_EQ(eval_cf(C("[1,2,3]")), F("10/7"));
  EXPECT_EQ(eval_cf_fold(C("[1,2,3]")), F("10/7"));
}

TEST(OfRational, Examples) {
  EXPECT_EQ(cf_of_rational(F("4/3")), C("[1,3]"));
  EXPECT_EQ(cf_of_rational(F("2/3")), C("[0,1,2]"));
  EXPECT_EQ(cf_of_rational(F("1/1")), C("[1]"));
  EXPECT_EQ(cf_of_rational(F("3/1")), C("[3]"));
  EXPECT_THROW(cf_of_rational(Fraction::zero()), DomainError);
  EXPECT_THROW(cf_of_rational(Fraction::infinity()), DomainError);
}

TEST(OfRational, RoundTrip) {
  for (int q = 1; q <= 60; ++q) {
    for (int p = 1; p <= 3 * q; ++p) {
      const Fraction x{BigInt(p), BigInt(q)};
      EXPECT_EQ(eval_cf(cf_of_rational(x)), x);
    }
  }
}

TEST(Children, Examples) {
  EXPECT_EQ(cf_children(C("[1]")), std::make_pair(C("[0,2]"), C("[2]")));
  EXPECT_EQ(cf_children(C("[0,2]")), std::make_pair(C("[0,3]"), C("[0,1,2]")));
  EXPECT_EQ(cf_children(C("[2]")), std::make_pair(C("[1,2]"), C("[3]")));
}

TEST(Parents, Examples) {
  const auto a = cf_parents(C("[1,3]"));
  EXPECT_EQ(format_vertex(a.close), "[1,2]");
  EXPECT_EQ(format_vertex(a.distant), "[1]");
  const auto b = cf_parents(C("[0,1,2]"));
  EXPECT_EQ(format_vertex(b.close), "[0,2]");
  EXPECT_EQ(format_vertex(b.distant), "[1]");
  const auto c = cf_parents(C("[2]"));
  EXPECT_EQ(format_vertex(c.close), "[1]");
  EXPECT_EQ(format_vertex(c.distant), "[ ]");
  const auto root = cf_parents(C("[1]"));
  EXPECT_EQ(format_vertex(root.close), "[0]");
  EXPECT_EQ(format_vertex(root.distant), "[ ]");
}

TEST(Bijection, Examples) {
  EXPECT_EQ(cf_to_string(C("[1]")), GenString::epsilon());
  EXPECT_EQ(cf_to_string(C("[1,3]")), S("RLL"));
  EXPECT_EQ(cf_to_string(C("[0,1,1,2]")), S("LRL"));
  EXPECT_EQ(string_to_cf(S("RLLRR")), C("[1,2,3]"));
  EXPECT_THROW(string_to_cf(GenString::r_inverse()), DomainError);
  EXPECT_EQ(std::get<Boundary>(string_to_vertex(GenString::r_inverse())), Boundary::Zero);
}

TEST(Level, Examples) {
  EXPECT_EQ(cf_level(C("[1]")), 0);
  EXPECT_EQ(cf_level(C("[1,3]")), 3);
  EXPECT_EQ(cf_level(C("[0,2]")), 1);
}

TEST(LevelCfs, FigureRow) {
  EXPECT_EQ(texts(level_cfs(3)), (std::vector<std::string>{"[0,4]", "[0,2,2]", "[0,1,1,2]", "[0,1,3]", "[1,3]",
                                                            "[1,1,2]", "[2,2]", "[4]"}));
  EXPECT_EQ(format_cf(C("[1,3]"), true), "[13]");
}

TEST(BestLowerLevel, Examples) {
  EXPECT_EQ(best_lower_level(C("[1,3]")), std::make_pair(F("3/2"), F("1/1")));
  EXPECT_EQ(best_lower_level(C("[0,1,2]")), std::make_pair(F("1/2"), F("1/1")));
  const auto p = cf_parents(C("[2,2]"));
  EXPECT_EQ(best_lower_level(C("[2,2]")), std::make_pair(vertex_value(p.close), vertex_value(p.distant)));
  EXPECT_THROW(best_lower_level(C("[1]")), DomainError);
}

TEST(SimplestBetween, Examples) {
  EXPECT_EQ(simplest_between(F("7/5"), F("3/2")), F("10/7"));
  EXPECT_EQ(simplest_between(F("1/3"), F("2/3")), F("1/2"));
  EXPECT_EQ(simplest_between(F("1/1"), F("2/1")), F("3/2"));
  EXPECT_EQ(simplest_between_cf_formula(F("7/5"), F("3/2")), F("10/7"));
  EXPECT_EQ(simplest_between_cf_formula(F("1/3"), F("2/3")), F("1/2"));
  EXPECT_EQ(simplest_between_cf_formula(F("1/1"), F("2/1")), F("3/2"));
  EXPECT_THROW(simplest_between(F("3/2"), F("7/5")), DomainError);
  EXPECT_THROW(simplest_between(F("1/2"), F("1/2")), DomainError);
  EXPECT_THROW(simplest_between(Fraction::zero(), F("1/2")), DomainError);
}

TEST(SimplestBetween, WideAndNarrowIntervals) {
  EXPECT_EQ(simplest_between(F("1/1000"), F("1000/1")), F("1/1"));
  EXPECT_EQ(simplest_between(F("5/1"), F("1000/1")), F("6/1"));
  EXPECT_EQ(simplest_between(F("1/1000"), F("1/999")), F("2/1999"));
  const Fraction a{BigInt("314159265358979"), BigInt("100000000000000")};
  const Fraction b{BigInt("314159265358980"), BigInt("100000000000000")};
  EXPECT_EQ(simplest_between(a, b), simplest_between_cf_formula(a, b));
}

TEST(SimplestBetween, AgreesWithBruteForceOnSmallGrid) {
  std::vector<Fraction> grid;
  for (int q = 1; q <= 12; ++q) {
    for (int p = 1; p <= 3 * q; ++p) {
      if (std::gcd(p, q) == 1) grid.emplace_back(BigInt(p), BigInt(q));
    }
  }
  for (const auto& x : grid) {
    for (const auto& y : grid) {
      if (!(x < y)) continue;
      const Fraction want = brute_simplest(x, y);
      EXPECT_EQ(simplest_between(x, y), want) << format_fraction(x) << " " << format_fraction(y);
      EXPECT_EQ(simplest_between_cf_formula(x, y), want) << format_fraction(x) << " " << format_fraction(y);
    }
  }
}
