#include "kintree/error.hpp"
#include "kintree/metrics.hpp"

#include <gtest/gtest.h>

using namespace kintree;

namespace {

GenString S(const char* text) { return parse_string(text); }
Dyadic D(const char* text) { return parse_dyadic(text); }
ExtPosition N(long long n) { return ExtPosition(BigInt(n)); }

// Plain 64-bit reference: numerator of r(s) over 2^|s|, and N(s), letter by letter.
std::pair<std::int64_t, std::int64_t> reference(const std::string& letters) {
  std::int64_t num = 1;  // r(e) = 1/2^0
  std::int64_t pos = 0;
  for (char c : letters) {
    num = 2 * num + (c == 'R' ? 1 : -1);
    pos = 2 * pos + (c == 'R' ? 2 : 1);
  }
  return {num, pos};
}

}  // namespace

TEST(Dyadic, CanonicalAndArithmetic) {
  EXPECT_EQ(Dyadic(BigInt(4), 3), Dyadic(BigInt(1), 1));
  EXPECT_EQ(Dyadic(BigInt(0), 5), Dyadic(0));
  EXPECT_EQ(D("1/2^1") + D("1/2^2"), D("3/2^2"));
  EXPECT_EQ(D("5/2^2") - D("1/2^3"), D("9/2^3"));
  EXPECT_EQ(D("3/2^1") * D("3/2^1"), D("9/2^2"));
  EXPECT_LT(D("9/2^3"), D("5/2^2"));
  EXPECT_EQ(format_dyadic(D("10/2^2")), "5/2^1");
}

TEST(Dyadic, TextForms) {
  EXPECT_EQ(D("1.011"), D("11/2^3"));
  EXPECT_EQ(D("2"), Dyadic(2));
  EXPECT_EQ(format_binary_point(D("5/2^2")), "1.01");
  EXPECT_EQ(format_binary_point(Dyadic(1)), "1.0");
  EXPECT_EQ(format_binary_point(Dyadic(2)), "10.0");
  EXPECT_EQ(format_binary_point(D("1/2^3")), "0.001");
  EXPECT_THROW(D("1/3"), ParseError);
  EXPECT_THROW(D("1.012"), ParseError);
}

TEST(RMetric, Examples) {
  EXPECT_EQ(r_recursive(GenString::epsilon()), Dyadic(1));
  EXPECT_EQ(r_recursive(S("LLL")), D("1/2^3"));
  EXPECT_EQ(r_recursive(S("RL")), D("5/2^2"));
  EXPECT_EQ(r_recursive(GenString::l_inverse()), Dyadic(2));
  EXPECT_EQ(r_recursive(GenString::r_inverse()), Dyadic(0));
  EXPECT_EQ(r_recursive(S("RLL")), D("9/2^3"));
}

TEST(RMetric, ClosedForms) {
  EXPECT_EQ(r_closed(GenString::epsilon()), Dyadic(1));
  EXPECT_EQ(r_closed(S("RL")), D("5/2^2"));
  EXPECT_EQ(r_closed(S("RRR")), D("15/2^3"));
  EXPECT_EQ(r_closed_alternating(S("RRR")), D("15/2^3"));
  EXPECT_EQ(r_value(GenString::l_inverse()), Dyadic(2));
}

TEST(RMetric, AgreesWithIntegerReference) {
  for (unsigned m = 0; m <= 12; ++m) {
    for (const auto& s : level_strings(m)) {
      const std::string letters = m == 0 ? "" : format_string(s);
      const auto [num, pos] = reference(letters);
      EXPECT_EQ(r_recursive(s), Dyadic(BigInt(num), m)) << letters;
      EXPECT_EQ(r_closed(s), Dyadic(BigInt(num), m)) << letters;
      EXPECT_EQ(r_closed_alternating(s), Dyadic(BigInt(num), m)) << letters;
      EXPECT_EQ(position_closed(s), N(pos)) << letters;
    }
  }
}

TEST(RMetric, LongRuns) {
  // R^(2^20): r = 2 - 2^-(2^20), far too long to spell out letter by letter
  const std::uint64_t k = std::uint64_t{1} << 20;
  const Dyadic r = r_closed(GenString::from_runs({BigInt(k)}));
  EXPECT_EQ(r.exponent(), k);
  EXPECT_EQ(Dyadic(2) - r, Dyadic::inverse_pow2(k));
  EXPECT_THROW(r_closed(GenString::from_runs({BigInt(1) << 40})), ResourceError);
}

TEST(Position, Examples) {
  EXPECT_EQ(position_recursive(GenString::epsilon()), N(0));
  EXPECT_EQ(position_recursive(S("RRR")), N(14));
  EXPECT_EQ(position_recursive(GenString::l_inverse()), ExtPosition::neg_half());
  EXPECT_EQ(position_recursive(GenString::r_inverse()), ExtPosition::neg_one());
  EXPECT_EQ(position_closed(GenString::epsilon()), N(0));
  EXPECT_EQ(position_closed(S("RR")), N(6));
  EXPECT_EQ(position_closed(S("RL")), N(5));
  EXPECT_EQ(position_closed(S("LLL")), N(7));
}

TEST(Position, TextForms) {
  EXPECT_EQ(format_position(ExtPosition::neg_half()), "-1/2");
  EXPECT_EQ(format_position(ExtPosition::neg_one()), "-1");
  EXPECT_EQ(parse_position("-1/2"), ExtPosition::neg_half());
  EXPECT_EQ(parse_position("17"), N(17));
  EXPECT_THROW(parse_position("-2"), ParseError);
  EXPECT_EQ(ExtPosition::neg_half().twice_plus_one(), 0);
  EXPECT_EQ(ExtPosition::neg_one().twice_plus_one(), -1);
  EXPECT_THROW((void)ExtPosition::neg_one().natural(), DomainError);
}

TEST(Position, Inverse) {
  EXPECT_EQ(string_at_position(BigInt(0)), GenString::epsilon());
  EXPECT_EQ(string_at_position(BigInt(5)), S("RL"));
  EXPECT_EQ(string_at_position(BigInt(14)), S("RRR"));
  for (int n = 0; n < 4096; ++n) EXPECT_EQ(position_recursive(string_at_position(BigInt(n))), N(n));
}

TEST(RMetric, Inverse) {
  EXPECT_EQ(string_with_r(D("9/2^3")), S("RLL"));
  EXPECT_EQ(string_with_r(Dyadic(1)), GenString::epsilon());
  EXPECT_EQ(string_with_r(Dyadic(0)), GenString::r_inverse());
  EXPECT_EQ(string_with_r(Dyadic(2)), GenString::l_inverse());
  EXPECT_THROW(string_with_r(Dyadic(3)), DomainError);
  for (unsigned m = 0; m <= 8; ++m) {
    for (const auto& s : level_strings(m)) EXPECT_EQ(string_with_r(r_recursive(s)), s);
  }
}

TEST(Compare, Examples) {
  EXPECT_EQ(compare_strings(S("L"), S("R")), std::strong_ordering::less);
  EXPECT_EQ(compare_strings(S("RL"), S("RLR")), std::strong_ordering::less);
  EXPECT_EQ(compare_strings(S("RLL"), S("RL")), std::strong_ordering::less);
  EXPECT_EQ(compare_strings(S("RL"), S("RL")), std::strong_ordering::equal);
  EXPECT_EQ(compare_strings(GenString::r_inverse(), S("LLLL")), std::strong_ordering::less);
  EXPECT_EQ(compare_strings(GenString::l_inverse(), S("RRRR")), std::strong_ordering::greater);
}

TEST(LevelSets, Examples) {
  EXPECT_EQ(level_r_values(0, false), std::vector<Dyadic>{Dyadic(1)});
  EXPECT_EQ(level_r_values(1, false), (std::vector<Dyadic>{D("1/2^1"), D("3/2^1")}));
  std::vector<Dyadic> quarters;
  for (int l = 1; l <= 7; ++l) quarters.push_back(Dyadic(BigInt(l), 2));
  EXPECT_EQ(level_r_values(2, true), quarters);
  EXPECT_EQ(level_r_formula(2, true), quarters);
  EXPECT_THROW(level_r_values(30, false), ResourceError);
}

TEST(DistantParentSequence, FirstTerms) {
  const std::vector<int> expected = {-1, 0, -1, 1, 1, 0, -1, 3, 3, 1, 1, 5, 5, 0, -1, 7, 7, 3, 3, 9, 9, 1};
  const auto a = distant_parent_sequence(22);
  ASSERT_EQ(a.size(), expected.size());
  for (std::size_t i = 0; i < a.size(); ++i) EXPECT_EQ(a[i], expected[i]) << "n=" << i + 1;
}
