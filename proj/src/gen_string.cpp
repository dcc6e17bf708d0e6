#include "kintree/gen_string.hpp"

#include "kintree/error.hpp"

#include <algorithm>

namespace kintree {
namespace {

void require_word(const GenString& s, const char* op) {
  if (s.is_sentinel()) throw DomainError(std::string(op) + " is undefined for a generalized string");
}

void drop_trailing_zeros(std::vector<BigInt>& runs) {
  while (runs.size() > 1 && runs.back() == 0) runs.pop_back();
}

std::vector<BigInt> copy_runs(const GenString& s) {
  const auto runs = s.runs();
  return {runs.begin(), runs.end()};
}

}  // namespace

GenString GenString::from_runs(std::vector<BigInt> runs) {
  if (runs.empty()) return GenString();
  for (std::size_t i = 0; i < runs.size(); ++i) {
    if (runs[i] < 0) throw ValidationError("run " + std::to_string(i) + " is negative");
  }
  drop_trailing_zeros(runs);
  for (std::size_t i = 1; i < runs.size(); ++i) {
    if (runs[i] == 0) {
      throw ValidationError("run " + std::to_string(i) + " is zero; runs after the first must be >= 1");
    }
  }
  return GenString(Kind::Word, std::move(runs));
}

GenString GenString::from_letters(std::string_view letters) {
  std::vector<BigInt> runs{BigInt(0)};
  for (std::size_t i = 0; i < letters.size(); ++i) {
    Letter d;
    if (letters[i] == 'L') {
      d = Letter::L;
    } else if (letters[i] == 'R') {
      d = Letter::R;
    } else {
      throw ParseError(std::string("unexpected character '") + letters[i] + "'", i);
    }
    if (run_letter(runs.size() - 1) == d) {
      ++runs.back();
    } else {
      runs.emplace_back(1);
    }
  }
  return GenString(Kind::Word, std::move(runs));
}

std::span<const BigInt> GenString::runs() const {
  require_word(*this, "runs");
  return runs_;
}

bool runs_are_canonical(std::span<const BigInt> runs) {
  if (runs.empty() || runs[0] < 0) return false;
  return std::all_of(runs.begin() + 1, runs.end(), [](const BigInt& k) { return k >= 1; });
}

GenString parse_string(std::string_view text) {
  if (text == "e") return GenString::epsilon();
  if (text == "L^-1") return GenString::l_inverse();
  if (text == "R^-1") return GenString::r_inverse();
  if (text.size() >= 2 && text[0] == 'S' && text[1] == '(') {
    std::vector<BigInt> runs;
    std::size_t pos = 2;
    while (true) {
      runs.push_back(parse_natural(text, pos));
      if (pos >= text.size()) throw ParseError("unterminated run form, expected ')'", pos);
      if (text[pos] == ')') break;
      if (text[pos] != ',') throw ParseError("expected ',' or ')'", pos);
      ++pos;
    }
    if (pos + 1 != text.size()) throw ParseError("trailing characters after ')'", pos + 1);
    return GenString::from_runs(std::move(runs));
  }
  return GenString::from_letters(text);
}

std::string format_string(const GenString& s) {
  switch (s.kind()) {
    case GenString::Kind::LInverse: return "L^-1";
    case GenString::Kind::RInverse: return "R^-1";
    case GenString::Kind::Word: break;
  }
  if (s.is_epsilon()) return "e";
  const BigInt n = length(s);
  if (n > kMaxLetterText) return format_runs(s);
  std::string out;
  out.reserve(n.convert_to<std::size_t>());
  for_each_letter(s, [&](Letter d) { out.push_back(to_char(d)); });
  return out;
}

std::string format_runs(const GenString& s) {
  if (s.is_sentinel()) return format_string(s);
  std::string out = "S(";
  const auto runs = s.runs();
  for (std::size_t i = 0; i < runs.size(); ++i) {
    if (i) out.push_back(',');
    out += runs[i].str();
  }
  out.push_back(')');
  return out;
}

GenString child(const GenString& s, Letter d) {
  require_word(s, "child");
  auto runs = copy_runs(s);
  if (run_letter(runs.size() - 1) == d) {
    ++runs.back();
  } else {
    runs.emplace_back(1);
  }
  return GenString::from_runs(std::move(runs));
}

GenString append_inverse(const GenString& s, Letter d) {
  require_word(s, "append_inverse");
  auto runs = copy_runs(s);
  // Cancel letter by letter from the right: a matching letter cancels d^-1 and stops;
  // a non-matching letter x satisfies x d^-1 = d^-1 and is consumed. A whole run of
  // non-matching letters is consumed at once.
  while (true) {
    if (runs.size() == 1 && runs[0] == 0) {
      return d == Letter::R ? GenString::r_inverse() : GenString::l_inverse();
    }
    if (run_letter(runs.size() - 1) == d) {
      --runs.back();
      return GenString::from_runs(std::move(runs));
    }
    if (runs.size() == 1) {
      runs[0] = 0;
    } else {
      runs.pop_back();
    }
  }
}

namespace {

// (X, Y) of the parent formulas: X = S(k_0,...,k_m - 1), Y = S(k_0,...,k_{m-2},k_{m-1} - 1).
std::pair<GenString, GenString> close_and_distant(std::span<const BigInt> runs) {
  const std::size_t m = runs.size() - 1;
  std::vector<BigInt> x(runs.begin(), runs.end());
  --x.back();
  GenString close = GenString::from_runs(std::move(x));

  if (m == 0) return {std::move(close), GenString::l_inverse()};
  if (m == 1 && runs[0] == 0) return {std::move(close), GenString::r_inverse()};
  std::vector<BigInt> y(runs.begin(), runs.end() - 1);
  --y.back();
  return {std::move(close), GenString::from_runs(std::move(y))};
}

}  // namespace

std::pair<GenString, GenString> run_formula_parents(const GenString& s) {
  require_word(s, "run_formula_parents");
  if (s.is_epsilon()) return {GenString::r_inverse(), GenString::l_inverse()};
  auto [x, y] = close_and_distant(s.runs());
  if (s.last_index() % 2 == 0) return {std::move(x), std::move(y)};
  return {std::move(y), std::move(x)};
}

GenString parent_close(const GenString& s) {
  require_word(s, "parent_close");
  if (s.is_epsilon()) throw DomainError("the empty word has no close parent");
  return close_and_distant(s.runs()).first;
}

GenString parent_distant(const GenString& s) {
  require_word(s, "parent_distant");
  if (s.is_epsilon()) throw DomainError("the empty word has no distant parent");
  return close_and_distant(s.runs()).second;
}

BigInt length(const GenString& s) {
  if (s.is_sentinel()) return BigInt(-1);
  BigInt total = 0;
  for (const auto& k : s.runs()) total += k;
  return total;
}

std::size_t run_count(const GenString& s) {
  require_word(s, "run_count");
  return s.last_index();
}

GenString reverse(const GenString& s) {
  require_word(s, "reverse");
  const auto runs = s.runs();
  std::vector<BigInt> out;
  out.reserve(runs.size() + 1);
  // The reversed word starts with the last run; if that is an L-run the new word has
  // an empty leading R-run.
  if (run_letter(runs.size() - 1) == Letter::L) out.emplace_back(0);
  for (auto it = runs.rbegin(); it != runs.rend(); ++it) out.push_back(*it);
  return GenString::from_runs(std::move(out));
}

std::vector<GenString> level_strings(unsigned m) {
  std::vector<GenString> row{GenString::epsilon()};
  for (unsigned level = 0; level < m; ++level) {
    std::vector<GenString> next;
    next.reserve(row.size() * 2);
    for (const auto& s : row) {
      next.push_back(child(s, Letter::L));
      next.push_back(child(s, Letter::R));
    }
    row = std::move(next);
  }
  return row;
}

}  // namespace kintree
