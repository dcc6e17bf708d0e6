#pragma once

// LR-strings in run-length form and the two generalized strings L^-1, R^-1.
//
// A word is stored as runs (k_0, k_1, ..., k_m) denoting R^k0 L^k1 R^k2 ...:
// even-indexed runs are R-runs, odd-indexed runs are L-runs. The canonical form
// has k_i >= 1 for i >= 1 and k_0 >= 0; the empty word is (0).

#include "kintree/bigint.hpp"

#include <compare>
#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace kintree {

enum class Letter : unsigned char { L, R };

constexpr Letter opposite(Letter d) noexcept { return d == Letter::L ? Letter::R : Letter::L; }
constexpr char to_char(Letter d) noexcept { return d == Letter::L ? 'L' : 'R'; }

/// Letter carried by run index i.
constexpr Letter run_letter(std::size_t i) noexcept { return i % 2 == 0 ? Letter::R : Letter::L; }

class GenString {
public:
  enum class Kind : unsigned char { Word, LInverse, RInverse };

  /// The empty word.
  GenString() : kind_(Kind::Word), runs_{BigInt(0)} {}

  static GenString epsilon() { return GenString(); }
  static GenString l_inverse() { return GenString(Kind::LInverse); }
  static GenString r_inverse() { return GenString(Kind::RInverse); }

  /// Builds a word from runs. Trailing zero runs are dropped; an empty vector is the
  /// empty word. Throws ValidationError on a negative run or a zero run at index >= 1
  /// that is not trailing.
  static GenString from_runs(std::vector<BigInt> runs);

  /// Builds a word from a letter sequence; every character must be 'L' or 'R'.
  static GenString from_letters(std::string_view letters);

  Kind kind() const noexcept { return kind_; }
  bool is_word() const noexcept { return kind_ == Kind::Word; }
  bool is_sentinel() const noexcept { return kind_ != Kind::Word; }
  bool is_epsilon() const noexcept { return is_word() && runs_.size() == 1 && runs_[0] == 0; }

  /// Runs of a word. Throws DomainError for sentinels.
  std::span<const BigInt> runs() const;

  /// Index m of the last run. Throws DomainError for sentinels.
  std::size_t last_index() const { return runs().size() - 1; }

  friend bool operator==(const GenString&, const GenString&) = default;

  /// Structural ordering (kind, then runs); for use as a container key only. The tree
  /// order is compare_strings() in metrics.hpp.
  friend bool operator<(const GenString& a, const GenString& b) {
    if (a.kind_ != b.kind_) return a.kind_ < b.kind_;
    return a.runs_ < b.runs_;
  }

private:
  explicit GenString(Kind kind) : kind_(kind) {}
  GenString(Kind kind, std::vector<BigInt> runs) : kind_(kind), runs_(std::move(runs)) {}

  Kind kind_;
  std::vector<BigInt> runs_;
};

/// True iff `runs` satisfies the canonical-form constraints (checked independently of
/// GenString's constructor; used by invariant tests).
bool runs_are_canonical(std::span<const BigInt> runs);

/// Text forms: "LLRR", "" or "e" (empty word), "L^-1", "R^-1", "S(k0,k1,...)".
GenString parse_string(std::string_view text);

/// Letter syntax; "e" for the empty word, "L^-1" / "R^-1" for sentinels. Words longer
/// than kMaxLetterText letters are written in run form instead.
std::string format_string(const GenString& s);

/// Run syntax "S(k0,...,km)"; sentinels as in format_string.
std::string format_runs(const GenString& s);

inline constexpr std::uint64_t kMaxLetterText = std::uint64_t{1} << 20;

/// Calls f(Letter) for every letter of a word, first to last, without materializing it.
template <class F>
void for_each_letter(const GenString& s, F&& f) {
  const auto runs = s.runs();
  for (std::size_t i = 0; i < runs.size(); ++i) {
    const std::uint64_t k = to_u64(runs[i]);
    for (std::uint64_t j = 0; j < k; ++j) f(run_letter(i));
  }
}

GenString child(const GenString& s, Letter d);

/// s * d^-1 under LL^-1 = e, RR^-1 = e, LR^-1 = R^-1, RL^-1 = L^-1.
GenString append_inverse(const GenString& s, Letter d);

inline GenString parent_left(const GenString& s) { return append_inverse(s, Letter::R); }
inline GenString parent_right(const GenString& s) { return append_inverse(s, Letter::L); }

/// S(k_0,...,k_m - 1). Throws DomainError for the empty word or a sentinel.
GenString parent_close(const GenString& s);

/// S(k_0,...,k_{m-2},k_{m-1} - 1); degenerates to R^-1 for L^k and L^-1 for R^k.
GenString parent_distant(const GenString& s);

/// (P_L, P_R) from run arithmetic on (k_0..k_m) alone, without cancellation. The empty
/// word gives (R^-1, L^-1).
std::pair<GenString, GenString> run_formula_parents(const GenString& s);

/// Number of letters; -1 for both sentinels.
BigInt length(const GenString& s);

/// M(S): index of the last run. Throws DomainError for sentinels.
std::size_t run_count(const GenString& s);

GenString reverse(const GenString& s);

/// All 2^m words of level m, left to right, generated breadth-first through child().
std::vector<GenString> level_strings(unsigned m);

}  // namespace kintree
