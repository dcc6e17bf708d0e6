#pragma once

// The tree of continued fractions rooted at [1], its bijection f with LR-strings, and
// rational approximation queries.

#include "kintree/bigint.hpp"
#include "kintree/fraction.hpp"
#include "kintree/gen_string.hpp"

#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

namespace kintree {

/// [q_0, ..., q_m] with q_0 >= 0, q_i >= 1 for 0 < i < m, q_m >= 2 when m > 0 and
/// q_0 >= 1 when m = 0.
class ContinuedFraction {
public:
  /// The root [1].
  ContinuedFraction() : quotients_{BigInt(1)} {}

  /// Throws ValidationError unless the quotients satisfy the vertex constraints.
  static ContinuedFraction from_quotients(std::vector<BigInt> quotients);

  std::span<const BigInt> quotients() const noexcept { return quotients_; }
  std::size_t last_index() const noexcept { return quotients_.size() - 1; }
  bool is_root() const noexcept { return quotients_.size() == 1 && quotients_[0] == 1; }

  friend bool operator==(const ContinuedFraction&, const ContinuedFraction&) = default;
  friend bool operator<(const ContinuedFraction& a, const ContinuedFraction& b) {
    return a.quotients_ < b.quotients_;
  }

private:
  explicit ContinuedFraction(std::vector<BigInt> quotients) : quotients_(std::move(quotients)) {}

  std::vector<BigInt> quotients_;
};

bool quotients_are_valid(std::span<const BigInt> quotients);

/// The two boundary vertices above the root: [0] (value 0/1) and [ ] (value 1/0).
enum class Boundary : unsigned char { Zero, Infinity };

/// A continued fraction or a boundary vertex; boundaries only appear as parents.
using CfVertex = std::variant<ContinuedFraction, Boundary>;

Fraction vertex_value(const CfVertex& v);

/// "[1,3]", or "[13]" when compact; boundaries as "[0]" and "[ ]".
std::string format_cf(const ContinuedFraction& c, bool compact = false);
std::string format_vertex(const CfVertex& v, bool compact = false);

/// "[q0,q1,...]" with comma-separated decimal quotients.
ContinuedFraction parse_cf(std::string_view text);

/// parse_cf, plus "[0]" and "[]" / "[ ]" for the boundary vertices.
CfVertex parse_cf_vertex(std::string_view text);

/// Value by the convergent recurrence p_k = q_k p_{k-1} + p_{k-2}.
Fraction eval_cf(const ContinuedFraction& c);

/// Value by folding [.., q_{m-1}, q_m] = [.., q_{m-1} + 1/q_m] in Fraction arithmetic.
Fraction eval_cf_fold(const ContinuedFraction& c);

/// The vertex whose value is x (Euclid's algorithm, a final quotient 1 merged into its
/// predecessor). Throws DomainError unless x is positive and finite.
ContinuedFraction cf_of_rational(const Fraction& x);

/// (left, right): for m even ([.., q_m - 1, 2], [.., q_m + 1]); for m odd the reverse.
std::pair<ContinuedFraction, ContinuedFraction> cf_children(const ContinuedFraction& c);

struct CfParents {
  CfVertex close;
  CfVertex distant;
};

/// Parents conjugated through f. The root has the boundary vertices as parents and
/// reports [0] (its left parent) as close and [ ] as distant.
CfParents cf_parents(const ContinuedFraction& c);

/// f([q_0, ..., q_m]) = S(q_0, ..., q_{m-1}, q_m - 1).
GenString cf_to_string(const ContinuedFraction& c);

/// f^-1(S(k_0, ..., k_m)) = [k_0, ..., k_{m-1}, k_m + 1]. Throws DomainError for sentinels.
ContinuedFraction string_to_cf(const GenString& s);

/// string_to_cf extended to sentinels: R^-1 -> [0], L^-1 -> [ ].
CfVertex string_to_vertex(const GenString& s);

/// q_0 + ... + q_m - 1.
BigInt cf_level(const ContinuedFraction& c);

/// All 2^m vertices of level m, left to right, generated through cf_children().
std::vector<ContinuedFraction> level_cfs(unsigned m);

/// (value of close parent, value of distant parent). Throws DomainError for the root.
std::pair<Fraction, Fraction> best_lower_level(const ContinuedFraction& c);

/// The rational of least denominator (then least numerator) strictly inside (x, y),
/// found by walking the Stern-Brocot tree from 1/1, one run of equal steps at a time.
/// Throws DomainError unless 0 < x < y with both finite.
Fraction simplest_between(const Fraction& x, const Fraction& y);

/// The same query by the continued-fraction rule c = [a_0, ..., a_{k-1}, min(a_k, b_k) + 1],
/// where a and b are the expansions of x + 0 and y - 0 (each rational is given the
/// expansion that approaches it from inside the interval, closed by an infinite quotient).
Fraction simplest_between_cf_formula(const Fraction& x, const Fraction& y);

}  // namespace kintree
