#include "kintree/oracle.hpp"

#include "kintree/continued_fraction.hpp"
#include "kintree/error.hpp"
#include "kintree/metrics.hpp"
#include "kintree/rational_trees.hpp"

#include "json.hpp"

#include <algorithm>
#include <future>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <sstream>

namespace kintree::oracle {
namespace {

using Clock = std::chrono::steady_clock;

// Table 1: close and distant parent positions for n = N(S) = 1..22.
constexpr int kTableRows = 22;
constexpr int kTableClose[kTableRows] = {0, 0, 1, 1, 2, 2, 3, 3, 4, 4, 5, 5, 6, 6, 7, 7, 8, 8, 9, 9, 10, 10};
const char* const kTableDistant[kTableRows] = {"-1", "-1/2", "-1", "0", "0", "-1/2", "-1", "1",
                                               "1",  "0",    "0",  "2", "2", "-1/2", "-1", "3",
                                               "3",  "1",    "1",  "4", "4", "0"};

constexpr unsigned kTableCountBound = 1u << 20;

class Recorder {
public:
  explicit Recorder(CheckReport& report) : report_(report) {}

  void fail(std::string input, std::string expected, std::string actual) {
    report_.failures.push_back({std::move(input), std::move(expected), std::move(actual)});
  }

  template <class T, class Fmt>
  void expect_eq(const std::string& input, const T& expected, const T& actual, Fmt&& fmt) {
    if (!(expected == actual)) fail(input, fmt(expected), fmt(actual));
  }

  void expect(bool ok, const std::string& input, const std::string& expected, const std::string& actual) {
    if (!ok) fail(input, expected, actual);
  }

  void note(std::string finding) { report_.findings.push_back(std::move(finding)); }
  void summary(std::string finding) { report_.findings.insert(report_.findings.begin(), std::move(finding)); }
  void count(std::uint64_t n = 1) { report_.cases_checked += n; }

private:
  CheckReport& report_;
};

std::string str(const GenString& s) { return format_string(s); }
std::string str(const Dyadic& x) { return format_dyadic(x); }
std::string str(const ExtPosition& n) { return format_position(n); }
std::string str(const Fraction& x) { return format_fraction(x); }
std::string str(const ContinuedFraction& c) { return format_cf(c); }
std::string str(const BigInt& n) { return n.str(); }

const auto fmt = [](const auto& v) { return str(v); };

std::string ordering_name(std::strong_ordering o) {
  if (o == std::strong_ordering::less) return "less";
  if (o == std::strong_ordering::greater) return "greater";
  return "equal";
}

std::vector<ContinuedFraction> enumerate_cfs(unsigned max_level) {
  std::vector<ContinuedFraction> out;
  for (unsigned m = 0; m <= max_level; ++m) {
    auto row = level_cfs(m);
    out.insert(out.end(), std::make_move_iterator(row.begin()), std::make_move_iterator(row.end()));
  }
  return out;
}

// --- thm21 -------------------------------------------------------------------------

void suite_thm21(Recorder& rec, unsigned depth) {
  // (a), (b): level sets of r against their closed descriptions.
  for (unsigned m = 0; m <= depth; ++m) {
    for (const bool cumulative : {false, true}) {
      const auto got = level_r_values(m, cumulative, depth);
      const auto want = level_r_formula(m, cumulative, depth);
      if (got != want) {
        rec.fail("level " + std::to_string(m) + (cumulative ? " cumulative" : ""),
                 std::to_string(want.size()) + " values", std::to_string(got.size()) + " values (sets differ)");
      }
    }
  }
  rec.expect(parent_left(GenString::epsilon()) == GenString::r_inverse(), "P_L(e)", "R^-1",
             str(parent_left(GenString::epsilon())));
  rec.expect(parent_right(GenString::epsilon()) == GenString::l_inverse(), "P_R(e)", "L^-1",
             str(parent_right(GenString::epsilon())));

  for (const auto& s : enumerate_strings(depth)) {
    rec.count();
    const std::string in = str(s);
    const GenString pl = parent_left(s);
    const GenString pr = parent_right(s);
    const GenString sl = child(s, Letter::L);
    const GenString sr = child(s, Letter::R);

    rec.expect(runs_are_canonical(sl.runs()) && runs_are_canonical(sr.runs()), in, "canonical children",
               "non-canonical");
    for (const auto* p : {&pl, &pr}) {
      if (p->is_word()) rec.expect(runs_are_canonical(p->runs()), in, "canonical parent", "non-canonical");
    }

    // (c) recurrences
    rec.expect_eq(in + " P_L(SL)", pl, parent_left(sl), fmt);
    rec.expect_eq(in + " P_L(SR)", s, parent_left(sr), fmt);
    rec.expect_eq(in + " P_R(SL)", s, parent_right(sl), fmt);
    rec.expect_eq(in + " P_R(SR)", pr, parent_right(sr), fmt);

    // (e) r(P_L) = r(S) - 2^-|S|, r(P_R) = r(S) + 2^-|S|
    const Dyadic r = r_recursive(s);
    const Dyadic step = Dyadic::inverse_pow2(to_u64(length(s)));
    rec.expect_eq(in + " r(P_L)", r - step, r_recursive(pl), fmt);
    rec.expect_eq(in + " r(P_R)", r + step, r_recursive(pr), fmt);

    // (f) run arithmetic against cancellation
    const auto [fl, fr] = run_formula_parents(s);
    rec.expect_eq(in + " formula P_L", pl, fl, fmt);
    rec.expect_eq(in + " formula P_R", pr, fr, fmt);

    if (s.is_epsilon()) continue;

    // (d) levels of the two parents
    const BigInt n = length(s);
    const BigInt nl = length(pl);
    const BigInt nr = length(pr);
    rec.expect(std::max(nl, nr) < n, in, "max(|P_L|,|P_R|) < " + str(n), str(std::max(nl, nr)));
    rec.expect(nl != nr, in, "|P_L| != |P_R|", "both " + str(nl));

    // close/distant are the two parents, close one level up, chosen by the parity of N
    const GenString pc = parent_close(s);
    const GenString pd = parent_distant(s);
    rec.expect((pc == pl && pd == pr) || (pc == pr && pd == pl), in, "{P_C,P_D} = {P_L,P_R}",
               str(pc) + "," + str(pd));
    rec.expect(length(pc) == n - 1, in, "|P_C| = " + str(n - 1), str(length(pc)));
    const bool n_even = position_recursive(s).natural() % 2 == 0;
    rec.expect((pc == pl) == n_even, in, n_even ? "P_C = P_L" : "P_C = P_R", str(pc));
  }
}

// --- thm22 -------------------------------------------------------------------------

void suite_thm22(Recorder& rec, unsigned depth) {
  BigInt expected_position = 0;
  for (const auto& s : enumerate_strings(depth)) {
    rec.count();
    const std::string in = str(s);
    const ExtPosition n = position_recursive(s);
    const Dyadic r = r_recursive(s);

    rec.expect_eq(in + " N closed", n, position_closed(s), fmt);
    rec.expect_eq(in + " r closed", r, r_closed(s), fmt);
    const Dyadic alternating = r_closed_alternating(s);
    rec.expect_eq(in + " r closed (alternating)", r, alternating, fmt);
    rec.expect_eq(in + " single numerator vs term sum", r_closed(s), alternating, fmt);

    // Bijectivity: enumeration order is position order, and the inverse round-trips.
    rec.expect_eq(in + " N", ExtPosition(expected_position), n, fmt);
    rec.expect_eq(in + " N^-1(N)", s, string_at_position(n.natural()), fmt);
    ++expected_position;

    if (s.is_epsilon()) continue;
    // Close/distant parent formulas against the cancellation parents selected by parity.
    const bool n_even = n.natural() % 2 == 0;
    const GenString pc = n_even ? parent_left(s) : parent_right(s);
    const GenString pd = n_even ? parent_right(s) : parent_left(s);
    rec.expect_eq(in + " P_C formula", pc, parent_close(s), fmt);
    rec.expect_eq(in + " P_D formula", pd, parent_distant(s), fmt);
    rec.expect_eq(in + " N(P_C)", ExtPosition((n.natural() - 1) / 2), position_recursive(pc), fmt);
  }
}

// --- cor23 -------------------------------------------------------------------------

void suite_cor23(Recorder& rec, unsigned depth, const Config& config) {
  for (const auto& s : enumerate_strings(depth)) {
    rec.count();
    const BigInt n = position_recursive(s).natural();
    rec.expect(BigInt(run_count(s)) % 2 == n % 2, str(s), "M = N mod 2",
               "M=" + std::to_string(run_count(s)) + " N=" + str(n));
  }

  const unsigned pair_level = std::min(depth, config.pair_bound);
  const auto strings = enumerate_strings(pair_level);
  std::vector<Dyadic> r;
  r.reserve(strings.size());
  for (const auto& s : strings) r.push_back(r_recursive(s));
  for (std::size_t i = 0; i < strings.size(); ++i) {
    for (std::size_t j = 0; j < strings.size(); ++j) {
      rec.count();
      const auto want = r[i] <=> r[j];
      const auto got = compare_strings(strings[i], strings[j]);
      if (want != got) rec.fail(str(strings[i]) + " vs " + str(strings[j]), ordering_name(want), ordering_name(got));
    }
  }

  // r is injective on generalized strings; sentinels sit at 0 and 2.
  std::set<Dyadic> seen{Dyadic(0), Dyadic(2)};
  const unsigned inj_level = std::min(depth, 10u);
  for (const auto& s : enumerate_strings(inj_level)) {
    if (!seen.insert(r_recursive(s)).second) rec.fail(str(s), "distinct r-value", "duplicate " + str(r_recursive(s)));
  }

  // r(SL) < r(SLR) < r(SLR^2) < ... < r(S) < ... < r(SRL^2) < r(SRL) < r(SR)
  for (const auto& s : strings) {
    std::vector<GenString> chain;
    GenString left = child(s, Letter::L);
    for (int j = 0; j < 4; ++j, left = child(left, Letter::R)) chain.push_back(left);
    chain.push_back(s);
    std::vector<GenString> right_side;
    GenString right = child(s, Letter::R);
    for (int j = 0; j < 4; ++j, right = child(right, Letter::L)) right_side.push_back(right);
    chain.insert(chain.end(), right_side.rbegin(), right_side.rend());
    for (std::size_t k = 0; k + 1 < chain.size(); ++k) {
      if (!(r_recursive(chain[k]) < r_recursive(chain[k + 1]))) {
        rec.fail(str(s) + " chain", "r(" + str(chain[k]) + ") < r(" + str(chain[k + 1]) + ")", "not increasing");
      }
    }
  }
}

// --- table1 ------------------------------------------------------------------------

void suite_table1(Recorder& rec, unsigned depth) {
  const auto sequence = distant_parent_sequence(depth);
  for (unsigned n = 1; n <= depth; ++n) {
    rec.count();
    const std::string in = "n=" + std::to_string(n);
    const GenString s = string_at_position(BigInt(n));
    rec.expect_eq(in + " N(N^-1(n))", ExtPosition(BigInt(n)), position_recursive(s), fmt);
    const ExtPosition close = position_recursive(parent_close(s));
    const ExtPosition distant = position_recursive(parent_distant(s));
    rec.expect_eq(in + " N(P_C) floor rule", ExtPosition(BigInt((n - 1) / 2)), close, fmt);
    if (n <= static_cast<unsigned>(kTableRows)) {
      rec.expect_eq(in + " N(P_C)", ExtPosition(BigInt(kTableClose[n - 1])), close, fmt);
      rec.expect_eq(in + " N(P_D)", parse_position(kTableDistant[n - 1]), distant, fmt);
    }
    rec.expect_eq(in + " a(n)", distant.twice_plus_one(), sequence[n - 1], fmt);
  }
}

// --- thm31 -------------------------------------------------------------------------

void suite_thm31(Recorder& rec, unsigned depth, const Config& config) {
  for (unsigned m = 0; m <= depth; ++m) {
    const auto cfs = level_cfs(m);
    const auto strings = level_strings(m);
    for (std::size_t i = 0; i < cfs.size(); ++i) {
      rec.count();
      const ContinuedFraction& c = cfs[i];
      const std::string in = str(c);
      const GenString f = cf_to_string(c);

      rec.expect(quotients_are_valid(c.quotients()), in, "valid quotients", "invalid");
      rec.expect_eq(in + " location", strings[i], f, fmt);
      rec.expect_eq(in + " f^-1(f(c))", c, string_to_cf(f), fmt);
      rec.expect_eq(in + " level", BigInt(m), cf_level(c), fmt);
      rec.expect_eq(in + " |f(c)|", BigInt(m), length(f), fmt);

      const auto [left, right] = cf_children(c);
      rec.expect(quotients_are_valid(left.quotients()) && quotients_are_valid(right.quotients()), in,
                 "valid children", str(left) + "," + str(right));
      rec.expect_eq(in + " f(left child)", child(f, Letter::L), cf_to_string(left), fmt);
      rec.expect_eq(in + " f(right child)", child(f, Letter::R), cf_to_string(right), fmt);

      const Fraction v = eval_cf(c);
      rec.expect_eq(in + " fold", v, eval_cf_fold(c), fmt);
      rec.expect_eq(in + " cf_of_rational", c, cf_of_rational(v), fmt);

      // q_0 <= value < q_0 + 1, strict on the left once m >= 1.
      const Fraction q0(c.quotients()[0], BigInt(1));
      const Fraction q0_next(c.quotients()[0] + 1, BigInt(1));
      const bool lower_ok = c.last_index() == 0 ? q0 <= v : q0 < v;
      rec.expect(lower_ok && v < q0_next, in, "q0 <= value < q0+1", str(v));
    }
  }

  // Order: value order equals string order on all pairs.
  const unsigned pair_level = std::min(depth, config.pair_bound);
  const auto cfs = enumerate_cfs(pair_level);
  std::vector<Fraction> values;
  std::vector<GenString> strings;
  for (const auto& c : cfs) {
    values.push_back(eval_cf(c));
    strings.push_back(cf_to_string(c));
  }
  for (std::size_t i = 0; i < cfs.size(); ++i) {
    for (std::size_t j = 0; j < cfs.size(); ++j) {
      rec.count();
      const auto want = values[i] <=> values[j];
      const auto got = compare_strings(strings[i], strings[j]);
      if (want != got) rec.fail(str(cfs[i]) + " vs " + str(cfs[j]), ordering_name(want), ordering_name(got));
    }
  }

  // Monotonicity in the last quotient: increasing for m even, decreasing for m odd.
  std::set<std::vector<BigInt>> prefixes;
  for (const auto& c : cfs) {
    const auto q = c.quotients();
    prefixes.emplace(q.begin(), q.end() - 1);
  }
  for (const auto& prefix : prefixes) {
    const std::size_t m = prefix.size();
    std::optional<Fraction> previous;
    for (int t = (m == 0 ? 1 : 2); t <= 10; ++t) {
      auto q = prefix;
      q.emplace_back(t);
      const Fraction v = eval_cf(ContinuedFraction::from_quotients(q));
      if (previous) {
        const bool ok = (m % 2 == 0) ? *previous < v : v < *previous;
        rec.expect(ok, format_cf(ContinuedFraction::from_quotients(q)), m % 2 == 0 ? "increasing" : "decreasing",
                   str(*previous) + " then " + str(v));
      }
      previous = v;
    }
  }
}

// --- best_approx -------------------------------------------------------------------

void suite_best_approx(Recorder& rec, unsigned depth, bool one_sided) {
  // Values of every vertex of strictly lower level, the boundaries counting as level -1.
  std::vector<Fraction> lower = {Fraction::zero(), Fraction::infinity()};
  std::size_t interior_failures = 0;
  for (unsigned level = 0; level <= depth; ++level) {
    const auto row = level_cfs(level);
    if (level >= 1) {
      for (const auto& c : row) {
        rec.count();
        const std::string in = str(c);
        const Fraction v = eval_cf(c);
        const auto parents = cf_parents(c);
        const Fraction pc = vertex_value(parents.close);
        const Fraction pd = vertex_value(parents.distant);
        const auto [bc, bd] = best_lower_level(c);
        rec.expect(bc == pc && bd == pd, in, "best_lower_level = parent values", str(bc) + "," + str(bd));

        if (one_sided) {
          // Nearest lower-level value on each side.
          Fraction below = Fraction::zero();
          Fraction above = Fraction::infinity();
          for (const auto& w : lower) {
            if (w < v && below < w) below = w;
            if (v < w && w < above) above = w;
          }
          const bool ok = (below == pc && above == pd) || (below == pd && above == pc);
          rec.expect(ok, in, "{" + str(pc) + "," + str(pd) + "}", "{" + str(below) + "," + str(above) + "}");
          continue;
        }

        // Literal reading: the parents are the two nearest CFs of strictly lower level.
        // Boundaries are not CFs, so a boundary parent can never be matched. On a tie the
        // parents need only realize the two smallest distances; the tie is reported.
        std::vector<Fraction> dist;
        dist.reserve(lower.size());
        for (std::size_t k = 2; k < lower.size(); ++k) dist.push_back(distance(lower[k], v));
        std::vector<Fraction> sorted = dist;
        const std::size_t top = std::min<std::size_t>(3, sorted.size());
        std::partial_sort(sorted.begin(), sorted.begin() + top, sorted.end());
        if (sorted.size() >= 3 && sorted[1] == sorted[2]) {
          std::string tied;
          for (std::size_t k = 0; k < dist.size(); ++k) {
            if (dist[k] == sorted[1]) tied += (tied.empty() ? "" : ", ") + str(lower[k + 2]);
          }
          rec.note(in + ": tie at distance " + str(sorted[1]) + " between " + tied);
        }
        // everything at or inside the second-smallest distance
        std::string actual;
        const Fraction& cutoff = sorted[std::min<std::size_t>(1, sorted.size() - 1)];
        for (std::size_t k = 0; k < dist.size(); ++k) {
          if (dist[k] <= cutoff) actual += (actual.empty() ? "" : ",") + str(lower[k + 2]);
        }
        bool ok = sorted.size() >= 2 && pc.is_positive_finite() && pd.is_positive_finite();
        if (ok) {
          Fraction near = distance(pc, v);
          Fraction far = distance(pd, v);
          if (far < near) std::swap(near, far);
          ok = near == sorted[0] && far == sorted[1];
        }
        rec.expect(ok, in, "{" + str(pc) + "," + str(pd) + "}", "{" + actual + "}");
        if (!ok && pc.is_positive_finite() && pd.is_positive_finite()) ++interior_failures;
      }
    }
    for (const auto& c : row) lower.push_back(eval_cf(c));
  }
  if (!one_sided) {
    rec.summary(std::to_string(interior_failures) + " failures have two interior (non-boundary) parents");
  }
}

// --- stern_brocot ------------------------------------------------------------------

void suite_stern_brocot(Recorder& rec, unsigned depth) {
  std::set<std::pair<BigInt, BigInt>> seen;
  for (unsigned m = 0; m <= depth; ++m) {
    const auto strings = level_strings(m);
    std::set<std::pair<BigInt, BigInt>> sb_row;
    std::set<std::pair<BigInt, BigInt>> cw_row;
    std::optional<Fraction> previous;
    for (const auto& s : strings) {
      rec.count();
      const std::string in = str(s);
      const Fraction sb = stern_brocot_value(s);
      const Fraction cw = calkin_wilf_value(s);

      rec.expect(gcd(sb.num(), sb.den()) == 1, in, "reduced", str(sb));
      rec.expect(seen.emplace(sb.num(), sb.den()).second, in, "first occurrence", str(sb) + " repeated");
      if (previous) rec.expect(*previous < sb, in, "row increasing", str(*previous) + " then " + str(sb));
      previous = sb;

      rec.expect_eq(in + " eval(f^-1)", eval_cf(string_to_cf(s)), sb, fmt);
      rec.expect_eq(in + " mediant of parents",
                    mediant(stern_brocot_value(parent_left(s)), stern_brocot_value(parent_right(s))), sb, fmt);
      rec.expect_eq(in + " locate", s, stern_brocot_locate(sb), fmt);

      const GenString rev = reverse(s);
      rec.expect_eq(in + " reverse twice", s, reverse(rev), fmt);
      rec.expect(length(rev) == length(s), in, "|reverse| = |s|", str(length(rev)));
      rec.expect_eq(in + " CW = SB(reverse)", stern_brocot_value(rev), cw, fmt);

      sb_row.emplace(sb.num(), sb.den());
      cw_row.emplace(cw.num(), cw.den());
    }
    rec.expect(sb_row == cw_row, "level " + std::to_string(m), "CW row = SB row as sets", "differ");
  }
}

// --- simplest ----------------------------------------------------------------------

// Least denominator, then least numerator, strictly inside (a/b, c/d); 64-bit arithmetic.
std::pair<std::uint64_t, std::uint64_t> brute_simplest(std::uint64_t a, std::uint64_t b, std::uint64_t c,
                                                       std::uint64_t d) {
  for (std::uint64_t q = 1;; ++q) {
    const std::uint64_t p = a * q / b + 1;  // least p with p/q > a/b
    if (p * d < c * q) return {p, q};
  }
}

std::vector<ContinuedFraction> random_cfs(std::mt19937_64& rng, std::size_t count) {
  std::uniform_int_distribution<int> len(0, 6);
  std::uniform_int_distribution<int> lead(0, 5);
  std::uniform_int_distribution<int> inner(1, 12);
  std::uniform_int_distribution<int> last(2, 12);
  std::vector<ContinuedFraction> out;
  while (out.size() < count) {
    const int m = len(rng);
    std::vector<BigInt> q;
    q.emplace_back(m == 0 ? std::max(1, lead(rng)) : lead(rng));
    for (int i = 1; i < m; ++i) q.emplace_back(inner(rng));
    if (m > 0) q.emplace_back(last(rng));
    out.push_back(ContinuedFraction::from_quotients(std::move(q)));
  }
  return out;
}

// All pairs x < y of reduced fractions in (0, top] with denominator <= max_den.
void sweep_simplest(Recorder& rec, std::uint64_t top, unsigned max_den) {
  std::vector<std::pair<std::uint64_t, std::uint64_t>> grid;
  for (std::uint64_t q = 1; q <= max_den; ++q) {
    for (std::uint64_t p = 1; p <= top * q; ++p) {
      if (std::gcd(p, q) == 1) grid.emplace_back(p, q);
    }
  }
  std::sort(grid.begin(), grid.end(), [](const auto& x, const auto& y) { return x.first * y.second < y.first * x.second; });
  std::vector<Fraction> as_fraction;
  as_fraction.reserve(grid.size());
  for (const auto& [p, q] : grid) as_fraction.emplace_back(BigInt(p), BigInt(q));

  for (std::size_t i = 0; i < grid.size(); ++i) {
    for (std::size_t j = i + 1; j < grid.size(); ++j) {
      rec.count();
      const auto [p, q] = brute_simplest(grid[i].first, grid[i].second, grid[j].first, grid[j].second);
      const Fraction got = simplest_between(as_fraction[i], as_fraction[j]);
      if (got.num() != p || got.den() != q) {
        rec.fail("(" + str(as_fraction[i]) + ", " + str(as_fraction[j]) + ")",
                 std::to_string(p) + "/" + std::to_string(q), str(got));
      }
    }
  }
}

void suite_simplest(Recorder& rec, unsigned max_den, const Config& config) {
  sweep_simplest(rec, 1, max_den);
  // integer parts
  sweep_simplest(rec, 4, std::min(max_den, 25u));

  std::mt19937_64 rng(config.seed);
  for (unsigned done = 0; done < config.random_pairs;) {
    const auto pair = random_cfs(rng, 2);
    Fraction x = eval_cf(pair[0]);
    Fraction y = eval_cf(pair[1]);
    if (x == y) continue;  // redraw
    ++done;
    if (y < x) std::swap(x, y);
    rec.count();
    const Fraction descent = simplest_between(x, y);
    const Fraction formula = simplest_between_cf_formula(x, y);
    rec.expect(descent == formula && x < descent && descent < y,
               "(" + str(x) + ", " + str(y) + ")", "formula " + str(formula), "descent " + str(descent));
  }
}

void check_depth(std::string_view suite, unsigned depth, const Config& config) {
  unsigned bound = config.max_depth;
  if (suite == "table1") bound = kTableCountBound;
  if (suite == "simplest") bound = config.max_denominator;
  if (depth > bound) {
    throw ResourceError("depth " + std::to_string(depth) + " exceeds the bound " + std::to_string(bound) +
                        " for suite " + std::string(suite));
  }
}

}  // namespace

std::vector<GenString> enumerate_strings(unsigned max_level, unsigned bound) {
  if (max_level > bound) {
    throw ResourceError("level " + std::to_string(max_level) + " exceeds the enumeration bound " +
                        std::to_string(bound));
  }
  std::vector<GenString> out;
  for (unsigned m = 0; m <= max_level; ++m) {
    auto row = level_strings(m);
    out.insert(out.end(), std::make_move_iterator(row.begin()), std::make_move_iterator(row.end()));
  }
  return out;
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = {"thm21", "thm22",      "cor23",             "table1", "thm31",
                                                 "best_approx", "best_approx_sided", "stern_brocot", "simplest"};
  return names;
}

unsigned default_depth(std::string_view suite) {
  static const std::map<std::string, unsigned, std::less<>> depths = {
      {"thm21", 12}, {"thm22", 14},        {"cor23", 12},        {"table1", 22},  {"thm31", 12},
      {"best_approx", 10}, {"best_approx_sided", 10}, {"stern_brocot", 12}, {"simplest", 200}};
  const auto it = depths.find(suite);
  if (it == depths.end()) throw ParseError("unknown suite '" + std::string(suite) + "'", 0);
  return it->second;
}

CheckReport run_suite(std::string_view suite, std::optional<unsigned> depth, const Config& config) {
  const unsigned fallback = default_depth(suite);  // also rejects unknown names
  const unsigned d = depth.value_or(fallback);
  check_depth(suite, d, config);
  CheckReport report;
  report.suite = std::string(suite);
  report.depth = d;
  Recorder rec(report);
  const auto start = Clock::now();
  if (suite == "thm21") {
    suite_thm21(rec, d);
  } else if (suite == "thm22") {
    suite_thm22(rec, d);
  } else if (suite == "cor23") {
    suite_cor23(rec, d, config);
  } else if (suite == "table1") {
    suite_table1(rec, d);
  } else if (suite == "thm31") {
    suite_thm31(rec, d, config);
  } else if (suite == "best_approx") {
    suite_best_approx(rec, d, false);
  } else if (suite == "best_approx_sided") {
    suite_best_approx(rec, d, true);
  } else if (suite == "stern_brocot") {
    suite_stern_brocot(rec, d);
  } else if (suite == "simplest") {
    suite_simplest(rec, d, config);
  }
  report.elapsed = Clock::now() - start;
  return report;
}

std::vector<CheckReport> run_all(const Config& config, unsigned jobs) {
  const auto& names = suite_names();
  std::vector<CheckReport> reports(names.size());
  const auto run = [&](std::size_t i) {
    const auto it = config.depths.find(names[i]);
    reports[i] = run_suite(names[i], it == config.depths.end() ? std::nullopt : std::optional(it->second), config);
  };
  if (jobs <= 1) {
    for (std::size_t i = 0; i < names.size(); ++i) run(i);
    return reports;
  }
  // Fixed pool: worker w takes suites w, w + jobs, ...; each writes only its own slots.
  std::vector<std::future<void>> workers;
  for (unsigned w = 0; w < jobs && w < names.size(); ++w) {
    workers.push_back(std::async(std::launch::async, [&, w] {
      for (std::size_t i = w; i < names.size(); i += jobs) run(i);
    }));
  }
  for (auto& f : workers) f.get();
  return reports;
}

std::string to_text(const CheckReport& report, std::size_t max_failures) {
  std::ostringstream out;
  out << report.suite << " (depth " << report.depth << "): " << report.cases_checked << " cases, "
      << report.failures.size() << " failures, " << report.elapsed.count() << " s -> "
      << (report.passed() ? "PASS" : "FAIL") << '\n';
  for (std::size_t i = 0; i < report.failures.size() && i < max_failures; ++i) {
    const auto& f = report.failures[i];
    out << "  failure: " << f.input << ": expected " << f.expected << ", got " << f.actual << '\n';
  }
  if (report.failures.size() > max_failures) {
    out << "  ... " << report.failures.size() - max_failures << " more failures\n";
  }
  for (std::size_t i = 0; i < report.findings.size() && i < max_failures; ++i) {
    out << "  finding: " << report.findings[i] << '\n';
  }
  if (report.findings.size() > max_failures) out << "  ... " << report.findings.size() - max_failures << " more findings\n";
  return out.str();
}

namespace {

nlohmann::json as_json(const CheckReport& report) {
  nlohmann::json failures = nlohmann::json::array();
  for (const auto& f : report.failures) {
    failures.push_back({{"input", f.input}, {"expected", f.expected}, {"actual", f.actual}});
  }
  return {{"suite", report.suite},
          {"depth", report.depth},
          {"cases", report.cases_checked},
          {"passed", report.passed()},
          {"failures", std::move(failures)},
          {"findings", report.findings},
          {"elapsed_seconds", report.elapsed.count()}};
}

}  // namespace

std::string to_json(const CheckReport& report) { return as_json(report).dump(2); }

std::string to_json(const std::vector<CheckReport>& reports) {
  nlohmann::json all = nlohmann::json::array();
  for (const auto& r : reports) all.push_back(as_json(r));
  return all.dump(2);
}

}  // namespace kintree::oracle
