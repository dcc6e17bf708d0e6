// Acceptance gate: one line per criterion, "criterion N: PASS|FAIL ...".
// Usage: acceptance [N ...]   (no arguments runs all eleven)

#include "kintree/continued_fraction.hpp"
#include "kintree/metrics.hpp"
#include "kintree/oracle.hpp"
#include "kintree/rational_trees.hpp"

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <set>
#include <string>
#include <vector>

using namespace kintree;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;
};

using Row = std::vector<std::string>;

std::string join(const Row& row) {
  std::string out;
  for (const auto& v : row) out += (out.empty() ? "" : " ") + v;
  return out;
}

void require(Outcome& o, bool ok, const std::string& what) {
  if (!ok) {
    o.pass = false;
    if (!o.detail.empty()) o.detail += "; ";
    o.detail += what;
  }
}

Outcome from_report(const oracle::CheckReport& r) {
  Outcome o;
  o.pass = r.passed();
  o.detail = std::to_string(r.cases_checked) + " cases, " + std::to_string(r.failures.size()) + " failures";
  for (std::size_t i = 0; i < r.failures.size() && i < 3; ++i) {
    o.detail += "; " + r.failures[i].input + ": expected " + r.failures[i].expected + ", got " + r.failures[i].actual;
  }
  return o;
}

// 1. Table 1
Outcome table1() { return from_report(oracle::run_suite("table1", 22)); }

// 2. Figure rows, levels 0..3
Outcome figure_rows() {
  Outcome o;
  const std::vector<Row> r_rows = {{"1"},
                                   {"0.1", "1.1"},
                                   {"0.01", "0.11", "1.01", "1.11"},
                                   {"0.001", "0.011", "0.101", "0.111", "1.001", "1.011", "1.101", "1.111"}};
  const std::vector<Row> m_rows = {{"0"}, {"1", "0"}, {"1", "2", "1", "0"}, {"1", "2", "3", "2", "1", "2", "1", "0"}};
  const std::vector<Row> cf_rows = {{"[1]"},
                                    {"[0,2]", "[2]"},
                                    {"[0,3]", "[0,1,2]", "[1,2]", "[3]"},
                                    {"[0,4]", "[0,2,2]", "[0,1,1,2]", "[0,1,3]", "[1,3]", "[1,1,2]", "[2,2]", "[4]"}};
  const std::vector<Row> sb_rows = {{"1/1"},
                                    {"1/2", "2/1"},
                                    {"1/3", "2/3", "3/2", "3/1"},
                                    {"1/4", "2/5", "3/5", "3/4", "4/3", "5/3", "5/2", "4/1"}};
  const std::vector<Row> cw_rows = {{"1/1"},
                                    {"1/2", "2/1"},
                                    {"1/3", "3/2", "2/3", "3/1"},
                                    {"1/4", "4/3", "3/5", "5/2", "2/5", "5/3", "3/4", "4/1"}};
  int next_position = 0;
  for (unsigned m = 0; m <= 3; ++m) {
    const auto strings = level_strings(m);
    for (std::size_t i = 0; i < strings.size(); ++i) {
      require(o, r_recursive(strings[i]) == parse_dyadic(r_rows[m][i]),
              "r at level " + std::to_string(m) + " index " + std::to_string(i));
      require(o, position(strings[i]) == ExtPosition(BigInt(next_position++)), "position of " + format_string(strings[i]));
    }
    const auto check = [&](TreeKind tree, const Row& want, const char* name) {
      const Row got = enumerate_level_values(tree, m);
      require(o, got == want, std::string(name) + " level " + std::to_string(m) + ": " + join(got));
    };
    check(TreeKind::RunCount, m_rows[m], "M");
    check(TreeKind::ContinuedFractions, cf_rows[m], "cf");
    check(TreeKind::SternBrocot, sb_rows[m], "stern_brocot");
    check(TreeKind::CalkinWilf, cw_rows[m], "calkin_wilf");
  }
  if (o.pass) o.detail = "r, position, M, cf, Stern-Brocot and Calkin-Wilf rows at levels 0..3 match";
  return o;
}

// 3. level sets of r, built here from their descriptions
Outcome r_level_sets() {
  Outcome o;
  for (unsigned m = 0; m <= 12; ++m) {
    std::vector<Dyadic> odd;
    std::vector<Dyadic> all;
    for (std::uint64_t k = 1; k <= (std::uint64_t{1} << m); ++k) odd.emplace_back(BigInt(2 * k - 1), m);
    for (std::uint64_t l = 1; l < (std::uint64_t{1} << (m + 1)); ++l) all.emplace_back(BigInt(l), m);
    require(o, level_r_values(m, false) == odd, "level " + std::to_string(m) + " != {(2k-1)/2^m}");
    require(o, level_r_values(m, true) == all, "levels 0.." + std::to_string(m) + " != {l/2^m}");
  }
  if (o.pass) o.detail = "m = 0..12, both sets exact";
  return o;
}

// 4. r of the two parents
Outcome parent_r_offsets() {
  Outcome o;
  std::uint64_t cases = 0;
  for (const auto& s : oracle::enumerate_strings(12)) {
    ++cases;
    const Dyadic r = r_recursive(s);
    const Dyadic step = Dyadic::inverse_pow2(to_u64(length(s)));
    require(o, r_recursive(parent_left(s)) == r - step, "r(P_L(" + format_string(s) + "))");
    require(o, r_recursive(parent_right(s)) == r + step, "r(P_R(" + format_string(s) + "))");
  }
  if (o.pass) o.detail = std::to_string(cases) + " strings, 0 failures";
  return o;
}

// 5. closed forms against the recurrences
Outcome closed_forms() { return from_report(oracle::run_suite("thm22", 14)); }

// 6. parity and comparator
Outcome parity_and_order() {
  oracle::Config config;
  config.pair_bound = 8;
  return from_report(oracle::run_suite("cor23", 12, config));
}

// 7. the bijection with continued fractions
Outcome cf_bijection() {
  oracle::Config config;
  config.pair_bound = 8;
  return from_report(oracle::run_suite("thm31", 8, config));
}

// 8. nearest lower-level CFs, read literally
Outcome best_approximation() {
  const auto r = oracle::run_suite("best_approx", 10);
  Outcome o = from_report(r);
  std::size_t ties = 0;
  for (const auto& f : r.findings) ties += f.find(": tie at distance") != std::string::npos ? 1 : 0;
  o.detail += "; " + std::to_string(ties) + " ties";
  if (!r.findings.empty()) o.detail += "; " + r.findings.front();
  for (const auto& f : r.failures) {
    if (f.expected.find("0/1") == std::string::npos && f.expected.find("1/0") == std::string::npos) {
      o.detail += "; first with interior parents: " + f.input + " expected " + f.expected + ", got " + f.actual;
      break;
    }
  }
  return o;
}

// 9. Stern-Brocot uniqueness
Outcome stern_brocot() {
  const auto r = oracle::run_suite("stern_brocot", 12);
  Outcome o = from_report(r);
  require(o, r.cases_checked == (1u << 13) - 1, "expected 8191 fractions, saw " + std::to_string(r.cases_checked));
  return o;
}

// 10. simplest rational between two others
Outcome simplest() {
  oracle::Config config;
  config.random_pairs = 1000;
  return from_report(oracle::run_suite("simplest", 200, config));
}

// 11. distant-parent sequence
Outcome distant_parent_sequence_terms() {
  Outcome o;
  const std::vector<int> expected = {-1, 0, -1, 1, 1, 0, -1, 3, 3, 1, 1, 5, 5, 0, -1, 7, 7, 3, 3, 9, 9, 1};
  const auto a = distant_parent_sequence(22);
  std::vector<int> got;
  for (const auto& v : a) got.push_back(static_cast<int>(v));
  require(o, got == expected, "first 22 terms differ");

  const std::uint64_t count = 1u << 16;
  const auto longer = distant_parent_sequence(count);
  for (std::uint64_t n = 1; n <= count; ++n) {
    const ExtPosition d = position(parent_distant(string_at_position(BigInt(n))));
    const BigInt& term = longer[n - 1];
    if (d.kind() == ExtPosition::Kind::NegHalf) {
      require(o, term == 0, "a(" + std::to_string(n) + ") for N(P_D) = -1/2");
    } else {
      require(o, abs(term) % 2 == 1, "a(" + std::to_string(n) + ") is not odd");
    }
  }
  if (o.pass) o.detail = "first 22 terms match; parity rule holds for n <= " + std::to_string(count);
  return o;
}

struct Criterion {
  int number;
  const char* title;
  double budget_seconds;  // 0: no runtime bound
  std::function<Outcome()> run;
};

const std::vector<Criterion>& criteria() {
  static const std::vector<Criterion> all = {
      {1, "Table 1 parent positions", 1, table1},
      {2, "figure rows", 1, figure_rows},
      {3, "r level sets", 10, r_level_sets},
      {4, "r offsets of parents", 0, parent_r_offsets},
      {5, "closed forms", 30, closed_forms},
      {6, "parity and comparator", 30, parity_and_order},
      {7, "continued-fraction bijection", 0, cf_bijection},
      {8, "best approximation by parents", 60, best_approximation},
      {9, "Stern-Brocot uniqueness", 0, stern_brocot},
      {10, "simplest_between", 60, simplest},
      {11, "distant-parent sequence", 0, distant_parent_sequence_terms},
  };
  return all;
}

}  // namespace

int main(int argc, char** argv) {
  std::set<int> wanted;
  for (int i = 1; i < argc; ++i) wanted.insert(std::stoi(argv[i]));
  bool all_pass = true;
  for (const auto& c : criteria()) {
    if (!wanted.empty() && !wanted.count(c.number)) continue;
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (c.budget_seconds > 0 && seconds >= c.budget_seconds) {
      o.pass = false;
      o.detail += "; over the " + std::to_string(static_cast<int>(c.budget_seconds)) + " s budget";
    }
    char timing[32];
    std::snprintf(timing, sizeof timing, "%.2f s", seconds);
    std::cout << "criterion " << c.number << ": " << (o.pass ? "PASS" : "FAIL") << " (" << c.title << "; "
              << o.detail << "; " << timing << ")" << std::endl;
    all_pass = all_pass && o.pass;
  }
  return all_pass ? 0 : 1;
}
