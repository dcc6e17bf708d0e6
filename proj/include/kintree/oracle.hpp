#pragma once

// Bounded exhaustive verification. Each suite enumerates every instance up to a depth,
// checks it against independent computations, and collects every failure.

#include "kintree/gen_string.hpp"

#include <chrono>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace kintree::oracle {

struct Failure {
  std::string input;
  std::string expected;
  std::string actual;
};

struct CheckReport {
  std::string suite;
  unsigned depth = 0;
  std::uint64_t cases_checked = 0;
  std::vector<Failure> failures;
  /// Observations that are not failures (for example equidistant candidates).
  std::vector<std::string> findings;
  std::chrono::duration<double> elapsed{};

  bool passed() const noexcept { return failures.empty(); }
};

struct Config {
  /// Level bound for quadratic all-pairs checks.
  unsigned pair_bound = 8;
  /// Largest depth any suite accepts.
  unsigned max_depth = 24;
  /// Seed and size of the randomized continued-fraction pair check.
  std::uint64_t seed = 20120305;
  unsigned random_pairs = 1000;
  /// Largest depth accepted by the "simplest" suite (a denominator bound).
  unsigned max_denominator = 1000;
  /// Depths used by run_all in place of the defaults, by suite name.
  std::map<std::string, unsigned, std::less<>> depths;
};

/// Every word of level <= max_level exactly once, in (level, position) order.
std::vector<GenString> enumerate_strings(unsigned max_level, unsigned bound = 24);

/// Suite identifiers in their canonical run order.
const std::vector<std::string>& suite_names();

/// Depth used when none is given. Throws ParseError for an unknown suite.
unsigned default_depth(std::string_view suite);

/// Runs one suite. depth defaults per suite; throws ParseError for an unknown name and
/// ResourceError for a depth over the configured bound.
CheckReport run_suite(std::string_view suite, std::optional<unsigned> depth = std::nullopt,
                      const Config& config = {});

/// Runs every suite at its default (or overridden) depth, on up to `jobs` worker threads. Reports come
/// back in suite_names() order regardless of scheduling.
std::vector<CheckReport> run_all(const Config& config = {}, unsigned jobs = 1);

/// Human-readable report; at most `max_failures` failures are listed.
std::string to_text(const CheckReport& report, std::size_t max_failures = 20);

/// {"suite", "depth", "cases", "passed", "failures": [{input, expected, actual}], "findings",
/// "elapsed_seconds"}.
std::string to_json(const CheckReport& report);
std::string to_json(const std::vector<CheckReport>& reports);

}  // namespace kintree::oracle
