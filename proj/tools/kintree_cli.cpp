#include "kintree/continued_fraction.hpp"
#include "kintree/error.hpp"
#include "kintree/formats.hpp"
#include "kintree/metrics.hpp"
#include "kintree/oracle.hpp"
#include "kintree/rational_trees.hpp"

#include "CLI11.hpp"
#include "json.hpp"

#include <iostream>
#include <optional>
#include <string>
#include <vector>

using namespace kintree;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitVerifyFailed = 1;
constexpr int kExitUsage = 2;

std::string with_decimal(const Fraction& x, const ValueStyle& style) {
  std::string out = format_fraction(x);
  if (style.decimal && x.is_finite()) out += " " + format_decimal(x, *style.decimal);
  return out;
}

unsigned level_bound(const std::optional<unsigned>& max_level) { return max_level.value_or(kDefaultLevelBound); }

std::string level_tag(const GenString& s) {
  if (s.is_sentinel()) return "(level -1, boundary)";
  return "(level " + length(s).str() + ")";
}

RowFormat row_format(const ValueStyle& style) {
  RowFormat format;
  format.compact_cf = style.compact;
  format.binary_point = style.binary;
  return format;
}

std::vector<std::vector<std::string>> tree_rows(TreeKind tree, unsigned level, const ValueStyle& style,
                                                unsigned bound) {
  if (level > bound) throw ResourceError("level " + std::to_string(level) + " exceeds the bound " + std::to_string(bound));
  std::vector<std::vector<std::string>> rows;
  for (unsigned m = 0; m <= level; ++m) rows.push_back(enumerate_level_values(tree, m, row_format(style), bound));
  return rows;
}

void render_text(std::ostream& out, const std::vector<std::vector<std::string>>& rows, unsigned m, std::size_t i) {
  out << std::string(2 * m, ' ') << rows[m][i] << '\n';
  if (m + 1 < rows.size()) {
    render_text(out, rows, m + 1, 2 * i);
    render_text(out, rows, m + 1, 2 * i + 1);
  }
}

void render_dot(std::ostream& out, const std::vector<std::vector<std::string>>& rows, const std::string& name) {
  out << "digraph " << name << " {\n  node [shape=plaintext];\n";
  // node ids are breadth-first positions
  std::size_t first = 0;
  for (std::size_t m = 0; m < rows.size(); ++m) {
    for (std::size_t i = 0; i < rows[m].size(); ++i) {
      out << "  n" << first + i << " [label=" << nlohmann::json(rows[m][i]).dump() << "];\n";
    }
    first += rows[m].size();
  }
  first = 0;
  for (std::size_t m = 0; m + 1 < rows.size(); ++m) {
    const std::size_t next = first + rows[m].size();
    for (std::size_t i = 0; i < rows[m].size(); ++i) {
      out << "  n" << first + i << " -> n" << next + 2 * i << ";\n";
      out << "  n" << first + i << " -> n" << next + 2 * i + 1 << ";\n";
    }
    first = next;
  }
  out << "}\n";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact navigation of the binary tree of LR-strings and its rational labelings"};
  app.require_subcommand(1);

  std::optional<unsigned> max_level;
  app.add_option("--max-level", max_level, "Bound on enumerated levels and verification depth")
      ->envname("KINTREE_MAX_LEVEL");

  ValueStyle style;
  const auto add_style = [&style](CLI::App* cmd) {
    cmd->add_flag("--binary", style.binary, "r-values in binary-point form");
    cmd->add_flag("--compact", style.compact, "continued fractions without commas");
    cmd->add_option("--decimal", style.decimal, "Append k decimal digits (exact long division)");
  };
  const auto format_check = CLI::IsMember(value_format_names());

  // convert
  std::string value, from, to;
  auto* convert = app.add_subcommand("convert", "Convert a value between representations");
  convert->add_option("value", value, "Value to convert")->required();
  convert->add_option("from", from, "Input format")->required()->check(format_check);
  convert->add_option("to", to, "Output format")->required()->check(format_check);
  add_style(convert);

  // parents / children
  std::string nav_format = "string";
  auto* parents = app.add_subcommand("parents", "Close and distant parent");
  parents->add_option("value", value, "Vertex")->required();
  parents->add_option("--format,-f", nav_format, "Input and output format")->check(format_check);
  add_style(parents);
  auto* children = app.add_subcommand("children", "Left and right child");
  children->add_option("value", value, "Vertex")->required();
  children->add_option("--format,-f", nav_format, "Input and output format")->check(format_check);
  add_style(children);

  // seq
  std::uint64_t count = 0;
  std::string seq_output = "plain";
  auto* seq = app.add_subcommand("seq", "Distant-parent sequence a(n) = 2 N(P_D) + 1");
  seq->add_option("count", count, "Number of terms")->required()->check(CLI::PositiveNumber);
  seq->add_option("--output,-o", seq_output, "plain or bfile")->check(CLI::IsMember({"plain", "bfile"}));

  // between / best
  std::string x_text, y_text;
  auto* between = app.add_subcommand("between", "Simplest rational strictly between x and y");
  between->add_option("x", x_text, "Lower endpoint p/q")->required();
  between->add_option("y", y_text, "Upper endpoint p/q")->required();
  add_style(between);
  auto* best = app.add_subcommand("best", "Values of the two parents (best lower-level approximations)");
  best->add_option("value", value, "Fraction p/q or continued fraction [q0,...]")->required();
  add_style(best);

  // enum / render
  std::string tree_name;
  unsigned level = 0;
  bool as_json = false;
  auto* enumerate = app.add_subcommand("enum", "One level of a labelled tree, left to right");
  enumerate->add_option("tree", tree_name, "stern_brocot, calkin_wilf, cf, r_metric, position, string, m")
      ->required();
  enumerate->add_option("level", level, "Level")->required();
  enumerate->add_flag("--json", as_json, "JSON output");
  add_style(enumerate);

  bool as_dot = false;
  auto* render = app.add_subcommand("render", "Levels 0..level of a labelled tree");
  render->add_option("tree", tree_name, "Tree id, as for enum")->required();
  render->add_option("level", level, "Last level shown")->required();
  render->add_flag("--dot", as_dot, "Graphviz DOT instead of indented text");
  add_style(render);

  // verify
  std::string suite;
  std::optional<unsigned> depth;
  unsigned jobs = 1;
  std::optional<std::uint64_t> seed;
  std::size_t max_failures = 20;
  auto* verify = app.add_subcommand("verify", "Run an exhaustive verification suite");
  std::vector<std::string> suites = oracle::suite_names();
  suites.emplace_back("all");
  verify->add_option("suite", suite, "Suite name or 'all'")->required()->check(CLI::IsMember(suites));
  verify->add_option("--depth", depth, "Depth (default per suite)");
  verify->add_flag("--json", as_json, "JSON report");
  verify->add_option("--jobs,-j", jobs, "Worker threads for 'all'")->envname("KINTREE_JOBS")->check(CLI::PositiveNumber);
  verify->add_option("--seed", seed, "Seed for randomized sub-checks")->envname("KINTREE_SEED");
  verify->add_option("--max-failures", max_failures, "Failures listed per suite in text output");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  std::ostream& out = std::cout;
  try {
    if (*convert) {
      out << format_value(parse_value(value, parse_value_format(from)), parse_value_format(to), style) << '\n';
    } else if (*parents) {
      const ValueFormat f = parse_value_format(nav_format);
      const GenString s = parse_value(value, f);
      if (s.is_sentinel()) throw DomainError("boundary vertices have no parents");
      if (s.is_epsilon()) {
        out << "left: " << format_value(parent_left(s), f, style) << " (boundary)\n";
        out << "right: " << format_value(parent_right(s), f, style) << " (boundary)\n";
      } else {
        const GenString pc = parent_close(s);
        const GenString pd = parent_distant(s);
        out << "close: " << format_value(pc, f, style) << ' ' << level_tag(pc) << '\n';
        out << "distant: " << format_value(pd, f, style) << ' ' << level_tag(pd) << '\n';
      }
    } else if (*children) {
      const ValueFormat f = parse_value_format(nav_format);
      const GenString s = parse_value(value, f);
      if (s.is_sentinel()) throw DomainError("boundary vertices have no children in the tree");
      out << "left: " << format_value(child(s, Letter::L), f, style) << '\n';
      out << "right: " << format_value(child(s, Letter::R), f, style) << '\n';
    } else if (*seq) {
      const auto terms = distant_parent_sequence(count);
      if (seq_output == "bfile") {
        for (std::size_t n = 0; n < terms.size(); ++n) out << n + 1 << ' ' << terms[n] << '\n';
      } else {
        for (std::size_t n = 0; n < terms.size(); ++n) out << (n ? " " : "") << terms[n];
        out << '\n';
      }
    } else if (*between) {
      const Fraction x = parse_fraction(x_text);
      const Fraction y = parse_fraction(y_text);
      if (!(x.is_positive_finite() && y.is_positive_finite() && x < y)) {
        throw DomainError("between needs 0 < x < y with finite endpoints, e.g. 'kintree between 7/5 3/2'");
      }
      const Fraction c = simplest_between(x, y);
      const ContinuedFraction cf = cf_of_rational(c);
      out << with_decimal(c, style) << ' ' << format_cf(cf, style.compact) << ' '
          << format_string(cf_to_string(cf)) << '\n';
    } else if (*best) {
      const ContinuedFraction c = value.starts_with('[') ? parse_cf(value) : cf_of_rational(parse_fraction(value));
      if (c.is_root()) throw DomainError("the root 1/1 has only the boundary values 0/1 and 1/0 above it");
      const auto parents_of = cf_parents(c);
      out << "close: " << with_decimal(vertex_value(parents_of.close), style) << ' '
          << format_vertex(parents_of.close, style.compact) << '\n';
      out << "distant: " << with_decimal(vertex_value(parents_of.distant), style) << ' '
          << format_vertex(parents_of.distant, style.compact) << '\n';
    } else if (*enumerate) {
      const TreeKind tree = parse_tree_kind(tree_name);
      const auto row = enumerate_level_values(tree, level, row_format(style), level_bound(max_level));
      if (as_json) {
        out << nlohmann::json{{"tree", tree_kind_name(tree)}, {"level", level}, {"values", row}}.dump() << '\n';
      } else {
        for (std::size_t i = 0; i < row.size(); ++i) out << (i ? " " : "") << row[i];
        out << '\n';
      }
    } else if (*render) {
      const TreeKind tree = parse_tree_kind(tree_name);
      const auto rows = tree_rows(tree, level, style, level_bound(max_level));
      if (as_dot) {
        render_dot(out, rows, tree_kind_name(tree));
      } else {
        render_text(out, rows, 0, 0);
      }
    } else if (*verify) {
      oracle::Config config;
      if (seed) config.seed = *seed;
      if (max_level) config.max_depth = *max_level;
      std::vector<oracle::CheckReport> reports;
      if (suite == "all") {
        if (depth) throw DomainError("--depth applies to a single suite");
        reports = oracle::run_all(config, jobs);
      } else {
        reports.push_back(oracle::run_suite(suite, depth, config));
      }
      bool passed = true;
      for (const auto& r : reports) passed = passed && r.passed();
      if (as_json) {
        out << (reports.size() == 1 && suite != "all" ? oracle::to_json(reports[0]) : oracle::to_json(reports)) << '\n';
      } else {
        for (const auto& r : reports) out << oracle::to_text(r, max_failures);
        if (reports.size() > 1) {
          std::size_t failed = 0;
          for (const auto& r : reports) failed += r.passed() ? 0 : 1;
          out << reports.size() - failed << "/" << reports.size() << " suites passed\n";
        }
      }
      return passed ? kExitOk : kExitVerifyFailed;
    }
  } catch (const kintree::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::out_of_range& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitOk;
}
