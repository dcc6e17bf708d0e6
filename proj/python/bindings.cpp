#include "kintree/continued_fraction.hpp"
#include "kintree/error.hpp"
#include "kintree/metrics.hpp"
#include "kintree/oracle.hpp"
#include "kintree/rational_trees.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

namespace py = pybind11;
using namespace kintree;

// BigInt <-> Python int, through decimal text.
namespace pybind11::detail {
template <>
struct type_caster<BigInt> {
  PYBIND11_TYPE_CASTER(BigInt, const_name("int"));

  bool load(handle src, bool) {
    if (!PyLong_Check(src.ptr())) return false;
    value = BigInt(py::str(src).cast<std::string>());
    return true;
  }

  static handle cast(const BigInt& v, return_value_policy, handle) {
    return PyLong_FromString(v.str().c_str(), nullptr, 10);
  }
};
}  // namespace pybind11::detail

namespace {

using Pair = std::pair<BigInt, BigInt>;

Fraction to_fraction(const Pair& p) { return Fraction(p.first, p.second); }
Pair from_fraction(const Fraction& x) { return {x.num(), x.den()}; }

ContinuedFraction to_cf(const std::vector<BigInt>& q) { return ContinuedFraction::from_quotients(q); }
std::vector<BigInt> from_cf(const ContinuedFraction& c) { return {c.quotients().begin(), c.quotients().end()}; }

// Boundary vertices travel as [0] and [] on the Python side.
std::vector<BigInt> from_vertex(const CfVertex& v) {
  if (const auto* b = std::get_if<Boundary>(&v)) {
    return *b == Boundary::Zero ? std::vector<BigInt>{BigInt(0)} : std::vector<BigInt>{};
  }
  return from_cf(std::get<ContinuedFraction>(v));
}

// position as (numerator, denominator) so that -1/2 survives
Pair from_position(const ExtPosition& n) {
  switch (n.kind()) {
    case ExtPosition::Kind::NegOne: return {BigInt(-1), BigInt(1)};
    case ExtPosition::Kind::NegHalf: return {BigInt(-1), BigInt(2)};
    case ExtPosition::Kind::Natural: break;
  }
  return {n.natural(), BigInt(1)};
}

Pair from_dyadic(const Dyadic& x) { return {x.numerator(), pow2(x.exponent())}; }

}  // namespace

PYBIND11_MODULE(_kintree, m) {
  m.doc() = "Exact LR-string tree navigation, metrics and rational labelings";

  auto base = py::register_exception<Error>(m, "KintreeError", PyExc_ValueError);
  py::register_exception<ParseError>(m, "ParseError", base.ptr());
  py::register_exception<ValidationError>(m, "ValidationError", base.ptr());
  py::register_exception<DomainError>(m, "DomainError", base.ptr());
  py::register_exception<ResourceError>(m, "ResourceError", base.ptr());

  py::class_<GenString>(m, "LRString")
      .def(py::init([](const std::string& text) { return parse_string(text); }), py::arg("text") = "e")
      .def_static("from_runs", [](std::vector<BigInt> runs) { return GenString::from_runs(std::move(runs)); })
      .def_static("at_position", [](const BigInt& n) { return string_at_position(n); })
      .def_static("with_r", [](const BigInt& num, std::uint64_t exponent) { return string_with_r(Dyadic(num, exponent)); })
      .def_property_readonly("runs", [](const GenString& s) { return std::vector<BigInt>(s.runs().begin(), s.runs().end()); })
      .def_property_readonly("is_sentinel", &GenString::is_sentinel)
      .def("__len__", [](const GenString& s) {
        if (s.is_sentinel()) throw DomainError("sentinels have length -1; use .length");
        return to_u64(length(s), std::numeric_limits<std::uint64_t>::max());
      })
      .def_property_readonly("length", [](const GenString& s) { return length(s); })
      .def_property_readonly("run_count", [](const GenString& s) { return run_count(s); })
      .def("child", [](const GenString& s, const std::string& d) {
        if (d != "L" && d != "R") throw ValidationError("direction must be 'L' or 'R'");
        return child(s, d == "L" ? Letter::L : Letter::R);
      })
      .def("parent_left", [](const GenString& s) { return parent_left(s); })
      .def("parent_right", [](const GenString& s) { return parent_right(s); })
      .def("parent_close", [](const GenString& s) { return parent_close(s); })
      .def("parent_distant", [](const GenString& s) { return parent_distant(s); })
      .def("reverse", [](const GenString& s) { return reverse(s); })
      .def("runs_text", [](const GenString& s) { return format_runs(s); })
      .def("_r", [](const GenString& s) { return from_dyadic(r_value(s)); })
      .def("_position", [](const GenString& s) { return from_position(position(s)); })
      .def("_stern_brocot", [](const GenString& s) { return from_fraction(stern_brocot_value(s)); })
      .def("_calkin_wilf", [](const GenString& s) { return from_fraction(calkin_wilf_value(s)); })
      .def("cf", [](const GenString& s) { return from_vertex(string_to_vertex(s)); })
      .def("compare", [](const GenString& a, const GenString& b) {
        const auto o = compare_strings(a, b);
        return o == std::strong_ordering::less ? -1 : o == std::strong_ordering::greater ? 1 : 0;
      })
      .def("__str__", [](const GenString& s) { return format_string(s); })
      .def("__repr__", [](const GenString& s) { return "LRString('" + format_string(s) + "')"; })
      .def("__eq__", [](const GenString& a, const GenString& b) { return a == b; })
      .def("__hash__", [](const GenString& s) { return py::hash(py::str(format_runs(s))); });

  m.def("level_strings", &level_strings, py::arg("m"));

  m.def("_cf_value", [](const std::vector<BigInt>& q) { return from_fraction(eval_cf(to_cf(q))); });
  m.def("_cf_of_rational", [](const Pair& x) { return from_cf(cf_of_rational(to_fraction(x))); });
  m.def("cf_children", [](const std::vector<BigInt>& q) {
    const auto [l, r] = cf_children(to_cf(q));
    return std::make_pair(from_cf(l), from_cf(r));
  });
  m.def("cf_parents", [](const std::vector<BigInt>& q) {
    const auto p = cf_parents(to_cf(q));
    return std::make_pair(from_vertex(p.close), from_vertex(p.distant));
  });
  m.def("cf_to_string", [](const std::vector<BigInt>& q) { return cf_to_string(to_cf(q)); });
  m.def("cf_level", [](const std::vector<BigInt>& q) { return cf_level(to_cf(q)); });

  m.def("_simplest_between", [](const Pair& x, const Pair& y) {
    return from_fraction(simplest_between(to_fraction(x), to_fraction(y)));
  });
  m.def("_simplest_between_cf_formula", [](const Pair& x, const Pair& y) {
    return from_fraction(simplest_between_cf_formula(to_fraction(x), to_fraction(y)));
  });
  m.def("_stern_brocot_locate", [](const Pair& x) { return stern_brocot_locate(to_fraction(x)); });

  m.def("distant_parent_sequence", &distant_parent_sequence, py::arg("count"));

  m.def(
      "enumerate_level",
      [](const std::string& tree, unsigned level, bool compact, bool binary) {
        RowFormat format;
        format.compact_cf = compact;
        format.binary_point = binary;
        return enumerate_level_values(parse_tree_kind(tree), level, format);
      },
      py::arg("tree"), py::arg("level"), py::arg("compact") = false, py::arg("binary") = false);

  m.def("suite_names", &oracle::suite_names);
  m.def(
      "_verify",
      [](const std::string& suite, std::optional<unsigned> depth, std::uint64_t seed) {
        oracle::Config config;
        config.seed = seed;
        oracle::CheckReport report;
        {
          py::gil_scoped_release release;
          report = oracle::run_suite(suite, depth, config);
        }
        return oracle::to_json(report);
      },
      py::arg("suite"), py::arg("depth") = std::nullopt, py::arg("seed") = oracle::Config{}.seed);
}
