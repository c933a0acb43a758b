// Python bindings: a Session owns one memo store and exposes the main
// operations.  Exact rationals cross the boundary as fractions.Fraction.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <fstream>
#include <vector>

#include "rootstack/cache_io.hpp"
#include "rootstack/quantum.hpp"
#include "rootstack/records.hpp"
#include "rootstack/verify.hpp"

namespace py = pybind11;

namespace {

using namespace rootstack;

py::object to_fraction(const Rational& value) {
  return py::module_::import("fractions").attr("Fraction")(to_string(value));
}

py::dict suite_dict(const SuiteReport& report) {
  py::list failures;
  for (const auto& c : report.cases) {
    if (c.pass) continue;
    py::dict f;
    f["description"] = c.description;
    f["expected"] = to_string(c.expected);
    f["actual"] = to_string(c.actual);
    failures.append(f);
  }
  py::dict out;
  out["suite"] = report.suite;
  out["passed"] = report.passed();
  out["checks"] = static_cast<int>(report.cases.size());
  out["failures"] = failures;
  return out;
}

class Session {
 public:
  explicit Session(int delta) : cfg_(delta), engine_(cfg_, store_) {}

  py::object invariant(int d, int n2, int n3, int n4) {
    return to_fraction(engine_.invariant(InvariantKey(d, n2, n3, n4)));
  }

  py::object general_invariant(int d, const std::vector<int>& n) {
    if (n.size() != 5)
      throw UsageError("expected five insertion counts n0..n4");
    return to_fraction(engine_.general_invariant(
        GeneralKey(d, n[0], n[1], n[2], n[3], n[4])));
  }

  bool admissible(int d, int n2, int n3, int n4) {
    return engine_.dimension_admissible(InvariantKey(d, n2, n3, n4));
  }

  py::object expected_dimension(int d, int n2, int n3, int n4) {
    return to_fraction(
        engine_.expected_dimension(InvariantKey(d, n2, n3, n4)));
  }

  bool recursion_applicable(int which, int d, int n2, int n3, int n4) {
    return engine_.recursion_applicable(which, InvariantKey(d, n2, n3, n4));
  }

  py::object recursion_value(int which, int d, int n2, int n3, int n4) {
    return to_fraction(
        engine_.recursion_value(which, InvariantKey(d, n2, n3, n4)));
  }

  int depth_bound(int d, int n3, int n4) {
    return engine_.recursion_depth_bound(d, n3, n4);
  }

  py::object derive_lambda() {
    return to_fraction(rootstack::derive_lambda(engine_));
  }

  py::object relation_residual(int which, int q, int m2, int m3, int m4,
                               int q_max, int y_max) {
    QuantumAlgebra algebra(engine_, TruncationOrder(q_max, y_max));
    return to_fraction(
        algebra.relation_residual(which, Monomial{q, m2, m3, m4}));
  }

  bool associativity_holds(int i, int j, int k, int q_max, int y_max) {
    QuantumAlgebra algebra(engine_, TruncationOrder(q_max, y_max));
    return algebra.associativity_residual(i, j, k).is_zero();
  }

  py::list table(int d, int n3_max) {
    py::list rows;
    for (const auto& row : admissible_table(store_, cfg_, d, n3_max)) {
      py::dict item;
      item["delta"] = row.delta;
      item["d"] = row.d;
      item["n"] = row.n;
      item["value"] = to_fraction(row.value);
      item["admissible"] = row.admissible;
      rows.append(item);
    }
    return rows;
  }

  py::dict run_suite(const std::string& suite, std::vector<int> deltas,
                     int q_max, int y_max, int k_max, int d_max) {
    return suite_dict(rootstack::run_suite(store_, suite, std::move(deltas),
                                           q_max, y_max, k_max, d_max));
  }

  py::dict stats() const {
    py::dict out;
    out["evaluations"] = engine_.stats().evaluations;
    out["memo_hits"] = engine_.stats().memo_hits;
    out["max_chain"] = engine_.stats().max_chain;
    return out;
  }

  std::size_t cache_size() const { return store_.size(); }
  void clear_cache() { store_.clear(); }

  void export_cache(const std::string& path) const {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw UsageError("cannot open \"" + path + "\" for writing");
    rootstack::export_cache(store_, out);
    if (!out) throw UsageError("failed writing \"" + path + "\"");
  }

  void import_cache(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw UsageError("cannot open \"" + path + "\"");
    rootstack::import_cache(store_, in);
  }

 private:
  GeometryConfig cfg_;
  MemoStore store_;
  Engine engine_;
};

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Exact genus-0 orbifold Gromov-Witten invariants of the "
            "projective plane rooted to order 2 along a smooth plane curve";
  m.attr("__version__") = "1.0.0";

  py::class_<Session>(m, "Session",
                      "One geometry (fixed curve degree delta) plus a memo "
                      "store shared by every computation on the session")
      .def(py::init<int>(), py::arg("delta"))
      .def("invariant", &Session::invariant, py::arg("d"), py::arg("n2"),
           py::arg("n3"), py::arg("n4"),
           "I_d(T2^n2 T3^n3 T4^n4) as a Fraction")
      .def("general_invariant", &Session::general_invariant, py::arg("d"),
           py::arg("n"),
           "Invariant with insertion counts n = [n0, n1, n2, n3, n4]; "
           "degree 0 needs at least three insertions")
      .def("admissible", &Session::admissible, py::arg("d"), py::arg("n2"),
           py::arg("n3"), py::arg("n4"),
           "Whether the key satisfies the parity and dimension constraints")
      .def("expected_dimension", &Session::expected_dimension, py::arg("d"),
           py::arg("n2"), py::arg("n3"), py::arg("n4"))
      .def("recursion_applicable", &Session::recursion_applicable,
           py::arg("which"), py::arg("d"), py::arg("n2"), py::arg("n3"),
           py::arg("n4"),
           "Whether recursion 1..4 may be solved for the key")
      .def("recursion_value", &Session::recursion_value, py::arg("which"),
           py::arg("d"), py::arg("n2"), py::arg("n3"), py::arg("n4"),
           "Solve recursion 1..4 for the key, independent of the "
           "dispatcher's own choice")
      .def("depth_bound", &Session::depth_bound, py::arg("d"), py::arg("n3"),
           py::arg("n4"),
           "Bound on same-degree reduction chains starting at degree d")
      .def("derive_lambda", &Session::derive_lambda,
           "Re-derive the twisted-sector coupling (-1/4) from two "
           "degree-one invariants")
      .def("relation_residual", &Session::relation_residual, py::arg("which"),
           py::arg("q"), py::arg("m2"), py::arg("m3"), py::arg("m4"),
           py::arg("q_max"), py::arg("y_max"),
           "Coefficient of Q^q y2^m2 y3^m3 y4^m4 in potential relation "
           "1..4, left minus right")
      .def("associativity_holds", &Session::associativity_holds, py::arg("i"),
           py::arg("j"), py::arg("k"), py::arg("q_max"), py::arg("y_max"),
           "(Ti*Tj)*Tk == Ti*(Tj*Tk) up to the truncation order")
      .def("table", &Session::table, py::arg("d"), py::arg("n3_max"),
           "Every admissible invariant of degree d with n3 <= n3_max")
      .def("run_suite", &Session::run_suite, py::arg("suite"),
           py::arg("deltas") = std::vector<int>{}, py::arg("q_max") = -1,
           py::arg("y_max") = -1, py::arg("k_max") = -1, py::arg("d_max") = -1,
           "Run a verification suite (closed-forms, bases, pinned, "
           "relations, wdvv, cross); suites pick their own geometries and "
           "only share the session's memo store")
      .def("stats", &Session::stats)
      .def("cache_size", &Session::cache_size)
      .def("clear_cache", &Session::clear_cache)
      .def("export_cache", &Session::export_cache, py::arg("path"))
      .def("import_cache", &Session::import_cache, py::arg("path"));

  m.def("lambda_k", [](long k) { return to_fraction(rootstack::lambda_k(k)); },
        py::arg("k"), "(-1)^k k! / 2^(k+1), the closed-form family value");
}
