#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "ortree/cli.hpp"
#include "ortree/generator.hpp"
#include "ortree/oracle.hpp"
#include "ortree/ordering.hpp"
#include "ortree/relations.hpp"
#include "ortree/tree.hpp"

namespace py = pybind11;
using namespace ortree;

namespace {

using DeltaTuple = std::tuple<int, int, int>;

DeltaTuple to_tuple(const Delta& d) { return {d.remove_at, d.insert_at, d.insert_level}; }

Delta from_tuple(const DeltaTuple& t) {
  return {std::get<0>(t), std::get<1>(t), std::get<2>(t)};
}

class PyGrayCode {
 public:
  PyGrayCode(std::size_t n, bool checked) : code_(n, GeneratorOptions{.checked = checked}) {}
  OrderedTree next() {
    const OrderedTree* tree = code_.next();
    if (tree == nullptr) throw py::stop_iteration();
    return *tree;
  }
  std::uint64_t emitted() const { return code_.emitted(); }
  std::size_t max_live_per_level() const { return code_.max_live_per_level(); }

 private:
  GrayCode code_;
};

class PyDeltaStream {
 public:
  PyDeltaStream(std::size_t n, bool checked)
      : stream_(n, GeneratorOptions{.checked = checked}) {}
  const OrderedTree& first() const { return stream_.first(); }
  DeltaTuple next() {
    const auto d = stream_.next();
    if (!d) throw py::stop_iteration();
    return to_tuple(*d);
  }

 private:
  DeltaStream stream_;
};

py::dict report_to_dict(const VerificationReport& r) {
  py::dict out;
  out["pass"] = r.pass();
  out["summary"] = r.summary();
  out["n"] = r.n;
  out["total"] = r.total;
  out["expected"] = r.expected;
  out["duplicates"] = r.duplicates;
  out["missing"] = r.missing;
  out["adjacency_failures"] = r.adjacency_failures;
  py::list invariants;
  for (const auto& f : r.invariant_failures)
    invariants.append(py::make_tuple(f.level, f.window, f.which));
  out["invariant_failures"] = invariants;
  py::dict histogram;
  for (const CaseId id : all_cases())
    histogram[py::str(std::string(to_string(id)))] = r.case_histogram[id];
  out["case_histogram"] = histogram;
  out["forbidden_case_hits"] = r.forbidden_case_hits;
  out["set_compared"] = r.set_compared;
  out["generation_error"] = r.generation_error;
  return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Gray code for ordered trees (C++ core)";

  py::class_<OrderedTree>(m, "OrderedTree")
      .def(py::init([](const std::vector<int>& levels) {
             return OrderedTree::from_levels(levels);
           }),
           py::arg("levels"))
      .def(py::init([](const std::string& text) { return parse_tree(text); }),
           py::arg("text"))
      .def_property_readonly("levels", &OrderedTree::to_vector)
      .def_property_readonly("rpl", &OrderedTree::rpl)
      .def("parent", [](const OrderedTree& t) { return parent(t); })
      .def("child", [](const OrderedTree& t, int i) { return child(t, i); })
      .def("parens", [](const OrderedTree& t) { return encode_parens(t); })
      .def("__len__", &OrderedTree::size)
      .def("__eq__", [](const OrderedTree& a, const OrderedTree& b) { return a == b; })
      .def("__lt__", [](const OrderedTree& a, const OrderedTree& b) { return a < b; })
      .def("__hash__", [](const OrderedTree& t) { return std::hash<OrderedTree>{}(t); })
      .def("__str__", [](const OrderedTree& t) { return encode_levels(t); })
      .def("__repr__", [](const OrderedTree& t) {
        return "OrderedTree('" + encode_levels(t) + "')";
      });

  m.def("validate", [](const std::vector<int>& levels) { return validate(levels); });
  m.def("decode_parens", [](const std::string& s) { return decode_parens(s); });
  m.def("has_pony_tail", &has_pony_tail);
  m.def("is_copying", &is_copying);
  m.def("is_adjacent", &is_adjacent);
  m.def("delta", [](const OrderedTree& t, const OrderedTree& u) {
    return to_tuple(delta(t, u));
  });
  m.def("apply_delta", [](const OrderedTree& t, const DeltaTuple& d) {
    return apply_delta(t, from_tuple(d));
  });

  m.def("classify", [](const OrderedTree& cur, const OrderedTree& next,
                       const OrderedTree& leftmost) {
    return std::string(to_string(classify(cur, next, leftmost)));
  });
  m.def("step", [](const OrderedTree& cur, const OrderedTree& next,
                   const OrderedTree& leftmost) {
    const StepDecision d = step(cur, next, leftmost);
    return py::make_tuple(std::string(to_string(d.id)), d.children_of_current,
                          d.leftmost_of_next);
  });
  m.def("finalize_last", &finalize_last);
  m.def("check_co1", &check_co1);

  py::class_<PyGrayCode>(m, "GrayCode")
      .def("__iter__", [](PyGrayCode& self) -> PyGrayCode& { return self; })
      .def("__next__", &PyGrayCode::next)
      .def_property_readonly("emitted", &PyGrayCode::emitted)
      .def_property_readonly("max_live_per_level", &PyGrayCode::max_live_per_level);
  m.def(
      "gray_code",
      [](std::size_t n, bool checked) { return std::make_unique<PyGrayCode>(n, checked); },
      py::arg("n"), py::arg("checked") = true);

  py::class_<PyDeltaStream>(m, "DeltaStream")
      .def_property_readonly("first", &PyDeltaStream::first)
      .def("__iter__", [](PyDeltaStream& self) -> PyDeltaStream& { return self; })
      .def("__next__", &PyDeltaStream::next);
  m.def(
      "delta_stream",
      [](std::size_t n, bool checked) {
        return std::make_unique<PyDeltaStream>(n, checked);
      },
      py::arg("n"), py::arg("checked") = true);

  m.def("catalan", [](unsigned m) {
    std::ostringstream s;
    s << catalan(m);
    return py::int_(py::str(s.str()));
  });
  m.def(
      "enumerate_all",
      [](std::size_t n, std::size_t cap) { return enumerate_all(n, cap).trees; },
      py::arg("n"), py::arg("cap") = kOracleCap);
  m.def(
      "verify",
      [](std::size_t n, const std::string& checks) {
        VerifyOptions options;
        options.checks = Checks::parse(checks);
        return report_to_dict(verify(n, options));
      },
      py::arg("n"), py::arg("checks") = "all");
  m.def(
      "family_tree_dot",
      [](std::size_t n, std::size_t cap) { return export_dot(build_family_tree(n, cap)); },
      py::arg("n"), py::arg("cap") = kFamilyTreeCap);
  m.def("run_cli", [](const std::vector<std::string>& args) {
    std::ostringstream out, err;
    const int code = cli::run(args, out, err);
    return py::make_tuple(code, out.str(), err.str());
  });
}
