#include <pybind11/operators.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "hecke/characters.hpp"
#include "hecke/cli.hpp"
#include "hecke/graded.hpp"
#include "hecke/serialize.hpp"
#include "hecke/symfun.hpp"
#include "hecke/traces.hpp"

namespace py = pybind11;
using namespace hecke;

namespace {

// Tables cross the boundary as {"order": [...], "entries": [[RatFun]]}.
py::dict table_dict(const std::vector<Partition>& order, const Matrix& entries) {
  py::list labels;
  for (const auto& p : order) labels.append(p.to_csv());
  py::dict d;
  d["order"] = labels;
  d["entries"] = entries;
  return d;
}

Partition to_partition(const std::string& text) { return parse_partition(text).value(); }

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Exact Hecke-algebra character tables and twisted Markov traces of S_n";
  m.attr("__version__") = cli::kVersion;

  py::register_exception<MathError>(m, "MathError", PyExc_ArithmeticError);
  py::register_exception<InternalError>(m, "InternalError", PyExc_RuntimeError);

  py::class_<Partition>(m, "Partition")
      .def(py::init([](std::vector<int> parts) { return Partition(std::move(parts)); }))
      .def_static("parse", &to_partition)
      .def_property_readonly("parts", [](const Partition& p) {
        return std::vector<int>(p.parts().begin(), p.parts().end());
      })
      .def_property_readonly("weight", &Partition::weight)
      .def("__len__", &Partition::length)
      .def("conjugate", &Partition::conjugate)
      .def("hook", [](const Partition& p, int i, int j) { return hook(p, i, j); })
      .def("z", [](const Partition& p) { return z_mu(p); })
      .def("coxeter_length", [](const Partition& p) { return coxeter_length(p); })
      .def(py::self == py::self)
      .def("__str__", &Partition::to_string)
      .def("__repr__", [](const Partition& p) { return "Partition(" + p.to_string() + ")"; });

  py::class_<RatFun>(m, "RatFun")
      .def(py::init<long>())
      .def_static("q", &RatFun::q)
      .def_static("r", &RatFun::r)
      .def_static("from_json", [](const std::string& s) { return ratfun_from_json(json::parse(s)); })
      .def("to_json", [](const RatFun& f) { return to_json(f).dump(); })
      .def("is_polynomial", &RatFun::is_polynomial)
      .def("evaluate", [](const RatFun& f, const std::string& q, const std::string& r) {
        return evaluate(f, Rational::parse(q), Rational::parse(r)).value().to_string();
      }, py::arg("q"), py::arg("r") = "0")
      .def(py::self + py::self)
      .def(py::self - py::self)
      .def(py::self * py::self)
      .def(py::self / py::self)
      .def(-py::self)
      .def(py::self == py::self)
      .def("__str__", &RatFun::to_string)
      .def("__repr__", [](const RatFun& f) { return "RatFun(" + f.to_string() + ")"; });

  m.def("enumerate_partitions", &enumerate, py::arg("n"));
  m.def("sn_char_table", [](int n) {
    CharTable t = sn_char_table(n);
    return table_dict(t.order, t.entries);
  });
  m.def("hecke_char_table", [](int n) {
    const CharTable& t = hecke_char_table(n);
    return table_dict(t.order, t.entries);
  });
  m.def("markov_trace_table", [](int n, unsigned threads) {
    const TraceTable& t = markov_trace_table(n, threads);
    return table_dict(t.order, t.entries);
  }, py::arg("n"), py::arg("threads") = 1);
  m.def("graded_matrix", [](int n, const std::string& kind) {
    auto k = parse_molien_kind(kind);
    if (!k) throw py::value_error("unknown Molien kind '" + kind + "'");
    GradedTensorMatrix g = graded_matrix(n, *k);
    return table_dict(g.order, g.entries);
  }, py::arg("n"), py::arg("kind") = "sym");
  m.def("schur_spec_product", [](const std::string& partition) {
    return schur_spec_product(to_partition(partition));
  });
  m.def("check_names", [] {
    std::vector<std::string> out;
    for (auto n : check_names()) out.emplace_back(n);
    return out;
  });
  m.def("_run_check_json", [](const std::string& name, int n, int N) {
    auto report = run_check(name, n, N);
    if (!report) throw py::value_error("unknown check '" + name + "'");
    return to_json(*report).dump();
  });
}
