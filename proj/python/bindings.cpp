#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "wonderful/acceptance.hpp"
#include "wonderful/cohomology.hpp"
#include "wonderful/faces.hpp"
#include "wonderful/formulas.hpp"
#include "wonderful/serialize.hpp"

namespace py = pybind11;
using namespace wonderful;

// Results cross the boundary as JSON text; the Python side turns big
// integers (emitted as strings) back into ints.
namespace {

std::string poincare_json(unsigned r, unsigned p, unsigned n, const std::string& method, std::size_t guard) {
  const GroupId g(r, p, n);
  if (method == "series") return poincare_report(g, method, poincare_from_series(g)).dump();
  if (method == "bruteforce") {
    EnumerationOptions options;
    options.guard = guard;
    return poincare_report(g, method, poincare_bruteforce(g, options)).dump();
  }
  throw std::invalid_argument("method must be series or bruteforce");
}

std::string fvector_json(const std::string& type, unsigned n, const std::string& method) {
  const FaceFamily family = parse_family(type);
  if (method == "series") {
    const FVector f = fvector_from_fcy(family, n);
    Json out = fvector_report(family, n, f.entries);
    if (f.degenerate) out["degenerate"] = "D3 = A3";
    return out.dump();
  }
  if (method == "tubings") {
    const bool degenerate = family == FaceFamily::D && n == 3;
    Json out = fvector_report(family, n, fvector_tubings(degenerate ? dynkin_graph(FaceFamily::A, 4)
                                                                     : dynkin_graph(family, n)));
    if (degenerate) out["degenerate"] = "D3 = A3";
    return out.dump();
  }
  throw std::invalid_argument("method must be series or tubings");
}

std::string euler_json(const std::string& type, unsigned n, const std::string& method) {
  const FaceFamily family = parse_family(type);
  if (method == "series") return to_json(euler_from_series(family, n)).dump();
  if (method == "cells") return to_json(euler_cw(family, n)).dump();
  throw std::invalid_argument("method must be series or cells");
}

std::string series_json(const std::string& name, unsigned trunc, unsigned r, const std::string& reading) {
  if (reading != "standard" && reading != "literal") {
    throw std::invalid_argument("reading must be standard or literal");
  }
  const TruncatedSeries s =
      named_series(name, r, trunc, reading == "literal" ? GammaReading::Literal : GammaReading::Standard);
  return Json{{"name", name}, {"r", r}, {"trunc", trunc}, {"terms", to_json(s)}}.dump();
}

std::vector<std::string> building_set_text(unsigned r, unsigned p, unsigned n) {
  std::vector<std::string> out;
  for (const auto& e : building_set(GroupId(r, p, n))) out.push_back(e.to_string());
  return out;
}

std::size_t nested_set_count(unsigned r, unsigned p, unsigned n, std::size_t guard) {
  NestedSetComplex::Options options;
  options.guard = guard;
  return NestedSetComplex(GroupId(r, p, n), options).count();
}

py::dict result_dict(const CriterionResult& c) {
  py::dict d;
  d["id"] = c.id;
  d["title"] = c.title;
  d["passed"] = c.passed;
  d["seconds"] = c.seconds;
  d["limit_seconds"] = c.limit_seconds;
  d["detail"] = c.detail;
  return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Betti numbers and face counts of minimal wonderful models for G(r,p,n)";

  py::register_exception<GuardError>(m, "GuardError");
  py::register_exception<IntegralityError>(m, "IntegralityError");

  m.def("poincare_json", &poincare_json, py::arg("r"), py::arg("p"), py::arg("n"),
        py::arg("method") = "series", py::arg("guard") = kDefaultBuildingGuard);
  m.def("fvector_json", &fvector_json, py::arg("type"), py::arg("n"), py::arg("method") = "series");
  m.def("euler_json", &euler_json, py::arg("type"), py::arg("n"), py::arg("method") = "series");
  m.def("series_json", &series_json, py::arg("name"), py::arg("trunc"), py::arg("r") = 1,
        py::arg("reading") = "standard");
  m.def("building_set", &building_set_text, py::arg("r"), py::arg("p"), py::arg("n"));
  m.def("nested_set_count", &nested_set_count, py::arg("r"), py::arg("p"), py::arg("n"),
        py::arg("guard") = kDefaultBuildingGuard);
  m.def("kirkman_cayley", [](unsigned n, unsigned s) { return kirkman_cayley(n, s).get_str(); });
  m.def("count_plane_trees", [](unsigned n, unsigned s) { return count_plane_trees(n, s).get_str(); });
  m.def("criterion_count", [] { return kCriterionCount; });
  m.def("run_criterion", [](unsigned id) {
    CriterionResult r;
    {
      py::gil_scoped_release release;
      r = run_criterion(id);
    }
    return result_dict(r);
  });
}
