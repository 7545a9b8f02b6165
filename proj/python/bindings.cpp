#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "clifan/classifier.hpp"
#include "clifan/expr_parser.hpp"
#include "clifan/json_io.hpp"
#include "clifan/solver.hpp"
#include "clifan/verify.hpp"

namespace py = pybind11;
using namespace clifan;

namespace {

py::object to_python(const json& j) { return py::module_::import("json").attr("loads")(j.dump()); }

PsiOperator make_operator(const std::string& kind, int m, const std::string& phi, const std::string& psi, int k,
                          const std::vector<int>& subset) {
  const StructuralSet a = parse_set_spec(phi, m), b = parse_set_spec(psi, m);
  if (kind == "level") return PsiOperator::level_k(a, b, k);
  if (kind == "plus") return PsiOperator::plus(a, b);
  if (kind == "minus") return PsiOperator::minus(a, b);
  if (kind == "subset") return PsiOperator::restricted(a, b, subset);
  throw std::invalid_argument("unknown operator kind '" + kind + "'");
}

}  // namespace

PYBIND11_MODULE(_clifan, mod) {
  mod.doc() = "Exact Clifford analysis engine";

  py::register_exception<ParseError>(mod, "ParseError", PyExc_ValueError);

  mod.def("product", [](const std::string& a, const std::string& b, int m) {
    return format(parse_multivector(a, m) * parse_multivector(b, m));
  }, py::arg("a"), py::arg("b"), py::arg("m"));

  mod.def("format_field", [](const std::string& expr, int m) { return format(parse_field(expr, m)); },
          py::arg("expr"), py::arg("m"));

  mod.def("classify", [](const std::string& expr, int m, const std::string& phi, const std::string& psi) {
    return to_python(membership_to_json(classify(parse_set_spec(phi, m), parse_set_spec(psi, m), parse_field(expr, m))));
  }, py::arg("expr"), py::arg("m") = 3, py::arg("phi") = "standard", py::arg("psi") = "reversed");

  mod.def("apply_psi", [](const std::string& kind, const std::string& a, int m, const std::string& phi,
                          const std::string& psi, int k, const std::vector<int>& subset) {
    return format(apply(make_operator(kind, m, phi, psi, k, subset), parse_multivector(a, m)));
  }, py::arg("kind"), py::arg("a"), py::arg("m"), py::arg("phi") = "standard", py::arg("psi") = "standard",
     py::arg("k") = 1, py::arg("subset") = std::vector<int>{});

  mod.def("psi_rank", [](const std::string& kind, int m, const std::string& phi, const std::string& psi, int k,
                         const std::vector<int>& subset) {
    return rank(psi_matrix(make_operator(kind, m, phi, psi, k, subset)));
  }, py::arg("kind"), py::arg("m"), py::arg("phi") = "standard", py::arg("psi") = "standard", py::arg("k") = 1,
     py::arg("subset") = std::vector<int>{});

  mod.def("closed_form", [](int m, int j, int k) { return to_string(psi_k_closed_form(m, j, k)); },
          py::arg("m"), py::arg("j"), py::arg("k"));
  mod.def("hypergeometric_form", [](int m, int j, int k) { return to_string(psi_k_hypergeometric(m, j, k)); },
          py::arg("m"), py::arg("j"), py::arg("k"));

  mod.def("class_dimensions", [](int m, int d, const std::string& phi, const std::string& psi) {
    return to_python(dimensions_to_json(class_dimensions(parse_set_spec(phi, m), parse_set_spec(psi, m), d)));
  }, py::arg("m"), py::arg("d"), py::arg("phi") = "standard", py::arg("psi") = "reversed");

  mod.def("find_witness", [](const std::string& region, int m, int d, const std::string& phi,
                             const std::string& psi) -> py::object {
    const auto label = RegionLabel::parse(region);
    if (!label) throw std::invalid_argument("unknown region '" + region + "'");
    const auto w = find_region_witness(parse_set_spec(phi, m), parse_set_spec(psi, m), d, *label);
    if (!w) return py::none();
    return py::str(format(*w));
  }, py::arg("region"), py::arg("m"), py::arg("d"), py::arg("phi") = "standard", py::arg("psi") = "reversed");

  mod.def("converse_counterexample", [](int m, const std::string& phi) {
    return format(converse_counterexample(parse_set_spec(phi, m)));
  }, py::arg("m"), py::arg("phi") = "standard");

  mod.def("verify", [](const std::vector<int>& dimensions, int trials, std::uint64_t seed) {
    VerifyConfig config;
    config.dimensions = dimensions;
    config.trials = trials;
    config.seed = seed;
    return to_python(report_to_json(run_verification(config)));
  }, py::arg("dimensions") = std::vector<int>{2, 3}, py::arg("trials") = 5, py::arg("seed") = 1);

  mod.def("demo", [] {
    py::list out;
    for (const auto& c : run_demo()) {
      py::dict d;
      d["case"] = c.name;
      d["expected"] = c.expected;
      d["actual"] = c.actual;
      d["ok"] = c.ok;
      out.append(d);
    }
    return out;
  });
}
