// _core: thin JSON-string bridge to the exact Hodge decomposition engine.
// Heavy lifting stays in C++; the python package parses the returned JSON.
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <string>
#include <vector>

#include "hodgeham/hochschild.hpp"
#include "hodgeham/report.hpp"

namespace py = pybind11;

namespace {

std::string hodge_table_text(int k, int n_max, int deg_max,
                             const std::string& module, uint64_t cap, int jobs,
                             bool csv) {
  const hodgeham::ModuleSpec mod = hodgeham::parse_module_spec(module, k);
  const hodgeham::HodgeReport rep =
      hodgeham::hodge_table(k, n_max, deg_max, mod, cap, jobs);
  return csv ? rep.to_csv() : rep.to_json();
}

std::string run_suite_text(const std::string& suite, int k, int n_max,
                           int deg_max, int p) {
  int report_k = 1;
  const std::vector<hodgeham::CheckResult> checks =
      hodgeham::run_named_suite(suite, k, n_max, deg_max, p, &report_k);
  return hodgeham::checks_report(report_k,
                                 hodgeham::ModuleSpec::regular(report_k),
                                 checks)
      .to_json();
}

std::vector<int> derivation_norms(int p, int n_max) {
  std::vector<int> norms;
  norms.reserve(n_max);
  for (int deg = 1; deg <= n_max; ++deg)
    norms.push_back(hodgeham::derivation_block_norm(p, deg));
  return norms;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() =
      "Exact Hodge decomposition of Hochschild homology for monomial "
      "convolution algebras";

  m.def("hodge_table_json", &hodge_table_text, py::arg("k"), py::arg("n_max"),
        py::arg("deg_max"), py::arg("module") = "regular",
        py::arg("cap") = 200000, py::arg("jobs") = 1, py::arg("csv") = false,
        py::call_guard<py::gil_scoped_release>(),
        "Dimension table with embedded self-checks, as a JSON (or CSV) "
        "string.");

  m.def("run_suite_json", &run_suite_text, py::arg("suite"), py::arg("k") = -1,
        py::arg("n_max") = -1, py::arg("deg_max") = -1, py::arg("p") = -1,
        py::call_guard<py::gil_scoped_release>(),
        "Run a named verification suite; negative ranges pick the suite "
        "default.");

  m.def("derivation_norms", &derivation_norms, py::arg("p"), py::arg("n_max"),
        "Operator norms of the p-th coordinate derivation on degree blocks "
        "1..n_max.");
}
