#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "germkit/corpus.hpp"
#include "germkit/errors.hpp"

namespace py = pybind11;
using namespace germkit;

namespace {

std::string dump(const Json& j) { return j.dump(); }

std::string flip(std::int64_t index, const std::string& kc, const std::vector<std::int64_t>& plus,
                 const std::vector<std::string>& w) {
  FlipGermData d{index, {}, plus};
  for (const auto& s : w) d.w_values.push_back(parse_rational(s));
  return to_string(flip_transfer(d, parse_rational(kc)));
}

}  // namespace

PYBIND11_MODULE(_germkit, m) {
  m.doc() = "Exact computations for extremal curve germs (JSON-returning core)";

  py::register_exception<InputError>(m, "InputError", PyExc_ValueError);
  py::register_exception<InternalError>(m, "InternalError", PyExc_RuntimeError);

  m.def(
      "analyze",
      [](const std::string& text, std::optional<std::int64_t> index, bool generator) {
        AnalyzeOptions opts;
        opts.index = index;
        opts.generator = generator;
        return dump(analyze(parse_graph(text), opts));
      },
      py::arg("graph_text"), py::arg("index") = py::none(), py::arg("generator") = true);

  m.def(
      "verify_paper", [](std::int64_t sweep_max) { return dump(verify_paper(sweep_max).to_json()); },
      py::arg("sweep_max") = 49);

  m.def("quot_report", [](const std::string& chain) { return dump(chain_report(parse_chain(chain))); },
        py::arg("chain"));
  m.def("tchain_report", [](std::int64_t n, std::int64_t q) { return dump(quot_report(CycQuot::make(n, q))); },
        py::arg("n"), py::arg("q"));

  m.def(
      "classify",
      [](const std::string& text) {
        GermDescriptor d = parse_descriptor(text);
        return dump(to_json(validate_against_table(d), d));
      },
      py::arg("descriptor_text"));

  m.def("flip_transfer", &flip, py::arg("index"), py::arg("kc"), py::arg("plus_indices"),
        py::arg("w") = std::vector<std::string>{});

  m.def(
      "ic_disproof", [](std::int64_t a, std::int64_t b, std::int64_t c) { return dump(to_json(ic_disproof(a, b, c))); },
      py::arg("m"), py::arg("mprime"), py::arg("aprime"));
  m.def(
      "kad_disproof",
      [](std::int64_t a, std::int64_t b, std::int64_t c, const std::string& subcase) {
        return dump(to_json(kad_disproof(a, b, c, parse_subcase(subcase))));
      },
      py::arg("m"), py::arg("mprime"), py::arg("aprime"), py::arg("subcase"));

  m.def("builtin_file", [](const std::string& name) { return Corpus::builtin().file(name); }, py::arg("name"));
}
