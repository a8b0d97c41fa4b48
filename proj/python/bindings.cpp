#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "cli.hpp"
#include "multlab/acceptance.hpp"
#include "multlab/classify.hpp"
#include "multlab/corpus.hpp"
#include "multlab/errors.hpp"
#include "multlab/extalg.hpp"
#include "multlab/lindef.hpp"
#include "multlab/resolve.hpp"
#include "multlab/ringspec.hpp"
#include "multlab/series.hpp"

namespace py = pybind11;
using namespace multlab;

namespace {

struct Loaded {
  RingPresentation P;
  FiniteLocalAlgebra R;
};

Loaded load(const std::string& text) {
  RingSpec s = parse_ring_spec(text);
  RingPresentation P = s.presentation();
  FiniteLocalAlgebra R = build_finite_algebra(P, s.cap);
  return Loaded{std::move(P), std::move(R)};
}

py::dict classify_dict(const std::string& text, int cutoff) {
  Loaded L = load(text);
  ClassificationReport c = classify(L.R, cutoff);
  py::dict d;
  d["length"] = c.length;
  d["multiplicity"] = c.multiplicity;
  d["edim"] = c.edim;
  d["min_generators"] = c.min_generators;
  d["socle_dim"] = c.socle_dim;
  d["is_ci"] = c.is_ci;
  d["is_gorenstein"] = c.is_gorenstein;
  d["min_mult_cm"] = c.min_mult_cm;
  d["min_mult_g"] = c.min_mult_g;
  d["min_mult_ci"] = c.min_mult_ci;
  d["golod_witness"] = c.golod_witness;
  d["koszul_witness"] = c.koszul_witness;
  d["froberg"] = c.froberg;
  return d;
}

}  // namespace

PYBIND11_MODULE(_multlab, m) {
  m.doc() = "exact GF(p) homological algebra for artinian local rings";

  py::register_exception<Error>(m, "MultlabError", PyExc_ValueError);

  m.def(
      "run_cli",
      [](const std::vector<std::string>& args) {
        std::ostringstream out, err;
        int code = run_cli(args, out, err);
        return py::make_tuple(code, out.str(), err.str());
      },
      py::arg("args"), "Run the command-line front end in process; returns (exit code, stdout, stderr).");

  m.def("corpus_names", [] {
    std::vector<std::string> names;
    for (const auto& r : corpus()) names.push_back(r.name);
    return names;
  });
  m.def("corpus_text", [](const std::string& name) { return corpus_ring(name).text; }, py::arg("name"));

  m.def("hilbert_function", [](const std::string& text) { return load(text).R.filtration_dims(); },
        py::arg("ring"));
  m.def(
      "betti_numbers",
      [](const std::string& text, int hom) { return betti_table(resolve_residue_field(load(text).R, hom)).local; },
      py::arg("ring"), py::arg("hom") = kDefaultHomCutoff);
  m.def("classify", &classify_dict, py::arg("ring"), py::arg("cutoff") = kDefaultHomCutoff);
  m.def(
      "linearity_defect",
      [](const std::string& text, int hom) {
        LinDefReport r = linearity_defect_residue(load(text).R, hom);
        return py::make_tuple(to_string(r.verdict), r.value);
      },
      py::arg("ring"), py::arg("hom") = kDefaultHomCutoff);
  m.def(
      "theorem_consistent",
      [](const std::string& text, int which, int cutoff) {
        Loaded L = load(text);
        switch (which) {
          case 1: return theorem1_check(L.P, L.R, cutoff).consistent();
          case 2: return theorem2_check(L.P, L.R, cutoff).consistent();
          case 3: return theorem3_check(L.R, cutoff).consistent();
        }
        throw py::value_error("theorem must be 1, 2 or 3");
      },
      py::arg("ring"), py::arg("theorem"), py::arg("cutoff") = kDefaultHomCutoff);
  m.def("acceptance", [] {
    std::vector<std::tuple<int, std::string, bool, std::string>> rows;
    for (const auto& c : run_acceptance()) rows.emplace_back(c.id, c.title, c.pass, c.detail);
    return rows;
  });
}
