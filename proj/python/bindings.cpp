#include <pybind11/pybind11.h>
#include <pybind11/stl.h>
#include <pybind11/stl/filesystem.h>

#include "ontodiv/division.hpp"
#include "ontodiv/errors.hpp"
#include "ontodiv/metrics.hpp"
#include "ontodiv/ofn.hpp"
#include "ontodiv/stemmer.hpp"

namespace py = pybind11;
using namespace ontodiv;

namespace {

using MappingTuple = std::tuple<std::string, std::string, std::string, double>;

std::vector<MappingTuple> to_tuples(const Alignment& a) {
  std::vector<MappingTuple> out;
  for (const auto& m : a) {
    out.emplace_back(m.source, m.target, std::string(relation_symbol(m.relation)), m.confidence);
  }
  return out;
}

// Accepts (source, target) pairs or full (source, target, relation, confidence) tuples.
Alignment from_python(const py::iterable& items) {
  Alignment a;
  for (const auto& item : items) {
    const auto t = item.cast<py::sequence>();
    if (t.size() < 2 || t.size() > 4) throw InputError("mapping tuples have 2 to 4 fields");
    Mapping m{t[0].cast<std::string>(), t[1].cast<std::string>()};
    if (t.size() > 2) m.relation = parse_relation(t[2].cast<std::string>());
    if (t.size() > 3) m.confidence = t[3].cast<double>();
    a.insert(std::move(m));
  }
  return a;
}

std::vector<std::string> signature_iris(const Ontology& o) {
  std::vector<std::string> out;
  for (const auto& e : o.signature()) out.push_back(e.iri);
  return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Lexical division of ontology matching tasks";

  static py::exception<InputError> input_error(m, "InputError", PyExc_ValueError);
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const InputError& e) {
      input_error(e.what());
    }
  });

  py::class_<Ontology>(m, "Ontology")
      .def_property_readonly("iri", &Ontology::iri)
      .def_property_readonly("signature", &signature_iris)
      .def_property_readonly("axiom_count", [](const Ontology& o) { return o.axioms().size(); })
      .def("__len__", [](const Ontology& o) { return o.signature().size(); })
      .def("__contains__", [](const Ontology& o, const std::string& iri) {
        return o.find(iri).has_value();
      })
      .def("to_ofn", &serialize_ontology)
      .def("__repr__", [](const Ontology& o) {
        return "<Ontology " + o.iri() + " |Sig|=" + std::to_string(o.signature().size()) + ">";
      });

  py::class_<MatchingTask>(m, "MatchingTask")
      .def_readonly("id", &MatchingTask::id)
      .def_readonly("source", &MatchingTask::source)
      .def_readonly("target", &MatchingTask::target)
      .def_property_readonly("candidates",
                             [](const MatchingTask& t) { return to_tuples(t.candidates); });

  py::class_<Division>(m, "Division")
      .def_readonly("n", &Division::n)
      .def_readonly("subtasks", &Division::subtasks)
      .def("__len__", [](const Division& d) { return d.subtasks.size(); });

  m.def("parse_ontology", [](std::string_view text) { return parse_ontology(text); },
        py::arg("text"));
  m.def("load_ontology", [](const std::filesystem::path& p) { return load_ontology(p); },
        py::arg("path"));
  m.def("porter_stem", &porter_stem, py::arg("word"));
  m.def("read_alignment", [](const std::filesystem::path& p) { return to_tuples(read_alignment(p)); },
        py::arg("path"));

  m.def(
      "lexindex",
      [](const Ontology& o1, const Ontology& o2, std::size_t alpha, std::size_t max_subsets) {
        LexConfig cfg;
        cfg.alpha = alpha;
        cfg.max_subsets = max_subsets;
        std::vector<std::tuple<std::vector<std::string>, std::vector<std::string>,
                               std::vector<std::string>>> out;
        const auto index = build_lexi(o1, o2, cfg);
        for (const auto& e : index.entries()) {
          std::vector<std::string> s, t;
          for (const auto& x : e.value.source) s.push_back(x.iri);
          for (const auto& x : e.value.target) t.push_back(x.iri);
          out.emplace_back(e.key.words, std::move(s), std::move(t));
        }
        return out;
      },
      py::arg("source"), py::arg("target"), py::arg("alpha") = 60, py::arg("max_subsets") = 50);

  m.def(
      "divide",
      [](const Ontology& o1, const Ontology& o2, std::size_t n, std::uint64_t seed,
         std::size_t dim, std::size_t epochs, std::size_t alpha, std::size_t threads) {
        DivisionConfig cfg;
        cfg.training.seed = seed;
        cfg.training.dim = dim;
        cfg.training.epochs = epochs;
        cfg.lex.alpha = alpha;
        cfg.threads = threads;
        return divide(o1, o2, n, cfg);
      },
      py::arg("source"), py::arg("target"), py::arg("n"), py::arg("seed") = 0,
      py::arg("dim") = 64, py::arg("epochs") = 100, py::arg("alpha") = 60,
      py::arg("threads") = 0, py::call_guard<py::gil_scoped_release>());

  m.def(
      "write_division",
      [](const Division& d, const Ontology& o1, const Ontology& o2,
         const std::filesystem::path& dir) { write_division(d, o1, o2, dir); },
      py::arg("division"), py::arg("source"), py::arg("target"), py::arg("directory"));

  m.def(
      "coverage_ratio",
      [](const Division& d, const py::iterable& reference) {
        return coverage_ratio(d, from_python(reference));
      },
      py::arg("division"), py::arg("reference"));
  m.def(
      "size_ratio",
      [](const Division& d, const Ontology& o1, const Ontology& o2) {
        return size_ratio_division(d, o1, o2);
      },
      py::arg("division"), py::arg("source"), py::arg("target"));
  m.def(
      "precision_recall_f",
      [](const py::iterable& system, const py::iterable& reference) {
        const auto r = precision_recall_f(from_python(system), from_python(reference));
        return std::make_tuple(r.precision, r.recall, r.f_measure);
      },
      py::arg("system"), py::arg("reference"));
}
