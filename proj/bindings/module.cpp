// Python bindings: the main operations as JSON-text-in, JSON-text-out
// functions. The Python package wraps them with json.loads/dumps so callers
// work with plain dicts; keeping the boundary textual means the reports match
// the CLI byte for byte.

#include <pybind11/pybind11.h>

#include <thread>

#include "gradering/analysis.hpp"
#include "gradering/corpus.hpp"
#include "gradering/errors.hpp"
#include "gradering/json_io.hpp"
#include "gradering/theorems.hpp"

namespace py = pybind11;

namespace {

using gradering::Json;

gradering::Limits make_limits(std::uint64_t max_order,
                              std::size_t lattice_cap) {
  gradering::Limits limits;
  if (max_order > 0) limits.max_ring_order = max_order;
  if (lattice_cap > 0) limits.ideal_lattice_cap = lattice_cap;
  return limits;
}

int pool_size(int workers) {
  if (workers > 0) return workers;
  unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : static_cast<int>(hw);
}

Json parse_text(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const std::exception& e) {
    gradering::fail("InvalidJson", e.what());
  }
}

std::string validate_text(const std::string& text, std::uint64_t max_order) {
  gradering::Limits limits = make_limits(max_order, 0);
  Json in = parse_text(text);
  Json report;
  report["command"] = "validate";
  if (in.is_object() && in.contains("grading")) {
    gradering::GradedRing gr = gradering::parse_graded_ring(in, limits);
    report["kind"] = "graded_ring";
    report["ring_order"] = gr.ring().order();
    report["group_order"] = gr.group().order();
    report["support"] = Json(gr.support());
  } else {
    gradering::FiniteRing ring = gradering::parse_ring(in, limits);
    report["kind"] = "ring";
    report["ring_order"] = ring.order();
  }
  report["valid"] = true;
  return report.dump();
}

std::string classify_text(const std::string& text, std::uint64_t max_order,
                          std::size_t lattice_cap) {
  gradering::Limits limits = make_limits(max_order, lattice_cap);
  Json in = parse_text(text);
  Json report;
  report["command"] = "classify";

  if (in.is_object() && in.contains("kind")) {
    gradering::SymbolicGradedRing s = gradering::parse_symbolic(in, limits);
    report.update(gradering::classify_symbolic_report(s));
    report["command"] = "classify";
    return report.dump();
  }

  gradering::GradedRing gr = [&] {
    if (in.is_object() && in.contains("graded_ring"))
      return gradering::parse_graded_ring(in.at("graded_ring"), limits);
    if (in.is_object() && in.contains("construct")) {
      gradering::ConstructResult built = gradering::run_construct(in, limits);
      if (!built.graded)
        gradering::fail("InvalidJson",
                        "construct: symbolic constructs cannot be classified "
                        "through this path; pass {kind, base} directly");
      return *built.graded;
    }
    return gradering::parse_graded_ring(in, limits);
  }();
  gradering::GradedAnalysis analysis(gr, limits);
  report.update(gradering::classify_report(analysis));
  report["command"] = "classify";

  if (in.is_object() && in.contains("graded_ring") && in.contains("element")) {
    gradering::RingElement x =
        gradering::parse_element(in.at("element"), gr.ring());
    Json elem;
    elem["element"] = gradering::element_to_json(x);
    std::uint64_t idx = gr.ring().index_of(x);
    elem["is_unit"] = analysis.classes().units.test(idx);
    elem["is_nilpotent"] = analysis.classes().nilpotents.test(idx);
    if (gr.is_homogeneous(x)) {
      int degree = *gr.degree_of(x);
      elem["degree"] = degree;
      auto witness = analysis.graded_decomposition(
          gradering::HomogeneousElement{degree, x});
      elem["graded_nil_good"] = witness.has_value();
      elem["witness"] = witness
                            ? gradering::nil_good_witness_to_json(*witness)
                            : Json(nullptr);
    } else {
      elem["homogeneous"] = false;
    }
    report["replayed_element"] = elem;
  }
  return report.dump();
}

std::string construct_text(const std::string& text, std::uint64_t max_order) {
  gradering::Limits limits = make_limits(max_order, 0);
  gradering::ConstructResult built =
      gradering::run_construct(parse_text(text), limits);
  Json out = built.graded ? gradering::graded_ring_to_json(*built.graded)
                          : gradering::symbolic_to_json(*built.symbolic);
  return out.dump();
}

gradering::VerifySession make_session(std::uint64_t max_order, int workers) {
  gradering::CorpusSpec spec;
  if (max_order > 0) spec.limits.max_ring_order = max_order;
  gradering::CorpusBuildResult corpus = gradering::build_corpus(spec);
  gradering::VerifySession session(std::move(corpus), spec.limits);
  session.warm(pool_size(workers));
  return session;
}

std::string verify_text(const std::string& theorem, std::uint64_t max_order,
                        int workers, bool timings) {
  std::vector<std::string> ids = gradering::resolve_theorem_ids(theorem);
  gradering::VerifySession session = make_session(max_order, workers);
  gradering::SuiteReport suite = gradering::verify_suite(ids, session);
  return gradering::suite_report_to_json(suite, timings).dump();
}

std::string search_text(const std::string& hypothesis,
                        const std::string& conclusion,
                        std::uint64_t max_order, int workers) {
  gradering::VerifySession session = make_session(max_order, workers);
  gradering::SearchOutcome outcome =
      gradering::search_counterexample(hypothesis, conclusion, session);
  return gradering::search_outcome_to_json(outcome).dump();
}

std::string corpus_text(std::uint64_t max_order) {
  gradering::CorpusSpec spec;
  if (max_order > 0) spec.limits.max_ring_order = max_order;
  gradering::CorpusBuildResult corpus = gradering::build_corpus(spec);
  Json index;
  index["command"] = "corpus";
  index["spec"] = gradering::corpus_spec_to_json(spec);
  Json rows = Json::array();
  for (const auto& inst : corpus.instances) {
    Json row;
    row["name"] = inst.name;
    row["construction"] = inst.construction;
    row["ring_order"] = inst.graded.ring().order();
    row["group_order"] = inst.graded.group().order();
    rows.push_back(std::move(row));
  }
  index["instances"] = rows;
  Json skipped = Json::array();
  for (const auto& [name, reason] : corpus.skipped) {
    Json row;
    row["name"] = name;
    row["reason"] = reason;
    skipped.push_back(std::move(row));
  }
  index["skipped"] = skipped;
  index["size"] = corpus.instances.size();
  return index.dump();
}

std::string audit_text(const std::string& which, std::uint64_t max_order) {
  gradering::Limits limits = make_limits(max_order, 0);
  gradering::ExampleAudit audit;
  if (which == "e4.3" || which == "e4_3") {
    audit = gradering::audit_example_e4_3(limits);
  } else if (which == "e3.3" || which == "e3_3") {
    audit = gradering::audit_example_e3_3(limits);
  } else {
    gradering::fail("InvalidJson",
                    "example: unknown audit '" + which +
                        "' (known: e4.3, e3.3)");
  }
  return gradering::example_audit_to_json(audit).dump();
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "exact computations in finite group-graded rings (JSON-text API)";

  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const gradering::Error& e) {
      PyErr_SetString(PyExc_ValueError, e.what());
    }
  });

  m.def("validate", &validate_text, py::arg("text"), py::arg("max_order") = 0,
        "Validate a ring or graded-ring JSON document; returns a report.");
  m.def("classify", &classify_text, py::arg("text"), py::arg("max_order") = 0,
        py::arg("lattice_cap") = 0,
        "Decide every predicate for a graded ring, symbolic ring, or witness "
        "bundle given as JSON text.");
  m.def("construct", &construct_text, py::arg("text"),
        py::arg("max_order") = 0,
        "Build a ring from a construction spec; returns the ring JSON.");
  m.def("verify", &verify_text, py::arg("theorem") = "all",
        py::arg("max_order") = 0, py::arg("workers") = 0,
        py::arg("timings") = false,
        "Evaluate registered statements over the default corpus.");
  m.def("search", &search_text, py::arg("hypothesis"), py::arg("conclusion"),
        py::arg("max_order") = 0, py::arg("workers") = 0,
        "Hunt for a counterexample to a predicate implication.");
  m.def("corpus", &corpus_text, py::arg("max_order") = 0,
        "Build the default corpus and list its instances.");
  m.def("audit", &audit_text, py::arg("example"), py::arg("max_order") = 0,
        "Re-derive a worked example and compare with the recorded claim.");
}
