#pragma once

#include <optional>
#include <string>

#include "json.hpp"

#include "gradering/analysis.hpp"
#include "gradering/config.hpp"
#include "gradering/constructions.hpp"
#include "gradering/corpus.hpp"
#include "gradering/grading.hpp"
#include "gradering/laurent.hpp"
#include "gradering/theorems.hpp"

namespace gradering {

using Json = nlohmann::json;

/// File I/O. Writes go through a temp file + rename so readers never see a
/// partial report.
Json load_json_file(const std::string& path);
void save_json_file(const std::string& path, const Json& j);

FiniteGroup parse_group(const Json& j, const Limits& limits);
Json group_to_json(const FiniteGroup& g);

RingSpec parse_ring_spec(const Json& j);
FiniteRing parse_ring(const Json& j, const Limits& limits);
Json ring_to_json(const FiniteRing& r);

Grading parse_grading(const Json& j, const FiniteRing& ring,
                      const Limits& limits);
Json grading_to_json(const Grading& g);

/// Self-contained graded ring file: {"ring": {...}, "grading": {...}}.
GradedRing parse_graded_ring(const Json& j, const Limits& limits);
Json graded_ring_to_json(const GradedRing& gr);

/// Symbolic file: {"kind": "laurent" | "polynomial", "base": {...}}.
SymbolicGradedRing parse_symbolic(const Json& j, const Limits& limits);
Json symbolic_to_json(const SymbolicGradedRing& s);

RingElement parse_element(const Json& j, const FiniteRing& ring);
Json element_to_json(const RingElement& x);

Json limits_to_json(const Limits& l);

/// Dispatch of {"construct": ...} specs. Exactly one of the two results is
/// set: laurent/polynomial specs produce a symbolic ring, everything else a
/// finite graded ring.
struct ConstructResult {
  std::optional<GradedRing> graded;
  std::optional<SymbolicGradedRing> symbolic;
};
ConstructResult run_construct(const Json& spec, const Limits& limits);

/// Markdown rendering of a JSON report: key/value sections plus tables for
/// per-theorem and per-instance arrays. The JSON stays the source of truth.
std::string report_markdown(const Json& report);

/// Corpus spec file: generator toggles plus caps, all optional with the
/// defaults of CorpusSpec. Unknown keys are errors.
CorpusSpec parse_corpus_spec(const Json& j);
Json corpus_spec_to_json(const CorpusSpec& s);

Json nil_good_witness_to_json(const NilGoodWitness& w);

/// Replayable witness bundle: {"graded_ring": {...}, "element"?, "degree"?}.
/// `classify` accepts these back and re-derives the verdict.
Json witness_bundle_to_json(const GradedRing& gr,
                            const std::optional<RingElement>& element,
                            const std::optional<int>& degree);

/// Full classification report body for a finite graded ring: structure
/// echo, predicate flags with counterexamples, both radicals, and the
/// per-homogeneous-element witness table (elided past `elide_above`).
Json classify_report(GradedAnalysis& analysis, std::size_t elide_above = 1024);
/// Classification of a symbolic Laurent/polynomial ring.
Json classify_symbolic_report(const SymbolicGradedRing& s);

Json theorem_report_to_json(const TheoremReport& rep, bool with_timings);
Json suite_report_to_json(const SuiteReport& suite, bool with_timings);
/// Markdown-facing reshaping of a suite report: one row per theorem with the
/// columns id, anchor, instances, non-vacuous, violations, runtime-ms.
Json suite_report_markdown_view(const SuiteReport& suite);

Json search_outcome_to_json(const SearchOutcome& outcome);
Json example_audit_to_json(const ExampleAudit& audit);

}  // namespace gradering
