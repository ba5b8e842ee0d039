#pragma once

#include <cstddef>
#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "gradering/analysis.hpp"
#include "gradering/corpus.hpp"
#include "gradering/laurent.hpp"

namespace gradering {

/// One registered statement: a hypothesis/conclusion predicate pair evaluated
/// over corpus instances (plus whatever auxiliary objects the statement
/// quantifies over: ideals, subgroups, matrix sizes, module placements).
struct TheoremSpec {
  std::string id;          // e.g. "P3.2.1", "T3.1.fwd"
  std::string anchor;      // citation + verbatim statement quote
  std::string hypothesis;  // prose rendering of the evaluated predicate
  std::string conclusion;
  /// "in-scope", or "out-of-scope: <reason>" for registered stubs.
  std::string scope;
};

/// Outcome of one (instance, auxiliary binding) evaluation.
struct InstanceOutcome {
  std::string instance;  // corpus name plus |aux suffix where applicable
  /// "hypothesis-false" | "holds" | "VIOLATED" | "skipped"
  std::string outcome;
  std::string detail;  // witness rendering or skip reason
  /// Replay bundle, set for VIOLATED rows.
  std::shared_ptr<const GradedRing> witness_ring;
  std::optional<RingElement> witness_element;
  std::optional<int> witness_degree;
};

struct TheoremReport {
  TheoremSpec spec;
  std::vector<InstanceOutcome> outcomes;
  std::size_t instances = 0;  // rows evaluated, including skipped
  std::size_t non_vacuous = 0;
  std::size_t violations = 0;
  std::size_t skipped = 0;
  double runtime_ms = 0.0;
};

struct SuiteReport {
  std::vector<std::string> finitizations;
  std::size_t corpus_size = 0;
  std::vector<std::pair<std::string, std::string>> corpus_skipped;
  std::vector<TheoremReport> theorems;
  std::size_t violations_total = 0;
  double runtime_ms = 0.0;
};

/// Full registry in paper order (biconditionals split into .fwd/.bwd).
const std::vector<TheoremSpec>& theorem_registry();

/// Hypotheses over infinite notions, made finite; printed in report headers.
const std::vector<std::string>& finitization_notes();

/// Resolve "all", an exact id, or a parent id of a .fwd/.bwd pair into
/// registry ids; throws UnknownTheoremId otherwise.
std::vector<std::string> resolve_theorem_ids(const std::string& id);

/// Shared evaluation state: the corpus with one cached analysis per instance
/// and a cache of derived objects (conclusion rings, coarsenings, quotients)
/// keyed by deterministic strings. Evaluation itself is sequential; warm()
/// precomputes the per-instance analyses with a worker pool, which cannot
/// change any reported value.
class VerifySession {
 public:
  VerifySession(CorpusBuildResult corpus, Limits limits);

  std::size_t size() const { return corpus_.instances.size(); }
  const CorpusInstance& instance(std::size_t i) const {
    return corpus_.instances[i];
  }
  const std::vector<std::pair<std::string, std::string>>& corpus_skipped()
      const {
    return corpus_.skipped;
  }
  const Limits& limits() const { return limits_; }

  GradedAnalysis& analysis(std::size_t i);
  /// Analysis of the given instance's graded ring shared for witness bundles.
  std::shared_ptr<const GradedRing> ring_of(std::size_t i);

  /// Cached analysis of a derived graded ring. Returns nullptr and fills
  /// skip_reason when the build trips an order cap; rethrows other errors.
  GradedAnalysis* derived(const std::string& key,
                          const std::function<GradedRing()>& build,
                          std::string* skip_reason);

  void warm(int workers);

 private:
  CorpusBuildResult corpus_;
  Limits limits_;
  std::vector<std::unique_ptr<GradedAnalysis>> analyses_;
  std::vector<std::shared_ptr<const GradedRing>> shared_rings_;
  struct DerivedEntry {
    std::unique_ptr<GradedAnalysis> analysis;
    std::string skip_reason;
  };
  std::map<std::string, DerivedEntry> derived_;
};

/// Evaluate one registered statement over the corpus.
TheoremReport verify_theorem(const std::string& id, VerifySession& session);

/// Evaluate a list of ids (from resolve_theorem_ids) into one suite report.
SuiteReport verify_suite(const std::vector<std::string>& ids,
                         VerifySession& session);

// ---------------------------------------------------------------------------
// Counterexample search over named predicates.

/// Registered predicate names usable in implications.
const std::vector<std::string>& search_predicate_names();

struct SearchOutcome {
  std::string hypothesis;
  std::string conclusion;
  bool found = false;
  std::string instance;  // witness instance name when found
  std::string kind;      // "finite" | "symbolic"
  std::shared_ptr<const GradedRing> ring;      // finite witness
  std::optional<SymbolicGradedRing> symbolic;  // symbolic witness
  std::optional<RingElement> element;  // conclusion counterexample element
  std::optional<int> degree;
  std::string symbolic_element;      // e.g. "1+X"
  std::vector<std::string> argument;  // symbolic justification lines
  std::vector<std::string> notes;     // undecided instances, fallbacks taken
};

/// First corpus instance (canonical order) satisfying the hypothesis and
/// violating the conclusion; falls back to the symbolic registry (Laurent and
/// polynomial rings over small bases) when the finite corpus has none.
SearchOutcome search_counterexample(const std::string& hypothesis,
                                    const std::string& conclusion,
                                    VerifySession& session);

// ---------------------------------------------------------------------------
// Worked-example audits. The engine's verdicts are computed from scratch;
// the quoted claim is recorded as text and compared, so a disagreement shows
// up as a flag rather than a crash or a hard-coded expectation.

struct ExampleAudit {
  std::string example;
  std::string paper_claim;
  /// The audited element and its verdicts.
  RingElement element;
  int element_degree = 0;
  bool element_graded_nil_good = false;
  std::optional<NilGoodWitness> graded_witness;  // same-degree decomposition
  std::optional<NilGoodWitness> plain_witness;   // whole-ring decomposition
  /// Ring-level verdicts for context.
  bool ring_graded_nil_good = false;
  bool ring_nil_good = false;
  std::optional<RingElement> ring_counterexample;
  std::optional<int> ring_counterexample_degree;
  bool paper_discrepancy = false;
  std::vector<std::string> notes;
};

/// M = [[(1,0),(0,0)],[(0,0),(0,0)]] in M_2(Z2 x Z2 trivial extension)(e,e).
ExampleAudit audit_example_e4_3(const Limits& limits);

/// diag(1,0) in checkerboard-graded M_2(Z2).
ExampleAudit audit_example_e3_3(const Limits& limits);

}  // namespace gradering
