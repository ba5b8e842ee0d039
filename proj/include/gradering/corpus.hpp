#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "gradering/config.hpp"
#include "gradering/constructions.hpp"
#include "gradering/grading.hpp"

namespace gradering {

struct CorpusGenerators {
  bool cyclic = true;
  bool truncated = true;
  bool trivial_extensions = true;
  bool matrix = true;
  bool group_rings = true;
  bool products = true;
  bool quotients = true;
};

struct CorpusSpec {
  CorpusGenerators generators;
  int cyclic_max = 16;
  std::uint64_t matrix_base_max_order = 9;
  /// Corpus-wide caps. The default ring cap is higher than the CLI default
  /// because the catalog deliberately includes a few thousands-of-elements
  /// instances; it is echoed into report headers.
  Limits limits = [] {
    Limits l;
    l.max_ring_order = 32768;
    return l;
  }();
  /// Reserved for randomized grading sampling; the default catalog is fully
  /// deterministic and ignores it.
  std::uint64_t seed = 0;
};

/// A corpus entry: the graded ring plus how it was built, so theorem
/// hypotheses that quantify over constructions ("R is a trivial extension of
/// A", "R[H] over ...") can bind the ingredients.
struct CorpusInstance {
  std::string name;
  GradedRing graded;
  /// direct | truncated_poly | coarsen | trivial_extension | matrix |
  /// group_ring | group_ring_coarse | product | quotient
  std::string construction;
  std::shared_ptr<const GradedRing> base;   // construction input, if any
  std::shared_ptr<const GradedRing> base2;  // right factor of a product
  std::vector<int> subgroup;                // group_ring_coarse / coarsen H
  std::optional<MatrixGradingSpec> matrix_spec;
  std::optional<int> module_degree;         // trivial extension placement
  std::optional<int> trunc_m;
  std::optional<Bitset> quotient_ideal;     // ideal inside base's ring
};

struct CorpusBuildResult {
  std::vector<CorpusInstance> instances;
  /// (name, reason) pairs for catalog entries skipped by caps.
  std::vector<std::pair<std::string, std::string>> skipped;
};

/// Deterministic catalog; every instance passes grading validation by
/// construction. Cap violations skip the entry and log it rather than fail.
CorpusBuildResult build_corpus(const CorpusSpec& spec);

}  // namespace gradering
