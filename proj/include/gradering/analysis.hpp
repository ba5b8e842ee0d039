#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "gradering/classify.hpp"
#include "gradering/config.hpp"
#include "gradering/grading.hpp"

namespace gradering {

/// A per-element decomposition outcome for report serialization.
struct WitnessEntry {
  RingElement element;
  int degree = 0;            // meaningful for homogeneous entries
  std::optional<NilGoodWitness> witness;
};

/// Lazy, memoized derived data for one graded ring. Not thread-safe: each
/// analysis object is owned by a single worker; all data is value-computed
/// so two analyses of equal inputs agree exactly.
class GradedAnalysis {
 public:
  GradedAnalysis(GradedRing gr, Limits limits);

  const GradedRing& graded() const { return gr_; }
  const FiniteRing& ring() const { return gr_.ring(); }
  const Limits& limits() const { return limits_; }

  const ElementClasses& classes();
  const Bitset& jacobson();

  const std::vector<HomogeneousRightIdeal>& ideal_lattice();
  const std::vector<std::size_t>& maximal_ideal_indices();
  const Bitset& graded_jacobson();

  /// Identity-component subring data (computed in place, inside the parent).
  const Bitset& identity_component();
  const Bitset& identity_units();
  const Bitset& identity_jacobson();

  /// Nilpotent element indices ascending, per group degree.
  const std::vector<std::uint64_t>& nilpotents_of_degree(int g);
  /// All nilpotent element indices ascending.
  const std::vector<std::uint64_t>& nilpotents_ascending();

  /// Same-degree graded decomposition of a homogeneous element.
  std::optional<NilGoodWitness> graded_decomposition(
      const HomogeneousElement& hx);

  const PredicateReport& graded_nil_good();
  const PredicateReport& graded_fine();
  const PredicateReport& nil_good();           // the whole underlying ring
  const PredicateReport& identity_nil_good();  // the subring R_e
  bool identity_nil_clean();
  bool graded_local();
  bool jg_graded_nil();
  bool is_commutative();

  /// Graded witnesses for every homogeneous element, canonical order.
  const std::vector<WitnessEntry>& graded_witnesses();
  /// Plain nil-good witnesses for every element, canonical order.
  const std::vector<WitnessEntry>& element_witnesses();

  /// Force every cached field (used by the parallel warm phase).
  void warm_all();

 private:
  GradedRing gr_;
  Limits limits_;

  std::optional<ElementClasses> classes_;
  std::optional<Bitset> jacobson_;
  std::optional<std::vector<HomogeneousRightIdeal>> lattice_;
  std::optional<std::vector<std::size_t>> maximal_;
  std::optional<Bitset> graded_jacobson_;
  std::optional<Bitset> identity_component_;
  std::optional<Bitset> identity_units_;
  std::optional<Bitset> identity_jacobson_;
  std::map<int, std::vector<std::uint64_t>> nilpotents_by_degree_;
  std::optional<std::vector<std::uint64_t>> nilpotents_all_;
  std::optional<PredicateReport> graded_nil_good_;
  std::optional<PredicateReport> graded_fine_;
  std::optional<PredicateReport> nil_good_;
  std::optional<PredicateReport> identity_nil_good_;
  std::optional<bool> identity_nil_clean_;
  std::optional<bool> graded_local_;
  std::optional<bool> jg_graded_nil_;
  std::optional<std::vector<WitnessEntry>> graded_witnesses_;
  std::optional<std::vector<WitnessEntry>> element_witnesses_;
};

/// Nil-good check of an arbitrary subring view (used for identity
/// components): every element of `subring` is nilpotent or unit+nilpotent
/// with both parts inside the subring.
PredicateReport nil_good_in(const FiniteRing& ring,
                            const ElementClasses& classes,
                            const Bitset& subring);

/// Nil-clean check of a subring view: every element is idempotent +
/// nilpotent, all inside the subring.
bool nil_clean_in(const FiniteRing& ring, const ElementClasses& classes,
                  const Bitset& subring);

}  // namespace gradering
