#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "gradering/abelian.hpp"
#include "gradering/finite_ring.hpp"
#include "gradering/grading.hpp"

namespace gradering {

/// Units, nilpotents and idempotents of a finite ring, with inverse and
/// nilpotency-index tables. In the order-1 ring the single element counts as
/// unit, nilpotent and idempotent at once; everywhere else units and
/// nilpotents are disjoint.
struct ElementClasses {
  Bitset units;
  Bitset nilpotents;
  Bitset idempotents;
  std::vector<std::uint64_t> inverse_of;   // defined where units is set
  std::vector<int> nilpotency_index;       // defined where nilpotents is set
};

/// Classify every element by iterating its powers: reaching unity proves a
/// unit (with the previous power as two-sided inverse), reaching zero proves
/// nilpotence, and any other repeat proves neither.
ElementClasses element_classes(const FiniteRing& ring);

/// J of the subring given by `subring` (an additive subgroup containing
/// unity, closed under multiplication): the quasi-regular set
/// {x in S : for all a in S, 1 - a*x is a unit of S}. `subring_units` must be
/// the units of the subring (for the identity component of a grading that is
/// U(R) intersected with the component). The result is asserted to be a
/// two-sided ideal of the subring.
Bitset jacobson_radical_in(const FiniteRing& ring, const Bitset& subring,
                           const Bitset& subring_units);

/// J(R) itself.
Bitset jacobson_radical(const FiniteRing& ring, const ElementClasses& classes);

/// Nilpotent-or-unit-plus-nilpotent decomposition witness.
struct NilGoodWitness {
  enum class Kind { Nilpotent, UnitPlusNilpotent };
  Kind kind;
  RingElement nilpotent_part;
  std::optional<RingElement> unit_part;
  int nilpotency_index;
};

/// Decompose x as nilpotent, or as unit + nilpotent with the nilpotent part
/// drawn from `nilpotent_pool` (element indices, scanned in the given order).
/// Nilpotence is checked first; ties are broken by the smallest nilpotent
/// part, so reports are canonical.
std::optional<NilGoodWitness> nil_good_decomposition(
    const FiniteRing& ring, const ElementClasses& classes,
    const RingElement& x, const std::vector<std::uint64_t>& nilpotent_pool,
    const Bitset& allowed_units);

/// Outcome of a ring-level predicate: when false, the first failing element
/// in canonical order is recorded.
struct PredicateReport {
  bool holds = true;
  std::optional<RingElement> counterexample;
  std::optional<int> counterexample_degree;  // set for graded predicates
};

/// Homogeneous right ideal: additive subgroup spanned by homogeneous
/// elements, closed under right multiplication.
struct HomogeneousRightIdeal {
  Bitset elements;
  std::vector<RingElement> homogeneous_generators;
  std::vector<RingElement> subgroup_generators;  // small additive basis
};

/// Complete list of homogeneous right ideals, as the join closure of the
/// cyclic ideals xR over homogeneous x. Completeness: in a unital ring every
/// homogeneous right ideal is the join of the cyclic ideals of its
/// homogeneous elements. Ideals are returned sorted by (size, bitmap).
std::vector<HomogeneousRightIdeal> homogeneous_right_ideals(
    const GradedRing& gr, std::size_t lattice_cap);

/// Indices (into the lattice) of the maximal proper homogeneous right ideals.
std::vector<std::size_t> graded_maximal_right_ideals(
    const GradedRing& gr, const std::vector<HomogeneousRightIdeal>& lattice);

/// Intersection of the graded-maximal right ideals; the whole ring when there
/// are none (order-1 ring). Asserted homogeneous and two-sided.
Bitset graded_jacobson_radical(
    const GradedRing& gr, const std::vector<HomogeneousRightIdeal>& lattice,
    const std::vector<std::size_t>& maximal);

/// Is the additive subgroup I a homogeneous subset, i.e. the direct sum of
/// its component intersections?
bool is_homogeneous_subset(const GradedRing& gr, const Bitset& ideal);

/// Every homogeneous element of I nilpotent? I must be homogeneous.
bool is_graded_nil_ideal(const GradedRing& gr, const ElementClasses& classes,
                         const Bitset& ideal);

/// Quotient by a homogeneous two-sided ideal, carrying the induced grading
/// (components are the images of the parent components), the projection
/// table, and the minimal coset representative for each quotient element.
struct GradedQuotient {
  GradedRing graded;
  std::vector<std::uint64_t> projection;
  std::vector<RingElement> representative;
};

GradedQuotient quotient_graded(const GradedRing& gr, const Bitset& ideal);

}  // namespace gradering
