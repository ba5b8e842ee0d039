#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "gradering/abelian.hpp"
#include "gradering/finite_group.hpp"
#include "gradering/finite_ring.hpp"

namespace gradering {

/// Declarative grading: a group plus, for each group element, a list of
/// additive generators of the corresponding component. Missing keys mean the
/// zero component.
struct Grading {
  FiniteGroup group;
  std::map<int, std::vector<RingElement>> component_generators;
};

/// Homogeneous element together with its degree. The zero element is listed
/// with the identity degree by convention.
struct HomogeneousElement {
  int degree;
  RingElement value;
};

/// A validated group grading of a finite ring: componentwise direct sum
/// covering the ring, multiplicativity R_g * R_h inside R_{gh}, unity in the
/// identity component. Construction checks all of it and precomputes the
/// homogeneous-decomposition table.
class GradedRing {
 public:
  static GradedRing validate(FiniteRing ring, Grading grading);
  static GradedRing trivial(FiniteRing ring, FiniteGroup group);

  const FiniteRing& ring() const { return ring_; }
  const FiniteGroup& group() const { return group_; }
  const Grading& grading() const { return grading_; }

  /// Group elements with a nonzero component, ascending.
  const std::vector<int>& support() const { return support_; }

  const Bitset& component_bitset(int g) const;
  /// Full element list of R_g in canonical order.
  std::vector<RingElement> component_elements(int g) const;

  /// Degree of a nonzero homogeneous element; identity for zero; nullopt for
  /// non-homogeneous elements.
  std::optional<int> degree_of(const RingElement& x) const;
  bool is_homogeneous(const RingElement& x) const {
    return degree_of(x).has_value();
  }

  /// Every element once: zero first (tagged with the identity degree), then
  /// the nonzero homogeneous elements in canonical element order.
  std::vector<HomogeneousElement> homogeneous_elements() const;
  std::uint64_t homogeneous_count() const;

  /// The unique decomposition x = sum of per-support-degree parts, aligned
  /// with support().
  const std::vector<RingElement>& decomposition(std::uint64_t index) const {
    return decomposition_[index];
  }

 private:
  GradedRing(FiniteRing ring, Grading grading)
      : ring_(std::move(ring)),
        group_(grading.group),
        grading_(std::move(grading)) {}

  FiniteRing ring_;
  FiniteGroup group_;
  Grading grading_;
  std::vector<Bitset> components_;              // one per group element
  std::vector<int> support_;
  std::vector<int> degree_;                     // per element index, -1 = none
  std::vector<std::vector<RingElement>> decomposition_;
};

/// View the G-graded ring as G/H-graded: coset components are the joins of
/// their members. H must be normal in G.
GradedRing coarsen(const GradedRing& gr, const std::vector<int>& subgroup_h);

}  // namespace gradering
