#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "gradering/analysis.hpp"
#include "gradering/classify.hpp"
#include "gradering/config.hpp"
#include "gradering/grading.hpp"

namespace gradering {

/// Graded bimodule over a graded ring: a finite abelian carrier with two-sided
/// bilinear actions given on generators, plus per-degree components.
/// Validation checks the action axioms on generators and the degree law
/// A_h * E_g inside E_{hg} (and symmetrically).
struct GradedBimodule {
  std::vector<int> orders;  // cyclic factor orders of the carrier
  /// left_action[i][j] = (i-th ring generator) . (j-th module generator)
  std::vector<std::vector<RingElement>> left_action;
  /// right_action[j][i] = (j-th module generator) . (i-th ring generator)
  std::vector<std::vector<RingElement>> right_action;
  std::map<int, std::vector<RingElement>> component_generators;
};

/// The ring placed at a single degree, acting on itself by multiplication.
GradedBimodule self_bimodule(const GradedRing& base, int degree);

/// Validate the bimodule axioms against the base ring; throws
/// ActionAxiomViolation naming the first failure.
void validate_bimodule(const GradedRing& base, const GradedBimodule& mod);

/// Trivial extension A x E with (a,m)(b,f) = (ab, a.f + m.b), graded by
/// R_g = A_g + E_g.
GradedRing trivial_extension(const GradedRing& base, const GradedBimodule& mod,
                             const Limits& limits);

/// For a ring built by trivial_extension: check U(R) = U(A) x E and
/// Nil(R) = Nil(A) x E by exhaustive comparison; throws
/// TransferIdentityFailed on any mismatch and returns the verified sets.
struct TeTransfer {
  Bitset units;
  Bitset nilpotents;
};
TeTransfer te_unit_nilpotent_transfer(const GradedRing& extension,
                                      const GradedRing& base);

/// The group ring R[G] over a G-graded R, with the twisted product
/// (r_g g')(r_h h') = r_g r_h (h^-1 g' h h') applied to homogeneous parts,
/// graded by (R[G])_lambda = sum over h of R_{lambda h^-1} h.
GradedRing group_ring_graded(const GradedRing& base, const Limits& limits);

/// R[H] with the ordinary group-ring product over a normal subgroup H,
/// graded by G/H (a degree-g coefficient tagged by h in H has degree gH),
/// plus the augmentation map and its kernel.
struct CoarseGroupRing {
  GradedRing graded;
  GradedRing coarse_base;                  // the G/H-coarsened input
  std::vector<std::uint64_t> augmentation; // element index -> base index
  Bitset augmentation_ideal;
};
CoarseGroupRing group_ring_coarse(const GradedRing& base,
                                  const std::vector<int>& subgroup_h,
                                  const Limits& limits);

/// Additive span of k-fold products of ideal elements; [1] is the ideal
/// itself. Stops when a power repeats or reaches {0}.
std::vector<Bitset> ideal_powers(const FiniteRing& ring, const Bitset& ideal,
                                 std::size_t max_power);

struct MatrixGradingSpec {
  int n = 2;
  std::vector<int> sigma;  // one group element per row/column
};

/// M_n(R) graded entrywise: the degree-lambda component takes entry (i,j)
/// from R_{g_i lambda g_j^-1}.
GradedRing matrix_graded(const GradedRing& base, const MatrixGradingSpec& spec,
                         const Limits& limits);

/// Entry (i,j) of an element of a matrix ring built by matrix_graded
/// (base-ring coordinates), and the inverse assembly.
RingElement matrix_entry(const FiniteRing& base, int n, const RingElement& m,
                         int i, int j);
RingElement matrix_assemble(const FiniteRing& base, int n,
                            const std::vector<std::vector<RingElement>>& mat);

/// Block test: top-left (n-1)x(n-1) block nonzero and bottom-right corner
/// nonzero.
bool is_good_form(const FiniteRing& base, int n, const RingElement& m);

/// First invertible V (canonical order) with entries in the identity
/// component such that V m V^-1 is in good form; also the first V giving a
/// good form whose corner entry is a unit of the base ring. Enumeration is
/// bounded by limits.similarity_budget candidate matrices.
struct GoodFormSearch {
  std::optional<RingElement> transform;          // V
  std::optional<RingElement> conjugate;          // V m V^-1
  std::optional<RingElement> unit_corner_transform;
  std::optional<RingElement> unit_corner_conjugate;
  std::size_t tested = 0;
};
GoodFormSearch similarity_to_good_form(GradedAnalysis& matrix_analysis,
                                       const GradedRing& base, int n,
                                       const RingElement& m,
                                       const Limits& limits);

/// Direct product of two gradings over the same group: componentwise ring
/// and componentwise components.
GradedRing product_graded(const GradedRing& a, const GradedRing& b,
                          const Limits& limits);

/// Truncated polynomial ring base[X]/(X^m), graded by the cyclic group of
/// order m with the degree-i component base * X^i.
GradedRing truncated_polynomial(const FiniteRing& base, int m,
                                const Limits& limits);

void check_ring_order_cap(std::uint64_t order, const Limits& limits);

}  // namespace gradering
