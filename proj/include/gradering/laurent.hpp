#pragma once

#include <optional>
#include <string>
#include <vector>

#include "gradering/classify.hpp"
#include "gradering/finite_ring.hpp"

namespace gradering {

/// Symbolic handling of the integer-graded rings A[X, X^-1] and A[X] over a
/// finite base ring A. Homogeneous elements are formal pairs a*X^n; no
/// general mixed-degree arithmetic is performed — the only non-homogeneous
/// fact exposed is the 1+X counterwitness, and only over a finite field
/// where the unit group of the Laurent ring is classical.
enum class SymbolicKind { Laurent, Polynomial };

struct SymbolicGradedRing {
  FiniteRing base;
  SymbolicKind kind;
};

enum class HomogeneousClass { Unit, Nilpotent, Neither };

/// Classify a*X^n. Laurent: unit iff a is a unit of the base, nilpotent iff
/// a is nilpotent. Polynomial: degrees are capped below by zero
/// (NegativeDegreeInPolynomial), units exist only in degree 0, and a*X^n is
/// nilpotent exactly when a is.
HomogeneousClass symbolic_classify_homogeneous(const SymbolicGradedRing& s,
                                               const RingElement& a, long long n);

/// One step of the reduction trace behind the graded nil-good decision.
struct SymbolicTraceLine {
  std::string fact;
};

struct SymbolicDecision {
  bool holds;
  /// For a negative verdict: a homogeneous witness a*X^n with no same-degree
  /// decomposition (the polynomial case uses X itself).
  std::optional<RingElement> witness_coefficient;
  std::optional<long long> witness_exponent;
  std::vector<SymbolicTraceLine> trace;
};

/// Graded nil-good for the symbolic ring. Laurent reduces to the base ring
/// being nil-good (units and nilpotents of every degree-n component mirror
/// the base); Polynomial holds only for the zero base ring, with witness X
/// otherwise.
SymbolicDecision symbolic_is_graded_nil_good(const SymbolicGradedRing& s);

/// Graded fine for the symbolic ring: every nonzero a*X^n must be a
/// same-degree unit + nilpotent sum. Laurent reduces to every nonzero base
/// element being unit-plus-nilpotent; Polynomial fails on X for any nonzero
/// base.
SymbolicDecision symbolic_is_graded_fine(const SymbolicGradedRing& s);

/// The 1+X witness: over a finite field the units of A[X,X^-1] are the
/// nonzero monomials and the nilpotents are {0}, so 1+X is neither a unit,
/// nor nilpotent, nor a unit-plus-nilpotent sum — the ring is not nil-good.
/// Throws BaseNotField when the base is not a finite field (the verdict is
/// undecided symbolically) and NegativeDegreeInPolynomial never applies.
struct LaurentCounterwitness {
  std::string element;  // rendered "1+X"
  std::vector<SymbolicTraceLine> argument;
};
LaurentCounterwitness symbolic_laurent_nil_good_counterwitness(
    const SymbolicGradedRing& s);

/// Whether the base is a finite field: commutative, nonzero, and every
/// nonzero element a unit.
bool is_finite_field(const FiniteRing& ring, const ElementClasses& classes);

}  // namespace gradering
