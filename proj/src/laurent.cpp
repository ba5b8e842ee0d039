#include "gradering/laurent.hpp"

#include <algorithm>

#include "gradering/analysis.hpp"
#include "gradering/errors.hpp"

namespace gradering {

namespace {

std::string coeff_string(const RingElement& x) {
  std::string out = "(";
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(x[i]);
  }
  out += ")";
  return out;
}

}  // namespace

HomogeneousClass symbolic_classify_homogeneous(const SymbolicGradedRing& s,
                                               const RingElement& a,
                                               long long n) {
  s.base.check_element(a);
  if (s.kind == SymbolicKind::Polynomial && n < 0)
    fail("NegativeDegreeInPolynomial",
         "polynomial rings have no component of degree " + std::to_string(n));
  ElementClasses classes = element_classes(s.base);
  std::uint64_t idx = s.base.index_of(a);
  // (a X^n)^k = a^k X^(nk), so nilpotency always mirrors the coefficient.
  if (classes.nilpotents.test(idx)) return HomogeneousClass::Nilpotent;
  bool degree_has_units = s.kind == SymbolicKind::Laurent || n == 0;
  if (degree_has_units && classes.units.test(idx))
    return HomogeneousClass::Unit;
  return HomogeneousClass::Neither;
}

SymbolicDecision symbolic_is_graded_nil_good(const SymbolicGradedRing& s) {
  SymbolicDecision out;
  ElementClasses classes = element_classes(s.base);
  if (s.kind == SymbolicKind::Polynomial) {
    if (s.base.is_degenerate()) {
      out.holds = true;
      out.trace.push_back({"base is the zero ring; every homogeneous element "
                           "is zero, hence nilpotent"});
      return out;
    }
    // X is not nilpotent (1 is not), and no component of positive degree
    // contains a unit, so X has no same-degree decomposition.
    out.holds = false;
    out.witness_coefficient = s.base.unity();
    out.witness_exponent = 1;
    out.trace.push_back({"unit coefficients only occur in degree 0 of a "
                         "polynomial ring"});
    out.trace.push_back({"X = 1*X^1 is not nilpotent and admits no "
                         "same-degree unit + nilpotent sum"});
    return out;
  }
  // Laurent: every component is a copy of the base with units U(A)X^n and
  // nilpotents Nil(A)X^n, so the graded condition reduces to A nil-good.
  Bitset all(s.base.order());
  for (std::uint64_t i = 0; i < s.base.order(); ++i) all.set(i);
  PredicateReport base_report = nil_good_in(s.base, classes, all);
  out.holds = base_report.holds;
  out.trace.push_back({"degree-n homogeneous elements are a*X^n with unit "
                       "and nilpotent tests on the coefficient"});
  if (base_report.holds) {
    out.trace.push_back({"base ring is nil-good, so every a*X^n is nilpotent "
                         "or a same-degree unit + nilpotent sum"});
  } else {
    out.witness_coefficient = base_report.counterexample;
    out.witness_exponent = 0;
    out.trace.push_back(
        {"base coefficient " +
         coeff_string(*base_report.counterexample) +
         " is neither nilpotent nor unit + nilpotent in the base ring"});
  }
  return out;
}

SymbolicDecision symbolic_is_graded_fine(const SymbolicGradedRing& s) {
  SymbolicDecision out;
  ElementClasses classes = element_classes(s.base);
  if (s.base.is_degenerate()) {
    out.holds = true;
    out.trace.push_back({"base is the zero ring; there are no nonzero "
                         "homogeneous elements"});
    return out;
  }
  if (s.kind == SymbolicKind::Polynomial) {
    out.holds = false;
    out.witness_coefficient = s.base.unity();
    out.witness_exponent = 1;
    out.trace.push_back({"X = 1*X^1 is nonzero but degree 1 holds no units, "
                         "so no unit + nilpotent sum exists in its degree"});
    return out;
  }
  for (std::uint64_t i = 1; i < s.base.order(); ++i) {
    RingElement a = s.base.element_at(i);
    bool fine = false;
    for (std::uint64_t u : classes.units.to_indices()) {
      RingElement b = s.base.sub(a, s.base.element_at(u));
      if (classes.nilpotents.test(s.base.index_of(b))) {
        fine = true;
        break;
      }
    }
    if (!fine) {
      out.holds = false;
      out.witness_coefficient = a;
      out.witness_exponent = 0;
      out.trace.push_back({"coefficient " + coeff_string(a) +
                           " is not a unit + nilpotent sum in the base"});
      return out;
    }
  }
  out.holds = true;
  out.trace.push_back({"every nonzero base coefficient is unit + nilpotent, "
                       "and the decomposition lifts to each degree"});
  return out;
}

bool is_finite_field(const FiniteRing& ring, const ElementClasses& classes) {
  if (ring.is_degenerate()) return false;
  if (!ring.is_commutative()) return false;
  return classes.units.count() == ring.order() - 1;
}

LaurentCounterwitness symbolic_laurent_nil_good_counterwitness(
    const SymbolicGradedRing& s) {
  if (s.kind != SymbolicKind::Laurent)
    fail("BaseNotField",
         "the 1+X counterwitness is a Laurent-ring statement");
  ElementClasses classes = element_classes(s.base);
  if (!is_finite_field(s.base, classes))
    fail("BaseNotField",
         "the unit description of the Laurent ring is only certified over a "
         "finite field, so the verdict is undecided symbolically");
  LaurentCounterwitness out;
  out.element = "1+X";
  out.argument.push_back({"over a field the units of the Laurent ring are "
                          "the nonzero monomials a*X^n"});
  out.argument.push_back({"the only nilpotent element is 0"});
  out.argument.push_back({"1+X is not a monomial, so it is not a unit and "
                          "not nilpotent"});
  out.argument.push_back({"any unit + nilpotent sum is a unit, so 1+X is "
                          "not nil-good"});
  return out;
}

}  // namespace gradering
