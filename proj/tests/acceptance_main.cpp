// Acceptance gate: ten checks, one [PASS]/[FAIL] line each, nonzero exit on
// any failure. Expected values are either documented facts asserted as
// literals or recomputed here by independent brute-force oracles (local
// arithmetic, full enumeration) — never read back from the engine.

#include <array>
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "gradering/analysis.hpp"
#include "gradering/constructions.hpp"
#include "gradering/corpus.hpp"
#include "gradering/laurent.hpp"
#include "gradering/theorems.hpp"

using namespace gradering;

namespace {

// Returns "" on pass, a short reason on failure.
using CriterionFn = std::function<std::string()>;

#define EXPECT(cond, msg)                    \
  do {                                       \
    if (!(cond)) return std::string((msg));  \
  } while (0)

std::string fmt_elem(const RingElement& x) {
  std::string s = "[";
  for (std::size_t i = 0; i < x.size(); ++i)
    s += (i ? "," : "") + std::to_string(x[i]);
  return s + "]";
}

// ---------------------------------------------------------------------------
// Shared builders.

GradedRing two_graded_truncated(int p, const Limits& limits) {
  return truncated_polynomial(FiniteRing::cyclic(p), 2, limits);
}

GradedRing checkerboard(const Limits& limits) {
  // M_2(Z2) on basis E11,E12,E21,E22 with E_ij E_kl = [j==k] E_il;
  // even degree = diagonal span, odd = antidiagonal span.
  RingSpec spec;
  spec.additive_orders = {2, 2, 2, 2};
  spec.unity = {1, 0, 0, 1};
  spec.mul.assign(4, std::vector<RingElement>(4, RingElement{0, 0, 0, 0}));
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      for (int k = 0; k < 2; ++k)
        for (int l = 0; l < 2; ++l)
          if (j == k) spec.mul[2 * i + j][2 * k + l][2 * i + l] = 1;
  Grading grading{FiniteGroup::cyclic(2), {}};
  grading.component_generators[0] = {{1, 0, 0, 0}, {0, 0, 0, 1}};
  grading.component_generators[1] = {{0, 1, 0, 0}, {0, 0, 1, 0}};
  (void)limits;
  return GradedRing::validate(FiniteRing::from_spec(std::move(spec)),
                              std::move(grading));
}

// ---------------------------------------------------------------------------
// Local oracle arithmetic, criterion 2: 2x2 matrices over Z2 as 4 bits.

using M2Z2 = std::array<int, 4>;

M2Z2 m2z2_mul(const M2Z2& x, const M2Z2& y) {
  return {(x[0] * y[0] + x[1] * y[2]) & 1, (x[0] * y[1] + x[1] * y[3]) & 1,
          (x[2] * y[0] + x[3] * y[2]) & 1, (x[2] * y[1] + x[3] * y[3]) & 1};
}

M2Z2 m2z2_sub(const M2Z2& x, const M2Z2& y) {
  return {(x[0] + y[0]) & 1, (x[1] + y[1]) & 1, (x[2] + y[2]) & 1,
          (x[3] + y[3]) & 1};
}

M2Z2 m2z2_at(int idx) {
  return {idx & 1, (idx >> 1) & 1, (idx >> 2) & 1, (idx >> 3) & 1};
}

bool m2z2_nilpotent(const M2Z2& m) {
  M2Z2 p = m;
  for (int k = 1; k <= 4; ++k) {
    if (p == M2Z2{0, 0, 0, 0}) return true;
    p = m2z2_mul(p, m);
  }
  return p == M2Z2{0, 0, 0, 0};
}

// ---------------------------------------------------------------------------
// Local oracle arithmetic, criteria 4 and 7: pairs (a, b) modulo p with
// (a,b)(c,d) = (ac, ad + bc) — covers both Z2 x Z2 (trivial extension) and
// Z3[X]/(X^2) — and 2x2 matrices of pairs.

struct Pair {
  int a = 0;
  int b = 0;
  bool operator==(const Pair&) const = default;
};

Pair pmul(const Pair& x, const Pair& y, int p) {
  return {(x.a * y.a) % p, (x.a * y.b + x.b * y.a) % p};
}

Pair padd(const Pair& x, const Pair& y, int p) {
  return {(x.a + y.a) % p, (x.b + y.b) % p};
}

Pair psub(const Pair& x, const Pair& y, int p) {
  return {(x.a - y.a + p) % p, (x.b - y.b + p) % p};
}

using PMat = std::array<Pair, 4>;  // row-major 2x2

PMat pm_mul(const PMat& x, const PMat& y, int p) {
  return {padd(pmul(x[0], y[0], p), pmul(x[1], y[2], p), p),
          padd(pmul(x[0], y[1], p), pmul(x[1], y[3], p), p),
          padd(pmul(x[2], y[0], p), pmul(x[3], y[2], p), p),
          padd(pmul(x[2], y[1], p), pmul(x[3], y[3], p), p)};
}

PMat pm_sub(const PMat& x, const PMat& y, int p) {
  return {psub(x[0], y[0], p), psub(x[1], y[1], p), psub(x[2], y[2], p),
          psub(x[3], y[3], p)};
}

bool pm_zero(const PMat& m) { return m == PMat{}; }

bool pm_identity(const PMat& m) {
  return m == PMat{Pair{1, 0}, Pair{0, 0}, Pair{0, 0}, Pair{1, 0}};
}

bool pm_nilpotent(const PMat& m, int p) {
  PMat q = m;
  for (int k = 1; k <= 8; ++k) {
    if (pm_zero(q)) return true;
    q = pm_mul(q, m, p);
  }
  return pm_zero(q);
}

// All 2x2 matrices whose entries come from the given base-pair list.
std::vector<PMat> pm_enumerate(const std::vector<Pair>& entries) {
  std::vector<PMat> out;
  for (const Pair& w : entries)
    for (const Pair& x : entries)
      for (const Pair& y : entries)
        for (const Pair& z : entries) out.push_back({w, x, y, z});
  return out;
}

// Units among `candidates` by scanning `universe` for a two-sided inverse.
std::vector<bool> pm_units(const std::vector<PMat>& candidates,
                           const std::vector<PMat>& universe, int p) {
  std::vector<bool> unit(candidates.size(), false);
  for (std::size_t i = 0; i < candidates.size(); ++i)
    for (const PMat& v : universe)
      if (pm_identity(pm_mul(candidates[i], v, p)) &&
          pm_identity(pm_mul(v, candidates[i], p))) {
        unit[i] = true;
        break;
      }
  return unit;
}

// Decode entry (i,j) of an engine matrix-ring element into a local pair.
Pair decode_entry(const FiniteRing& base, const RingElement& m, int i, int j) {
  RingElement e = matrix_entry(base, 2, m, i, j);
  return {e[0], e[1]};
}

// ---------------------------------------------------------------------------
// Criterion 1: Z2[X]/(X^2) with {1} in even and {x} in odd degree is graded
// nil-good, witnessed by 1 = unit + 0 and x nilpotent.

std::string criterion_1(const Limits& limits) {
  GradedRing gr = two_graded_truncated(2, limits);
  GradedAnalysis an(gr, limits);
  EXPECT(an.graded_nil_good().holds, "graded nil-good should hold");

  const auto& ws = an.graded_witnesses();
  EXPECT(ws.size() == 3, "expected 3 homogeneous elements (0, 1, x)");
  const FiniteRing& r = gr.ring();
  for (const WitnessEntry& w : ws) {
    EXPECT(w.witness.has_value(), "every homogeneous element decomposes");
    if (w.element == r.unity()) {
      EXPECT(w.witness->kind == NilGoodWitness::Kind::UnitPlusNilpotent,
             "1 should be unit + nilpotent");
      EXPECT(w.witness->unit_part == r.unity(), "1 should decompose as 1 + 0");
      EXPECT(r.is_zero(w.witness->nilpotent_part),
             "1 should decompose with nilpotent part 0");
    } else if (!r.is_zero(w.element)) {
      EXPECT(w.element == RingElement({0, 1}), "third witness should be x");
      EXPECT(w.witness->kind == NilGoodWitness::Kind::Nilpotent,
             "x should be nilpotent");
      EXPECT(w.witness->nilpotency_index == 2, "x^2 = 0");
    }
  }
  return "";
}

// ---------------------------------------------------------------------------
// Criterion 2: checkerboard M_2(Z2) is not graded nil-good with canonical
// counterexample diag(1,0), yet nil-good over all 16 elements (confirmed by
// a local bit-matrix scan).

std::string criterion_2(const Limits& limits) {
  GradedRing gr = checkerboard(limits);
  GradedAnalysis an(gr, limits);

  EXPECT(!an.graded_nil_good().holds, "graded nil-good should fail");
  EXPECT(an.graded_nil_good().counterexample == RingElement({1, 0, 0, 0}),
         "canonical counterexample should be diag(1,0)");
  EXPECT(an.graded_nil_good().counterexample_degree == 0,
         "diag(1,0) has even degree");
  EXPECT(an.nil_good().holds, "plain nil-good should hold");

  // Independent scan: unit = has a two-sided inverse among the 16, nilpotent
  // = some power vanishes, nil-good = nilpotent or unit + nilpotent.
  std::vector<bool> unit(16, false), nil(16, false);
  for (int i = 0; i < 16; ++i) {
    M2Z2 m = m2z2_at(i);
    nil[i] = m2z2_nilpotent(m);
    for (int j = 0; j < 16 && !unit[i]; ++j) {
      M2Z2 v = m2z2_at(j);
      unit[i] = m2z2_mul(m, v) == M2Z2{1, 0, 0, 1} &&
                m2z2_mul(v, m) == M2Z2{1, 0, 0, 1};
    }
  }
  for (int i = 0; i < 16; ++i) {
    bool good = nil[i];
    for (int j = 0; j < 16 && !good; ++j)
      good = unit[j] && m2z2_nilpotent(m2z2_sub(m2z2_at(i), m2z2_at(j)));
    EXPECT(good, "oracle: element " + std::to_string(i) + " not nil-good");
  }
  return "";
}

// ---------------------------------------------------------------------------
// Criterion 3: Laurent ring over Z2 — graded nil-good holds, plain nil-good
// fails with the 1+X witness.

std::string criterion_3(const Limits& limits) {
  SymbolicGradedRing s{FiniteRing::cyclic(2), SymbolicKind::Laurent};
  (void)limits;
  SymbolicDecision gng = symbolic_is_graded_nil_good(s);
  EXPECT(gng.holds, "Laurent over Z2 should be graded nil-good");
  LaurentCounterwitness cw = symbolic_laurent_nil_good_counterwitness(s);
  EXPECT(cw.element == "1+X", "the nil-good counterwitness should be 1+X");
  EXPECT(!cw.argument.empty(), "the 1+X argument should be spelled out");
  return "";
}

// ---------------------------------------------------------------------------
// Criterion 4: the e4.3 audit. The engine's verdict on M = E11 * 1 in
// M_2(Z2 x Z2)(e,e) must match a from-scratch 2x2 enumeration over the
// 4-element base ring, and the discrepancy flag must be raised.

std::string criterion_4(const Limits& limits) {
  ExampleAudit audit = audit_example_e4_3(limits);

  // Local universe: all 256 matrices over the 4-element base, mod 2.
  std::vector<Pair> base_all = {{0, 0}, {1, 0}, {0, 1}, {1, 1}};
  std::vector<Pair> base_even = {{0, 0}, {1, 0}};  // the degree-e entries
  std::vector<PMat> universe = pm_enumerate(base_all);
  std::vector<PMat> degree_e = pm_enumerate(base_even);
  std::vector<bool> unit_e = pm_units(degree_e, universe, 2);

  PMat m{Pair{1, 0}, Pair{0, 0}, Pair{0, 0}, Pair{0, 0}};
  bool oracle_decomposes = pm_nilpotent(m, 2);
  for (std::size_t j = 0; j < degree_e.size() && !oracle_decomposes; ++j)
    oracle_decomposes =
        unit_e[j] && pm_nilpotent(pm_sub(m, degree_e[j], 2), 2);

  EXPECT(oracle_decomposes,
         "oracle: a same-degree decomposition of M should exist");
  EXPECT(audit.element_graded_nil_good == oracle_decomposes,
         "engine verdict should match the enumeration oracle");
  EXPECT(audit.paper_discrepancy, "the discrepancy flag should be raised");
  EXPECT(audit.graded_witness.has_value(), "the witness should be recorded");
  EXPECT(audit.graded_witness->kind == NilGoodWitness::Kind::UnitPlusNilpotent,
         "M is not nilpotent, so the witness is unit + nilpotent");

  // Decode the engine's witness into the local representation and verify it
  // with local arithmetic only.
  GradedRing te_base =
      GradedRing::trivial(FiniteRing::cyclic(2), FiniteGroup::cyclic(2));
  GradedRing te = trivial_extension(te_base, self_bimodule(te_base, 1), limits);
  const FiniteRing& tring = te.ring();
  PMat u, n;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) {
      u[2 * i + j] = decode_entry(tring, *audit.graded_witness->unit_part, i, j);
      n[2 * i + j] =
          decode_entry(tring, audit.graded_witness->nilpotent_part, i, j);
    }
  for (int k = 0; k < 4; ++k) {
    EXPECT(u[k].b == 0 && n[k].b == 0, "witness parts should have degree e");
  }
  EXPECT(pm_sub(m, n, 2) == u, "U + N should equal M");
  EXPECT(pm_nilpotent(n, 2), "oracle: N should be nilpotent");
  bool u_is_unit = false;
  for (const PMat& v : universe)
    if (pm_identity(pm_mul(u, v, 2)) && pm_identity(pm_mul(v, u, 2))) {
      u_is_unit = true;
      break;
    }
  EXPECT(u_is_unit, "oracle: U should be a unit");

  // The canonical decomposition: U the 1-pattern [[0,1],[1,1]], N all (1,0).
  PMat expected_u{Pair{0, 0}, Pair{1, 0}, Pair{1, 0}, Pair{1, 0}};
  PMat expected_n{Pair{1, 0}, Pair{1, 0}, Pair{1, 0}, Pair{1, 0}};
  EXPECT(u == expected_u, "canonical U should be [[0,1],[1,1]] * 1");
  EXPECT(n == expected_n, "canonical N should be the all-(1,0) matrix");
  return "";
}

// ---------------------------------------------------------------------------
// Criterion 5: the radical identities J(R_e) = J^g(R) n R_e and
// J^g(R) within J(R) hold with zero violations across the default corpus.

std::string criterion_5() {
  CorpusSpec spec;
  CorpusBuildResult corpus = build_corpus(spec);
  EXPECT(corpus.instances.size() >= 30, "default corpus should have >= 30");
  VerifySession session(std::move(corpus), spec.limits);
  session.warm(static_cast<int>(std::thread::hardware_concurrency()));
  for (const char* id : {"RI.1", "RI.2"}) {
    TheoremReport rep = verify_theorem(id, session);
    EXPECT(rep.violations == 0, std::string(id) + ": violations found");
    EXPECT(rep.non_vacuous == session.size(),
           std::string(id) + ": should be checked on every instance");
  }
  return "";
}

// ---------------------------------------------------------------------------
// Criterion 6: the full registered suite reports zero violations and every
// in-scope statement is exercised non-vacuously at least once.

std::string criterion_6() {
  CorpusSpec spec;
  CorpusBuildResult corpus = build_corpus(spec);
  VerifySession session(std::move(corpus), spec.limits);
  session.warm(static_cast<int>(std::thread::hardware_concurrency()));
  SuiteReport suite = verify_suite(resolve_theorem_ids("all"), session);
  EXPECT(suite.violations_total == 0, "suite reported violations");
  for (const TheoremReport& rep : suite.theorems) {
    EXPECT(rep.violations == 0, rep.spec.id + ": violations found");
    if (rep.spec.scope == "in-scope")
      EXPECT(rep.non_vacuous >= 1, rep.spec.id + ": vacuous coverage");
  }
  return "";
}

// ---------------------------------------------------------------------------
// Criterion 7: M_2(Z3[X]/(X^2))(e,e) is graded nil-good across all 162
// homogeneous elements, checked against a brute-force decomposition oracle
// in local pair arithmetic.

std::string criterion_7(const Limits& caps) {
  Limits limits = caps;
  limits.max_ring_order = 10000;  // the matrix ring has 6561 elements
  GradedRing base = two_graded_truncated(3, limits);
  MatrixGradingSpec ms;
  ms.n = 2;
  ms.sigma = {0, 0};
  GradedRing m2 = matrix_graded(base, ms, limits);
  GradedAnalysis an(m2, limits);

  EXPECT(m2.ring().order() == 6561, "M_2 over the 9-element ring");
  std::uint64_t homogeneous_total = 0;
  for (int g : m2.support()) homogeneous_total += m2.component_bitset(g).count();
  EXPECT(homogeneous_total == 162, "81 + 81 homogeneous elements");
  EXPECT(an.graded_nil_good().holds, "graded nil-good should hold");

  // The hypothesis of the theorem being instanced: 1 = 2 + 2 with 2 a unit
  // of the identity component.
  EXPECT((2 + 2) % 3 == 1 && (2 * 2) % 3 == 1, "2 is a unit of Z3 and 2+2=1");

  // Oracle: entries are pairs mod 3; even-degree matrices draw entries from
  // (a, 0), odd-degree from (0, b). Units are found by scanning the whole
  // 6561-element universe for a two-sided inverse.
  std::vector<Pair> base_all, base_even, base_odd;
  for (int a = 0; a < 3; ++a)
    for (int b = 0; b < 3; ++b) base_all.push_back({a, b});
  for (int a = 0; a < 3; ++a) {
    base_even.push_back({a, 0});
    base_odd.push_back({0, a});
  }
  std::vector<PMat> universe = pm_enumerate(base_all);
  for (const std::vector<Pair>& entries : {base_even, base_odd}) {
    std::vector<PMat> component = pm_enumerate(entries);
    std::vector<bool> unit = pm_units(component, universe, 3);
    for (const PMat& m : component) {
      bool good = pm_nilpotent(m, 3);
      for (std::size_t j = 0; j < component.size() && !good; ++j)
        good = unit[j] && pm_nilpotent(pm_sub(m, component[j], 3), 3);
      EXPECT(good, "oracle: a homogeneous element fails to decompose");
    }
  }

  // Spot-agreement: the engine's per-element witnesses must cover the same
  // count of homogeneous elements, all decomposable.
  const auto& ws = an.graded_witnesses();
  EXPECT(ws.size() == 161, "161 distinct homogeneous elements (0 once)");
  for (const WitnessEntry& w : ws)
    EXPECT(w.witness.has_value(), "engine: every witness should exist");
  return "";
}

// ---------------------------------------------------------------------------
// Criterion 8: J^g(M_2(R)) equals M_2(J^g(R)) for R = Z2[X]/(X^2), the left
// side by lattice enumeration on the 256-element matrix ring, the right by
// entrywise lifting.

std::string criterion_8(const Limits& limits) {
  GradedRing base = two_graded_truncated(2, limits);
  GradedAnalysis base_an(base, limits);
  const Bitset& jg_base = base_an.graded_jacobson();
  EXPECT(jg_base.count() == 2, "J^g(Z2[X]/(X^2)) = {0, x}");
  EXPECT(jg_base.test(base.ring().index_of({0, 1})), "x should be in J^g");

  MatrixGradingSpec ms;
  ms.n = 2;
  ms.sigma = {0, 0};
  GradedRing m2 = matrix_graded(base, ms, limits);
  GradedAnalysis m2_an(m2, limits);
  const Bitset& lattice_side = m2_an.graded_jacobson();

  std::vector<RingElement> jg_elems;
  for (std::uint64_t idx : jg_base.to_indices())
    jg_elems.push_back(base.ring().element_at(idx));
  Bitset lift(m2.ring().order());
  for (const RingElement& e11 : jg_elems)
    for (const RingElement& e12 : jg_elems)
      for (const RingElement& e21 : jg_elems)
        for (const RingElement& e22 : jg_elems) {
          RingElement m = matrix_assemble(base.ring(), 2,
                                          {{e11, e12}, {e21, e22}});
          lift.set(m2.ring().index_of(m));
        }
  EXPECT(lift.count() == 16, "the lift should have 2^4 elements");
  EXPECT(lattice_side == lift,
         "lattice enumeration and entrywise lift should agree exactly");
  return "";
}

// ---------------------------------------------------------------------------
// Criterion 9: Z4 is nil-good; the augmentation ideal of Z4[C2] cubes to
// zero; Z4[C2] is nil-good over its 16 elements. Engine results are compared
// against local modular arithmetic.

struct GPair {  // a0 + a1*s in Z4[C2], s^2 = 1
  int a0 = 0;
  int a1 = 0;
  bool operator==(const GPair&) const = default;
};

GPair gmul(const GPair& x, const GPair& y) {
  return {(x.a0 * y.a0 + x.a1 * y.a1) % 4, (x.a0 * y.a1 + x.a1 * y.a0) % 4};
}

GPair gadd(const GPair& x, const GPair& y) {
  return {(x.a0 + y.a0) % 4, (x.a1 + y.a1) % 4};
}

GPair gsub(const GPair& x, const GPair& y) {
  return {(x.a0 - y.a0 + 4) % 4, (x.a1 - y.a1 + 4) % 4};
}

GPair gat(int idx) { return {idx % 4, idx / 4}; }

bool gnilpotent(const GPair& x) {
  GPair p = x;
  for (int k = 1; k <= 16; ++k) {
    if (p == GPair{0, 0}) return true;
    p = gmul(p, x);
  }
  return p == GPair{0, 0};
}

std::vector<GPair> gspan(std::vector<GPair> seed) {
  // Additive closure in Z4 x Z4.
  std::vector<bool> in(16, false);
  in[0] = true;
  std::vector<GPair> out = {GPair{0, 0}};
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t i = 0; i < out.size(); ++i)
      for (const GPair& s : seed) {
        GPair t = gadd(out[i], s);
        int idx = t.a0 + 4 * t.a1;
        if (!in[idx]) {
          in[idx] = true;
          out.push_back(t);
          changed = true;
        }
      }
  }
  return out;
}

std::string criterion_9(const Limits& limits) {
  // Z4 itself, engine vs direct modular scan.
  FiniteRing z4 = FiniteRing::cyclic(4);
  ElementClasses z4_classes = element_classes(z4);
  Bitset z4_all(4);
  for (int i = 0; i < 4; ++i) z4_all.set(i);
  EXPECT(nil_good_in(z4, z4_classes, z4_all).holds, "engine: Z4 nil-good");
  for (int x = 0; x < 4; ++x) {
    bool nil_x = x == 0 || (x * x) % 4 == 0;
    bool good = nil_x;
    for (int u = 0; u < 4 && !good; ++u) {
      bool unit_u = u % 2 == 1;  // odd residues are the units of Z4
      int n = (x - u + 4) % 4;
      good = unit_u && (n == 0 || (n * n) % 4 == 0);
    }
    EXPECT(good, "oracle: Z4 element should be nil-good");
  }

  // Z4[C2] as a coarse group ring over H = C2; the augmentation ideal powers
  // must shrink 4 -> 2 -> 1 and end at {0}.
  GradedRing base =
      GradedRing::trivial(FiniteRing::cyclic(4), FiniteGroup::cyclic(2));
  CoarseGroupRing cg = group_ring_coarse(base, {0, 1}, limits);
  const FiniteRing& ring = cg.graded.ring();
  EXPECT(ring.order() == 16, "Z4[C2] should have 16 elements");
  EXPECT(ring.additive_orders() == std::vector<int>({4, 4}),
         "coordinates should be the two group-letter slots");

  std::vector<Bitset> powers = ideal_powers(ring, cg.augmentation_ideal, 5);
  EXPECT(powers.size() == 3, "the power chain should stabilize at length 3");
  EXPECT(powers[0].count() == 4 && powers[1].count() == 2 &&
             powers[2].count() == 1,
         "power sizes should be 4, 2, 1");
  EXPECT(powers[2].test(ring.index_of(ring.zero())), "delta^3 = 0");

  // The same chain in local arithmetic: delta = {(a,b) : a + b = 0 mod 4},
  // then spans of elementwise products.
  std::vector<GPair> delta;
  for (int i = 0; i < 16; ++i)
    if ((gat(i).a0 + gat(i).a1) % 4 == 0) delta.push_back(gat(i));
  EXPECT(delta.size() == 4, "oracle: delta should have 4 elements");
  std::vector<GPair> d2_seed, d3_seed;
  std::vector<GPair> d2, d3;
  for (const GPair& x : delta)
    for (const GPair& y : delta) d2_seed.push_back(gmul(x, y));
  d2 = gspan(d2_seed);
  for (const GPair& x : d2)
    for (const GPair& y : delta) d3_seed.push_back(gmul(x, y));
  d3 = gspan(d3_seed);
  EXPECT(d2.size() == 2 && d3.size() == 1, "oracle: chain sizes 2 then 1");
  for (const GPair& x : delta) {
    int idx = static_cast<int>(ring.index_of(RingElement{x.a0, x.a1}));
    EXPECT(powers[0].test(idx), "engine delta should contain each oracle pair");
  }
  for (const GPair& x : d2) {
    int idx = static_cast<int>(ring.index_of(RingElement{x.a0, x.a1}));
    EXPECT(powers[1].test(idx), "engine delta^2 should match the oracle");
  }

  // Z4[C2] nil-good, engine vs exhaustive local scan of the 16 elements.
  ElementClasses classes = element_classes(ring);
  Bitset all(16);
  for (int i = 0; i < 16; ++i) all.set(i);
  EXPECT(nil_good_in(ring, classes, all).holds, "engine: Z4[C2] nil-good");
  std::vector<bool> unit(16, false), nil(16, false);
  for (int i = 0; i < 16; ++i) {
    nil[i] = gnilpotent(gat(i));
    for (int j = 0; j < 16 && !unit[i]; ++j)
      unit[i] = gmul(gat(i), gat(j)) == GPair{1, 0} &&
                gmul(gat(j), gat(i)) == GPair{1, 0};
    EXPECT(unit[i] == classes.units.test(i),
           "unit sets should agree between oracle and engine");
    EXPECT(nil[i] == classes.nilpotents.test(i),
           "nilpotent sets should agree between oracle and engine");
  }
  for (int i = 0; i < 16; ++i) {
    bool good = nil[i];
    for (int j = 0; j < 16 && !good; ++j)
      good = unit[j] && gnilpotent(gsub(gat(i), gat(j)));
    EXPECT(good, "oracle: Z4[C2] element should be nil-good");
  }
  return "";
}

// ---------------------------------------------------------------------------
// Criterion 10: the CLI's full verify run is byte-identical for 1 worker and
// for a parallel pool.

std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::string criterion_10() {
  const char* bin = std::getenv("GRADERING_BIN");
  EXPECT(bin != nullptr, "GRADERING_BIN must point at the CLI binary");

  namespace fs = std::filesystem;
  std::string templ = (fs::temp_directory_path() / "acceptance_XXXXXX").string();
  char* dir = mkdtemp(templ.data());
  EXPECT(dir != nullptr, "mkdtemp failed");
  fs::path one = fs::path(dir) / "w1.json";
  fs::path many = fs::path(dir) / "wN.json";

  unsigned hw = std::thread::hardware_concurrency();
  int n = hw > 1 ? static_cast<int>(hw) : 4;
  std::string base = std::string("'") + bin + "' verify --theorem all";
  int rc1 = std::system(
      (base + " --workers 1 -o " + one.string() + " >/dev/null 2>&1").c_str());
  int rcn = std::system((base + " --workers " + std::to_string(n) + " -o " +
                         many.string() + " >/dev/null 2>&1")
                            .c_str());
  EXPECT(rc1 == 0 && rcn == 0, "both verify runs should exit 0");
  std::string a = slurp(one), b = slurp(many);
  EXPECT(!a.empty(), "the report should not be empty");
  EXPECT(a == b, "reports should be byte-identical across worker counts");
  return "";
}

}  // namespace

int main() {
  Limits limits;
  struct Row {
    int number;
    const char* label;
    double budget_ms;  // 0 = no budget
    CriterionFn fn;
  };
  const std::vector<Row> rows = {
      {1, "Z2[X]/(X^2) classification and witnesses", 1000,
       [&] { return criterion_1(limits); }},
      {2, "checkerboard M_2(Z2) verdicts", 1000,
       [&] { return criterion_2(limits); }},
      {3, "Laurent over Z2 symbolic verdicts", 0,
       [&] { return criterion_3(limits); }},
      {4, "worked-example audit vs 2x2 enumeration", 5000,
       [&] { return criterion_4(limits); }},
      {5, "radical identities across the corpus", 0, [] { return criterion_5(); }},
      {6, "full statement suite, zero violations", 120000,
       [] { return criterion_6(); }},
      {7, "M_2(Z3[X]/(X^2))(e,e) graded nil-good", 30000,
       [&] { return criterion_7(limits); }},
      {8, "matrix radical: lattice vs entrywise lift", 0,
       [&] { return criterion_8(limits); }},
      {9, "Z4[C2] chain: nil-good and augmentation powers", 1000,
       [&] { return criterion_9(limits); }},
      {10, "byte-identical verify across worker counts", 0,
       [] { return criterion_10(); }},
  };

  int failures = 0;
  for (const Row& row : rows) {
    auto start = std::chrono::steady_clock::now();
    std::string message;
    try {
      message = row.fn();
    } catch (const std::exception& e) {
      message = std::string("exception: ") + e.what();
    }
    double ms = std::chrono::duration<double, std::milli>(
                    std::chrono::steady_clock::now() - start)
                    .count();
    if (message.empty() && row.budget_ms > 0 && ms > row.budget_ms)
      message = "over time budget (" + std::to_string(ms) + " ms > " +
                std::to_string(row.budget_ms) + " ms)";
    if (message.empty()) {
      std::printf("[PASS] %2d. %s (%.0f ms)\n", row.number, row.label, ms);
    } else {
      std::printf("[FAIL] %2d. %s (%.0f ms): %s\n", row.number, row.label, ms,
                  message.c_str());
      ++failures;
    }
  }
  if (failures > 0) std::printf("%d criterion(s) failed\n", failures);
  return failures == 0 ? 0 : 1;
}
