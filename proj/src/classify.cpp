#include "gradering/classify.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace gradering {

ElementClasses element_classes(const FiniteRing& ring) {
  const std::uint64_t n = ring.order();
  ElementClasses c;
  c.units = Bitset(n);
  c.nilpotents = Bitset(n);
  c.idempotents = Bitset(n);
  c.inverse_of.assign(n, 0);
  c.nilpotency_index.assign(n, 0);

  if (ring.is_degenerate()) {
    c.units.set(0);
    c.nilpotents.set(0);
    c.idempotents.set(0);
    c.nilpotency_index[0] = 1;
    return c;
  }

  const std::uint64_t one = ring.index_of(ring.unity());
  const std::uint64_t zero = ring.index_of(ring.zero());
  std::vector<std::uint64_t> orbit;
  std::vector<char> on_orbit(n, 0);
  for (std::uint64_t i = 0; i < n; ++i) {
    RingElement x = ring.element_at(i);
    if (ring.mul(x, x) == x) c.idempotents.set(i);

    orbit.clear();
    RingElement p = x;
    std::uint64_t prev = i;
    while (true) {
      std::uint64_t pi = ring.index_of(p);
      if (pi == one) {
        c.units.set(i);
        c.inverse_of[i] = prev;
        break;
      }
      if (pi == zero) {
        c.nilpotents.set(i);
        c.nilpotency_index[i] = static_cast<int>(orbit.size()) + 1;
        break;
      }
      if (on_orbit[pi]) break;  // power cycle avoiding 0 and 1: neither
      on_orbit[pi] = 1;
      orbit.push_back(pi);
      prev = pi;
      p = ring.mul(p, x);
    }
    for (std::uint64_t oi : orbit) on_orbit[oi] = 0;
  }
  return c;
}

Bitset jacobson_radical_in(const FiniteRing& ring, const Bitset& subring,
                           const Bitset& subring_units) {
  Bitset j(ring.order());
  std::vector<std::uint64_t> members = subring.to_indices();
  std::vector<RingElement> elems;
  elems.reserve(members.size());
  for (std::uint64_t i : members) elems.push_back(ring.element_at(i));
  const RingElement one = ring.unity();
  for (std::size_t xi = 0; xi < members.size(); ++xi) {
    bool in_j = true;
    for (std::size_t ai = 0; ai < members.size(); ++ai) {
      RingElement t = ring.sub(one, ring.mul(elems[ai], elems[xi]));
      if (!subring_units.test(ring.index_of(t))) {
        in_j = false;
        break;
      }
    }
    if (in_j) j.set(members[xi]);
  }

  // The quasi-regular set of a finite unital ring is a two-sided ideal;
  // anything else indicates a corrupted ring table.
  Bitset closure = additive_closure(ring, subgroup_generators(ring, j));
  if (!(closure == j))
    fail("NotTwoSided", "quasi-regular set is not additively closed");
  std::vector<RingElement> jg = subgroup_generators(ring, j);
  std::vector<RingElement> sg = subgroup_generators(ring, subring);
  for (const auto& x : jg)
    for (const auto& s : sg) {
      if (!j.test(ring.index_of(ring.mul(s, x))) ||
          !j.test(ring.index_of(ring.mul(x, s))))
        fail("NotTwoSided", "quasi-regular set is not an ideal");
    }
  return j;
}

Bitset jacobson_radical(const FiniteRing& ring,
                        const ElementClasses& classes) {
  Bitset all(ring.order());
  for (std::uint64_t i = 0; i < ring.order(); ++i) all.set(i);
  return jacobson_radical_in(ring, all, classes.units);
}

std::optional<NilGoodWitness> nil_good_decomposition(
    const FiniteRing& ring, const ElementClasses& classes,
    const RingElement& x, const std::vector<std::uint64_t>& nilpotent_pool,
    const Bitset& allowed_units) {
  std::uint64_t xi = ring.index_of(x);
  if (classes.nilpotents.test(xi)) {
    return NilGoodWitness{NilGoodWitness::Kind::Nilpotent, x, std::nullopt,
                          classes.nilpotency_index[xi]};
  }
  for (std::uint64_t ni : nilpotent_pool) {
    RingElement n = ring.element_at(ni);
    RingElement u = ring.sub(x, n);
    if (allowed_units.test(ring.index_of(u))) {
      return NilGoodWitness{NilGoodWitness::Kind::UnitPlusNilpotent, n, u,
                            classes.nilpotency_index[ni]};
    }
  }
  return std::nullopt;
}

namespace {

struct IdealDraft {
  Bitset elements;
  std::vector<RingElement> homogeneous_generators;
  std::vector<RingElement> subgroup_generators_;
};

std::vector<RingElement> ring_basis(const FiniteRing& ring) {
  std::vector<RingElement> basis;
  for (int i = 0; i < ring.rank(); ++i) {
    RingElement b(ring.rank(), 0);
    if (ring.additive_orders()[i] > 1) b[i] = 1;
    basis.push_back(std::move(b));
  }
  return basis;
}

}  // namespace

std::vector<HomogeneousRightIdeal> homogeneous_right_ideals(
    const GradedRing& gr, std::size_t lattice_cap) {
  const FiniteRing& ring = gr.ring();
  std::vector<RingElement> basis = ring_basis(ring);

  // Cyclic ideals xR over homogeneous x: the additive closure of the
  // right multiples x*b_j (x itself is x*1, an integer combination of them).
  std::map<Bitset, IdealDraft> found;
  Bitset zero_ideal(ring.order());
  zero_ideal.set(ring.index_of(ring.zero()));
  found.emplace(zero_ideal, IdealDraft{zero_ideal, {}, {}});

  std::vector<IdealDraft> cyclics;
  for (const auto& hx : gr.homogeneous_elements()) {
    if (ring.is_zero(hx.value)) continue;
    std::vector<RingElement> gens;
    for (const auto& b : basis) gens.push_back(ring.mul(hx.value, b));
    Bitset closed = additive_closure(ring, gens);
    if (found.count(closed)) continue;
    IdealDraft d{closed, {hx.value}, subgroup_generators(ring, closed)};
    found.emplace(closed, d);
    if (found.size() > lattice_cap)
      fail("IdealLatticeCap",
           "homogeneous right ideal lattice exceeds cap of " +
               std::to_string(lattice_cap));
    cyclics.push_back(std::move(d));
  }

  // Join closure: the join of two right ideals is their additive span.
  std::vector<IdealDraft> frontier;
  for (const auto& [bm, d] : found) frontier.push_back(d);
  while (!frontier.empty()) {
    std::vector<IdealDraft> next;
    for (const auto& cur : frontier) {
      for (const auto& cyc : cyclics) {
        if (cyc.elements.is_subset_of(cur.elements)) continue;
        std::vector<RingElement> gens = cur.subgroup_generators_;
        gens.insert(gens.end(), cyc.subgroup_generators_.begin(),
                    cyc.subgroup_generators_.end());
        Bitset joined = additive_closure(ring, gens);
        if (found.count(joined)) continue;
        IdealDraft d;
        d.elements = joined;
        d.homogeneous_generators = cur.homogeneous_generators;
        d.homogeneous_generators.insert(d.homogeneous_generators.end(),
                                        cyc.homogeneous_generators.begin(),
                                        cyc.homogeneous_generators.end());
        d.subgroup_generators_ = subgroup_generators(ring, joined);
        found.emplace(joined, d);
        if (found.size() > lattice_cap)
          fail("IdealLatticeCap",
               "homogeneous right ideal lattice exceeds cap of " +
                   std::to_string(lattice_cap));
        next.push_back(std::move(d));
      }
    }
    frontier = std::move(next);
  }

  std::vector<HomogeneousRightIdeal> out;
  for (auto& [bm, d] : found)
    out.push_back(HomogeneousRightIdeal{d.elements,
                                        std::move(d.homogeneous_generators),
                                        std::move(d.subgroup_generators_)});
  std::sort(out.begin(), out.end(),
            [](const HomogeneousRightIdeal& a, const HomogeneousRightIdeal& b) {
              std::uint64_t ca = a.elements.count(), cb = b.elements.count();
              if (ca != cb) return ca < cb;
              return a.elements < b.elements;
            });
  return out;
}

std::vector<std::size_t> graded_maximal_right_ideals(
    const GradedRing& gr, const std::vector<HomogeneousRightIdeal>& lattice) {
  std::vector<std::size_t> proper;
  for (std::size_t i = 0; i < lattice.size(); ++i)
    if (lattice[i].elements.count() < gr.ring().order()) proper.push_back(i);
  std::vector<std::size_t> maximal;
  for (std::size_t i : proper) {
    bool is_max = true;
    for (std::size_t j : proper) {
      if (i == j) continue;
      if (lattice[i].elements.is_subset_of(lattice[j].elements)) {
        is_max = false;
        break;
      }
    }
    if (is_max) maximal.push_back(i);
  }
  return maximal;
}

Bitset graded_jacobson_radical(
    const GradedRing& gr, const std::vector<HomogeneousRightIdeal>& lattice,
    const std::vector<std::size_t>& maximal) {
  const FiniteRing& ring = gr.ring();
  Bitset jg(ring.order());
  for (std::uint64_t i = 0; i < ring.order(); ++i) jg.set(i);
  for (std::size_t m : maximal) jg = jg.intersect(lattice[m].elements);

  if (!is_homogeneous_subset(gr, jg))
    fail("NotHomogeneousIdeal", "graded radical is not homogeneous");
  std::vector<RingElement> gens = subgroup_generators(ring, jg);
  for (const auto& x : gens)
    for (const auto& b : ring_basis(ring))
      if (!jg.test(ring.index_of(ring.mul(b, x))) ||
          !jg.test(ring.index_of(ring.mul(x, b))))
        fail("NotTwoSided", "graded radical is not a two-sided ideal");
  return jg;
}

bool is_homogeneous_subset(const GradedRing& gr, const Bitset& ideal) {
  std::uint64_t product = 1;
  for (int g : gr.support()) {
    product *= gr.component_bitset(g).intersect(ideal).count();
    if (product > ideal.count()) return false;
  }
  if (gr.support().empty()) product = 1;  // order-1 ring
  return product == ideal.count();
}

bool is_graded_nil_ideal(const GradedRing& gr, const ElementClasses& classes,
                         const Bitset& ideal) {
  if (!is_homogeneous_subset(gr, ideal))
    fail("NotHomogeneousIdeal",
         "graded-nil test applied to a non-homogeneous subset");
  for (int g : gr.support())
    for (std::uint64_t i : gr.component_bitset(g).intersect(ideal).to_indices())
      if (!classes.nilpotents.test(i)) return false;
  return true;
}

GradedQuotient quotient_graded(const GradedRing& gr, const Bitset& ideal) {
  const FiniteRing& ring = gr.ring();
  if (!is_homogeneous_subset(gr, ideal))
    fail("NotHomogeneousIdeal", "quotient ideal is not homogeneous");
  std::vector<RingElement> gens = subgroup_generators(ring, ideal);
  for (const auto& x : gens)
    for (const auto& b : ring_basis(ring))
      if (!ideal.test(ring.index_of(ring.mul(b, x))) ||
          !ideal.test(ring.index_of(ring.mul(x, b))))
        fail("NotTwoSided", "quotient ideal is not two-sided");

  QuotientRing q = quotient_by_ideal(ring, ideal);

  // Canonical coset representatives: the least parent element of each coset.
  std::vector<RingElement> representative(q.ring.order());
  std::vector<char> have(q.ring.order(), 0);
  for (std::uint64_t p = 0; p < ring.order(); ++p) {
    std::uint64_t qi = q.projection[p];
    if (!have[qi]) {
      have[qi] = 1;
      representative[qi] = ring.element_at(p);
    }
  }

  Grading grading{gr.group(), {}};
  for (int g : gr.support()) {
    std::vector<RingElement> proj;
    for (const auto& x : gr.grading().component_generators.at(g))
      proj.push_back(q.ring.element_at(q.projection[ring.index_of(x)]));
    grading.component_generators[g] = std::move(proj);
  }
  if (gr.support().empty())
    grading.component_generators[gr.group().identity()] = {};

  GradedRing graded = GradedRing::validate(q.ring, std::move(grading));
  return GradedQuotient{std::move(graded), std::move(q.projection),
                        std::move(representative)};
}

}  // namespace gradering
