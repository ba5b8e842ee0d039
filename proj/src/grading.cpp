#include "gradering/grading.hpp"

#include <algorithm>

namespace gradering {

GradedRing GradedRing::validate(FiniteRing ring, Grading grading) {
  const int G = grading.group.order();
  for (const auto& [g, gens] : grading.component_generators) {
    if (g < 0 || g >= G)
      fail("UnknownGroupElement",
           "component key " + std::to_string(g) + " is not a group element");
    for (const auto& x : gens) ring.check_element(x);
  }

  std::vector<Bitset> components;
  components.reserve(G);
  for (int g = 0; g < G; ++g) {
    auto it = grading.component_generators.find(g);
    if (it == grading.component_generators.end())
      components.push_back(additive_closure(ring, std::vector<RingElement>{}));
    else
      components.push_back(additive_closure(ring, it->second));
  }

  const std::uint64_t zero_idx = ring.index_of(ring.zero());
  std::vector<int> support;
  for (int g = 0; g < G; ++g)
    if (components[g].count() > 1) support.push_back(g);

  // Pairwise trivial intersection gives the friendliest error; it is not by
  // itself sufficient for a direct sum, so the tuple enumeration below is the
  // real check.
  for (std::size_t a = 0; a < support.size(); ++a)
    for (std::size_t b = a + 1; b < support.size(); ++b) {
      Bitset meet =
          components[support[a]].intersect(components[support[b]]);
      if (meet.count() > 1)
        fail("NotDirectSum",
             "components of degrees " + std::to_string(support[a]) + " and " +
                 std::to_string(support[b]) + " overlap beyond zero");
    }

  std::uint64_t product = 1;
  std::vector<std::vector<RingElement>> support_elements;
  for (int g : support) {
    std::vector<RingElement> elems;
    for (std::uint64_t i : components[g].to_indices())
      elems.push_back(ring.element_at(i));
    product *= elems.size();
    support_elements.push_back(std::move(elems));
  }
  if (product < ring.order()) {
    // Find the least element outside the sum for the error message.
    Bitset span = additive_closure(ring, [&] {
      std::vector<RingElement> all;
      for (const auto& comp : support_elements)
        all.insert(all.end(), comp.begin(), comp.end());
      return all;
    }());
    std::uint64_t missing = 0;
    while (missing < ring.order() && span.test(missing)) ++missing;
    fail("NotDirectSum", "components do not span the ring; element index " +
                             std::to_string(missing) + " is not reached");
  }
  if (product > ring.order())
    fail("NotDirectSum",
         "component sizes multiply to " + std::to_string(product) +
             " which exceeds the ring order " + std::to_string(ring.order()));

  // Enumerate one element from each support component; the sums must hit
  // every ring element exactly once. This both certifies the direct sum and
  // fills the homogeneous-decomposition table.
  const std::size_t s = support.size();
  std::vector<std::vector<RingElement>> decomposition(ring.order());
  std::vector<char> seen(ring.order(), 0);
  std::vector<std::size_t> pick(s, 0);
  std::uint64_t produced = 0;
  while (true) {
    RingElement sum = ring.zero();
    std::vector<RingElement> parts(s);
    for (std::size_t a = 0; a < s; ++a) {
      parts[a] = support_elements[a][pick[a]];
      sum = ring.add(sum, parts[a]);
    }
    std::uint64_t idx = ring.index_of(sum);
    if (seen[idx])
      fail("NotDirectSum", "two distinct component tuples sum to the same "
                           "element (index " +
                               std::to_string(idx) + ")");
    seen[idx] = 1;
    decomposition[idx] = std::move(parts);
    ++produced;
    std::size_t a = 0;
    while (a < s && ++pick[a] == support_elements[a].size()) pick[a++] = 0;
    if (a == s) break;
  }
  if (produced != ring.order())
    fail("NotDirectSum", "components reach only " + std::to_string(produced) +
                             " of " + std::to_string(ring.order()) +
                             " elements");

  // Multiplicativity on generator pairs; bilinearity covers the rest.
  for (std::size_t a = 0; a < support.size(); ++a)
    for (std::size_t b = 0; b < support.size(); ++b) {
      int g = support[a], h = support[b];
      int gh = grading.group.op(g, h);
      const auto& gx = grading.component_generators.at(g);
      const auto& gy = grading.component_generators.at(h);
      for (const auto& x : gx)
        for (const auto& y : gy) {
          RingElement p = ring.mul(x, y);
          if (!components[gh].test(ring.index_of(p)))
            fail("NotMultiplicative",
                 "product of degree-" + std::to_string(g) + " and degree-" +
                     std::to_string(h) +
                     " generators lands outside the degree-" +
                     std::to_string(gh) + " component");
        }
    }

  // Degree table. Zero gets the identity degree by convention.
  std::vector<int> degree(ring.order(), -1);
  for (int g : support)
    for (std::uint64_t i : components[g].to_indices())
      if (i != zero_idx) degree[i] = g;
  degree[zero_idx] = grading.group.identity();

  // Unity must land in the identity component; for a valid grading of a
  // unital ring this is a theorem, so a failure here means corrupted inputs.
  if (!components[grading.group.identity()].test(
          ring.index_of(ring.unity())) &&
      !ring.is_degenerate())
    fail("NotMultiplicative", "unity is not in the identity component");

  GradedRing out(std::move(ring), std::move(grading));
  out.components_ = std::move(components);
  out.support_ = std::move(support);
  out.degree_ = std::move(degree);
  out.decomposition_ = std::move(decomposition);
  return out;
}

GradedRing GradedRing::trivial(FiniteRing ring, FiniteGroup group) {
  std::vector<RingElement> gens;
  for (int i = 0; i < ring.rank(); ++i) {
    RingElement b(ring.rank(), 0);
    if (ring.additive_orders()[i] > 1) b[i] = 1;
    gens.push_back(std::move(b));
  }
  Grading grading{std::move(group), {}};
  grading.component_generators[grading.group.identity()] = std::move(gens);
  return validate(std::move(ring), std::move(grading));
}

const Bitset& GradedRing::component_bitset(int g) const {
  if (g < 0 || g >= group_.order())
    fail("UnknownGroupElement",
         "degree " + std::to_string(g) + " is not a group element");
  return components_[g];
}

std::vector<RingElement> GradedRing::component_elements(int g) const {
  std::vector<RingElement> out;
  for (std::uint64_t i : component_bitset(g).to_indices())
    out.push_back(ring_.element_at(i));
  return out;
}

std::optional<int> GradedRing::degree_of(const RingElement& x) const {
  int d = degree_[ring_.index_of(x)];
  if (d < 0) return std::nullopt;
  return d;
}

std::vector<HomogeneousElement> GradedRing::homogeneous_elements() const {
  std::vector<HomogeneousElement> out;
  out.push_back({group_.identity(), ring_.zero()});
  const std::uint64_t zero_idx = ring_.index_of(ring_.zero());
  for (std::uint64_t i = 0; i < ring_.order(); ++i)
    if (i != zero_idx && degree_[i] >= 0)
      out.push_back({degree_[i], ring_.element_at(i)});
  return out;
}

std::uint64_t GradedRing::homogeneous_count() const {
  std::uint64_t c = 0;
  for (int d : degree_)
    if (d >= 0) ++c;
  return c;
}

GradedRing coarsen(const GradedRing& gr, const std::vector<int>& subgroup_h) {
  QuotientGroup q = quotient_group(gr.group(), subgroup_h);
  Grading grading{std::move(q.group), {}};
  for (int g : gr.support()) {
    auto& gens = grading.component_generators[q.projection[g]];
    const auto& src = gr.grading().component_generators.at(g);
    gens.insert(gens.end(), src.begin(), src.end());
  }
  if (grading.component_generators.empty())
    grading.component_generators[grading.group.identity()] = {};
  return GradedRing::validate(gr.ring(), std::move(grading));
}

}  // namespace gradering
