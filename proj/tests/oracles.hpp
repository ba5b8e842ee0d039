#pragma once

// Brute-force oracles for the test suite. Everything here is recomputed from
// the definitions by plain scans, so engine results are compared against a
// second, independent implementation instead of against themselves. All of
// it is exponential in spirit and intended for rings of at most a few
// hundred elements.

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <utility>
#include <vector>

#include "gradering/abelian.hpp"
#include "gradering/classify.hpp"
#include "gradering/finite_group.hpp"
#include "gradering/finite_ring.hpp"
#include "gradering/grading.hpp"

namespace oracle {

using gradering::Bitset;
using gradering::FiniteGroup;
using gradering::FiniteRing;
using gradering::GradedRing;
using gradering::RingElement;
using gradering::RingSpec;

inline std::vector<RingElement> all_elements(const FiniteRing& r) {
  std::vector<RingElement> out;
  out.reserve(r.order());
  for (std::uint64_t i = 0; i < r.order(); ++i) out.push_back(r.element_at(i));
  return out;
}

/// Two-sided inverse by scanning every candidate.
inline std::optional<RingElement> inverse_scan(const FiniteRing& r,
                                               const RingElement& x) {
  for (std::uint64_t i = 0; i < r.order(); ++i) {
    RingElement y = r.element_at(i);
    if (r.is_unity(r.mul(x, y)) && r.is_unity(r.mul(y, x))) return y;
  }
  return std::nullopt;
}

inline std::set<std::uint64_t> units_scan(const FiniteRing& r) {
  std::set<std::uint64_t> out;
  for (std::uint64_t i = 0; i < r.order(); ++i)
    if (inverse_scan(r, r.element_at(i))) out.insert(i);
  return out;
}

/// Least k >= 1 with x^k = 0, by repeated multiplication.
inline std::optional<int> nilpotency_index_scan(const FiniteRing& r,
                                                const RingElement& x) {
  RingElement p = x;
  for (std::uint64_t k = 1; k <= r.order() + 1; ++k) {
    if (r.is_zero(p)) return static_cast<int>(k);
    p = r.mul(p, x);
  }
  return std::nullopt;
}

inline std::set<std::uint64_t> nilpotents_scan(const FiniteRing& r) {
  std::set<std::uint64_t> out;
  for (std::uint64_t i = 0; i < r.order(); ++i) {
    RingElement x = r.element_at(i);
    RingElement p = x;
    for (std::uint64_t k = 1; k <= r.order(); ++k) {
      if (r.is_zero(p)) {
        out.insert(i);
        break;
      }
      p = r.mul(p, x);
    }
  }
  return out;
}

inline std::set<std::uint64_t> idempotents_scan(const FiniteRing& r) {
  std::set<std::uint64_t> out;
  for (std::uint64_t i = 0; i < r.order(); ++i) {
    RingElement x = r.element_at(i);
    if (r.mul(x, x) == x) out.insert(i);
  }
  return out;
}

inline std::set<std::uint64_t> bitset_to_set(const Bitset& b) {
  std::set<std::uint64_t> out;
  for (std::uint64_t i : b.to_indices()) out.insert(i);
  return out;
}

/// Every additive subgroup, as sorted index sets. Worklist closure: extend
/// each known subgroup by one outside element and close under addition.
inline std::vector<std::set<std::uint64_t>> all_additive_subgroups(
    const FiniteRing& r) {
  auto close = [&](std::set<std::uint64_t> seed) {
    std::vector<std::uint64_t> work(seed.begin(), seed.end());
    while (!work.empty()) {
      std::uint64_t a = work.back();
      work.pop_back();
      for (std::uint64_t b : std::set<std::uint64_t>(seed)) {
        std::uint64_t c =
            r.index_of(r.add(r.element_at(a), r.element_at(b)));
        if (seed.insert(c).second) work.push_back(c);
      }
      std::uint64_t n = r.index_of(r.neg(r.element_at(a)));
      if (seed.insert(n).second) work.push_back(n);
    }
    return seed;
  };
  std::set<std::set<std::uint64_t>> found;
  std::vector<std::set<std::uint64_t>> work;
  std::set<std::uint64_t> zero{r.index_of(r.zero())};
  found.insert(zero);
  work.push_back(zero);
  while (!work.empty()) {
    std::set<std::uint64_t> s = work.back();
    work.pop_back();
    for (std::uint64_t i = 0; i < r.order(); ++i) {
      if (s.count(i)) continue;
      std::set<std::uint64_t> bigger = s;
      bigger.insert(i);
      bigger = close(std::move(bigger));
      if (found.insert(bigger).second) work.push_back(bigger);
    }
  }
  return std::vector<std::set<std::uint64_t>>(found.begin(), found.end());
}

/// Is the additive subgroup closed under right multiplication by the whole
/// ring? Additivity reduces the check to the ring's additive generators.
inline bool closed_under_right_mul(const FiniteRing& r,
                                   const std::set<std::uint64_t>& s) {
  for (std::uint64_t i : s) {
    RingElement x = r.element_at(i);
    for (int j = 0; j < r.rank(); ++j) {
      RingElement gen(static_cast<std::size_t>(r.rank()), 0);
      gen[j] = 1;
      if (!s.count(r.index_of(r.mul(x, gen)))) return false;
    }
  }
  return true;
}

inline std::vector<std::set<std::uint64_t>> right_ideals_scan(
    const FiniteRing& r) {
  std::vector<std::set<std::uint64_t>> out;
  for (const auto& s : all_additive_subgroups(r))
    if (closed_under_right_mul(r, s)) out.push_back(s);
  return out;
}

inline std::vector<std::set<std::uint64_t>> maximal_proper(
    const std::vector<std::set<std::uint64_t>>& ideals,
    std::uint64_t ring_order) {
  std::vector<std::set<std::uint64_t>> out;
  for (const auto& a : ideals) {
    if (a.size() == ring_order) continue;
    bool maximal = true;
    for (const auto& b : ideals) {
      if (b.size() == ring_order || &a == &b) continue;
      if (a.size() < b.size() &&
          std::includes(b.begin(), b.end(), a.begin(), a.end())) {
        maximal = false;
        break;
      }
    }
    if (maximal) out.push_back(a);
  }
  return out;
}

/// J(R) as the intersection of the maximal right ideals, all of them found
/// by filtering the full additive-subgroup lattice.
inline std::set<std::uint64_t> jacobson_scan(const FiniteRing& r) {
  auto maximal = maximal_proper(right_ideals_scan(r), r.order());
  std::set<std::uint64_t> out;
  if (maximal.empty()) {
    for (std::uint64_t i = 0; i < r.order(); ++i) out.insert(i);
    return out;
  }
  out = maximal.front();
  for (const auto& m : maximal) {
    std::set<std::uint64_t> next;
    std::set_intersection(out.begin(), out.end(), m.begin(), m.end(),
                          std::inserter(next, next.begin()));
    out = std::move(next);
  }
  return out;
}

/// Does the subgroup contain the degree parts of each of its members?
inline bool homogeneous_subgroup_scan(const GradedRing& gr,
                                      const std::set<std::uint64_t>& s) {
  for (std::uint64_t i : s)
    for (const RingElement& part : gr.decomposition(i))
      if (!s.count(gr.ring().index_of(part))) return false;
  return true;
}

inline std::vector<std::set<std::uint64_t>> homogeneous_right_ideals_scan(
    const GradedRing& gr) {
  std::vector<std::set<std::uint64_t>> out;
  for (const auto& s : right_ideals_scan(gr.ring()))
    if (homogeneous_subgroup_scan(gr, s)) out.push_back(s);
  return out;
}

inline std::set<std::uint64_t> graded_jacobson_scan(const GradedRing& gr) {
  auto ideals = homogeneous_right_ideals_scan(gr);
  auto maximal = maximal_proper(ideals, gr.ring().order());
  std::set<std::uint64_t> out;
  if (maximal.empty()) {
    for (std::uint64_t i = 0; i < gr.ring().order(); ++i) out.insert(i);
    return out;
  }
  out = maximal.front();
  for (const auto& m : maximal) {
    std::set<std::uint64_t> next;
    std::set_intersection(out.begin(), out.end(), m.begin(), m.end(),
                          std::inserter(next, next.begin()));
    out = std::move(next);
  }
  return out;
}

/// Every (unit, nilpotent) pair with u + n = x, as index pairs.
inline std::vector<std::pair<std::uint64_t, std::uint64_t>>
nil_good_pairs_scan(const FiniteRing& r, const std::set<std::uint64_t>& units,
                    const std::set<std::uint64_t>& nilpotents,
                    const RingElement& x) {
  std::vector<std::pair<std::uint64_t, std::uint64_t>> out;
  for (std::uint64_t n : nilpotents) {
    RingElement u = r.sub(x, r.element_at(n));
    std::uint64_t ui = r.index_of(u);
    if (units.count(ui)) out.emplace_back(ui, n);
  }
  return out;
}

/// Unrestricted homogeneous-pair search: any homogeneous unit plus any
/// homogeneous nilpotent summing to x, degrees unconstrained.
inline bool homogeneous_pair_exists_scan(const GradedRing& gr,
                                         const RingElement& x) {
  const FiniteRing& r = gr.ring();
  auto units = units_scan(r);
  auto nilpotents = nilpotents_scan(r);
  for (std::uint64_t u : units) {
    if (!gr.is_homogeneous(r.element_at(u))) continue;
    RingElement n = r.sub(x, r.element_at(u));
    if (nilpotents.count(r.index_of(n)) && gr.is_homogeneous(n)) return true;
  }
  return false;
}

/// Same-degree homogeneous decomposition search from the definitions.
inline bool same_degree_pair_exists_scan(const GradedRing& gr, int degree,
                                         const RingElement& x) {
  const FiniteRing& r = gr.ring();
  auto units = units_scan(r);
  auto nilpotents = nilpotents_scan(r);
  for (std::uint64_t ni : nilpotents) {
    RingElement n = r.element_at(ni);
    if (!gr.component_bitset(degree).test(ni)) continue;
    RingElement u = r.sub(x, n);
    if (units.count(r.index_of(u)) &&
        gr.component_bitset(degree).test(r.index_of(u)))
      return true;
  }
  return false;
}

/// Exhaustive unital ring isomorphism for tiny orders: try every bijection
/// fixing 0 -> 0 and 1 -> 1.
inline bool rings_isomorphic_scan(const FiniteRing& a, const FiniteRing& b) {
  if (a.order() != b.order()) return false;
  std::uint64_t n = a.order();
  std::uint64_t za = a.index_of(a.zero()), ua = a.index_of(a.unity());
  std::uint64_t zb = b.index_of(b.zero()), ub = b.index_of(b.unity());
  if ((za == ua) != (zb == ub)) return false;
  std::vector<std::uint64_t> dom, img;
  for (std::uint64_t i = 0; i < n; ++i) {
    if (i != za && i != ua) dom.push_back(i);
  }
  for (std::uint64_t i = 0; i < n; ++i) {
    if (i != zb && i != ub) img.push_back(i);
  }
  std::sort(img.begin(), img.end());
  do {
    std::vector<std::uint64_t> f(n);
    f[za] = zb;
    f[ua] = ub;
    for (std::size_t k = 0; k < dom.size(); ++k) f[dom[k]] = img[k];
    bool ok = true;
    for (std::uint64_t i = 0; i < n && ok; ++i) {
      for (std::uint64_t j = 0; j < n && ok; ++j) {
        RingElement x = a.element_at(i), y = a.element_at(j);
        if (f[a.index_of(a.add(x, y))] !=
            b.index_of(b.add(b.element_at(f[i]), b.element_at(f[j]))))
          ok = false;
        if (ok && f[a.index_of(a.mul(x, y))] !=
                      b.index_of(b.mul(b.element_at(f[i]),
                                       b.element_at(f[j]))))
          ok = false;
      }
    }
    if (ok) return true;
  } while (std::next_permutation(img.begin(), img.end()));
  return false;
}

// ---------------------------------------------------------------------------
// Small named builders shared across the test files.

/// Z2[X]/(X^2): additive Z2 x Z2 with basis {1, x}, x^2 = 0.
inline FiniteRing z2_x_mod_x2() {
  RingSpec s;
  s.additive_orders = {2, 2};
  s.unity = {1, 0};
  s.mul = {{{1, 0}, {0, 1}}, {{0, 1}, {0, 0}}};
  return FiniteRing::from_spec(s);
}

/// The C2-grading of Z2[X]/(X^2) with R_e = span{1} and R_g = span{x}.
inline GradedRing ex3_1_graded() {
  gradering::Grading g{FiniteGroup::cyclic(2), {}};
  g.component_generators[0] = {{1, 0}};
  g.component_generators[1] = {{0, 1}};
  return GradedRing::validate(z2_x_mod_x2(), g);
}

/// M_2(Z2) as a structure-constant ring with basis E11, E12, E21, E22.
inline FiniteRing m2_z2() {
  auto unit = [](int k) {
    RingElement e(4, 0);
    e[k] = 1;
    return e;
  };
  RingSpec s;
  s.additive_orders = {2, 2, 2, 2};
  s.unity = {1, 0, 0, 1};
  s.mul.assign(4, std::vector<RingElement>(4, RingElement(4, 0)));
  // E_{ij} * E_{kl} = delta_{jk} E_{il}, with basis index 2*i + j.
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      for (int k = 0; k < 2; ++k)
        for (int l = 0; l < 2; ++l)
          s.mul[2 * i + j][2 * k + l] =
              (j == k) ? unit(2 * i + l) : RingElement(4, 0);
  return FiniteRing::from_spec(s);
}

/// Checkerboard C2-grading of M_2(Z2): diagonal matrices in degree e,
/// antidiagonal in degree g.
inline GradedRing checkerboard_m2_z2() {
  gradering::Grading g{FiniteGroup::cyclic(2), {}};
  g.component_generators[0] = {{1, 0, 0, 0}, {0, 0, 0, 1}};
  g.component_generators[1] = {{0, 1, 0, 0}, {0, 0, 1, 0}};
  return GradedRing::validate(m2_z2(), g);
}

/// The symmetric group on three letters as a Cayley table. Elements are the
/// permutations of {0,1,2} in lexicographic one-line order, so index 0 is
/// the identity.
inline FiniteGroup s3() {
  std::vector<std::vector<int>> perms = {{0, 1, 2}, {0, 2, 1}, {1, 0, 2},
                                         {1, 2, 0}, {2, 0, 1}, {2, 1, 0}};
  auto find = [&](const std::vector<int>& p) {
    for (std::size_t i = 0; i < perms.size(); ++i)
      if (perms[i] == p) return static_cast<int>(i);
    return -1;
  };
  std::vector<std::vector<int>> table(6, std::vector<int>(6, 0));
  for (int a = 0; a < 6; ++a)
    for (int b = 0; b < 6; ++b) {
      // (a then b) as functions: (a*b)(x) = a(b(x)).
      std::vector<int> c(3);
      for (int x = 0; x < 3; ++x) c[x] = perms[a][perms[b][x]];
      table[a][b] = find(c);
    }
  return FiniteGroup::from_table(table, 0);
}

}  // namespace oracle
