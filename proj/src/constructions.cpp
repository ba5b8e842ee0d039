#include "gradering/constructions.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>

namespace gradering {

void check_ring_order_cap(std::uint64_t order, const Limits& limits) {
  if (order > limits.max_ring_order)
    fail("OrderCapExceeded", "ring order " + std::to_string(order) +
                                 " exceeds the cap of " +
                                 std::to_string(limits.max_ring_order));
}

namespace {

// The bimodule carrier is a bare finite abelian group; these helpers mirror
// the ring's mixed-radix element handling for it.
std::uint64_t carrier_order(const std::vector<int>& orders) {
  std::uint64_t n = 1;
  for (int m : orders) n *= static_cast<std::uint64_t>(m);
  return n;
}

std::uint64_t carrier_index(const std::vector<int>& orders,
                            const RingElement& x) {
  std::uint64_t idx = 0;
  for (int i = static_cast<int>(orders.size()) - 1; i >= 0; --i)
    idx = idx * orders[i] + x[i];
  return idx;
}

RingElement carrier_at(const std::vector<int>& orders, std::uint64_t index) {
  RingElement x(orders.size());
  for (std::size_t i = 0; i < orders.size(); ++i) {
    x[i] = static_cast<int>(index % orders[i]);
    index /= orders[i];
  }
  return x;
}

RingElement carrier_add(const std::vector<int>& orders, const RingElement& a,
                        const RingElement& b) {
  RingElement c(orders.size());
  for (std::size_t i = 0; i < orders.size(); ++i)
    c[i] = (a[i] + b[i]) % orders[i];
  return c;
}

Bitset carrier_closure(const std::vector<int>& orders,
                       const std::vector<RingElement>& gens) {
  Bitset seen(carrier_order(orders));
  RingElement zero(orders.size(), 0);
  seen.set(carrier_index(orders, zero));
  std::deque<RingElement> queue{zero};
  while (!queue.empty()) {
    RingElement x = queue.front();
    queue.pop_front();
    for (const auto& g : gens) {
      RingElement y = carrier_add(orders, x, g);
      std::uint64_t i = carrier_index(orders, y);
      if (!seen.test(i)) {
        seen.set(i);
        queue.push_back(y);
      }
    }
  }
  return seen;
}

void check_carrier_element(const std::vector<int>& orders,
                           const RingElement& x, const std::string& what) {
  if (x.size() != orders.size())
    fail("ActionAxiomViolation", what + " has wrong coordinate count");
  for (std::size_t i = 0; i < x.size(); ++i)
    if (x[i] < 0 || x[i] >= orders[i])
      fail("ActionAxiomViolation", what + " has a coordinate out of range");
}

// Bilinear extension of the generator-level action tables.
RingElement act_left(const GradedBimodule& mod, const FiniteRing& ring,
                     const RingElement& a, const RingElement& m) {
  const std::size_t ke = mod.orders.size();
  std::vector<long long> acc(ke, 0);
  for (int i = 0; i < ring.rank(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < ke; ++j) {
      if (m[j] == 0) continue;
      long long c = static_cast<long long>(a[i]) * m[j];
      for (std::size_t t = 0; t < ke; ++t)
        acc[t] += c * mod.left_action[i][j][t];
    }
  }
  RingElement out(ke);
  for (std::size_t t = 0; t < ke; ++t)
    out[t] = static_cast<int>(((acc[t] % mod.orders[t]) + mod.orders[t]) %
                              mod.orders[t]);
  return out;
}

RingElement act_right(const GradedBimodule& mod, const FiniteRing& ring,
                      const RingElement& m, const RingElement& a) {
  const std::size_t ke = mod.orders.size();
  std::vector<long long> acc(ke, 0);
  for (std::size_t j = 0; j < ke; ++j) {
    if (m[j] == 0) continue;
    for (int i = 0; i < ring.rank(); ++i) {
      if (a[i] == 0) continue;
      long long c = static_cast<long long>(m[j]) * a[i];
      for (std::size_t t = 0; t < ke; ++t)
        acc[t] += c * mod.right_action[j][i][t];
    }
  }
  RingElement out(ke);
  for (std::size_t t = 0; t < ke; ++t)
    out[t] = static_cast<int>(((acc[t] % mod.orders[t]) + mod.orders[t]) %
                              mod.orders[t]);
  return out;
}

std::vector<RingElement> basis_of(const FiniteRing& ring) {
  std::vector<RingElement> basis;
  for (int i = 0; i < ring.rank(); ++i) {
    RingElement b(ring.rank(), 0);
    if (ring.additive_orders()[i] > 1) b[i] = 1;
    basis.push_back(std::move(b));
  }
  return basis;
}

std::vector<RingElement> carrier_basis(const std::vector<int>& orders) {
  std::vector<RingElement> basis;
  for (std::size_t i = 0; i < orders.size(); ++i) {
    RingElement b(orders.size(), 0);
    if (orders[i] > 1) b[i] = 1;
    basis.push_back(std::move(b));
  }
  return basis;
}

}  // namespace

GradedBimodule self_bimodule(const GradedRing& base, int degree) {
  const FiniteRing& ring = base.ring();
  if (degree < 0 || degree >= base.group().order())
    fail("UnknownGroupElement",
         "module placement degree is not a group element");
  GradedBimodule mod;
  mod.orders = ring.additive_orders();
  const int k = ring.rank();
  mod.left_action.assign(k, std::vector<RingElement>(k));
  mod.right_action.assign(k, std::vector<RingElement>(k));
  std::vector<RingElement> basis = basis_of(ring);
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j) {
      mod.left_action[i][j] = ring.mul(basis[i], basis[j]);
      mod.right_action[i][j] = ring.mul(basis[i], basis[j]);
    }
  // The copy of the ring sits at `degree`: the component of degree g*d is
  // the image of A_g. For a nonabelian group this is the placement that
  // keeps the left action degree law unconditional.
  for (int g : base.support()) {
    int placed = base.group().op(g, degree);
    mod.component_generators[placed] =
        base.grading().component_generators.at(g);
  }
  if (base.support().empty()) mod.component_generators[degree] = {};
  return mod;
}

void validate_bimodule(const GradedRing& base, const GradedBimodule& mod) {
  const FiniteRing& ring = base.ring();
  const int k = ring.rank();
  const std::size_t ke = mod.orders.size();
  if (ke == 0) fail("ActionAxiomViolation", "module carrier has no factors");
  for (int m : mod.orders)
    if (m < 1)
      fail("ActionAxiomViolation", "module factor orders must be >= 1");
  if (mod.left_action.size() != static_cast<std::size_t>(k) ||
      mod.right_action.size() != ke)
    fail("ActionAxiomViolation", "action tables have wrong shape");
  for (int i = 0; i < k; ++i) {
    if (mod.left_action[i].size() != ke)
      fail("ActionAxiomViolation", "left action row has wrong length");
    for (std::size_t j = 0; j < ke; ++j)
      check_carrier_element(mod.orders, mod.left_action[i][j],
                            "left action value");
  }
  for (std::size_t j = 0; j < ke; ++j) {
    if (static_cast<int>(mod.right_action[j].size()) != k)
      fail("ActionAxiomViolation", "right action row has wrong length");
    for (int i = 0; i < k; ++i)
      check_carrier_element(mod.orders, mod.right_action[j][i],
                            "right action value");
  }

  // Residue well-definedness of the bilinear tables.
  for (int i = 0; i < k; ++i)
    for (std::size_t j = 0; j < ke; ++j)
      for (std::size_t t = 0; t < ke; ++t) {
        long long l = mod.left_action[i][j][t];
        long long r = mod.right_action[j][i][t];
        if ((static_cast<long long>(ring.additive_orders()[i]) * l) %
                    mod.orders[t] !=
                0 ||
            (static_cast<long long>(mod.orders[j]) * l) % mod.orders[t] != 0)
          fail("ActionAxiomViolation",
               "left action is not well defined on residues");
        if ((static_cast<long long>(ring.additive_orders()[i]) * r) %
                    mod.orders[t] !=
                0 ||
            (static_cast<long long>(mod.orders[j]) * r) % mod.orders[t] != 0)
          fail("ActionAxiomViolation",
               "right action is not well defined on residues");
      }

  std::vector<RingElement> rb = basis_of(ring);
  std::vector<RingElement> eb = carrier_basis(mod.orders);
  for (const auto& m : eb) {
    if (act_left(mod, ring, ring.unity(), m) != m)
      fail("ActionAxiomViolation", "unity does not act as identity on the left");
    if (act_right(mod, ring, m, ring.unity()) != m)
      fail("ActionAxiomViolation",
           "unity does not act as identity on the right");
  }
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j)
      for (const auto& m : eb) {
        RingElement ab = ring.mul(rb[i], rb[j]);
        if (act_left(mod, ring, ab, m) !=
            act_left(mod, ring, rb[i], act_left(mod, ring, rb[j], m)))
          fail("ActionAxiomViolation", "(ab).m = a.(b.m) fails on generators");
        if (act_right(mod, ring, act_right(mod, ring, m, rb[i]), rb[j]) !=
            act_right(mod, ring, m, ab))
          fail("ActionAxiomViolation", "m.(ab) = (m.a).b fails on generators");
        if (act_right(mod, ring, act_left(mod, ring, rb[i], m), rb[j]) !=
            act_left(mod, ring, rb[i], act_right(mod, ring, m, rb[j])))
          fail("ActionAxiomViolation", "(a.m).b = a.(m.b) fails on generators");
      }

  // Component degree keys and direct sum over the carrier.
  const int G = base.group().order();
  std::vector<Bitset> comps;
  std::vector<RingElement> all_gens;
  std::uint64_t product = 1;
  for (const auto& [g, gens] : mod.component_generators) {
    if (g < 0 || g >= G)
      fail("UnknownGroupElement", "module component key is not a group element");
    for (const auto& x : gens)
      check_carrier_element(mod.orders, x, "module component generator");
  }
  for (int g = 0; g < G; ++g) {
    auto it = mod.component_generators.find(g);
    std::vector<RingElement> gens =
        it == mod.component_generators.end() ? std::vector<RingElement>{}
                                             : it->second;
    comps.push_back(carrier_closure(mod.orders, gens));
    product *= comps.back().count();
    all_gens.insert(all_gens.end(), gens.begin(), gens.end());
  }
  std::uint64_t total = carrier_order(mod.orders);
  Bitset joint = carrier_closure(mod.orders, all_gens);
  if (product != total || joint.count() != total)
    fail("ActionAxiomViolation",
         "module components do not form a direct sum of the carrier");

  // Degree law on generators: A_h . E_g inside E_{hg}, E_g . A_h inside
  // E_{gh}.
  for (int h : base.support()) {
    const auto& agens = base.grading().component_generators.at(h);
    for (int g = 0; g < G; ++g) {
      auto it = mod.component_generators.find(g);
      if (it == mod.component_generators.end()) continue;
      for (const auto& a : agens)
        for (const auto& m : it->second) {
          RingElement lm = act_left(mod, ring, a, m);
          if (!comps[base.group().op(h, g)].test(
                  carrier_index(mod.orders, lm)))
            fail("ActionAxiomViolation",
                 "left action violates the degree law");
          RingElement rm = act_right(mod, ring, m, a);
          if (!comps[base.group().op(g, h)].test(
                  carrier_index(mod.orders, rm)))
            fail("ActionAxiomViolation",
                 "right action violates the degree law");
        }
    }
  }
}

GradedRing trivial_extension(const GradedRing& base, const GradedBimodule& mod,
                             const Limits& limits) {
  validate_bimodule(base, mod);
  const FiniteRing& a = base.ring();
  const int ka = a.rank();
  const int ke = static_cast<int>(mod.orders.size());
  const int kr = ka + ke;
  check_ring_order_cap(a.order() * carrier_order(mod.orders), limits);

  auto embed_a = [&](const RingElement& x) {
    RingElement out(kr, 0);
    for (int i = 0; i < ka; ++i) out[i] = x[i];
    return out;
  };
  auto embed_e = [&](const RingElement& x) {
    RingElement out(kr, 0);
    for (int i = 0; i < ke; ++i) out[ka + i] = x[i];
    return out;
  };

  RingSpec spec;
  spec.additive_orders = a.additive_orders();
  spec.additive_orders.insert(spec.additive_orders.end(), mod.orders.begin(),
                              mod.orders.end());
  spec.unity = embed_a(a.unity());
  std::vector<RingElement> ab = basis_of(a);
  std::vector<RingElement> eb = carrier_basis(mod.orders);
  spec.mul.assign(kr, std::vector<RingElement>(kr));
  for (int i = 0; i < kr; ++i)
    for (int j = 0; j < kr; ++j) {
      if (i < ka && j < ka)
        spec.mul[i][j] = embed_a(a.mul(ab[i], ab[j]));
      else if (i < ka)
        spec.mul[i][j] = embed_e(act_left(mod, a, ab[i], eb[j - ka]));
      else if (j < ka)
        spec.mul[i][j] = embed_e(act_right(mod, a, eb[i - ka], ab[j]));
      else
        spec.mul[i][j] = RingElement(kr, 0);
    }
  FiniteRing ring = FiniteRing::from_spec(std::move(spec));

  Grading grading{base.group(), {}};
  std::set<int> degrees;
  for (int g : base.support()) degrees.insert(g);
  for (const auto& [g, gens] : mod.component_generators)
    if (!gens.empty()) degrees.insert(g);
  for (int g : degrees) {
    std::vector<RingElement> gens;
    if (base.component_bitset(g).count() > 1)
      for (const auto& x : base.grading().component_generators.at(g))
        gens.push_back(embed_a(x));
    auto it = mod.component_generators.find(g);
    if (it != mod.component_generators.end())
      for (const auto& x : it->second) gens.push_back(embed_e(x));
    grading.component_generators[g] = std::move(gens);
  }
  if (degrees.empty())
    grading.component_generators[base.group().identity()] = {};
  return GradedRing::validate(std::move(ring), std::move(grading));
}

TeTransfer te_unit_nilpotent_transfer(const GradedRing& extension,
                                      const GradedRing& base) {
  const FiniteRing& r = extension.ring();
  const FiniteRing& a = base.ring();
  const int ka = a.rank();
  if (r.rank() < ka)
    fail("TransferIdentityFailed",
         "extension has fewer additive factors than its base");
  ElementClasses rc = element_classes(r);
  ElementClasses ac = element_classes(a);
  for (std::uint64_t i = 0; i < r.order(); ++i) {
    RingElement x = r.element_at(i);
    RingElement xa(x.begin(), x.begin() + ka);
    bool base_unit = ac.units.test(a.index_of(xa));
    bool base_nil = ac.nilpotents.test(a.index_of(xa));
    if (rc.units.test(i) != base_unit)
      fail("TransferIdentityFailed",
           "unit set does not match U(A) x E at element index " +
               std::to_string(i));
    if (rc.nilpotents.test(i) != base_nil)
      fail("TransferIdentityFailed",
           "nilpotent set does not match Nil(A) x E at element index " +
               std::to_string(i));
  }
  return TeTransfer{rc.units, rc.nilpotents};
}

GradedRing group_ring_graded(const GradedRing& base, const Limits& limits) {
  const FiniteRing& r = base.ring();
  const FiniteGroup& g = base.group();
  const int k = r.rank();
  const int n = g.order();

  std::uint64_t order = 1;
  for (int i = 0; i < n; ++i) {
    if (order > limits.max_ring_order) break;
    order *= r.order();
  }
  check_ring_order_cap(order, limits);

  const int kr = n * k;
  auto slot = [&](int h, int t) { return h * k + t; };
  auto embed = [&](const RingElement& x, int h) {
    RingElement out(kr, 0);
    for (int t = 0; t < k; ++t) out[slot(h, t)] = x[t];
    return out;
  };

  RingSpec spec;
  spec.additive_orders.assign(kr, 0);
  for (int h = 0; h < n; ++h)
    for (int t = 0; t < k; ++t)
      spec.additive_orders[slot(h, t)] = r.additive_orders()[t];
  spec.unity = embed(r.unity(), g.identity());

  std::vector<RingElement> basis = basis_of(r);
  const auto& support = base.support();
  spec.mul.assign(kr, std::vector<RingElement>(kr));
  for (int gp = 0; gp < n; ++gp)
    for (int i = 0; i < k; ++i)
      for (int hp = 0; hp < n; ++hp)
        for (int j = 0; j < k; ++j) {
          // (b_i gp) * (b_j hp): split b_j into homogeneous parts; a part of
          // degree h contributes (b_i * part) tagged by h^-1 gp h hp.
          const auto& parts = base.decomposition(r.index_of(basis[j]));
          std::vector<long long> acc(kr, 0);
          for (std::size_t s = 0; s < support.size(); ++s) {
            if (r.is_zero(parts[s])) continue;
            int h = support[s];
            int target = g.op(g.op(g.op(g.inverse(h), gp), h), hp);
            RingElement c = r.mul(basis[i], parts[s]);
            for (int t = 0; t < k; ++t) acc[slot(target, t)] += c[t];
          }
          RingElement out(kr);
          for (int t = 0; t < kr; ++t)
            out[t] = static_cast<int>(acc[t] % spec.additive_orders[t]);
          spec.mul[slot(gp, i)][slot(hp, j)] = std::move(out);
        }
  FiniteRing ring = FiniteRing::from_spec(std::move(spec));

  Grading grading{g, {}};
  for (int lambda = 0; lambda < n; ++lambda) {
    std::vector<RingElement> gens;
    for (int h = 0; h < n; ++h) {
      int d = g.op(lambda, g.inverse(h));
      if (base.component_bitset(d).count() <= 1) continue;
      for (const auto& x : base.grading().component_generators.at(d))
        gens.push_back(embed(x, h));
    }
    if (!gens.empty()) grading.component_generators[lambda] = std::move(gens);
  }
  if (grading.component_generators.empty())
    grading.component_generators[g.identity()] = {};
  return GradedRing::validate(std::move(ring), std::move(grading));
}

CoarseGroupRing group_ring_coarse(const GradedRing& base,
                                  const std::vector<int>& subgroup_h,
                                  const Limits& limits) {
  const FiniteRing& r = base.ring();
  const FiniteGroup& g = base.group();
  GradedRing coarse_base = coarsen(base, subgroup_h);  // validates H normal
  std::vector<int> H(subgroup_h);
  std::sort(H.begin(), H.end());
  const int nh = static_cast<int>(H.size());
  const int k = r.rank();

  std::uint64_t order = 1;
  for (int i = 0; i < nh; ++i) {
    if (order > limits.max_ring_order) break;
    order *= r.order();
  }
  check_ring_order_cap(order, limits);

  std::vector<int> pos_of(g.order(), -1);
  for (int i = 0; i < nh; ++i) pos_of[H[i]] = i;

  const int kr = nh * k;
  auto slot = [&](int hi, int t) { return hi * k + t; };
  auto embed = [&](const RingElement& x, int hi) {
    RingElement out(kr, 0);
    for (int t = 0; t < k; ++t) out[slot(hi, t)] = x[t];
    return out;
  };

  RingSpec spec;
  spec.additive_orders.assign(kr, 0);
  for (int hi = 0; hi < nh; ++hi)
    for (int t = 0; t < k; ++t)
      spec.additive_orders[slot(hi, t)] = r.additive_orders()[t];
  spec.unity = embed(r.unity(), pos_of[g.identity()]);
  std::vector<RingElement> basis = basis_of(r);
  spec.mul.assign(kr, std::vector<RingElement>(kr));
  for (int hi = 0; hi < nh; ++hi)
    for (int i = 0; i < k; ++i)
      for (int hj = 0; hj < nh; ++hj)
        for (int j = 0; j < k; ++j)
          spec.mul[slot(hi, i)][slot(hj, j)] =
              embed(r.mul(basis[i], basis[j]), pos_of[g.op(H[hi], H[hj])]);
  FiniteRing ring = FiniteRing::from_spec(std::move(spec));

  // G/H-grading: a degree-d coefficient tagged by any h in H has degree dH.
  const QuotientGroup q = quotient_group(g, subgroup_h);
  Grading grading{q.group, {}};
  for (int d : base.support()) {
    auto& gens = grading.component_generators[q.projection[d]];
    for (int hi = 0; hi < nh; ++hi)
      for (const auto& x : base.grading().component_generators.at(d))
        gens.push_back(embed(x, hi));
  }
  if (grading.component_generators.empty())
    grading.component_generators[q.group.identity()] = {};
  GradedRing graded = GradedRing::validate(std::move(ring), std::move(grading));

  // Augmentation: sum of the coefficients. A ring morphism onto the
  // coarsened base, degree preserving; its kernel is the augmentation ideal.
  const FiniteRing& rg = graded.ring();
  std::vector<std::uint64_t> augmentation(rg.order());
  Bitset kernel(rg.order());
  for (std::uint64_t idx = 0; idx < rg.order(); ++idx) {
    RingElement x = rg.element_at(idx);
    RingElement sum = r.zero();
    for (int hi = 0; hi < nh; ++hi) {
      RingElement coeff(k);
      for (int t = 0; t < k; ++t) coeff[t] = x[slot(hi, t)];
      sum = r.add(sum, coeff);
    }
    augmentation[idx] = r.index_of(sum);
    if (r.is_zero(sum)) kernel.set(idx);
  }
  for (int i = 0; i < kr; ++i)
    for (int j = 0; j < kr; ++j) {
      RingElement bi(kr, 0), bj(kr, 0);
      if (rg.additive_orders()[i] > 1) bi[i] = 1;
      if (rg.additive_orders()[j] > 1) bj[j] = 1;
      std::uint64_t lhs = augmentation[rg.index_of(rg.mul(bi, bj))];
      RingElement rhs = r.mul(r.element_at(augmentation[rg.index_of(bi)]),
                              r.element_at(augmentation[rg.index_of(bj)]));
      if (lhs != r.index_of(rhs))
        fail("TransferIdentityFailed",
             "augmentation is not multiplicative on generators");
    }
  if (!is_homogeneous_subset(graded, kernel))
    fail("NotHomogeneousIdeal", "augmentation ideal is not homogeneous");

  return CoarseGroupRing{std::move(graded), std::move(coarse_base),
                         std::move(augmentation), std::move(kernel)};
}

std::vector<Bitset> ideal_powers(const FiniteRing& ring, const Bitset& ideal,
                                 std::size_t max_power) {
  std::vector<Bitset> powers{ideal};
  std::vector<RingElement> base_gens = subgroup_generators(ring, ideal);
  std::vector<RingElement> cur_gens = base_gens;
  for (std::size_t p = 2; p <= max_power; ++p) {
    std::vector<RingElement> products;
    for (const auto& x : cur_gens)
      for (const auto& y : base_gens) products.push_back(ring.mul(x, y));
    Bitset next = additive_closure(ring, products);
    if (next == powers.back()) break;
    powers.push_back(next);
    cur_gens = subgroup_generators(ring, next);
    if (next.count() == 1) break;
  }
  return powers;
}

GradedRing matrix_graded(const GradedRing& base, const MatrixGradingSpec& spec,
                         const Limits& limits) {
  const FiniteRing& r = base.ring();
  const FiniteGroup& g = base.group();
  const int n = spec.n;
  if (n < 1) fail("DimensionMismatch", "matrix size must be >= 1");
  if (static_cast<int>(spec.sigma.size()) != n)
    fail("DimensionMismatch", "sigma must list one group element per row");
  for (int s : spec.sigma)
    if (s < 0 || s >= g.order())
      fail("UnknownGroupElement", "sigma entry is not a group element");

  std::uint64_t order = 1;
  for (int i = 0; i < n * n; ++i) {
    if (order > limits.max_ring_order) break;
    order *= r.order();
  }
  check_ring_order_cap(order, limits);

  const int k = r.rank();
  const int kr = n * n * k;
  auto slot = [&](int i, int j, int t) { return (i * n + j) * k + t; };
  auto embed = [&](const RingElement& x, int i, int j) {
    RingElement out(kr, 0);
    for (int t = 0; t < k; ++t) out[slot(i, j, t)] = x[t];
    return out;
  };

  RingSpec rs;
  rs.additive_orders.assign(kr, 0);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int t = 0; t < k; ++t)
        rs.additive_orders[slot(i, j, t)] = r.additive_orders()[t];
  rs.unity.assign(kr, 0);
  for (int i = 0; i < n; ++i)
    for (int t = 0; t < k; ++t)
      rs.unity[slot(i, i, t)] = r.unity()[t];
  std::vector<RingElement> basis = basis_of(r);
  rs.mul.assign(kr, std::vector<RingElement>(kr));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int s = 0; s < k; ++s)
        for (int a = 0; a < n; ++a)
          for (int b = 0; b < n; ++b)
            for (int t = 0; t < k; ++t)
              rs.mul[slot(i, j, s)][slot(a, b, t)] =
                  j == a ? embed(r.mul(basis[s], basis[t]), i, b)
                         : RingElement(kr, 0);
  FiniteRing ring = FiniteRing::from_spec(std::move(rs));

  Grading grading{g, {}};
  for (int lambda = 0; lambda < g.order(); ++lambda) {
    std::vector<RingElement> gens;
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        int d = g.op(g.op(spec.sigma[i], lambda), g.inverse(spec.sigma[j]));
        if (base.component_bitset(d).count() <= 1) continue;
        for (const auto& x : base.grading().component_generators.at(d))
          gens.push_back(embed(x, i, j));
      }
    if (!gens.empty()) grading.component_generators[lambda] = std::move(gens);
  }
  if (grading.component_generators.empty())
    grading.component_generators[g.identity()] = {};
  return GradedRing::validate(std::move(ring), std::move(grading));
}

RingElement matrix_entry(const FiniteRing& base, int n, const RingElement& m,
                         int i, int j) {
  const int k = base.rank();
  RingElement out(k);
  for (int t = 0; t < k; ++t) out[t] = m[(i * n + j) * k + t];
  return out;
}

RingElement matrix_assemble(const FiniteRing& base, int n,
                            const std::vector<std::vector<RingElement>>& mat) {
  const int k = base.rank();
  RingElement out(n * n * k, 0);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int t = 0; t < k; ++t) out[(i * n + j) * k + t] = mat[i][j][t];
  return out;
}

bool is_good_form(const FiniteRing& base, int n, const RingElement& m) {
  if (n < 2)
    fail("DimensionMismatch", "good form needs a matrix of size >= 2");
  bool block_nonzero = false;
  for (int i = 0; i + 1 < n && !block_nonzero; ++i)
    for (int j = 0; j + 1 < n; ++j)
      if (!base.is_zero(matrix_entry(base, n, m, i, j))) {
        block_nonzero = true;
        break;
      }
  return block_nonzero &&
         !base.is_zero(matrix_entry(base, n, m, n - 1, n - 1));
}

GoodFormSearch similarity_to_good_form(GradedAnalysis& matrix_analysis,
                                       const GradedRing& base, int n,
                                       const RingElement& m,
                                       const Limits& limits) {
  const FiniteRing& mr = matrix_analysis.ring();
  const FiniteRing& br = base.ring();
  const ElementClasses& mc = matrix_analysis.classes();
  ElementClasses bc = element_classes(br);
  std::vector<RingElement> re;
  for (std::uint64_t i :
       base.component_bitset(base.group().identity()).to_indices())
    re.push_back(br.element_at(i));

  GoodFormSearch out;
  const int cells = n * n;
  std::vector<std::size_t> pick(cells, 0);
  while (true) {
    if (out.tested >= limits.similarity_budget)
      fail("SearchBudgetExceeded",
           "similarity search exceeded the budget of " +
               std::to_string(limits.similarity_budget) + " candidates");
    ++out.tested;
    std::vector<std::vector<RingElement>> mat(n,
                                              std::vector<RingElement>(n));
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) mat[i][j] = re[pick[i * n + j]];
    RingElement v = matrix_assemble(br, n, mat);
    std::uint64_t vi = mr.index_of(v);
    if (mc.units.test(vi)) {
      RingElement vinv = mr.element_at(mc.inverse_of[vi]);
      RingElement conj = mr.mul(mr.mul(v, m), vinv);
      if (is_good_form(br, n, conj)) {
        if (!out.transform) {
          out.transform = v;
          out.conjugate = conj;
        }
        if (!out.unit_corner_transform &&
            bc.units.test(
                br.index_of(matrix_entry(br, n, conj, n - 1, n - 1)))) {
          out.unit_corner_transform = v;
          out.unit_corner_conjugate = conj;
        }
        if (out.transform && out.unit_corner_transform) return out;
      }
    }
    // Odometer over the candidate entries; cell (0,0) moves fastest so
    // candidates come up in the canonical element order of the matrix ring.
    int c = 0;
    while (c < cells && ++pick[c] == re.size()) pick[c++] = 0;
    if (c == cells) break;
  }
  return out;
}

GradedRing product_graded(const GradedRing& a, const GradedRing& b,
                          const Limits& limits) {
  if (!a.group().same_table(b.group()))
    fail("DimensionMismatch",
         "product gradings require the same grading group");
  check_ring_order_cap(a.ring().order() * b.ring().order(), limits);
  FiniteRing ring = FiniteRing::direct_product(a.ring(), b.ring());
  const int ka = a.ring().rank();
  const int kb = b.ring().rank();
  Grading grading{a.group(), {}};
  std::set<int> degrees(a.support().begin(), a.support().end());
  degrees.insert(b.support().begin(), b.support().end());
  for (int g : degrees) {
    std::vector<RingElement> gens;
    if (a.component_bitset(g).count() > 1)
      for (const auto& x : a.grading().component_generators.at(g)) {
        RingElement e(ka + kb, 0);
        for (int i = 0; i < ka; ++i) e[i] = x[i];
        gens.push_back(std::move(e));
      }
    if (b.component_bitset(g).count() > 1)
      for (const auto& x : b.grading().component_generators.at(g)) {
        RingElement e(ka + kb, 0);
        for (int i = 0; i < kb; ++i) e[ka + i] = x[i];
        gens.push_back(std::move(e));
      }
    grading.component_generators[g] = std::move(gens);
  }
  if (degrees.empty())
    grading.component_generators[a.group().identity()] = {};
  return GradedRing::validate(std::move(ring), std::move(grading));
}

GradedRing truncated_polynomial(const FiniteRing& base, int m,
                                const Limits& limits) {
  if (m < 2)
    fail("DimensionMismatch", "truncation exponent must be at least 2");
  std::uint64_t order = 1;
  for (int i = 0; i < m; ++i) {
    if (order > limits.max_ring_order) break;
    order *= base.order();
  }
  check_ring_order_cap(order, limits);

  const int k = base.rank();
  const int kr = m * k;
  auto slot = [&](int deg, int t) { return deg * k + t; };
  auto embed = [&](const RingElement& x, int deg) {
    RingElement out(kr, 0);
    for (int t = 0; t < k; ++t) out[slot(deg, t)] = x[t];
    return out;
  };
  RingSpec spec;
  spec.additive_orders.assign(kr, 0);
  for (int d = 0; d < m; ++d)
    for (int t = 0; t < k; ++t)
      spec.additive_orders[slot(d, t)] = base.additive_orders()[t];
  spec.unity = embed(base.unity(), 0);
  std::vector<RingElement> basis = basis_of(base);
  spec.mul.assign(kr, std::vector<RingElement>(kr));
  for (int d1 = 0; d1 < m; ++d1)
    for (int i = 0; i < k; ++i)
      for (int d2 = 0; d2 < m; ++d2)
        for (int j = 0; j < k; ++j)
          spec.mul[slot(d1, i)][slot(d2, j)] =
              d1 + d2 < m ? embed(base.mul(basis[i], basis[j]), d1 + d2)
                          : RingElement(kr, 0);
  FiniteRing ring = FiniteRing::from_spec(std::move(spec));

  Grading grading{FiniteGroup::cyclic(m), {}};
  for (int d = 0; d < m; ++d) {
    std::vector<RingElement> gens;
    for (int t = 0; t < k; ++t)
      if (base.additive_orders()[t] > 1) gens.push_back(embed(basis[t], d));
    grading.component_generators[d] = std::move(gens);
  }
  return GradedRing::validate(std::move(ring), std::move(grading));
}

}  // namespace gradering
