#include "gradering/corpus.hpp"

#include <functional>

#include "gradering/classify.hpp"
#include "gradering/errors.hpp"

namespace gradering {

namespace {

class Builder {
 public:
  explicit Builder(const CorpusSpec& spec) : spec_(spec) {}

  CorpusBuildResult take() { return std::move(result_); }

  /// Run one catalog entry; cap errors are logged as skips, anything else is
  /// a genuine catalog bug and propagates.
  void add(const std::string& name,
           const std::function<CorpusInstance()>& make) {
    try {
      result_.instances.push_back(make());
    } catch (const Error& e) {
      if (e.code() == "OrderCapExceeded") {
        result_.skipped.emplace_back(name, e.what());
        return;
      }
      throw;
    }
  }

  const CorpusSpec& spec_;
  CorpusBuildResult result_;
};

GradedRing cyclic_trivial(int n, const FiniteGroup& group) {
  return GradedRing::trivial(FiniteRing::cyclic(n), group);
}

std::shared_ptr<const GradedRing> share(GradedRing gr) {
  return std::make_shared<const GradedRing>(std::move(gr));
}

CorpusInstance direct_instance(std::string name, GradedRing gr,
                               std::string construction = "direct") {
  CorpusInstance inst{std::move(name),
                      std::move(gr),
                      std::move(construction),
                      nullptr,
                      nullptr,
                      {},
                      std::nullopt,
                      std::nullopt,
                      std::nullopt,
                      std::nullopt};
  return inst;
}

}  // namespace

CorpusBuildResult build_corpus(const CorpusSpec& spec) {
  Builder b(spec);
  const Limits& lim = spec.limits;
  check_ring_order_cap(1, lim);  // caps must be positive / sane

  FiniteGroup c1 = FiniteGroup::trivial();
  FiniteGroup c2 = FiniteGroup::cyclic(2);
  FiniteGroup c3 = FiniteGroup::cyclic(3);
  FiniteGroup c4 = FiniteGroup::cyclic(4);
  FiniteGroup v4 = FiniteGroup::product_of_cyclics({2, 2});

  // Shared bases referenced by several constructed entries.
  GradedRing z2c2 = cyclic_trivial(2, c2);
  GradedRing z3c2 = cyclic_trivial(3, c2);
  GradedRing z4c2 = cyclic_trivial(4, c2);
  GradedRing ex31 = truncated_polynomial(FiniteRing::cyclic(2), 2, lim);
  GradedRing tz2m4 = truncated_polynomial(FiniteRing::cyclic(2), 4, lim);
  GradedRing tz3m2 = truncated_polynomial(FiniteRing::cyclic(3), 2, lim);

  if (spec.generators.cyclic) {
    for (int n = 2; n <= spec.cyclic_max; ++n)
      b.add("Z" + std::to_string(n) + ".triv.C2", [&, n] {
        return direct_instance("Z" + std::to_string(n) + ".triv.C2",
                               cyclic_trivial(n, c2));
      });
    for (int n : {2, 3, 4}) {
      if (n > spec.cyclic_max) continue;
      b.add("Z" + std::to_string(n) + ".triv.C1", [&, n] {
        return direct_instance("Z" + std::to_string(n) + ".triv.C1",
                               cyclic_trivial(n, c1));
      });
      b.add("Z" + std::to_string(n) + ".triv.C2xC2", [&, n] {
        return direct_instance("Z" + std::to_string(n) + ".triv.C2xC2",
                               cyclic_trivial(n, v4));
      });
    }
  }

  if (spec.generators.truncated) {
    auto trunc_instance = [&](const std::string& name, int base_n, int m) {
      b.add(name, [&, name, base_n, m] {
        CorpusInstance inst = direct_instance(
            name, truncated_polynomial(FiniteRing::cyclic(base_n), m, lim),
            "truncated_poly");
        inst.base = share(cyclic_trivial(base_n, c1));
        inst.trunc_m = m;
        return inst;
      });
    };
    trunc_instance("Z2[x]/x2.C2", 2, 2);  // the quadratic truncation of Z2
    trunc_instance("Z2[x]/x3.C3", 2, 3);
    trunc_instance("Z2[x]/x4.C4", 2, 4);
    trunc_instance("Z3[x]/x2.C2", 3, 2);
    trunc_instance("Z4[x]/x2.C2", 4, 2);

    // Same four-element truncated ring, graded with the unit 1+x spanning
    // the nonidentity component.
    b.add("Z2[x]/x2.altgrading", [&] {
      Grading g{c2, {}};
      g.component_generators[0] = {{1, 0}};
      g.component_generators[1] = {{1, 1}};
      return direct_instance(
          "Z2[x]/x2.altgrading",
          GradedRing::validate(ex31.ring(), std::move(g)));
    });

    b.add("coarsen(Z2[x]/x4,{0,2})", [&] {
      CorpusInstance inst = direct_instance("coarsen(Z2[x]/x4,{0,2})",
                                            coarsen(tz2m4, {0, 2}), "coarsen");
      inst.base = share(tz2m4);
      inst.subgroup = {0, 2};
      return inst;
    });
  }

  if (spec.generators.trivial_extensions) {
    auto te_instance = [&](const std::string& name, const GradedRing& base,
                           int degree) {
      b.add(name, [&, name, degree] {
        GradedBimodule mod = self_bimodule(base, degree);
        CorpusInstance inst = direct_instance(
            name, trivial_extension(base, mod, lim), "trivial_extension");
        inst.base = share(base);
        inst.module_degree = degree;
        return inst;
      });
    };
    te_instance("Z2@Z2.C2", z2c2, 1);
    te_instance("Z3@Z3.C2", z3c2, 1);
    te_instance("Z4@Z4.C2", z4c2, 1);
    te_instance("TE(Z2[x]/x2)@1", ex31, 1);
  }

  if (spec.generators.matrix) {
    auto matrix_instance = [&](const std::string& name, const GradedRing& base,
                               int n, std::vector<int> sigma) {
      if (base.ring().order() > spec.matrix_base_max_order) return;
      b.add(name, [&, name, n, sigma] {
        MatrixGradingSpec ms{n, sigma};
        CorpusInstance inst =
            direct_instance(name, matrix_graded(base, ms, lim), "matrix");
        inst.base = share(base);
        inst.matrix_spec = ms;
        return inst;
      });
    };
    matrix_instance("M2(Z2).eg", z2c2, 2, {0, 1});  // checkerboard grading
    matrix_instance("M2(Z2).ee", z2c2, 2, {0, 0});
    matrix_instance("M2(Z3).eg", z3c2, 2, {0, 1});
    matrix_instance("M2(Z2[x]/x2).ee", ex31, 2, {0, 0});
    matrix_instance("M2(Z3[x]/x2).ee", tz3m2, 2, {0, 0});
    matrix_instance("M3(Z2).eeg", z2c2, 3, {0, 0, 1});
    matrix_instance("M1(Z2[x]/x2).g", ex31, 1, {1});
  }

  if (spec.generators.group_rings) {
    auto gr_instance = [&](const std::string& name, const GradedRing& base) {
      b.add(name, [&, name] {
        CorpusInstance inst = direct_instance(
            name, group_ring_graded(base, lim), "group_ring");
        inst.base = share(base);
        return inst;
      });
    };
    gr_instance("Z2[C2]", z2c2);
    gr_instance("Z4[C2]", z4c2);
    gr_instance("Z3[C2]", z3c2);
    gr_instance("Z2[C4]", cyclic_trivial(2, c4));
    gr_instance("Z2[C2xC2]", cyclic_trivial(2, v4));
    gr_instance("(Z2[x]/x2)[C2]", ex31);

    auto coarse_instance = [&](const std::string& name, const GradedRing& base,
                               std::vector<int> h) {
      b.add(name, [&, name, h] {
        CorpusInstance inst = direct_instance(
            name, group_ring_coarse(base, h, lim).graded, "group_ring_coarse");
        inst.base = share(base);
        inst.subgroup = h;
        return inst;
      });
    };
    coarse_instance("Z2[C2].coarse", z2c2, {0, 1});
    coarse_instance("Z4[C2].coarse", z4c2, {0, 1});
    coarse_instance("Z9[C3].coarse", cyclic_trivial(9, c3), {0, 1, 2});
    coarse_instance("(Z2[x]/x4)[{0,2}].coarse", tz2m4, {0, 2});
  }

  if (spec.generators.products) {
    auto product_instance = [&](const std::string& name, const GradedRing& a,
                                const GradedRing& bb) {
      b.add(name, [&, name] {
        CorpusInstance inst = direct_instance(
            name, product_graded(a, bb, lim), "product");
        inst.base = share(a);
        inst.base2 = share(bb);
        return inst;
      });
    };
    product_instance("Z2[x]/x2.xx.Z2[x]/x2", ex31, ex31);
    product_instance("Z2xZ3.triv.C2", z2c2, z3c2);
    product_instance("Z2xZ2.triv.C2", z2c2, z2c2);
    product_instance("Z2[x]/x2.x.Z2", ex31, z2c2);
  }

  if (spec.generators.quotients) {
    auto quotient_instance = [&](const std::string& name,
                                 const GradedRing& base,
                                 const std::vector<RingElement>& ideal_gens) {
      b.add(name, [&, name, ideal_gens] {
        Bitset ideal = additive_closure(base.ring(), [&] {
          std::vector<RingElement> gens;
          for (const auto& x : ideal_gens) {
            for (int i = 0; i < base.ring().rank(); ++i) {
              RingElement basis(base.ring().rank(), 0);
              if (base.ring().additive_orders()[i] > 1) basis[i] = 1;
              gens.push_back(base.ring().mul(x, basis));
              gens.push_back(base.ring().mul(basis, x));
            }
            gens.push_back(x);
          }
          return gens;
        }());
        GradedQuotient q = quotient_graded(base, ideal);
        CorpusInstance inst =
            direct_instance(name, std::move(q.graded), "quotient");
        inst.base = share(base);
        inst.quotient_ideal = std::move(ideal);
        return inst;
      });
    };
    // x^2 * (Z2[x]/x^4): coefficients are (1, x, x^2, x^3).
    quotient_instance("(Z2[x]/x4)/(x2)", tz2m4, {{0, 0, 1, 0}});
    quotient_instance("(Z2[x]/x2)/(x)", ex31, {{0, 1}});
    quotient_instance("(Z2[x]/x2)/full", ex31, {{1, 0}});
  }

  return b.take();
}

}  // namespace gradering
