#include "gradering/finite_ring.hpp"

#include <numeric>

namespace gradering {

namespace {

long long mod_floor(long long a, long long m) {
  long long r = a % m;
  return r < 0 ? r + m : r;
}

}  // namespace

void FiniteRing::check_element(const RingElement& x) const {
  if (x.size() != spec_.additive_orders.size())
    fail("DimensionMismatch",
         "element has " + std::to_string(x.size()) + " coordinates, expected " +
             std::to_string(spec_.additive_orders.size()));
  for (std::size_t i = 0; i < x.size(); ++i)
    if (x[i] < 0 || x[i] >= spec_.additive_orders[i])
      fail("DimensionMismatch",
           "coordinate " + std::to_string(i) + " out of range");
}

FiniteRing FiniteRing::from_spec(RingSpec spec) {
  if (spec.additive_orders.empty())
    fail("EmptyOrders", "additive_orders must be non-empty");
  for (int m : spec.additive_orders)
    if (m < 1) fail("EmptyOrders", "additive factor orders must be >= 1");

  FiniteRing r;
  r.spec_ = std::move(spec);
  const int k = r.rank();
  r.zero_.assign(k, 0);
  r.order_ = 1;
  for (int m : r.spec_.additive_orders) {
    r.order_ *= static_cast<std::uint64_t>(m);
    if (r.order_ > (std::uint64_t{1} << 62))
      fail("OrderCapExceeded", "ring order overflows internal indexing");
  }

  r.check_element(r.spec_.unity);
  if (static_cast<int>(r.spec_.mul.size()) != k)
    fail("DimensionMismatch", "mul table must have one row per basis element");
  for (int i = 0; i < k; ++i) {
    if (static_cast<int>(r.spec_.mul[i].size()) != k)
      fail("DimensionMismatch", "mul table row " + std::to_string(i) +
                                    " has wrong length");
    for (int j = 0; j < k; ++j) r.check_element(r.spec_.mul[i][j]);
  }

  // Bilinearity consistency: the products b_i * b_j must respect the additive
  // orders, i.e. m_i * (b_i b_j) == 0 and m_j * (b_i b_j) == 0, otherwise the
  // bilinear extension is ill-defined on residues.
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j) {
      const RingElement& p = r.spec_.mul[i][j];
      for (int t = 0; t < k; ++t) {
        long long mi = r.spec_.additive_orders[i];
        long long mj = r.spec_.additive_orders[j];
        long long mt = r.spec_.additive_orders[t];
        if (mod_floor(mi * p[t], mt) != 0 || mod_floor(mj * p[t], mt) != 0)
          fail("IllDefinedBilinearMap",
               "product of basis elements " + std::to_string(i) + "," +
                   std::to_string(j) +
                   " is incompatible with the additive orders");
      }
    }

  // Unity acts as identity on the basis.
  for (int i = 0; i < k; ++i) {
    RingElement b(k, 0);
    b[i] = r.spec_.additive_orders[i] == 1 ? 0 : 1;
    if (r.mul(r.spec_.unity, b) != b || r.mul(b, r.spec_.unity) != b)
      fail("BadUnity", "declared unity does not fix basis element " +
                           std::to_string(i));
  }

  // Associativity on basis triples; bilinearity extends it to the whole ring.
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j)
      for (int t = 0; t < k; ++t) {
        RingElement bi(k, 0), bj(k, 0), bt(k, 0);
        if (r.spec_.additive_orders[i] > 1) bi[i] = 1;
        if (r.spec_.additive_orders[j] > 1) bj[j] = 1;
        if (r.spec_.additive_orders[t] > 1) bt[t] = 1;
        if (r.mul(r.mul(bi, bj), bt) != r.mul(bi, r.mul(bj, bt)))
          fail("NonAssociative", "associativity fails on basis triple (" +
                                     std::to_string(i) + "," +
                                     std::to_string(j) + "," +
                                     std::to_string(t) + ")");
      }

  return r;
}

FiniteRing FiniteRing::cyclic(int n) {
  if (n < 1) fail("EmptyOrders", "cyclic ring modulus must be >= 1");
  RingSpec spec;
  spec.additive_orders = {n};
  spec.unity = {n == 1 ? 0 : 1};
  spec.mul = {{{n == 1 ? 0 : 1}}};
  return from_spec(std::move(spec));
}

FiniteRing FiniteRing::zero_ring() { return cyclic(1); }

FiniteRing FiniteRing::direct_product(const FiniteRing& a,
                                      const FiniteRing& b) {
  RingSpec spec;
  const int ka = a.rank(), kb = b.rank();
  spec.additive_orders = a.additive_orders();
  spec.additive_orders.insert(spec.additive_orders.end(),
                              b.additive_orders().begin(),
                              b.additive_orders().end());
  auto embed_a = [&](const RingElement& x) {
    RingElement out(ka + kb, 0);
    for (int i = 0; i < ka; ++i) out[i] = x[i];
    return out;
  };
  auto embed_b = [&](const RingElement& x) {
    RingElement out(ka + kb, 0);
    for (int i = 0; i < kb; ++i) out[ka + i] = x[i];
    return out;
  };
  spec.unity = embed_a(a.unity());
  RingElement ub = embed_b(b.unity());
  for (int i = 0; i < ka + kb; ++i) spec.unity[i] += ub[i];
  spec.mul.assign(ka + kb, std::vector<RingElement>(ka + kb));
  for (int i = 0; i < ka + kb; ++i)
    for (int j = 0; j < ka + kb; ++j) {
      if (i < ka && j < ka)
        spec.mul[i][j] = embed_a(a.spec().mul[i][j]);
      else if (i >= ka && j >= ka)
        spec.mul[i][j] = embed_b(b.spec().mul[i - ka][j - ka]);
      else
        spec.mul[i][j] = RingElement(ka + kb, 0);
    }
  return from_spec(std::move(spec));
}

std::uint64_t FiniteRing::index_of(const RingElement& x) const {
  std::uint64_t idx = 0;
  for (int i = rank() - 1; i >= 0; --i)
    idx = idx * static_cast<std::uint64_t>(spec_.additive_orders[i]) +
          static_cast<std::uint64_t>(x[i]);
  return idx;
}

RingElement FiniteRing::element_at(std::uint64_t index) const {
  RingElement x(rank());
  for (int i = 0; i < rank(); ++i) {
    std::uint64_t m = static_cast<std::uint64_t>(spec_.additive_orders[i]);
    x[i] = static_cast<int>(index % m);
    index /= m;
  }
  return x;
}

RingElement FiniteRing::add(const RingElement& x, const RingElement& y) const {
  RingElement out(rank());
  for (int i = 0; i < rank(); ++i)
    out[i] = (x[i] + y[i]) % spec_.additive_orders[i];
  return out;
}

RingElement FiniteRing::neg(const RingElement& x) const {
  RingElement out(rank());
  for (int i = 0; i < rank(); ++i)
    out[i] = x[i] == 0 ? 0 : spec_.additive_orders[i] - x[i];
  return out;
}

RingElement FiniteRing::sub(const RingElement& x, const RingElement& y) const {
  return add(x, neg(y));
}

RingElement FiniteRing::scalar(long long c, const RingElement& x) const {
  RingElement out(rank());
  for (int i = 0; i < rank(); ++i)
    out[i] = static_cast<int>(
        mod_floor(c * static_cast<long long>(x[i]), spec_.additive_orders[i]));
  return out;
}

RingElement FiniteRing::mul(const RingElement& x, const RingElement& y) const {
  const int k = rank();
  std::vector<long long> acc(k, 0);
  for (int i = 0; i < k; ++i) {
    if (x[i] == 0) continue;
    for (int j = 0; j < k; ++j) {
      if (y[j] == 0) continue;
      const long long c = static_cast<long long>(x[i]) * y[j];
      const RingElement& p = spec_.mul[i][j];
      for (int t = 0; t < k; ++t) acc[t] += c * p[t];
    }
  }
  RingElement out(k);
  for (int t = 0; t < k; ++t)
    out[t] = static_cast<int>(mod_floor(acc[t], spec_.additive_orders[t]));
  return out;
}

RingElement FiniteRing::pow(const RingElement& x, std::uint64_t n) const {
  RingElement result = unity();
  RingElement base = x;
  while (n > 0) {
    if (n & 1) result = mul(result, base);
    base = mul(base, base);
    n >>= 1;
  }
  return result;
}

RingElement FiniteRing::reduce(const std::vector<long long>& raw) const {
  if (raw.size() != spec_.additive_orders.size())
    fail("DimensionMismatch", "raw coordinate count mismatch");
  RingElement out(rank());
  for (int i = 0; i < rank(); ++i)
    out[i] = static_cast<int>(mod_floor(raw[i], spec_.additive_orders[i]));
  return out;
}

bool FiniteRing::is_commutative() const {
  const int k = rank();
  for (int i = 0; i < k; ++i)
    for (int j = i + 1; j < k; ++j)
      if (spec_.mul[i][j] != spec_.mul[j][i]) return false;
  return true;
}

std::uint64_t FiniteRing::characteristic() const {
  std::uint64_t l = 1;
  for (int m : spec_.additive_orders)
    l = std::lcm(l, static_cast<std::uint64_t>(m));
  return l;
}

}  // namespace gradering
