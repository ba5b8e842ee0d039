#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "gradering/errors.hpp"

namespace gradering {

/// Element of a finite ring, stored as residues against the ring's additive
/// cyclic factor orders (coeffs[i] in [0, m_i)).
using RingElement = std::vector<int>;

/// Declarative description of a finite ring: the additive group as a direct
/// sum of cyclic groups Z_{m_1} x ... x Z_{m_k}, the unity element, and the
/// k*k structure constants mul[i][j] = b_i * b_j expressed in the same basis.
struct RingSpec {
  std::vector<int> additive_orders;
  RingElement unity;
  std::vector<std::vector<RingElement>> mul;
};

/// Finite associative unital ring. Construction validates the spec
/// (associativity on basis triples, unity on basis elements, well-formed
/// structure constants) and throws on the first violation.
class FiniteRing {
 public:
  static FiniteRing from_spec(RingSpec spec);
  /// Z_n. n >= 1; n == 1 gives the zero ring.
  static FiniteRing cyclic(int n);
  static FiniteRing zero_ring();
  static FiniteRing direct_product(const FiniteRing& a, const FiniteRing& b);

  const RingSpec& spec() const { return spec_; }
  const std::vector<int>& additive_orders() const {
    return spec_.additive_orders;
  }
  int rank() const { return static_cast<int>(spec_.additive_orders.size()); }
  std::uint64_t order() const { return order_; }
  /// The zero ring (order 1, where 1 == 0).
  bool is_degenerate() const { return order_ == 1; }

  const RingElement& zero() const { return zero_; }
  const RingElement& unity() const { return spec_.unity; }

  /// Mixed-radix rank of an element; coeffs[0] is the least significant
  /// digit. This is the canonical enumeration order used everywhere.
  std::uint64_t index_of(const RingElement& x) const;
  RingElement element_at(std::uint64_t index) const;

  RingElement add(const RingElement& x, const RingElement& y) const;
  RingElement neg(const RingElement& x) const;
  RingElement sub(const RingElement& x, const RingElement& y) const;
  RingElement scalar(long long c, const RingElement& x) const;
  RingElement mul(const RingElement& x, const RingElement& y) const;
  RingElement pow(const RingElement& x, std::uint64_t n) const;

  bool is_zero(const RingElement& x) const { return x == zero_; }
  bool is_unity(const RingElement& x) const { return x == spec_.unity; }
  /// Reduce arbitrary integer coordinates into canonical residues.
  RingElement reduce(const std::vector<long long>& raw) const;

  bool is_commutative() const;
  /// Additive exponent: the least n >= 1 with n*x == 0 for all x
  /// (lcm of the cyclic factor orders).
  std::uint64_t characteristic() const;

  void check_element(const RingElement& x) const;

 private:
  FiniteRing() = default;

  RingSpec spec_;
  RingElement zero_;
  std::uint64_t order_ = 0;
};

}  // namespace gradering
