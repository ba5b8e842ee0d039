#pragma once

#include <cstdint>
#include <vector>

#include "gradering/finite_ring.hpp"

namespace gradering {

/// Dense bitmap over element indices of a finite ring; used to represent
/// subsets (unit sets, ideals, components) cheaply.
class Bitset {
 public:
  Bitset() = default;
  explicit Bitset(std::uint64_t n) : size_(n), words_((n + 63) / 64, 0) {}

  std::uint64_t size() const { return size_; }
  bool test(std::uint64_t i) const {
    return (words_[i >> 6] >> (i & 63)) & 1u;
  }
  void set(std::uint64_t i) { words_[i >> 6] |= (std::uint64_t{1} << (i & 63)); }
  void reset(std::uint64_t i) {
    words_[i >> 6] &= ~(std::uint64_t{1} << (i & 63));
  }
  std::uint64_t count() const;
  bool operator==(const Bitset& other) const {
    return size_ == other.size_ && words_ == other.words_;
  }
  bool operator<(const Bitset& other) const { return words_ < other.words_; }
  bool is_subset_of(const Bitset& other) const;
  Bitset intersect(const Bitset& other) const;
  std::vector<std::uint64_t> to_indices() const;

 private:
  std::uint64_t size_ = 0;
  std::vector<std::uint64_t> words_;
};

/// Additive subgroup generated by `generators` inside the additive group of
/// `ring`, as a bitmap over element indices. BFS closure under adding each
/// generator.
Bitset additive_closure(const FiniteRing& ring,
                        const std::vector<RingElement>& generators);

/// A small generating set for an additive subgroup given as a bitmap
/// (greedy sweep in index order; at most log2(|subgroup|) generators).
std::vector<RingElement> subgroup_generators(const FiniteRing& ring,
                                             const Bitset& subgroup);

/// Smith-style diagonalization bookkeeping for quotient construction.
/// Given the relation matrix A (rows = ambient rank, columns = relations),
/// computes D = U * A * V with D diagonal (d_1 | d_2 | ...), tracking U and
/// its inverse. Column operations are not tracked (V is discarded).
struct SmithResult {
  std::vector<long long> diagonal;                 // size = rows
  std::vector<std::vector<long long>> U;           // rows x rows
  std::vector<std::vector<long long>> U_inverse;   // rows x rows
};

SmithResult smith_diagonalize(std::vector<std::vector<long long>> A);

/// Quotient of `ring` by the two-sided ideal given as an additive-subgroup
/// bitmap, together with the projection map and a section. The caller is
/// responsible for the subset actually being a two-sided ideal; structure
/// constants are re-derived through the section and validated.
struct QuotientRing {
  FiniteRing ring;
  /// projection[index_of(x in parent)] = index of x+I in the quotient.
  std::vector<std::uint64_t> projection;
  /// representative in the parent for each quotient element index.
  std::vector<RingElement> section;
};

QuotientRing quotient_by_ideal(const FiniteRing& ring, const Bitset& ideal);

}  // namespace gradering
