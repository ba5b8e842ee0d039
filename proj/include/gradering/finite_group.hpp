#pragma once

#include <optional>
#include <string>
#include <vector>

#include "gradering/errors.hpp"

namespace gradering {

/// Finite group on element indices 0..order-1, stored as a validated Cayley
/// table. Construction checks the full group axioms and throws NotAGroup with
/// the first violated axiom otherwise.
class FiniteGroup {
 public:
  static FiniteGroup from_table(std::vector<std::vector<int>> cayley,
                                int identity_hint = -1,
                                std::vector<std::string> labels = {});
  static FiniteGroup cyclic(int n);
  static FiniteGroup product_of_cyclics(const std::vector<int>& ns);
  /// Named families: "C4", "C2 x C2", "C2xC2", "trivial".
  static FiniteGroup named(const std::string& name);
  static FiniteGroup trivial();

  int order() const { return static_cast<int>(cayley_.size()); }
  int identity() const { return identity_; }
  int op(int a, int b) const { return cayley_[a][b]; }
  int inverse(int a) const { return inverse_[a]; }
  const std::vector<std::vector<int>>& cayley() const { return cayley_; }
  const std::vector<std::string>& labels() const { return labels_; }
  const std::string& label(int a) const { return labels_[a]; }

  bool is_abelian() const;
  /// Order of the cyclic subgroup generated by a.
  int element_order(int a) const;
  /// order == p^k for some k >= 0 (so the trivial group is a p-group for
  /// every p).
  bool is_p_group(int p) const;
  /// The unique prime p with order == p^k, k >= 1; nullopt for the trivial
  /// group and for non-prime-power orders.
  std::optional<int> p_group_prime() const;

  bool same_table(const FiniteGroup& other) const;

  bool is_subgroup(const std::vector<int>& elements) const;
  bool is_normal_subgroup(const std::vector<int>& elements) const;
  /// All subgroups, each as a sorted element list, in a deterministic order.
  std::vector<std::vector<int>> subgroups() const;
  std::vector<std::vector<int>> normal_subgroups() const;

 private:
  FiniteGroup() = default;

  std::vector<std::vector<int>> cayley_;
  std::vector<int> inverse_;
  int identity_ = 0;
  std::vector<std::string> labels_;
};

/// G/H for a normal subgroup H, with the index projection G -> G/H and the
/// minimal member of each coset as its representative.
struct QuotientGroup {
  FiniteGroup group;
  std::vector<int> projection;
  std::vector<int> representative;
};

QuotientGroup quotient_group(const FiniteGroup& g,
                             const std::vector<int>& normal_subgroup);

}  // namespace gradering
