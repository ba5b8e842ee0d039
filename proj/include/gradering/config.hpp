#pragma once

#include <cstddef>
#include <cstdint>

namespace gradering {

// Hard resource caps. Exceeding a cap is an explicit OrderCapExceeded /
// IdealLatticeCap / SearchBudgetExceeded error, never silent truncation.
struct Limits {
  std::uint64_t max_ring_order = 4096;
  std::uint64_t max_group_order = 64;
  std::size_t ideal_lattice_cap = 20000;
  std::size_t similarity_budget = 200000;
};

}  // namespace gradering
