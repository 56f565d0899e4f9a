#pragma once

#include <cstddef>
#include <cstdint>

namespace softtop {

struct EnumerationBudget {
  std::uint64_t max_soft_sets = std::uint64_t{1} << 16;
  std::uint64_t max_topologies = 1'000'000;
  std::uint64_t rng_seed = 0;

  // 2^cells soft sets fit in the budget.
  bool admits_cells(std::size_t cells) const noexcept {
    return cells < 63 && (std::uint64_t{1} << cells) <= max_soft_sets;
  }
};

// Throws SoftError(kInstanceTooLarge) unless budget.admits_cells(cells).
void require_enumerable(const EnumerationBudget& budget, std::size_t cells);

}  // namespace softtop
