#pragma once

// Bit-array reduction kernels used by the topology operators.
//
// A "row table" is `count` rows of `words` 64-bit words each, stored
// contiguously. Rows and queries never carry set bits past the cell count
// of their context, so the kernels do not mask tails.

#include <cstddef>
#include <cstdint>
#include <span>
#include <string_view>

namespace softtop::kernels {

using Word = std::uint64_t;

enum class Isa { kScalar, kAvx2 };

struct KernelTable {
  Isa isa;
  // out = OR of every row r with r ⊆ query. `out` is zeroed first.
  void (*or_of_subsets)(const Word* rows, std::size_t count, std::size_t words,
                        const Word* query, Word* out);
  // out &= every row r with query ⊆ r. Caller presets `out` (usually to the
  // full cell mask).
  void (*and_of_supersets)(const Word* rows, std::size_t count,
                           std::size_t words, const Word* query, Word* out);
  // Index of the first row equal to query, or `count` when absent.
  std::size_t (*find_row)(const Word* rows, std::size_t count,
                          std::size_t words, const Word* query);
};

const KernelTable& scalar_table();

// nullptr when the variant was not compiled in or the CPU lacks it.
const KernelTable* table_for(Isa isa);

bool available(Isa isa);

// Kernels used by the library. Chosen on first use: AVX2 when the CPU has
// it, scalar otherwise. SOFTTOP_KERNELS=scalar in the environment forces the
// scalar path.
const KernelTable& active();

// Override the active table. Throws std::invalid_argument if unavailable.
void select(Isa isa);

std::string_view name(Isa isa);

}  // namespace softtop::kernels
