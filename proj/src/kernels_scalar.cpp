#include "softtop/kernels.hpp"

namespace softtop::kernels {
namespace {

void or_of_subsets_scalar(const Word* rows, std::size_t count,
                          std::size_t words, const Word* query, Word* out) {
  for (std::size_t w = 0; w < words; ++w) out[w] = 0;
  for (std::size_t i = 0; i < count; ++i) {
    const Word* row = rows + i * words;
    bool inside = true;
    for (std::size_t w = 0; w < words && inside; ++w)
      inside = (row[w] & ~query[w]) == 0;
    if (!inside) continue;
    for (std::size_t w = 0; w < words; ++w) out[w] |= row[w];
  }
}

void and_of_supersets_scalar(const Word* rows, std::size_t count,
                             std::size_t words, const Word* query, Word* out) {
  for (std::size_t i = 0; i < count; ++i) {
    const Word* row = rows + i * words;
    bool covers = true;
    for (std::size_t w = 0; w < words && covers; ++w)
      covers = (query[w] & ~row[w]) == 0;
    if (!covers) continue;
    for (std::size_t w = 0; w < words; ++w) out[w] &= row[w];
  }
}

std::size_t find_row_scalar(const Word* rows, std::size_t count,
                            std::size_t words, const Word* query) {
  for (std::size_t i = 0; i < count; ++i) {
    const Word* row = rows + i * words;
    bool equal = true;
    for (std::size_t w = 0; w < words && equal; ++w) equal = row[w] == query[w];
    if (equal) return i;
  }
  return count;
}

}  // namespace

const KernelTable& scalar_table() {
  static constexpr KernelTable table{Isa::kScalar, &or_of_subsets_scalar,
                                     &and_of_supersets_scalar,
                                     &find_row_scalar};
  return table;
}

}  // namespace softtop::kernels
