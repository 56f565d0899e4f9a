#include <immintrin.h>

#include "kernels_internal.hpp"

namespace softtop::kernels::detail {
namespace {

inline Word horizontal_or(__m256i v) {
  __m128i lo = _mm256_castsi256_si128(v);
  __m128i hi = _mm256_extracti128_si256(v, 1);
  __m128i x = _mm_or_si128(lo, hi);
  return static_cast<Word>(_mm_cvtsi128_si64(x)) |
         static_cast<Word>(_mm_extract_epi64(x, 1));
}

inline Word horizontal_and(__m256i v) {
  __m128i lo = _mm256_castsi256_si128(v);
  __m128i hi = _mm256_extracti128_si256(v, 1);
  __m128i x = _mm_and_si128(lo, hi);
  return static_cast<Word>(_mm_cvtsi128_si64(x)) &
         static_cast<Word>(_mm_extract_epi64(x, 1));
}

inline __m256i load(const Word* p) {
  return _mm256_loadu_si256(reinterpret_cast<const __m256i*>(p));
}

// Wide rows: vectorize across the words of one row.
bool row_inside(const Word* row, const Word* query, std::size_t words) {
  std::size_t w = 0;
  __m256i outside = _mm256_setzero_si256();
  for (; w + 4 <= words; w += 4)
    outside = _mm256_or_si256(outside, _mm256_andnot_si256(load(query + w), load(row + w)));
  if (!_mm256_testz_si256(outside, outside)) return false;
  for (; w < words; ++w)
    if (row[w] & ~query[w]) return false;
  return true;
}

void or_rows(Word* out, const Word* row, std::size_t words) {
  std::size_t w = 0;
  for (; w + 4 <= words; w += 4) {
    __m256i acc = _mm256_or_si256(load(out + w), load(row + w));
    _mm256_storeu_si256(reinterpret_cast<__m256i*>(out + w), acc);
  }
  for (; w < words; ++w) out[w] |= row[w];
}

void and_rows(Word* out, const Word* row, std::size_t words) {
  std::size_t w = 0;
  for (; w + 4 <= words; w += 4) {
    __m256i acc = _mm256_and_si256(load(out + w), load(row + w));
    _mm256_storeu_si256(reinterpret_cast<__m256i*>(out + w), acc);
  }
  for (; w < words; ++w) out[w] &= row[w];
}

void or_of_subsets_avx2(const Word* rows, std::size_t count, std::size_t words,
                        const Word* query, Word* out) {
  if (words == 1) {
    // Single-word rows: four rows per vector.
    const __m256i q = _mm256_set1_epi64x(static_cast<long long>(query[0]));
    const __m256i zero = _mm256_setzero_si256();
    __m256i acc = zero;
    std::size_t i = 0;
    for (; i + 4 <= count; i += 4) {
      __m256i r = load(rows + i);
      __m256i inside = _mm256_cmpeq_epi64(_mm256_andnot_si256(q, r), zero);
      acc = _mm256_or_si256(acc, _mm256_and_si256(inside, r));
    }
    Word result = horizontal_or(acc);
    for (; i < count; ++i)
      if ((rows[i] & ~query[0]) == 0) result |= rows[i];
    out[0] = result;
    return;
  }
  for (std::size_t w = 0; w < words; ++w) out[w] = 0;
  for (std::size_t i = 0; i < count; ++i) {
    const Word* row = rows + i * words;
    if (row_inside(row, query, words)) or_rows(out, row, words);
  }
}

void and_of_supersets_avx2(const Word* rows, std::size_t count,
                           std::size_t words, const Word* query, Word* out) {
  if (words == 1) {
    const __m256i q = _mm256_set1_epi64x(static_cast<long long>(query[0]));
    const __m256i zero = _mm256_setzero_si256();
    const __m256i ones = _mm256_set1_epi64x(-1);
    __m256i acc = ones;
    std::size_t i = 0;
    for (; i + 4 <= count; i += 4) {
      __m256i r = load(rows + i);
      __m256i covers = _mm256_cmpeq_epi64(_mm256_andnot_si256(r, q), zero);
      // Non-covering lanes contribute all-ones.
      acc = _mm256_and_si256(acc, _mm256_or_si256(r, _mm256_andnot_si256(covers, ones)));
    }
    Word result = out[0] & horizontal_and(acc);
    for (; i < count; ++i)
      if ((query[0] & ~rows[i]) == 0) result &= rows[i];
    out[0] = result;
    return;
  }
  for (std::size_t i = 0; i < count; ++i) {
    const Word* row = rows + i * words;
    if (row_inside(query, row, words)) and_rows(out, row, words);
  }
}

std::size_t find_row_avx2(const Word* rows, std::size_t count,
                          std::size_t words, const Word* query) {
  if (words == 1) {
    const __m256i q = _mm256_set1_epi64x(static_cast<long long>(query[0]));
    std::size_t i = 0;
    for (; i + 4 <= count; i += 4) {
      int mask = _mm256_movemask_pd(_mm256_castsi256_pd(_mm256_cmpeq_epi64(load(rows + i), q)));
      if (mask != 0) return i + static_cast<std::size_t>(__builtin_ctz(static_cast<unsigned>(mask)));
    }
    for (; i < count; ++i)
      if (rows[i] == query[0]) return i;
    return count;
  }
  for (std::size_t i = 0; i < count; ++i) {
    const Word* row = rows + i * words;
    if (row_inside(row, query, words) && row_inside(query, row, words)) return i;
  }
  return count;
}

}  // namespace

const KernelTable& avx2_table() {
  static constexpr KernelTable table{Isa::kAvx2, &or_of_subsets_avx2,
                                     &and_of_supersets_avx2, &find_row_avx2};
  return table;
}

}  // namespace softtop::kernels::detail
