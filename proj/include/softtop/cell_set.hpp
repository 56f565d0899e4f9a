#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include <boost/container/small_vector.hpp>

namespace softtop {

// Fixed-width bitset over the cells of a context. Bits past size() are
// always zero. Ordering is numeric: the set is read as an unsigned integer
// whose bit i is cell i.
class CellSet {
 public:
  using Word = std::uint64_t;
  static constexpr std::size_t kWordBits = 64;

  CellSet() = default;
  explicit CellSet(std::size_t cells);

  static CellSet full(std::size_t cells);
  // Cells of `value` taken as the low bits; requires cells <= 64.
  static CellSet from_word(std::size_t cells, Word value);

  std::size_t size() const noexcept { return cells_; }
  std::size_t word_count() const noexcept { return words_.size(); }
  std::span<const Word> words() const noexcept { return {words_.data(), words_.size()}; }
  std::span<Word> words() noexcept { return {words_.data(), words_.size()}; }

  bool test(std::size_t cell) const noexcept {
    return (words_[cell / kWordBits] >> (cell % kWordBits)) & 1U;
  }
  void set(std::size_t cell) noexcept { words_[cell / kWordBits] |= Word{1} << (cell % kWordBits); }
  void reset(std::size_t cell) noexcept { words_[cell / kWordBits] &= ~(Word{1} << (cell % kWordBits)); }

  bool none() const noexcept;
  bool all() const noexcept;
  std::size_t count() const noexcept;

  CellSet& operator|=(const CellSet& other) noexcept;
  CellSet& operator&=(const CellSet& other) noexcept;
  CellSet complement() const;
  // this \ other
  CellSet minus(const CellSet& other) const;
  bool is_subset_of(const CellSet& other) const noexcept;

  std::vector<std::size_t> cells() const;

  friend CellSet operator|(CellSet a, const CellSet& b) noexcept { return a |= b; }
  friend CellSet operator&(CellSet a, const CellSet& b) noexcept { return a &= b; }
  friend bool operator==(const CellSet& a, const CellSet& b) noexcept;
  friend std::strong_ordering operator<=>(const CellSet& a, const CellSet& b) noexcept;

  std::size_t hash() const noexcept;

 private:
  void clear_tail() noexcept;

  std::size_t cells_ = 0;
  boost::container::small_vector<Word, 2> words_;
};

struct CellSetHash {
  std::size_t operator()(const CellSet& s) const noexcept { return s.hash(); }
};

}  // namespace softtop
