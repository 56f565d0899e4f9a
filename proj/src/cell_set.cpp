#include "softtop/cell_set.hpp"

#include <bit>
#include <cassert>

namespace softtop {
namespace {

std::size_t words_for(std::size_t cells) {
  return (cells + CellSet::kWordBits - 1) / CellSet::kWordBits;
}

}  // namespace

CellSet::CellSet(std::size_t cells) : cells_(cells), words_(words_for(cells)) {}

CellSet CellSet::full(std::size_t cells) {
  CellSet s(cells);
  for (Word& w : s.words_) w = ~Word{0};
  s.clear_tail();
  return s;
}

CellSet CellSet::from_word(std::size_t cells, Word value) {
  assert(cells <= kWordBits);
  CellSet s(cells);
  if (!s.words_.empty()) s.words_[0] = value;
  s.clear_tail();
  return s;
}

void CellSet::clear_tail() noexcept {
  const std::size_t rem = cells_ % kWordBits;
  if (rem != 0 && !words_.empty()) words_.back() &= (Word{1} << rem) - 1;
}

bool CellSet::none() const noexcept {
  for (Word w : words_)
    if (w != 0) return false;
  return true;
}

bool CellSet::all() const noexcept { return count() == cells_; }

std::size_t CellSet::count() const noexcept {
  std::size_t n = 0;
  for (Word w : words_) n += static_cast<std::size_t>(std::popcount(w));
  return n;
}

CellSet& CellSet::operator|=(const CellSet& other) noexcept {
  assert(cells_ == other.cells_);
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= other.words_[i];
  return *this;
}

CellSet& CellSet::operator&=(const CellSet& other) noexcept {
  assert(cells_ == other.cells_);
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= other.words_[i];
  return *this;
}

CellSet CellSet::complement() const {
  CellSet s = *this;
  for (Word& w : s.words_) w = ~w;
  s.clear_tail();
  return s;
}

CellSet CellSet::minus(const CellSet& other) const {
  assert(cells_ == other.cells_);
  CellSet s = *this;
  for (std::size_t i = 0; i < words_.size(); ++i) s.words_[i] &= ~other.words_[i];
  return s;
}

bool CellSet::is_subset_of(const CellSet& other) const noexcept {
  assert(cells_ == other.cells_);
  for (std::size_t i = 0; i < words_.size(); ++i)
    if (words_[i] & ~other.words_[i]) return false;
  return true;
}

std::vector<std::size_t> CellSet::cells() const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < words_.size(); ++i) {
    Word w = words_[i];
    while (w != 0) {
      out.push_back(i * kWordBits + static_cast<std::size_t>(std::countr_zero(w)));
      w &= w - 1;
    }
  }
  return out;
}

bool operator==(const CellSet& a, const CellSet& b) noexcept {
  return a.cells_ == b.cells_ && a.words_ == b.words_;
}

std::strong_ordering operator<=>(const CellSet& a, const CellSet& b) noexcept {
  if (auto c = a.cells_ <=> b.cells_; c != 0) return c;
  for (std::size_t i = a.words_.size(); i-- > 0;)
    if (auto c = a.words_[i] <=> b.words_[i]; c != 0) return c;
  return std::strong_ordering::equal;
}

std::size_t CellSet::hash() const noexcept {
  std::size_t h = cells_ * 0x9e3779b97f4a7c15ULL;
  for (Word w : words_) h = (h ^ w) * 0x100000001b3ULL + (h >> 29);
  return h;
}

}  // namespace softtop
