#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include "softtop/cell_set.hpp"
#include "softtop/context.hpp"

namespace softtop {

// A soft set (F, E): a total assignment from every parameter to a subset of
// the universe. Immutable.
class SoftSet {
 public:
  // Cells must have size ctx.cell_count().
  SoftSet(SoftContext ctx, CellSet cells);

  static SoftSet null(const SoftContext& ctx) { return {ctx, CellSet(ctx.cell_count())}; }
  static SoftSet absolute(const SoftContext& ctx) { return {ctx, CellSet::full(ctx.cell_count())}; }

  const SoftContext& context() const noexcept { return ctx_; }
  const CellSet& cells() const noexcept { return cells_; }

  bool contains(std::size_t parameter, std::size_t element) const noexcept {
    return cells_.test(ctx_.cell(parameter, element));
  }
  // Element indices of F(parameter), in universe order.
  std::vector<std::size_t> at(std::size_t parameter) const;

  bool is_null() const noexcept { return cells_.none(); }
  bool is_absolute() const noexcept { return cells_.all(); }

  friend bool operator==(const SoftSet& a, const SoftSet& b) noexcept {
    return a.cells_ == b.cells_ && a.ctx_ == b.ctx_;
  }

 private:
  SoftContext ctx_;
  CellSet cells_;
};

// Canonical order within one context (numeric cell order; null first,
// absolute last).
struct SoftSetLess {
  bool operator()(const SoftSet& a, const SoftSet& b) const noexcept { return a.cells() < b.cells(); }
};

// (x_e, E), indices into the owning context.
struct SoftPoint {
  std::size_t element = 0;
  std::size_t parameter = 0;

  friend bool operator==(const SoftPoint&, const SoftPoint&) = default;
  friend auto operator<=>(const SoftPoint&, const SoftPoint&) = default;
};

using Assignment = std::map<std::string, std::vector<std::string>, std::less<>>;

// Errors: kUnknownParameter, kUnknownElement, kMissingParameter.
SoftSet make_soft_set(const SoftContext& ctx, const Assignment& assignment);

// Errors: kUnknownElement, kUnknownParameter.
SoftPoint make_point(const SoftContext& ctx, std::string_view element, std::string_view parameter);
// Parses "x@e".
SoftPoint parse_point(const SoftContext& ctx, std::string_view text);
// Throws kUnknownElement / kUnknownParameter when p is out of range for ctx.
void check_point(const SoftContext& ctx, const SoftPoint& p);

SoftSet soft_point_set(const SoftContext& ctx, const SoftPoint& p);

SoftSet soft_union(const SoftSet& a, const SoftSet& b);
SoftSet soft_intersection(const SoftSet& a, const SoftSet& b);
SoftSet soft_complement(const SoftSet& a);
bool soft_subset(const SoftSet& a, const SoftSet& b);
bool contains_point(const SoftSet& a, const SoftPoint& p);

// "{e1↦{h1,h2}, e2↦∅}"
std::string to_string(const SoftSet& a);
std::string to_string(const SoftContext& ctx, const SoftPoint& p);

}  // namespace softtop
