#include "softtop/soft_set.hpp"


#include "softtop/error.hpp"

namespace softtop {

SoftSet::SoftSet(SoftContext ctx, CellSet cells) : ctx_(std::move(ctx)), cells_(std::move(cells)) {
  if (cells_.size() != ctx_.cell_count())
    throw SoftError(Errc::kContextMismatch, "cell count does not match the soft context");
}

std::vector<std::size_t> SoftSet::at(std::size_t parameter) const {
  std::vector<std::size_t> out;
  for (std::size_t x = 0; x < ctx_.universe_size(); ++x)
    if (contains(parameter, x)) out.push_back(x);
  return out;
}

SoftSet make_soft_set(const SoftContext& ctx, const Assignment& assignment) {
  CellSet cells(ctx.cell_count());
  for (const auto& [param, elements] : assignment) {
    const std::size_t p = ctx.parameter_index(param);
    for (const auto& x : elements) cells.set(ctx.cell(p, ctx.element_index(x)));
  }
  for (const auto& param : ctx.parameters())
    if (assignment.find(param) == assignment.end())
      throw SoftError(Errc::kMissingParameter, "no assignment for parameter '" + param + "'");
  return {ctx, std::move(cells)};
}

SoftPoint make_point(const SoftContext& ctx, std::string_view element, std::string_view parameter) {
  return {ctx.element_index(element), ctx.parameter_index(parameter)};
}

SoftPoint parse_point(const SoftContext& ctx, std::string_view text) {
  const auto at = text.find('@');
  if (at == std::string_view::npos || text.find('@', at + 1) != std::string_view::npos)
    throw SoftError(Errc::kSyntaxError, "soft point must be written element@parameter, got '" + std::string(text) + "'");
  return make_point(ctx, text.substr(0, at), text.substr(at + 1));
}

void check_point(const SoftContext& ctx, const SoftPoint& p) {
  if (p.element >= ctx.universe_size()) throw SoftError(Errc::kUnknownElement, "soft point element out of range");
  if (p.parameter >= ctx.parameter_count()) throw SoftError(Errc::kUnknownParameter, "soft point parameter out of range");
}

SoftSet soft_point_set(const SoftContext& ctx, const SoftPoint& p) {
  check_point(ctx, p);
  CellSet cells(ctx.cell_count());
  cells.set(ctx.cell(p.parameter, p.element));
  return {ctx, std::move(cells)};
}

SoftSet soft_union(const SoftSet& a, const SoftSet& b) {
  require_same_context(a.context(), b.context());
  return {a.context(), a.cells() | b.cells()};
}

SoftSet soft_intersection(const SoftSet& a, const SoftSet& b) {
  require_same_context(a.context(), b.context());
  return {a.context(), a.cells() & b.cells()};
}

SoftSet soft_complement(const SoftSet& a) { return {a.context(), a.cells().complement()}; }

bool soft_subset(const SoftSet& a, const SoftSet& b) {
  require_same_context(a.context(), b.context());
  return a.cells().is_subset_of(b.cells());
}

bool contains_point(const SoftSet& a, const SoftPoint& p) {
  check_point(a.context(), p);
  return a.contains(p.parameter, p.element);
}

std::string to_string(const SoftSet& a) {
  const SoftContext& ctx = a.context();
  std::string out = "{";
  for (std::size_t p = 0; p < ctx.parameter_count(); ++p) {
    if (p > 0) out += ", ";
    out += ctx.parameters()[p];
    out += "↦";
    const auto members = a.at(p);
    if (members.empty()) {
      out += "∅";
      continue;
    }
    out += "{";
    for (std::size_t i = 0; i < members.size(); ++i) {
      if (i > 0) out += ",";
      out += ctx.universe()[members[i]];
    }
    out += "}";
  }
  out += "}";
  return out;
}

std::string to_string(const SoftContext& ctx, const SoftPoint& p) {
  check_point(ctx, p);
  return ctx.universe()[p.element] + "@" + ctx.parameters()[p.parameter];
}

}  // namespace softtop
