#include "softtop/topology.hpp"

#include <algorithm>
#include <stdexcept>

#include "softtop/error.hpp"
#include "softtop/kernels.hpp"

namespace softtop {
namespace {

void sort_unique(std::vector<CellSet>& sets) {
  std::sort(sets.begin(), sets.end());
  sets.erase(std::unique(sets.begin(), sets.end()), sets.end());
}

bool sorted_contains(const std::vector<CellSet>& sorted, const CellSet& s) {
  return std::binary_search(sorted.begin(), sorted.end(), s);
}

// Cells of a(alpha) as a subset of X.
CellSet slice(const SoftContext& ctx, const CellSet& cells, std::size_t alpha) {
  CellSet out(ctx.universe_size());
  for (std::size_t x = 0; x < ctx.universe_size(); ++x)
    if (cells.test(ctx.cell(alpha, x))) out.set(x);
  return out;
}

// Report the first axiom failure in canonical order: null, absolute, then
// pairs (i < j) for union before intersection.
CheckReport check_axioms(const SoftContext& ctx, const std::vector<CellSet>& sorted) {
  CheckReport report;
  const CellSet null(ctx.cell_count());
  const CellSet all = CellSet::full(ctx.cell_count());
  if (!sorted_contains(sorted, null)) {
    report.fail({"axiom", SoftSet::null(ctx), "null soft set is missing"});
    return report;
  }
  if (!sorted_contains(sorted, all)) {
    report.fail({"axiom", SoftSet::absolute(ctx), "absolute soft set is missing"});
    return report;
  }
  for (std::size_t i = 0; i < sorted.size(); ++i) {
    for (std::size_t j = i + 1; j < sorted.size(); ++j) {
      CellSet u = sorted[i] | sorted[j];
      if (!sorted_contains(sorted, u)) {
        report.fail({"axiom", std::nullopt, "union is not in the collection"});
        report.witnesses.push_back({"left", SoftSet(ctx, sorted[i]), ""});
        report.witnesses.push_back({"right", SoftSet(ctx, sorted[j]), ""});
        report.witnesses.push_back({"union", SoftSet(ctx, std::move(u)), ""});
        return report;
      }
      CellSet n = sorted[i] & sorted[j];
      if (!sorted_contains(sorted, n)) {
        report.fail({"axiom", std::nullopt, "intersection is not in the collection"});
        report.witnesses.push_back({"left", SoftSet(ctx, sorted[i]), ""});
        report.witnesses.push_back({"right", SoftSet(ctx, sorted[j]), ""});
        report.witnesses.push_back({"intersection", SoftSet(ctx, std::move(n)), ""});
        return report;
      }
    }
  }
  return report;
}

std::vector<CellSet> cells_of(const SoftContext& ctx, std::span<const SoftSet> sets) {
  std::vector<CellSet> out;
  out.reserve(sets.size());
  for (const auto& s : sets) {
    require_same_context(ctx, s.context());
    out.push_back(s.cells());
  }
  sort_unique(out);
  return out;
}

}  // namespace

std::string to_string(const CheckReport& report) {
  std::string out = report.verdict ? "true" : "false";
  for (const auto& w : report.witnesses) {
    out += "\n  ";
    out += w.name;
    out += ":";
    if (w.set) out += " " + to_string(*w.set);
    if (!w.detail.empty()) out += " (" + w.detail + ")";
  }
  return out;
}

// PointTopology

PointTopology::PointTopology(std::size_t universe_size, std::vector<CellSet> opens)
    : universe_size_(universe_size), opens_(std::move(opens)) {
  for (const auto& o : opens_)
    if (o.size() != universe_size_) throw SoftError(Errc::kContextMismatch, "open set has the wrong universe size");
  sort_unique(opens_);
}

bool PointTopology::is_open(const CellSet& subset) const { return sorted_contains(opens_, subset); }

bool PointTopology::is_valid() const {
  if (!is_open(CellSet(universe_size_)) || !is_open(CellSet::full(universe_size_))) return false;
  for (std::size_t i = 0; i < opens_.size(); ++i)
    for (std::size_t j = i + 1; j < opens_.size(); ++j)
      if (!is_open(opens_[i] | opens_[j]) || !is_open(opens_[i] & opens_[j])) return false;
  return true;
}

CellSet PointTopology::closure(const CellSet& subset) const {
  CellSet acc = CellSet::full(universe_size_);
  for (const auto& open : opens_) {
    CellSet closed = open.complement();
    if (subset.is_subset_of(closed)) acc &= closed;
  }
  return acc;
}

// SoftTopology

SoftTopology::SoftTopology(const SoftContext& ctx, std::span<const SoftSet> opens)
    : ctx_(ctx), opens_(cells_of(ctx, opens)) {
  CheckReport report = check_axioms(ctx_, opens_);
  if (!report.verdict) throw SoftError(Errc::kAxiomViolation, "not a soft topology: " + to_string(report));
  build_tables();
}

SoftTopology SoftTopology::indiscrete(const SoftContext& ctx) {
  const SoftSet members[] = {SoftSet::null(ctx), SoftSet::absolute(ctx)};
  return SoftTopology(ctx, members);
}

SoftTopology SoftTopology::discrete(const SoftContext& ctx) {
  const std::size_t cells = ctx.cell_count();
  if (cells > 20) throw SoftError(Errc::kInstanceTooLarge, "discrete soft topology over more than 2^20 soft sets");
  std::vector<SoftSet> all;
  all.reserve(std::size_t{1} << cells);
  for (std::uint64_t v = 0; v < (std::uint64_t{1} << cells); ++v) all.emplace_back(ctx, CellSet::from_word(cells, v));
  return SoftTopology(ctx, all);
}

void SoftTopology::build_tables() {
  words_ = CellSet(ctx_.cell_count()).word_count();
  open_rows_.clear();
  closed_rows_.clear();
  open_rows_.reserve(opens_.size() * words_);
  closed_rows_.reserve(opens_.size() * words_);
  for (const auto& o : opens_) {
    for (auto w : o.words()) open_rows_.push_back(w);
    const CellSet closed = o.complement();
    for (auto w : closed.words()) closed_rows_.push_back(w);
  }
}

std::vector<SoftSet> SoftTopology::open_sets() const {
  std::vector<SoftSet> out;
  out.reserve(opens_.size());
  for (const auto& o : opens_) out.emplace_back(ctx_, o);
  return out;
}

bool SoftTopology::is_open(const CellSet& cells) const {
  return kernels::active().find_row(open_rows_.data(), opens_.size(), words_, cells.words().data()) != opens_.size();
}

bool SoftTopology::is_closed(const CellSet& cells) const {
  return kernels::active().find_row(closed_rows_.data(), opens_.size(), words_, cells.words().data()) != opens_.size();
}

CellSet SoftTopology::interior(const CellSet& cells) const {
  CellSet out(ctx_.cell_count());
  kernels::active().or_of_subsets(open_rows_.data(), opens_.size(), words_, cells.words().data(), out.words().data());
  return out;
}

CellSet SoftTopology::closure(const CellSet& cells) const {
  CellSet out = CellSet::full(ctx_.cell_count());
  kernels::active().and_of_supersets(closed_rows_.data(), opens_.size(), words_, cells.words().data(), out.words().data());
  return out;
}

// Operations

CheckReport validate_topology(const SoftContext& ctx, std::span<const SoftSet> candidate) {
  return check_axioms(ctx, cells_of(ctx, candidate));
}

bool is_soft_open(const SoftTopology& t, const SoftSet& a) {
  require_same_context(t.context(), a.context());
  return t.is_open(a.cells());
}

bool is_soft_closed(const SoftTopology& t, const SoftSet& a) {
  require_same_context(t.context(), a.context());
  return t.is_closed(a.cells());
}

SoftSet soft_closure(const SoftTopology& t, const SoftSet& a) {
  require_same_context(t.context(), a.context());
  return {t.context(), t.closure(a.cells())};
}

SoftSet soft_interior(const SoftTopology& t, const SoftSet& a) {
  require_same_context(t.context(), a.context());
  return {t.context(), t.interior(a.cells())};
}

PointTopology induced_topology(const SoftTopology& t, std::size_t alpha) {
  const SoftContext& ctx = t.context();
  if (alpha >= ctx.parameter_count()) throw SoftError(Errc::kUnknownParameter, "parameter index out of range");
  std::vector<CellSet> opens;
  opens.reserve(t.size());
  for (const auto& o : t.open_cells()) opens.push_back(slice(ctx, o, alpha));
  return PointTopology(ctx.universe_size(), std::move(opens));
}

PointTopology induced_topology(const SoftTopology& t, std::string_view alpha) {
  return induced_topology(t, t.context().parameter_index(alpha));
}

SoftSet parameterwise_closure(const SoftTopology& t, const SoftSet& a) {
  const SoftContext& ctx = t.context();
  require_same_context(ctx, a.context());
  CellSet out(ctx.cell_count());
  for (std::size_t alpha = 0; alpha < ctx.parameter_count(); ++alpha) {
    const CellSet closed = induced_topology(t, alpha).closure(slice(ctx, a.cells(), alpha));
    for (std::size_t x = 0; x < ctx.universe_size(); ++x)
      if (closed.test(x)) out.set(ctx.cell(alpha, x));
  }
  return {ctx, std::move(out)};
}

bool is_soft_neighbourhood(const SoftTopology& t, const SoftSet& g, const SoftPoint& p) {
  const SoftContext& ctx = t.context();
  require_same_context(ctx, g.context());
  check_point(ctx, p);
  const std::size_t cell = ctx.cell(p.parameter, p.element);
  for (const auto& o : t.open_cells())
    if (o.test(cell) && o.is_subset_of(g.cells())) return true;
  return false;
}

std::vector<SoftPoint> interior_points(const SoftTopology& t, const SoftSet& g) {
  const SoftContext& ctx = t.context();
  std::vector<SoftPoint> out;
  for (std::size_t e = 0; e < ctx.parameter_count(); ++e)
    for (std::size_t x = 0; x < ctx.universe_size(); ++x)
      if (is_soft_neighbourhood(t, g, {x, e})) out.push_back({x, e});
  return out;
}

bool parameterwise_closure_complement_open(const SoftTopology& t, const SoftSet& a) {
  return t.is_open(parameterwise_closure(t, a).cells().complement());
}

bool closure_operators_agree(const SoftTopology& t, const SoftSet& a) {
  const bool equal = parameterwise_closure(t, a) == soft_closure(t, a);
  if (equal != parameterwise_closure_complement_open(t, a))
    throw std::logic_error("closure comparison disagrees with the complement-open criterion for " + to_string(a));
  return equal;
}

}  // namespace softtop
