#include "softtop/mapping.hpp"

#include <algorithm>
#include <bit>

#include "softtop/error.hpp"

namespace softtop {

void require_enumerable(const EnumerationBudget& budget, std::size_t cells) {
  if (!budget.admits_cells(cells))
    throw SoftError(Errc::kInstanceTooLarge, "2^" + std::to_string(cells) + " soft sets exceed the enumeration budget of " +
                                                 std::to_string(budget.max_soft_sets));
}

namespace {

void require_spaces(const SoftMapping& f, const SoftTopology& tau, const SoftTopology& sigma) {
  if (!(tau.context() == f.source()))
    throw SoftError(Errc::kContextMismatch, "source topology is not over the mapping's source context");
  if (!(sigma.context() == f.target()))
    throw SoftError(Errc::kContextMismatch, "target topology is not over the mapping's target context");
}

template <typename Fn>
void for_each_cell_set(std::size_t cells, Fn&& fn) {
  const std::uint64_t total = std::uint64_t{1} << cells;
  for (std::uint64_t v = 0; v < total; ++v)
    if (!fn(CellSet::from_word(cells, v))) return;
}

void require_alpha(const SoftMapping& f, std::size_t alpha) {
  if (alpha >= f.source().parameter_count()) throw SoftError(Errc::kUnknownParameter, "parameter index out of range");
}

bool continuous_at(const SoftMapping& f, const SoftTopology& tau, const SoftTopology& sigma, const SoftPoint& p,
                   const CellSet** failing) {
  const std::size_t source_cell = f.source().cell(p.parameter, p.element);
  const std::size_t image_cell = f.target().cell(p.parameter, f(p.element));
  // Neighbourhoods reduce to open ones: each neighbourhood contains an open
  // neighbourhood of the same point.
  for (const auto& h : sigma.open_cells()) {
    if (!h.test(image_cell)) continue;
    bool found = false;
    for (const auto& o : tau.open_cells()) {
      if (o.test(source_cell) && f.image_cells(o).is_subset_of(h)) {
        found = true;
        break;
      }
    }
    if (!found) {
      if (failing != nullptr) *failing = &h;
      return false;
    }
  }
  return true;
}

}  // namespace

// SoftMapping

SoftMapping::SoftMapping(SoftContext source, SoftContext target, std::vector<std::size_t> point_map)
    : source_(std::move(source)), target_(std::move(target)), point_map_(std::move(point_map)) {
  if (!source_.same_parameters(target_))
    throw SoftError(Errc::kContextMismatch, "source and target must share the parameter set");
  if (point_map_.size() != source_.universe_size())
    throw SoftError(Errc::kContextMismatch, "point map must assign every element of the source universe");
  for (std::size_t y : point_map_)
    if (y >= target_.universe_size()) throw SoftError(Errc::kUnknownElement, "image outside the target universe");
}

SoftMapping SoftMapping::from_names(const SoftContext& source, const SoftContext& target,
                                    const std::map<std::string, std::string, std::less<>>& point_map) {
  std::vector<std::size_t> indices(source.universe_size(), 0);
  std::vector<bool> assigned(source.universe_size(), false);
  for (const auto& [x, y] : point_map) {
    const std::size_t i = source.element_index(x);
    indices[i] = target.element_index(y);
    assigned[i] = true;
  }
  for (std::size_t i = 0; i < assigned.size(); ++i)
    if (!assigned[i])
      throw SoftError(Errc::kContextMismatch, "point map is not total: '" + source.universe()[i] + "' has no image");
  return {source, target, std::move(indices)};
}

SoftMapping SoftMapping::identity(const SoftContext& ctx) {
  std::vector<std::size_t> ids(ctx.universe_size());
  for (std::size_t i = 0; i < ids.size(); ++i) ids[i] = i;
  return {ctx, ctx, std::move(ids)};
}

bool SoftMapping::is_injective() const {
  std::vector<bool> hit(target_.universe_size(), false);
  for (std::size_t y : point_map_) {
    if (hit[y]) return false;
    hit[y] = true;
  }
  return true;
}

bool SoftMapping::is_surjective() const {
  std::vector<bool> hit(target_.universe_size(), false);
  for (std::size_t y : point_map_) hit[y] = true;
  return std::all_of(hit.begin(), hit.end(), [](bool b) { return b; });
}

std::optional<SoftMapping> SoftMapping::inverse() const {
  if (!is_bijective()) return std::nullopt;
  std::vector<std::size_t> inv(point_map_.size());
  for (std::size_t x = 0; x < point_map_.size(); ++x) inv[point_map_[x]] = x;
  return SoftMapping(target_, source_, std::move(inv));
}

CellSet SoftMapping::image_cells(const CellSet& source_cells) const {
  CellSet out(target_.cell_count());
  const std::size_t nx = source_.universe_size();
  const std::size_t ny = target_.universe_size();
  const auto words = source_cells.words();
  for (std::size_t i = 0; i < words.size(); ++i) {
    for (CellSet::Word w = words[i]; w != 0; w &= w - 1) {
      const std::size_t cell = i * CellSet::kWordBits + static_cast<std::size_t>(std::countr_zero(w));
      out.set((cell / nx) * ny + point_map_[cell % nx]);
    }
  }
  return out;
}

CellSet SoftMapping::preimage_cells(const CellSet& target_cells) const {
  CellSet out(source_.cell_count());
  const std::size_t nx = source_.universe_size();
  const std::size_t ny = target_.universe_size();
  for (std::size_t p = 0; p < source_.parameter_count(); ++p)
    for (std::size_t x = 0; x < nx; ++x)
      if (target_cells.test(p * ny + point_map_[x])) out.set(p * nx + x);
  return out;
}

CellSet SoftMapping::image_of_subset(const CellSet& subset) const {
  CellSet out(target_.universe_size());
  for (std::size_t x : subset.cells()) out.set(point_map_[x]);
  return out;
}

CellSet SoftMapping::preimage_of_subset(const CellSet& subset) const {
  CellSet out(source_.universe_size());
  for (std::size_t x = 0; x < point_map_.size(); ++x)
    if (subset.test(point_map_[x])) out.set(x);
  return out;
}

SoftSet soft_image(const SoftMapping& f, const SoftSet& a) {
  require_same_context(f.source(), a.context());
  return {f.target(), f.image_cells(a.cells())};
}

SoftSet soft_preimage(const SoftMapping& f, const SoftSet& b) {
  require_same_context(f.target(), b.context());
  return {f.source(), f.preimage_cells(b.cells())};
}

// Continuity

bool is_soft_continuous_at(const SoftMapping& f, const SoftTopology& tau, const SoftTopology& sigma,
                           const SoftPoint& p) {
  require_spaces(f, tau, sigma);
  check_point(f.source(), p);
  return continuous_at(f, tau, sigma, p, nullptr);
}

CheckReport check_soft_continuous(const SoftMapping& f, const SoftTopology& tau, const SoftTopology& sigma) {
  require_spaces(f, tau, sigma);
  CheckReport report;
  for (const auto& g : sigma.open_cells()) {
    CellSet pre = f.preimage_cells(g);
    if (!tau.is_open(pre)) {
      report.fail({"open", SoftSet(f.target(), g), "target open set"});
      report.witnesses.push_back({"preimage", SoftSet(f.source(), std::move(pre)), "not open in the source"});
      break;
    }
  }
  return report;
}

bool is_soft_continuous(const SoftMapping& f, const SoftTopology& tau, const SoftTopology& sigma) {
  return check_soft_continuous(f, tau, sigma).verdict;
}

bool ContinuityReport::exhaustive() const {
  return std::all_of(conditions.begin(), conditions.end(), [](const auto& c) { return c.has_value(); });
}

bool ContinuityReport::consistent() const {
  std::optional<bool> seen;
  for (const auto& c : conditions) {
    if (!c) continue;
    if (seen && *seen != *c) return false;
    seen = c;
  }
  return true;
}

ContinuityReport continuity_report(const SoftMapping& f, const SoftTopology& tau, const SoftTopology& sigma,
                                   const EnumerationBudget& budget) {
  require_spaces(f, tau, sigma);
  const SoftContext& src = f.source();
  const SoftContext& dst = f.target();
  ContinuityReport r;

  {  // (1) continuity at every soft point
    bool ok = true;
    for (std::size_t e = 0; e < src.parameter_count() && ok; ++e) {
      for (std::size_t x = 0; x < src.universe_size() && ok; ++x) {
        const CellSet* failing = nullptr;
        if (!continuous_at(f, tau, sigma, {x, e}, &failing)) {
          ok = false;
          r.witnesses[0].push_back({"point", soft_point_set(src, {x, e}), to_string(src, SoftPoint{x, e})});
          r.witnesses[0].push_back({"neighbourhood", SoftSet(dst, *failing), "no source neighbourhood maps inside it"});
        }
      }
    }
    r.conditions[0] = ok;
  }
  {  // (2) preimages of opens are open
    CheckReport c = check_soft_continuous(f, tau, sigma);
    r.conditions[1] = c.verdict;
    r.witnesses[1] = std::move(c.witnesses);
  }
  {  // (3) preimages of closed sets are closed
    bool ok = true;
    for (const auto& g : sigma.open_cells()) {
      CellSet closed = g.complement();
      CellSet pre = f.preimage_cells(closed);
      if (!tau.is_closed(pre)) {
        ok = false;
        r.witnesses[2].push_back({"closed", SoftSet(dst, std::move(closed)), "target closed set"});
        r.witnesses[2].push_back({"preimage", SoftSet(src, std::move(pre)), "not closed in the source"});
        break;
      }
    }
    r.conditions[2] = ok;
  }

  if (budget.admits_cells(src.cell_count())) {  // (4)
    bool ok = true;
    for_each_cell_set(src.cell_count(), [&](const CellSet& a) {
      CellSet lhs = f.image_cells(tau.closure(a));
      CellSet rhs = sigma.closure(f.image_cells(a));
      if (lhs.is_subset_of(rhs)) return true;
      ok = false;
      r.witnesses[3].push_back({"set", SoftSet(src, a), "f(cl F) ⊄ cl f(F)"});
      r.witnesses[3].push_back({"image_of_closure", SoftSet(dst, std::move(lhs)), ""});
      r.witnesses[3].push_back({"closure_of_image", SoftSet(dst, std::move(rhs)), ""});
      return false;
    });
    r.conditions[3] = ok;
  }
  if (budget.admits_cells(dst.cell_count())) {  // (5) and (6)
    bool ok5 = true;
    bool ok6 = true;
    for_each_cell_set(dst.cell_count(), [&](const CellSet& g) {
      const CellSet pre = f.preimage_cells(g);
      if (ok5) {
        CellSet lhs = tau.closure(pre);
        CellSet rhs = f.preimage_cells(sigma.closure(g));
        if (!lhs.is_subset_of(rhs)) {
          ok5 = false;
          r.witnesses[4].push_back({"set", SoftSet(dst, g), "cl f⁻¹(G) ⊄ f⁻¹(cl G)"});
          r.witnesses[4].push_back({"closure_of_preimage", SoftSet(src, std::move(lhs)), ""});
          r.witnesses[4].push_back({"preimage_of_closure", SoftSet(src, std::move(rhs)), ""});
        }
      }
      if (ok6) {
        CellSet lhs = f.preimage_cells(sigma.interior(g));
        CellSet rhs = tau.interior(pre);
        if (!lhs.is_subset_of(rhs)) {
          ok6 = false;
          r.witnesses[5].push_back({"set", SoftSet(dst, g), "f⁻¹(int G) ⊄ int f⁻¹(G)"});
          r.witnesses[5].push_back({"preimage_of_interior", SoftSet(src, std::move(lhs)), ""});
          r.witnesses[5].push_back({"interior_of_preimage", SoftSet(src, std::move(rhs)), ""});
        }
      }
      return ok5 || ok6;
    });
    r.conditions[4] = ok5;
    r.conditions[5] = ok6;
  }
  return r;
}

// Induced maps

bool induced_map_continuous(const SoftMapping& f, const SoftTopology& tau, const SoftTopology& sigma,
                            std::size_t alpha) {
  require_spaces(f, tau, sigma);
  require_alpha(f, alpha);
  const PointTopology source = induced_topology(tau, alpha);
  const PointTopology target = induced_topology(sigma, alpha);
  for (const auto& u : target.opens())
    if (!source.is_open(f.preimage_of_subset(u))) return false;
  return true;
}

bool induced_map_open(const SoftMapping& f, const SoftTopology& tau, const SoftTopology& sigma, std::size_t alpha) {
  require_spaces(f, tau, sigma);
  require_alpha(f, alpha);
  const PointTopology source = induced_topology(tau, alpha);
  const PointTopology target = induced_topology(sigma, alpha);
  for (const auto& u : source.opens())
    if (!target.is_open(f.image_of_subset(u))) return false;
  return true;
}

bool induced_map_closed(const SoftMapping& f, const SoftTopology& tau, const SoftTopology& sigma, std::size_t alpha) {
  require_spaces(f, tau, sigma);
  require_alpha(f, alpha);
  const PointTopology source = induced_topology(tau, alpha);
  const PointTopology target = induced_topology(sigma, alpha);
  for (const auto& u : source.opens())
    if (!target.is_open(f.image_of_subset(u.complement()).complement())) return false;
  return true;
}

CheckReport check_closures_always_soft_closed(const SoftTopology& tau, const EnumerationBudget& budget) {
  const SoftContext& ctx = tau.context();
  require_enumerable(budget, ctx.cell_count());
  CheckReport report;
  for_each_cell_set(ctx.cell_count(), [&](const CellSet& a) {
    const SoftSet set(ctx, a);
    if (parameterwise_closure_complement_open(tau, set)) return true;
    report.fail({"set", set, "complement of its parameterwise closure is not open"});
    report.witnesses.push_back({"parameterwise_closure", parameterwise_closure(tau, set), ""});
    return false;
  });
  return report;
}

bool closures_always_soft_closed(const SoftTopology& tau, const EnumerationBudget& budget) {
  return check_closures_always_soft_closed(tau, budget).verdict;
}

// Open and closed maps

CheckReport check_soft_open_map(const SoftMapping& f, const SoftTopology& tau, const SoftTopology& sigma) {
  require_spaces(f, tau, sigma);
  CheckReport report;
  for (const auto& o : tau.open_cells()) {
    CellSet image = f.image_cells(o);
    if (!sigma.is_open(image)) {
      report.fail({"open", SoftSet(f.source(), o), "source open set"});
      report.witnesses.push_back({"image", SoftSet(f.target(), std::move(image)), "not open in the target"});
      break;
    }
  }
  return report;
}

CheckReport check_soft_closed_map(const SoftMapping& f, const SoftTopology& tau, const SoftTopology& sigma) {
  require_spaces(f, tau, sigma);
  CheckReport report;
  for (const auto& o : tau.open_cells()) {
    CellSet closed = o.complement();
    CellSet image = f.image_cells(closed);
    if (!sigma.is_closed(image)) {
      report.fail({"closed", SoftSet(f.source(), std::move(closed)), "source closed set"});
      report.witnesses.push_back({"image", SoftSet(f.target(), std::move(image)), "not closed in the target"});
      break;
    }
  }
  return report;
}

bool is_soft_open_map(const SoftMapping& f, const SoftTopology& tau, const SoftTopology& sigma) {
  return check_soft_open_map(f, tau, sigma).verdict;
}

bool is_soft_closed_map(const SoftMapping& f, const SoftTopology& tau, const SoftTopology& sigma) {
  return check_soft_closed_map(f, tau, sigma).verdict;
}

CheckReport check_open_map_via_interior(const SoftMapping& f, const SoftTopology& tau, const SoftTopology& sigma,
                                        const EnumerationBudget& budget) {
  require_spaces(f, tau, sigma);
  require_enumerable(budget, f.source().cell_count());
  CheckReport report;
  for_each_cell_set(f.source().cell_count(), [&](const CellSet& a) {
    CellSet lhs = f.image_cells(tau.interior(a));
    CellSet rhs = sigma.interior(f.image_cells(a));
    if (lhs.is_subset_of(rhs)) return true;
    report.fail({"set", SoftSet(f.source(), a), "f(int F) ⊄ int f(F)"});
    report.witnesses.push_back({"image_of_interior", SoftSet(f.target(), std::move(lhs)), ""});
    report.witnesses.push_back({"interior_of_image", SoftSet(f.target(), std::move(rhs)), ""});
    return false;
  });
  return report;
}

CheckReport check_closed_map_via_closure(const SoftMapping& f, const SoftTopology& tau, const SoftTopology& sigma,
                                         const EnumerationBudget& budget) {
  require_spaces(f, tau, sigma);
  require_enumerable(budget, f.source().cell_count());
  CheckReport report;
  for_each_cell_set(f.source().cell_count(), [&](const CellSet& a) {
    CellSet lhs = sigma.closure(f.image_cells(a));
    CellSet rhs = f.image_cells(tau.closure(a));
    if (lhs.is_subset_of(rhs)) return true;
    report.fail({"set", SoftSet(f.source(), a), "cl f(F) ⊄ f(cl F)"});
    report.witnesses.push_back({"closure_of_image", SoftSet(f.target(), std::move(lhs)), ""});
    report.witnesses.push_back({"image_of_closure", SoftSet(f.target(), std::move(rhs)), ""});
    return false;
  });
  return report;
}

bool open_map_via_interior(const SoftMapping& f, const SoftTopology& tau, const SoftTopology& sigma,
                           const EnumerationBudget& budget) {
  return check_open_map_via_interior(f, tau, sigma, budget).verdict;
}

bool closed_map_via_closure(const SoftMapping& f, const SoftTopology& tau, const SoftTopology& sigma,
                            const EnumerationBudget& budget) {
  return check_closed_map_via_closure(f, tau, sigma, budget).verdict;
}

// Homeomorphisms

bool is_soft_homeomorphism(const SoftMapping& f, const SoftTopology& tau, const SoftTopology& sigma) {
  require_spaces(f, tau, sigma);
  const auto inv = f.inverse();
  if (!inv) return false;
  return is_soft_continuous(f, tau, sigma) && is_soft_continuous(*inv, sigma, tau);
}

HomeomorphismReport homeomorphism_equivalences(const SoftMapping& f, const SoftTopology& tau,
                                               const SoftTopology& sigma) {
  require_spaces(f, tau, sigma);
  if (!f.is_bijective()) throw SoftError(Errc::kNotBijective, "point map is not a bijection");
  HomeomorphismReport r;
  const bool continuous = is_soft_continuous(f, tau, sigma);
  r.homeomorphism = is_soft_homeomorphism(f, tau, sigma);
  r.continuous_and_closed = continuous && is_soft_closed_map(f, tau, sigma);
  r.continuous_and_open = continuous && is_soft_open_map(f, tau, sigma);
  auto verdict = [](bool b) { return std::string(b ? "true" : "false"); };
  if (r.homeomorphism != r.continuous_and_closed || r.homeomorphism != r.continuous_and_open) {
    r.agreement.fail({"homeomorphism", std::nullopt, verdict(r.homeomorphism)});
    r.agreement.witnesses.push_back({"continuous_and_closed", std::nullopt, verdict(r.continuous_and_closed)});
    r.agreement.witnesses.push_back({"continuous_and_open", std::nullopt, verdict(r.continuous_and_open)});
  }
  return r;
}

}  // namespace softtop
