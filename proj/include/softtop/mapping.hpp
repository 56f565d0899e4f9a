#pragma once

#include <array>
#include <cstddef>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "softtop/budget.hpp"
#include "softtop/soft_set.hpp"
#include "softtop/topology.hpp"

namespace softtop {

// A point function f: X -> Y lifted parameterwise to soft sets. Source and
// target contexts share the parameter set.
class SoftMapping {
 public:
  // point_map[x] is the index of f(x) in the target universe.
  // Errors: kContextMismatch (parameter sets differ or map not total),
  // kUnknownElement (image out of range).
  SoftMapping(SoftContext source, SoftContext target, std::vector<std::size_t> point_map);

  static SoftMapping from_names(const SoftContext& source, const SoftContext& target,
                                const std::map<std::string, std::string, std::less<>>& point_map);
  static SoftMapping identity(const SoftContext& ctx);

  const SoftContext& source() const noexcept { return source_; }
  const SoftContext& target() const noexcept { return target_; }
  std::span<const std::size_t> point_map() const noexcept { return point_map_; }
  std::size_t operator()(std::size_t x) const noexcept { return point_map_[x]; }

  bool is_injective() const;
  bool is_surjective() const;
  bool is_bijective() const { return is_injective() && is_surjective(); }
  // nullopt unless bijective.
  std::optional<SoftMapping> inverse() const;

  CellSet image_cells(const CellSet& source_cells) const;
  CellSet preimage_cells(const CellSet& target_cells) const;
  // Point-level image/preimage of subsets of the universes.
  CellSet image_of_subset(const CellSet& subset) const;
  CellSet preimage_of_subset(const CellSet& subset) const;

 private:
  SoftContext source_;
  SoftContext target_;
  std::vector<std::size_t> point_map_;
};

SoftSet soft_image(const SoftMapping& f, const SoftSet& a);
SoftSet soft_preimage(const SoftMapping& f, const SoftSet& b);

bool is_soft_continuous_at(const SoftMapping& f, const SoftTopology& tau, const SoftTopology& sigma,
                           const SoftPoint& p);
// Witness: the first target open whose preimage is not open.
CheckReport check_soft_continuous(const SoftMapping& f, const SoftTopology& tau, const SoftTopology& sigma);
bool is_soft_continuous(const SoftMapping& f, const SoftTopology& tau, const SoftTopology& sigma);

// The six equivalent formulations of soft continuity, each evaluated on its
// own: (1) pointwise, (2) open preimages, (3) closed preimages,
// (4) f(cl F) ⊆ cl f(F), (5) cl f⁻¹(G) ⊆ f⁻¹(cl G), (6) f⁻¹(int G) ⊆ int f⁻¹(G).
// (4)-(6) quantify over every soft set and are left empty when the budget
// does not admit the enumeration.
struct ContinuityReport {
  static constexpr std::size_t kConditions = 6;
  std::array<std::optional<bool>, kConditions> conditions;
  std::array<std::vector<Witness>, kConditions> witnesses;

  bool continuous() const { return conditions[1].value_or(false); }
  bool exhaustive() const;
  // Every evaluated condition has the same verdict.
  bool consistent() const;
};

ContinuityReport continuity_report(const SoftMapping& f, const SoftTopology& tau, const SoftTopology& sigma,
                                   const EnumerationBudget& budget = {});

// f_alpha: (X, tau_alpha) -> (Y, sigma_alpha).
bool induced_map_continuous(const SoftMapping& f, const SoftTopology& tau, const SoftTopology& sigma,
                            std::size_t alpha);
bool induced_map_open(const SoftMapping& f, const SoftTopology& tau, const SoftTopology& sigma, std::size_t alpha);
bool induced_map_closed(const SoftMapping& f, const SoftTopology& tau, const SoftTopology& sigma, std::size_t alpha);

// For every soft set a, the complement of its parameterwise closure is open.
// Witness: the first soft set for which it is not. kInstanceTooLarge beyond
// the budget.
CheckReport check_closures_always_soft_closed(const SoftTopology& tau, const EnumerationBudget& budget = {});
bool closures_always_soft_closed(const SoftTopology& tau, const EnumerationBudget& budget = {});

// Images of opens are open / images of closed sets are closed.
CheckReport check_soft_open_map(const SoftMapping& f, const SoftTopology& tau, const SoftTopology& sigma);
CheckReport check_soft_closed_map(const SoftMapping& f, const SoftTopology& tau, const SoftTopology& sigma);
bool is_soft_open_map(const SoftMapping& f, const SoftTopology& tau, const SoftTopology& sigma);
bool is_soft_closed_map(const SoftMapping& f, const SoftTopology& tau, const SoftTopology& sigma);

// f(int F) ⊆ int f(F) for every soft set F over X.
CheckReport check_open_map_via_interior(const SoftMapping& f, const SoftTopology& tau, const SoftTopology& sigma,
                                        const EnumerationBudget& budget = {});
// cl f(F) ⊆ f(cl F) for every soft set F over X.
CheckReport check_closed_map_via_closure(const SoftMapping& f, const SoftTopology& tau, const SoftTopology& sigma,
                                         const EnumerationBudget& budget = {});
bool open_map_via_interior(const SoftMapping& f, const SoftTopology& tau, const SoftTopology& sigma,
                           const EnumerationBudget& budget = {});
bool closed_map_via_closure(const SoftMapping& f, const SoftTopology& tau, const SoftTopology& sigma,
                            const EnumerationBudget& budget = {});

// False (not an error) for non-bijective f.
bool is_soft_homeomorphism(const SoftMapping& f, const SoftTopology& tau, const SoftTopology& sigma);

struct HomeomorphismReport {
  bool homeomorphism = false;
  bool continuous_and_closed = false;
  bool continuous_and_open = false;
  // Verdict: the three agree. Witnesses describe any disagreement.
  CheckReport agreement;
};

// Throws SoftError(kNotBijective) when f is not a bijection.
HomeomorphismReport homeomorphism_equivalences(const SoftMapping& f, const SoftTopology& tau,
                                               const SoftTopology& sigma);

}  // namespace softtop
