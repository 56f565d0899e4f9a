#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "softtop/cell_set.hpp"
#include "softtop/context.hpp"
#include "softtop/soft_set.hpp"

namespace softtop {

// A named object explaining a failed check.
struct Witness {
  std::string name;
  std::optional<SoftSet> set;
  std::string detail;
};

struct CheckReport {
  bool verdict = true;
  std::vector<Witness> witnesses;

  void fail(Witness w) {
    verdict = false;
    witnesses.push_back(std::move(w));
  }
};

std::string to_string(const CheckReport& report);

// An ordinary topology on the universe; subsets are bitsets over X.
class PointTopology {
 public:
  // Opens are deduplicated and sorted; validity is not enforced here (see
  // is_valid).
  PointTopology(std::size_t universe_size, std::vector<CellSet> opens);

  std::size_t universe_size() const noexcept { return universe_size_; }
  const std::vector<CellSet>& opens() const noexcept { return opens_; }

  bool is_open(const CellSet& subset) const;
  bool is_valid() const;
  // Intersection of the closed supersets of `subset`.
  CellSet closure(const CellSet& subset) const;

  friend bool operator==(const PointTopology&, const PointTopology&) = default;

 private:
  std::size_t universe_size_;
  std::vector<CellSet> opens_;
};

// A soft topology over one context. Opens are stored deduplicated in
// canonical order, together with their complements.
class SoftTopology {
 public:
  // Throws SoftError(kAxiomViolation) with the witness text when the
  // collection is not a soft topology, kContextMismatch on foreign members.
  SoftTopology(const SoftContext& ctx, std::span<const SoftSet> opens);

  static SoftTopology indiscrete(const SoftContext& ctx);
  static SoftTopology discrete(const SoftContext& ctx);

  const SoftContext& context() const noexcept { return ctx_; }
  std::size_t size() const noexcept { return opens_.size(); }
  const std::vector<CellSet>& open_cells() const noexcept { return opens_; }
  std::vector<SoftSet> open_sets() const;

  bool is_open(const CellSet& cells) const;
  bool is_closed(const CellSet& cells) const;
  // Union of the opens inside `cells`.
  CellSet interior(const CellSet& cells) const;
  // Intersection of the closed sets containing `cells`.
  CellSet closure(const CellSet& cells) const;

  friend bool operator==(const SoftTopology& a, const SoftTopology& b) noexcept {
    return a.ctx_ == b.ctx_ && a.opens_ == b.opens_;
  }

 private:
  void build_tables();

  SoftContext ctx_;
  std::vector<CellSet> opens_;
  // Row tables for the kernels: opens and their complements.
  std::vector<CellSet::Word> open_rows_;
  std::vector<CellSet::Word> closed_rows_;
  std::size_t words_ = 0;
};

CheckReport validate_topology(const SoftContext& ctx, std::span<const SoftSet> candidate);

bool is_soft_open(const SoftTopology& t, const SoftSet& a);
bool is_soft_closed(const SoftTopology& t, const SoftSet& a);
SoftSet soft_closure(const SoftTopology& t, const SoftSet& a);
SoftSet soft_interior(const SoftTopology& t, const SoftSet& a);

// Throws kUnknownParameter when alpha is out of range.
PointTopology induced_topology(const SoftTopology& t, std::size_t alpha);
PointTopology induced_topology(const SoftTopology& t, std::string_view alpha);

// Per parameter, closure of a(alpha) in the induced topology at alpha.
SoftSet parameterwise_closure(const SoftTopology& t, const SoftSet& a);

bool is_soft_neighbourhood(const SoftTopology& t, const SoftSet& g, const SoftPoint& p);
std::vector<SoftPoint> interior_points(const SoftTopology& t, const SoftSet& g);

// The complement of the parameterwise closure of `a` is open.
bool parameterwise_closure_complement_open(const SoftTopology& t, const SoftSet& a);
// parameterwise_closure(a) == soft_closure(a). Cross-checks against
// parameterwise_closure_complement_open and throws std::logic_error if the
// two criteria ever disagree.
bool closure_operators_agree(const SoftTopology& t, const SoftSet& a);

}  // namespace softtop
