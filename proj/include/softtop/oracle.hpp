#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "softtop/budget.hpp"
#include "softtop/mapping.hpp"
#include "softtop/soft_set.hpp"
#include "softtop/topology.hpp"

namespace softtop {

// All soft sets over ctx in canonical order (null first, absolute last).
// kInstanceTooLarge beyond the budget.
std::vector<SoftSet> enumerate_soft_sets(const SoftContext& ctx, const EnumerationBudget& budget = {});

// Every soft topology over ctx, each once, ordered by the bitmask of its
// non-trivial members. Requires |X|·|E| <= 4.
std::vector<SoftTopology> enumerate_soft_topologies(const SoftContext& ctx, const EnumerationBudget& budget = {});

// Smallest soft topology containing the collection.
SoftTopology closure_under_ops(const SoftContext& ctx, std::span<const SoftSet> collection);

// generator_count random soft sets closed under union and intersection.
// Deterministic in (ctx, seed, generator_count).
SoftTopology random_soft_topology(const SoftContext& ctx, std::uint64_t seed, std::size_t generator_count);

// Contexts named x1.., y1.., e1.. for synthetic sweeps.
SoftContext synthetic_context(char element_prefix, std::size_t universe_size, std::size_t parameter_count);

// Every point function X -> Y, in lexicographic order of the image tuple.
std::vector<SoftMapping> enumerate_point_maps(const SoftContext& source, const SoftContext& target);

enum class Theorem {
  kContinuityEquivalences,       // THM1
  kInducedContinuity,            // THM2
  kInducedContinuityConverse,    // THM2_CONVERSE (expected to fail)
  kClosureCriterionContinuity,   // THM3
  kOpenClosedCharacterizations,  // THM4
  kHomeomorphismEquivalences,    // THM5
  kInducedTopologies,            // PROP1
  kClosureContainment,           // PROP2
  kClosureAgreement,             // COR1
  kInducedOpenClosed,            // PROP3
};

std::string_view theorem_id(Theorem t);
// kUnknownTheorem for an unrecognised id.
Theorem parse_theorem_id(std::string_view id);
std::vector<Theorem> all_theorems();
// Mapping results quantify over (tau, sigma, f); the rest over single spaces.
bool is_mapping_theorem(Theorem t);

struct ContextShape {
  std::size_t source_universe = 1;
  std::size_t target_universe = 1;
  std::size_t parameters = 1;
};

struct SweepConfig {
  std::vector<ContextShape> shapes;
  // Extra random instances over |X| = |Y| = sample_universe,
  // |E| = sample_parameters, seeded from the budget's rng_seed.
  std::size_t random_samples = 0;
  std::size_t sample_universe = 3;
  std::size_t sample_parameters = 2;
  // 0: hardware concurrency.
  unsigned threads = 0;
  // Keep at most this many violations in the report (0: all). The total is
  // always counted.
  std::size_t violation_limit = 0;

  // Every shape with |X| <= max_x, |Y| <= max_y, |E| <= max_e.
  static SweepConfig up_to(std::size_t max_x, std::size_t max_y, std::size_t max_e);
};

// An explicit instance added to a sweep (e.g. a paper example).
struct SweepInstance {
  SoftTopology tau;
  std::optional<SoftTopology> sigma;
  std::optional<SoftMapping> f;
};

struct Violation {
  std::string description;
  // Problem-file text of the offending instance.
  std::string instance;
};

struct TheoremSweepReport {
  std::string theorem;
  std::uint64_t contexts = 0;
  std::uint64_t topologies = 0;
  std::uint64_t mappings = 0;
  std::uint64_t soft_sets = 0;
  std::uint64_t instances = 0;
  std::uint64_t violation_count = 0;
  // The first violations in sweep order, up to the configured limit.
  std::vector<Violation> violations;

  bool holds() const noexcept { return violation_count == 0; }
};

// Evaluates both sides of the result on every instance and records
// violations in sweep order: explicit instances first, then the enumerated
// shapes, then random samples. Counts: contexts = shapes swept (one
// per distinct single space for single-space results), topologies =
// topologies (single space) or topology pairs, mappings = point maps
// evaluated, soft_sets = soft sets quantified over, instances = checks run.
// Errors: kInstanceTooLarge.
TheoremSweepReport sweep_theorem(Theorem theorem, const SweepConfig& config, const EnumerationBudget& budget = {},
                                 std::span<const SweepInstance> extra = {});

}  // namespace softtop
